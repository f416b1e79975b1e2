import { ApiError, searchReviews, type SearchMode, type SearchResult } from "./api";
import { clearBanner, showBanner } from "./banner";
import { debounce } from "./debounce";
import { tagRow } from "./tags";

// Results render in server order: rank i on screen is rank i in the
// response. A sequence number discards stale responses so the latest
// query always wins.

function resultCard(result: SearchResult): HTMLElement {
  const card = document.createElement("article");
  card.className = "result-card";
  card.dataset.docId = result.doc_id;

  const head = document.createElement("header");
  const rank = document.createElement("span");
  rank.className = "result-rank";
  rank.textContent = `#${result.rank}`;
  const score = document.createElement("span");
  score.className = "result-score";
  score.textContent = result.score.toFixed(4);
  head.append(rank, score);

  const snippet = document.createElement("p");
  snippet.className = "result-snippet";
  snippet.textContent = result.snippet;

  card.append(head, snippet, tagRow(result.tags));
  return card;
}

export function createSearchView(): HTMLElement {
  const view = document.createElement("section");
  view.id = "search-view";

  const form = document.createElement("form");
  form.addEventListener("submit", (event) => event.preventDefault());

  const input = document.createElement("input");
  input.type = "search";
  input.id = "search-input";
  input.placeholder = "Search reviews, e.g. spicy laksa";

  const toggle = document.createElement("div");
  toggle.className = "mode-toggle";
  const modes: SearchMode[] = ["bm25", "ranknet"];
  const buttons = new Map<SearchMode, HTMLButtonElement>();
  for (const mode of modes) {
    const button = document.createElement("button");
    button.type = "button";
    button.textContent = mode;
    button.dataset.mode = mode;
    button.addEventListener("click", () => setMode(mode));
    toggle.appendChild(button);
    buttons.set(mode, button);
  }

  const status = document.createElement("p");
  status.id = "search-status";
  status.textContent = "Type to search.";

  const results = document.createElement("div");
  results.id = "search-results";

  form.append(input, toggle);
  view.append(form, status, results);

  let mode: SearchMode = "bm25";
  let sequence = 0;

  function renderResults(items: SearchResult[]): void {
    results.replaceChildren(...items.map(resultCard));
    status.textContent = items.length
      ? `${items.length} results (${mode})`
      : "No results.";
  }

  async function runSearch(): Promise<void> {
    const query = input.value.trim();
    if (!query) {
      sequence += 1; // invalidate anything in flight
      results.replaceChildren();
      status.textContent = "Type to search.";
      return;
    }
    const mine = ++sequence;
    clearBanner(view);
    status.textContent = "Searching…";
    try {
      const response = await searchReviews(query, mode);
      if (mine !== sequence) return; // a newer query superseded this one
      renderResults(response.results);
    } catch (error) {
      if (mine !== sequence) return;
      status.textContent = "";
      const message =
        error instanceof ApiError && error.status === 409
          ? "ranking model not loaded"
          : `Search failed: ${error instanceof Error ? error.message : error}`;
      showBanner(view, message);
    }
  }

  function setMode(next: SearchMode): void {
    mode = next;
    for (const [name, button] of buttons) {
      button.classList.toggle("active", name === mode);
    }
    // switching modes re-issues the same query for comparison
    void runSearch();
  }

  const debouncedSearch = debounce(() => void runSearch(), 300);
  input.addEventListener("input", () => debouncedSearch());

  for (const [name, button] of buttons) {
    button.classList.toggle("active", name === mode);
  }

  return view;
}
