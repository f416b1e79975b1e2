import {
  ApiError,
  listReviews,
  listServices,
  type ReviewPage,
  type Service,
} from "./api";
import { clearBanner, showBanner } from "./banner";
import { tagRow } from "./tags";

const PAGE_SIZE = 5;

function stars(avg: number | null): string {
  if (avg == null) return "no ratings";
  return `★ ${(avg + 1).toFixed(1)}/5`; // labels 0-4 shown as 1-5 stars
}

function serviceCard(service: Service, onOpen: (id: string) => void): HTMLElement {
  const card = document.createElement("article");
  card.className = "service-card";
  card.dataset.serviceId = service.id;

  const name = document.createElement("h3");
  name.textContent = service.name;
  const meta = document.createElement("p");
  meta.className = "service-meta";
  meta.textContent =
    `${service.location} · ${service.categories.join(", ")} · ` +
    `${service.review_count} reviews · ${stars(service.avg_label)}`;
  const open = document.createElement("button");
  open.type = "button";
  open.textContent = "Browse reviews";
  open.addEventListener("click", () => onOpen(service.id));

  card.append(name, meta, open);
  return card;
}

export function createServiceView(): HTMLElement {
  const view = document.createElement("section");
  view.id = "service-view";

  const directory = document.createElement("div");
  directory.id = "service-directory";

  const detail = document.createElement("div");
  detail.id = "service-detail";

  view.append(directory, detail);

  let currentService: string | null = null;
  let currentPage = 1;

  function renderPage(page: ReviewPage): void {
    detail.replaceChildren();

    const cloud = document.createElement("div");
    cloud.id = "service-tag-cloud";
    cloud.appendChild(tagRow(page.tags));

    const list = document.createElement("div");
    list.id = "service-reviews";
    if (page.reviews.length === 0 && page.total === 0) {
      const empty = document.createElement("p");
      empty.className = "empty-state";
      empty.textContent = "No reviews yet for this service.";
      list.appendChild(empty);
    }
    for (const review of page.reviews) {
      const item = document.createElement("article");
      item.className = "review-item";
      item.dataset.reviewId = review.id;
      const text = document.createElement("p");
      text.textContent = review.text;
      const meta = document.createElement("p");
      meta.className = "review-meta";
      meta.textContent = `class ${review.sentiment_class} · ${review.polarity}`;
      item.append(text, meta, tagRow(review.tags));
      list.appendChild(item);
    }

    const pager = document.createElement("div");
    pager.className = "pager";
    const prev = document.createElement("button");
    prev.type = "button";
    prev.id = "pager-prev";
    prev.textContent = "Previous";
    prev.disabled = page.page <= 1;
    prev.addEventListener("click", () => void openService(page.service_id, page.page - 1));
    const label = document.createElement("span");
    const lastPage = Math.max(1, Math.ceil(page.total / page.page_size));
    label.textContent = `page ${page.page} / ${lastPage}`;
    const next = document.createElement("button");
    next.type = "button";
    next.id = "pager-next";
    next.textContent = "Next";
    next.disabled = page.page >= lastPage;
    next.addEventListener("click", () => void openService(page.service_id, page.page + 1));
    pager.append(prev, label, next);

    detail.append(cloud, list, pager);
  }

  async function openService(serviceId: string, page: number): Promise<void> {
    currentService = serviceId;
    currentPage = page;
    clearBanner(view);
    try {
      renderPage(await listReviews(serviceId, page, PAGE_SIZE));
    } catch (error) {
      if (error instanceof ApiError && error.status === 404) {
        detail.replaceChildren();
        const missing = document.createElement("p");
        missing.className = "empty-state";
        missing.textContent = "service not found";
        detail.appendChild(missing);
        return;
      }
      showBanner(view, `Could not load reviews: ${
        error instanceof Error ? error.message : error}`);
    }
  }

  async function loadDirectory(): Promise<void> {
    clearBanner(view);
    try {
      const services = await listServices();
      directory.replaceChildren(
        ...services.map((s) => serviceCard(s, (id) => void openService(id, 1))),
      );
    } catch (error) {
      showBanner(view, `Could not load services: ${
        error instanceof Error ? error.message : error}`);
    }
  }

  void loadDirectory();

  // submit view pokes this to refresh after a successful submission
  view.addEventListener("plateful:refresh", () => {
    void loadDirectory();
    if (currentService) void openService(currentService, currentPage);
  });

  return view;
}
