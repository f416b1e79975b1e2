import { setBaseUrl } from "./api";
import { createSearchView } from "./searchView";
import { createServiceView } from "./serviceView";
import { createSubmitView } from "./submitView";
import "./styles.css";

const VIEWS = ["search", "services", "submit"] as const;
type ViewName = (typeof VIEWS)[number];

export function mountApp(root: HTMLElement, baseUrl = ""): void {
  setBaseUrl(baseUrl);

  const nav = document.createElement("nav");
  const title = document.createElement("h1");
  title.textContent = "plateful";
  nav.appendChild(title);

  const searchView = createSearchView();
  const serviceView = createServiceView();
  const submitView = createSubmitView(() =>
    serviceView.dispatchEvent(new Event("plateful:refresh")),
  );
  const views: Record<ViewName, HTMLElement> = {
    search: searchView,
    services: serviceView,
    submit: submitView,
  };

  function show(name: ViewName): void {
    for (const view of VIEWS) {
      views[view].style.display = view === name ? "" : "none";
      nav.querySelector(`[data-view="${view}"]`)?.classList.toggle(
        "active", view === name,
      );
    }
  }

  for (const name of VIEWS) {
    const button = document.createElement("button");
    button.type = "button";
    button.dataset.view = name;
    button.textContent = name;
    button.addEventListener("click", () => show(name));
    nav.appendChild(button);
  }

  root.replaceChildren(nav, searchView, serviceView, submitView);
  show("search");
}

const root = document.getElementById("app");
if (root) mountApp(root, import.meta.env.VITE_API_BASE ?? "");
