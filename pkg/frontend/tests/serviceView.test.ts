import { afterEach, beforeEach, describe, expect, it, vi } from "vitest";
import type { ReviewPage, Service, Tag } from "../src/api";
import { setBaseUrl } from "../src/api";
import { createServiceView } from "../src/serviceView";

const SERVICES: Service[] = [
  {
    id: "s1",
    name: "Laksa Corner",
    categories: ["laksa"],
    location: "Canteen 1",
    review_count: 7,
    avg_label: 3.5,
  },
  {
    id: "s2",
    name: "Empty Stall",
    categories: [],
    location: "Canteen 2",
    review_count: 0,
    avg_label: null,
  },
];

function tag(text: string, polarity: Tag["polarity"], count: number): Tag {
  return { text, polarity, negated: false, count };
}

const PAGE_ONE: ReviewPage = {
  service_id: "s1",
  page: 1,
  page_size: 5,
  total: 7,
  tags: [tag("good-food", "positive", 3), tag("slow-service", "negative", 1)],
  reviews: [
    {
      id: "r1",
      text: "The laksa was great.",
      label: 4,
      sentiment_class: 4,
      polarity: "positive",
      timestamp: 5,
      tags: [tag("great-laksa", "positive", 1)],
    },
  ],
};

const LAST_PAGE: ReviewPage = { ...PAGE_ONE, page: 2, reviews: [] };

const EMPTY_PAGE: ReviewPage = {
  service_id: "s2",
  page: 1,
  page_size: 5,
  total: 0,
  tags: [],
  reviews: [],
};

let fetchMock: ReturnType<typeof vi.fn>;

function jsonResponse(body: unknown, status = 200): Response {
  return new Response(JSON.stringify(body), { status });
}

function route(url: string): Response {
  if (url.includes("/api/services/s1/reviews")) {
    return jsonResponse(url.includes("page=2") ? LAST_PAGE : PAGE_ONE);
  }
  if (url.includes("/api/services/s2/reviews")) return jsonResponse(EMPTY_PAGE);
  if (url.includes("/api/services/missing/reviews")) {
    return jsonResponse({ error: "unknown service" }, 404);
  }
  if (url.includes("/api/services")) return jsonResponse(SERVICES);
  throw new Error(`unrouted ${url}`);
}

async function flush(): Promise<void> {
  // lets fetch -> json -> render chains settle (microtasks + one macrotask)
  await new Promise((resolve) => setTimeout(resolve, 0));
  await new Promise((resolve) => setTimeout(resolve, 0));
}

beforeEach(() => {
  setBaseUrl("");
  fetchMock = vi.fn(async (url: RequestInfo | URL) => route(String(url)));
  vi.stubGlobal("fetch", fetchMock);
  document.body.innerHTML = "";
});

afterEach(() => {
  vi.unstubAllGlobals();
});

describe("service browser", () => {
  it("lists services with rating summaries", async () => {
    const view = createServiceView();
    document.body.appendChild(view);
    await flush();

    const cards = view.querySelectorAll(".service-card");
    expect(cards).toHaveLength(2);
    expect(cards[0].textContent).toContain("Laksa Corner");
    expect(cards[0].textContent).toContain("★ 4.5/5");
    expect(cards[1].textContent).toContain("no ratings");
  });

  it("opens a service: tag cloud in count order above the reviews", async () => {
    const view = createServiceView();
    document.body.appendChild(view);
    await flush();

    view
      .querySelector<HTMLButtonElement>('[data-service-id="s1"] button')!
      .click();
    await flush();

    const cloudChips = [
      ...view.querySelectorAll<HTMLSpanElement>("#service-tag-cloud .tag-chip"),
    ];
    expect(cloudChips.map((c) => c.textContent)).toEqual([
      "good-food ×3",
      "slow-service",
    ]);
    expect(view.querySelectorAll(".review-item")).toHaveLength(1);
    expect(view.querySelector(".review-item")!.textContent).toContain(
      "class 4 · positive",
    );
  });

  it("disables next on the last page", async () => {
    const view = createServiceView();
    document.body.appendChild(view);
    await flush();
    view
      .querySelector<HTMLButtonElement>('[data-service-id="s1"] button')!
      .click();
    await flush();

    expect(
      view.querySelector<HTMLButtonElement>("#pager-prev")!.disabled,
    ).toBe(true);
    view.querySelector<HTMLButtonElement>("#pager-next")!.click();
    await flush();

    expect(
      view.querySelector<HTMLButtonElement>("#pager-next")!.disabled,
    ).toBe(true);
    expect(
      view.querySelector<HTMLButtonElement>("#pager-prev")!.disabled,
    ).toBe(false);
  });

  it("shows an empty state for a service without reviews", async () => {
    const view = createServiceView();
    document.body.appendChild(view);
    await flush();
    view
      .querySelector<HTMLButtonElement>('[data-service-id="s2"] button')!
      .click();
    await flush();

    expect(view.querySelector(".empty-state")!.textContent).toContain(
      "No reviews yet",
    );
    expect(
      view.querySelectorAll("#service-tag-cloud .tag-chip"),
    ).toHaveLength(0);
  });

  it("renders a service-not-found view on 404", async () => {
    const view = createServiceView();
    document.body.appendChild(view);
    await flush();

    view.dispatchEvent(new Event("plateful:refresh"));
    fetchMock.mockImplementationOnce(async () =>
      jsonResponse({ error: "unknown service" }, 404),
    );
    // drive openService directly through a fake card
    const card = view.querySelector<HTMLElement>(".service-card")!;
    card.dataset.serviceId = "missing";
    fetchMock.mockClear();
    fetchMock.mockImplementation(async (url: RequestInfo | URL) =>
      route(String(url).replace("/s1/", "/missing/")),
    );
    card.querySelector<HTMLButtonElement>("button")!.click();
    await flush();

    expect(view.querySelector("#service-detail")!.textContent).toContain(
      "service not found",
    );
  });
});
