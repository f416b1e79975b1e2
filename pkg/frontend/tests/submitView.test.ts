import { afterEach, beforeEach, describe, expect, it, vi } from "vitest";
import type { SubmitResponse } from "../src/api";
import { setBaseUrl } from "../src/api";
import { createSubmitView } from "../src/submitView";

const SERVICES = [
  {
    id: "s1",
    name: "Laksa Corner",
    categories: ["laksa"],
    location: "c1",
    review_count: 1,
    avg_label: 3,
  },
];

const SUBMITTED: SubmitResponse = {
  review: {
    id: "r42",
    service_id: "s1",
    text: "The laksa is not good.",
    label: 3,
    sentiment_class: 3,
    polarity: "positive",
    timestamp: 0,
    tags: [],
  },
  sentiment_class: 3,
  polarity: "positive",
  tags: [{ text: "not-good-laksa", polarity: "negative", negated: true, count: 1 }],
};

let fetchMock: ReturnType<typeof vi.fn>;

function jsonResponse(body: unknown, status = 200): Response {
  return new Response(JSON.stringify(body), { status });
}

async function flush(): Promise<void> {
  // lets fetch -> json -> render chains settle (microtasks + one macrotask)
  await new Promise((resolve) => setTimeout(resolve, 0));
  await new Promise((resolve) => setTimeout(resolve, 0));
}

beforeEach(() => {
  setBaseUrl("");
  fetchMock = vi.fn(async (url: RequestInfo | URL, init?: RequestInit) => {
    if (String(url).includes("/api/services")) return jsonResponse(SERVICES);
    if (String(url).includes("/api/reviews") && init?.method === "POST") {
      return jsonResponse(SUBMITTED);
    }
    throw new Error(`unrouted ${url}`);
  });
  vi.stubGlobal("fetch", fetchMock);
  document.body.innerHTML = "";
});

afterEach(() => {
  vi.unstubAllGlobals();
});

describe("submit review form", () => {
  it("validates blank text client-side without any request", async () => {
    const view = createSubmitView(() => {});
    document.body.appendChild(view);
    await flush();
    fetchMock.mockClear();

    view.querySelector<HTMLFormElement>("#submit-form")!.dispatchEvent(
      new Event("submit"),
    );
    await flush();

    expect(fetchMock).not.toHaveBeenCalled();
    expect(view.querySelector("#submit-error")!.textContent).toContain(
      "write something",
    );
  });

  it("shows the server verdict and tags verbatim, then notifies", async () => {
    const onSubmitted = vi.fn();
    const view = createSubmitView(onSubmitted);
    document.body.appendChild(view);
    await flush();

    view.querySelector<HTMLTextAreaElement>("#submit-text")!.value =
      "The laksa is not good.";
    view.querySelector<HTMLFormElement>("#submit-form")!.dispatchEvent(
      new Event("submit"),
    );
    await flush();

    const body = JSON.parse(String(fetchMock.mock.calls.at(-1)![1]!.body));
    expect(body).toEqual({ service_id: "s1", text: "The laksa is not good." });
    expect(view.querySelector("#submit-verdict")!.textContent).toContain(
      "class 3 (positive)",
    );
    const chip = view.querySelector<HTMLSpanElement>(
      "#submit-confirmation .tag-chip",
    )!;
    expect(chip.textContent).toBe("not-good-laksa");
    expect(chip.style.backgroundColor).toBe("red");
    expect(onSubmitted).toHaveBeenCalledTimes(1);
  });

  it("renders 409 inline as model not loaded", async () => {
    const view = createSubmitView(() => {});
    document.body.appendChild(view);
    await flush();
    fetchMock.mockImplementationOnce(async () =>
      jsonResponse({ error: "no sentiment model loaded" }, 409),
    );

    view.querySelector<HTMLTextAreaElement>("#submit-text")!.value = "ok";
    view.querySelector<HTMLFormElement>("#submit-form")!.dispatchEvent(
      new Event("submit"),
    );
    await flush();

    expect(view.querySelector("#submit-error")!.textContent).toBe(
      "model not loaded",
    );
  });

  it("renders 400 message inline", async () => {
    const view = createSubmitView(() => {});
    document.body.appendChild(view);
    await flush();
    fetchMock.mockImplementationOnce(async () =>
      jsonResponse({ error: "text is required" }, 400),
    );

    view.querySelector<HTMLTextAreaElement>("#submit-text")!.value = "x";
    view.querySelector<HTMLFormElement>("#submit-form")!.dispatchEvent(
      new Event("submit"),
    );
    await flush();

    expect(view.querySelector("#submit-error")!.textContent).toBe(
      "text is required",
    );
  });
});
