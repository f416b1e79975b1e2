// Typed client for the plateful HTTP API. Single base-URL setting; the UI
// never re-scores or reorders anything the server returns.

export interface Tag {
  text: string;
  polarity: "negative" | "neutral" | "positive";
  negated: boolean;
  count: number;
}

export interface SearchResult {
  doc_id: string;
  rank: number;
  score: number;
  snippet: string;
  tags: Tag[];
}

export interface SearchResponse {
  results: SearchResult[];
}

export interface Service {
  id: string;
  name: string;
  categories: string[];
  location: string;
  review_count: number;
  avg_label: number | null;
}

export interface ReviewItem {
  id: string;
  text: string;
  label: number;
  sentiment_class: number;
  polarity: Tag["polarity"];
  timestamp: number;
  tags: Tag[];
}

export interface ReviewPage {
  service_id: string;
  page: number;
  page_size: number;
  total: number;
  tags: Tag[];
  reviews: ReviewItem[];
}

export interface SubmitResponse {
  review: ReviewItem & { service_id: string };
  sentiment_class: number;
  polarity: Tag["polarity"];
  tags: Tag[];
}

export type SearchMode = "bm25" | "ranknet";

export class ApiError extends Error {
  constructor(public status: number, message: string) {
    super(message);
  }
}

let baseUrl = "";

export function setBaseUrl(url: string): void {
  baseUrl = url.replace(/\/$/, "");
}

async function request<T>(path: string, init?: RequestInit): Promise<T> {
  const response = await fetch(`${baseUrl}${path}`, init);
  if (!response.ok) {
    let message = `HTTP ${response.status}`;
    try {
      const body = (await response.json()) as { error?: string };
      if (body.error) message = body.error;
    } catch {
      // non-JSON error body; keep the status message
    }
    throw new ApiError(response.status, message);
  }
  return (await response.json()) as T;
}

export function searchReviews(
  query: string,
  mode: SearchMode,
  k = 10,
): Promise<SearchResponse> {
  const params = new URLSearchParams({ q: query, mode, k: String(k) });
  return request<SearchResponse>(`/api/search?${params}`);
}

export function listServices(): Promise<Service[]> {
  return request<Service[]>("/api/services");
}

export function listReviews(
  serviceId: string,
  page: number,
  pageSize = 5,
): Promise<ReviewPage> {
  const params = new URLSearchParams({
    page: String(page),
    page_size: String(pageSize),
  });
  return request<ReviewPage>(
    `/api/services/${encodeURIComponent(serviceId)}/reviews?${params}`,
  );
}

export function submitReview(
  serviceId: string,
  text: string,
): Promise<SubmitResponse> {
  return request<SubmitResponse>("/api/reviews", {
    method: "POST",
    headers: { "content-type": "application/json" },
    body: JSON.stringify({ service_id: serviceId, text }),
  });
}
