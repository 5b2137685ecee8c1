// Typed client for the HTTP API. Each query channel keeps at most one
// request in flight: starting a new call aborts the previous one, so a
// fast-typing user never sees stale results land after fresh ones.

import {
  AdvancedFilters,
  ApiError,
  ApiErrorBody,
  CompoundOut,
  PredictionResponse,
  SearchResponse,
} from "./types.js";

export type FetchLike = (input: string, init?: RequestInit) => Promise<Response>;

export class ApiClient {
  private readonly base: string;
  private readonly fetchFn: FetchLike;
  private readonly controllers = new Map<string, AbortController>();

  constructor(base = "", fetchFn: FetchLike = (...args) => fetch(...args)) {
    this.base = base.replace(/\/$/, "");
    this.fetchFn = fetchFn;
  }

  /** Abort any in-flight request on the same channel and start anew. */
  private signal(channel: string): AbortSignal {
    this.controllers.get(channel)?.abort();
    const controller = new AbortController();
    this.controllers.set(channel, controller);
    return controller.signal;
  }

  private async request<T>(
    channel: string,
    path: string,
    init: RequestInit = {},
  ): Promise<T> {
    const response = await this.fetchFn(this.base + path, {
      ...init,
      signal: this.signal(channel),
      headers: { "Content-Type": "application/json", ...(init.headers ?? {}) },
    });
    const body = await response.json();
    if (!response.ok) {
      const detail = (body as ApiErrorBody).error ?? {
        code: "http_error",
        message: `request failed with status ${response.status}`,
      };
      throw new ApiError(response.status, detail);
    }
    return body as T;
  }

  quickSearch(q: string): Promise<SearchResponse> {
    const params = new URLSearchParams({ q, mode: "quick" });
    return this.request("search", `/api/search?${params}`);
  }

  advancedSearch(filters: AdvancedFilters): Promise<SearchResponse> {
    return this.request("search", "/api/search/advanced", {
      method: "POST",
      body: JSON.stringify(filters),
    });
  }

  similaritySearch(smiles: string, thresholdPercent: number): Promise<SearchResponse> {
    return this.request("search", "/api/search/structure", {
      method: "POST",
      body: JSON.stringify({ smiles, threshold_percent: thresholdPercent }),
    });
  }

  substructureSearch(smiles: string): Promise<SearchResponse> {
    return this.request("search", "/api/search/substructure", {
      method: "POST",
      body: JSON.stringify({ smiles }),
    });
  }

  compound(molecularId: string): Promise<CompoundOut> {
    return this.request("detail", `/api/compounds/${encodeURIComponent(molecularId)}`);
  }

  predict(input: {
    smiles?: string;
    name?: string;
    trans_ring_double_bonds?: number;
  }): Promise<PredictionResponse> {
    return this.request("predict", "/api/predict", {
      method: "POST",
      body: JSON.stringify(input),
    });
  }
}

export function isAbort(err: unknown): boolean {
  return err instanceof DOMException && err.name === "AbortError";
}
