/**
 * Transport to the ranking service, with sequence numbers so a stale
 * response can never overwrite a newer one.
 */

import type {
  ApiErrorBody,
  CatalogResponse,
  CollectiveResponse,
  DecisionProblem,
  Edit,
  RankResponse,
  SensitivityResponse,
} from './types.js';

export type FetchLike = (url: string, init?: {
  method?: string;
  headers?: Record<string, string>;
  body?: string;
}) => Promise<{ status: number; json(): Promise<unknown> }>;

export type ApiResult<T> =
  | { ok: true; body: T }
  | { ok: false; status: number; error: ApiErrorBody };

export class ApiClient {
  constructor(
    private readonly baseUrl: string,
    private readonly fetchFn: FetchLike = (url, init) => fetch(url, init),
  ) {}

  private async post<T>(path: string, payload: unknown): Promise<ApiResult<T>> {
    const resp = await this.fetchFn(this.baseUrl + path, {
      method: 'POST',
      headers: { 'Content-Type': 'application/json' },
      body: JSON.stringify(payload),
    });
    const body = await resp.json();
    if (resp.status >= 200 && resp.status < 300) {
      return { ok: true, body: body as T };
    }
    return { ok: false, status: resp.status, error: body as ApiErrorBody };
  }

  rank(problem: DecisionProblem): Promise<ApiResult<RankResponse>> {
    return this.post('/api/v1/rank', problem);
  }

  collective(problem: DecisionProblem): Promise<ApiResult<CollectiveResponse>> {
    return this.post('/api/v1/collective', problem);
  }

  sensitivity(problem: DecisionProblem, edits: Edit[]): Promise<ApiResult<SensitivityResponse>> {
    return this.post('/api/v1/sensitivity', { problem, edits });
  }

  async catalog(): Promise<ApiResult<CatalogResponse>> {
    const resp = await this.fetchFn(this.baseUrl + '/api/v1/catalog');
    const body = await resp.json();
    if (resp.status === 200) return { ok: true, body: body as CatalogResponse };
    return { ok: false, status: resp.status, error: body as ApiErrorBody };
  }
}

/**
 * Monotonically increasing tokens; only the holder of the latest token may
 * apply its response.
 */
export class RequestGate {
  private seq = 0;

  next(): number {
    return ++this.seq;
  }

  isCurrent(token: number): boolean {
    return token === this.seq;
  }
}
