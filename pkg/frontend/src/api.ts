/** Typed client for the team-recommendation HTTP API.
 *
 * Every number shown in the UI comes out of one of these response types;
 * the browser never computes a metric itself.
 */

export interface MetricVector {
  competence: number;
  cohesiveness: number;
  user_repetition: number;
  concept_repetition: number;
}

export interface ScoreCard {
  raw: MetricVector;
  normalized: MetricVector;
  total: number;
  weights: MetricVector;
}

export interface Member {
  id: string;
  name: string;
}

export interface RankedTeam {
  members: Member[];
  assignment: Record<string, string[]>;
  scorecard: ScoreCard;
}

export interface RecommendResponse {
  areas: string[];
  k: number;
  mode: string;
  limit: number;
  weights: MetricVector;
  teams: RankedTeam[];
}

export interface PairDistance {
  source: string;
  target: string;
  /** Social hop distance; null when the pair is unreachable. */
  distance: number | null;
}

export interface ScoreResponse {
  members: Member[];
  areas: string[];
  mode: string;
  scorecard: ScoreCard;
  distances: PairDistance[];
}

export interface SuggestionHit {
  area: string;
  name: string;
  score: number;
  match_kind: string;
}

export interface ExpertHit {
  individual: string;
  name: string;
  area: string;
  competence: number;
  effective_weight: number;
  via_related: { area: string; weight: number } | null;
}

export interface RecommendBody {
  areas: string[];
  k?: number;
  weights?: MetricVector;
  mode?: string;
  limit?: number;
}

export interface ScoreBody {
  members: string[];
  areas: string[];
  weights?: MetricVector;
  mode?: string;
}

/** Error envelope every non-2xx response carries. */
export class ApiError extends Error {
  constructor(
    readonly status: number,
    readonly code: string,
    message: string,
  ) {
    super(message);
    this.name = "ApiError";
  }
}

export type FetchLike = (input: string, init?: RequestInit) => Promise<Response>;

export class SwatApi {
  private readonly fetchFn: FetchLike;

  constructor(
    private readonly baseUrl: string = "",
    fetchFn?: FetchLike,
  ) {
    // wrap the global so it is never invoked with `this` bound to us
    this.fetchFn = fetchFn ?? ((input, init) => fetch(input, init));
  }

  private async request<T>(path: string, init?: RequestInit): Promise<T> {
    const response = await this.fetchFn(this.baseUrl + path, init);
    let body: unknown = null;
    try {
      body = await response.json();
    } catch {
      body = null;
    }
    if (!response.ok) {
      const envelope = body as { error?: { code?: string; message?: string } } | null;
      throw new ApiError(
        response.status,
        envelope?.error?.code ?? "internal",
        envelope?.error?.message ?? `HTTP ${response.status}`,
      );
    }
    return body as T;
  }

  private post<T>(path: string, body: unknown, signal?: AbortSignal): Promise<T> {
    return this.request<T>(path, {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify(body),
      signal,
    });
  }

  suggest(q: string, limit = 10): Promise<SuggestionHit[]> {
    const qs = new URLSearchParams({ q, limit: String(limit) });
    return this.request(`/api/concepts/suggest?${qs}`);
  }

  experts(area: string, k = 20, expand = false): Promise<ExpertHit[]> {
    const qs = new URLSearchParams({ area, k: String(k), expand: String(expand) });
    return this.request(`/api/experts?${qs}`);
  }

  stats(): Promise<Record<string, unknown>> {
    return this.request("/api/stats");
  }

  recommend(body: RecommendBody, signal?: AbortSignal): Promise<RecommendResponse> {
    return this.post("/api/teams/recommend", body, signal);
  }

  score(body: ScoreBody, signal?: AbortSignal): Promise<ScoreResponse> {
    return this.post("/api/teams/score", body, signal);
  }
}
