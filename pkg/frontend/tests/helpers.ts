/** In-memory stand-in for the recommendation service.
 *
 * The handlers honor the server's visible contracts — ranking sorted by
 * the weighted total computed from the request's weights, scorecards keyed
 * by member set, the error envelope — so the contract tests exercise the
 * real wire shapes without a network.
 */

import type {
  FetchLike,
  MetricVector,
  Member,
  PairDistance,
  RankedTeam,
  RecommendBody,
  RecommendResponse,
  ScoreBody,
  ScoreCard,
  ScoreResponse,
} from "../src/api.js";

export interface RecordedRequest {
  url: string;
  method: string;
  body: unknown;
  aborted: () => boolean;
}

export function makeCard(
  normalized: MetricVector,
  weights: MetricVector = {
    competence: 0.25,
    cohesiveness: 0.25,
    user_repetition: 0.25,
    concept_repetition: 0.25,
  },
): ScoreCard {
  const total =
    weights.competence * normalized.competence +
    weights.cohesiveness * normalized.cohesiveness +
    weights.user_repetition * normalized.user_repetition +
    weights.concept_repetition * normalized.concept_repetition;
  return {
    raw: { ...normalized, user_repetition: Math.round(normalized.user_repetition * 5) },
    normalized,
    total,
    weights,
  };
}

function members(...ids: string[]): Member[] {
  return ids.map((id) => ({ id, name: id.toUpperCase() }));
}

/** Four teams whose one-hot orderings differ on every axis. */
export const FIXTURE_TEAMS: RankedTeam[] = [
  {
    members: members("a1", "a2"),
    assignment: { x: ["a1"], y: ["a2"] },
    scorecard: makeCard({
      competence: 0.9,
      cohesiveness: 0.2,
      user_repetition: 0.3,
      concept_repetition: 0.1,
    }),
  },
  {
    members: members("b1", "b2"),
    assignment: { x: ["b1"], y: ["b2"] },
    scorecard: makeCard({
      competence: 0.5,
      cohesiveness: 0.95,
      user_repetition: 0.1,
      concept_repetition: 0.4,
    }),
  },
  {
    members: members("c1", "c2"),
    assignment: { x: ["c1"], y: ["c2"] },
    scorecard: makeCard({
      competence: 0.2,
      cohesiveness: 0.5,
      user_repetition: 1.0,
      concept_repetition: 0.7,
    }),
  },
  {
    members: members("d1", "d2"),
    assignment: { x: ["d1"], y: ["d2"] },
    scorecard: makeCard({
      competence: 0.4,
      cohesiveness: 0.1,
      user_repetition: 0.6,
      concept_repetition: 0.95,
    }),
  },
];

export const KNOWN_IDS = new Set(
  FIXTURE_TEAMS.flatMap((t) => t.members.map((m) => m.id)),
);

function weightsOf(body: { weights?: MetricVector }): MetricVector {
  return (
    body.weights ?? {
      competence: 0.25,
      cohesiveness: 0.25,
      user_repetition: 0.25,
      concept_repetition: 0.25,
    }
  );
}

function totalFor(card: ScoreCard, weights: MetricVector): number {
  return (
    weights.competence * card.normalized.competence +
    weights.cohesiveness * card.normalized.cohesiveness +
    weights.user_repetition * card.normalized.user_repetition +
    weights.concept_repetition * card.normalized.concept_repetition
  );
}

export function recommendResponse(body: RecommendBody): RecommendResponse {
  const weights = weightsOf(body);
  const teams = FIXTURE_TEAMS.map((team) => ({
    ...team,
    scorecard: { ...team.scorecard, weights, total: totalFor(team.scorecard, weights) },
  }));
  teams.sort((a, b) => {
    if (a.scorecard.total !== b.scorecard.total) {
      return b.scorecard.total - a.scorecard.total;
    }
    const aKey = a.members.map((m) => m.id).join(",");
    const bKey = b.members.map((m) => m.id).join(",");
    return aKey < bKey ? -1 : 1;
  });
  return {
    areas: body.areas,
    k: body.k ?? 10,
    mode: body.mode ?? "avg",
    limit: body.limit ?? 20,
    weights,
    teams,
  };
}

/** Pairs of members sharing a team letter sit 1 hop apart, others are unreachable. */
function distanceBetween(a: string, b: string): number | null {
  return a[0] === b[0] ? 1 : null;
}

export function scoreResponse(body: ScoreBody): ScoreResponse {
  const ordered = [...new Set(body.members)].sort();
  const weights = weightsOf(body);
  const fixture = FIXTURE_TEAMS.find(
    (team) =>
      team.members.length === ordered.length &&
      team.members.every((m) => ordered.includes(m.id)),
  );
  const base = fixture
    ? fixture.scorecard
    : makeCard({
        competence: 0.5,
        cohesiveness: ordered.length < 2 ? 0 : 0.5,
        user_repetition: 0,
        concept_repetition: 0.25,
      });
  const card = { ...base, weights, total: totalFor(base, weights) };
  const distances: PairDistance[] = [];
  for (let i = 0; i < ordered.length; i++) {
    for (let j = i + 1; j < ordered.length; j++) {
      const source = ordered[i]!;
      const target = ordered[j]!;
      distances.push({ source, target, distance: distanceBetween(source, target) });
    }
  }
  return {
    members: ordered.map((id) => ({ id, name: id.toUpperCase() })),
    areas: body.areas,
    mode: body.mode ?? "avg",
    scorecard: card,
    distances,
  };
}

// --- fetch stub -----------------------------------------------------------

type Handler = (request: RecordedRequest) => { status: number; payload: unknown };

function jsonResponse(status: number, payload: unknown): Response {
  return {
    ok: status >= 200 && status < 300,
    status,
    json: async () => payload,
  } as unknown as Response;
}

function abortError(): Error {
  const error = new Error("request aborted");
  error.name = "AbortError";
  return error;
}

export interface MockApi {
  fetch: FetchLike;
  requests: RecordedRequest[];
  /** Requests for one path, e.g. "/api/teams/recommend". */
  to(path: string): RecordedRequest[];
  /** Queue: next matching request stalls until released (for abort tests). */
  holdNext(path: string): () => void;
  /** Force the next matching request to fail with a given status/code. */
  failNext(path: string, status: number, code: string, message: string): void;
}

export function mockApi(): MockApi {
  const requests: RecordedRequest[] = [];
  const holds: Array<{ path: string; release: Promise<void>; trigger: () => void }> = [];
  const failures: Array<{ path: string; status: number; payload: unknown }> = [];

  const route: Handler = (request) => {
    const path = request.url.split("?")[0] ?? "";
    if (path === "/api/teams/recommend" || path === "/api/teams/score") {
      const body = request.body as RecommendBody & ScoreBody;
      if (path === "/api/teams/score") {
        for (const id of body.members) {
          if (!KNOWN_IDS.has(id)) {
            return {
              status: 404,
              payload: { error: { code: "unknown_individual", message: `unknown individual ${id}` } },
            };
          }
        }
        return { status: 200, payload: scoreResponse(body) };
      }
      return { status: 200, payload: recommendResponse(body) };
    }
    if (path === "/api/concepts/suggest") {
      return { status: 200, payload: [] };
    }
    return { status: 404, payload: { error: { code: "bad_request", message: `no route ${path}` } } };
  };

  const fetchFn: FetchLike = async (url, init) => {
    const signal = init?.signal ?? null;
    const request: RecordedRequest = {
      url,
      method: init?.method ?? "GET",
      body: init?.body ? JSON.parse(init.body as string) : null,
      aborted: () => signal?.aborted ?? false,
    };
    requests.push(request);
    const path = url.split("?")[0] ?? "";

    const holdIx = holds.findIndex((h) => h.path === path);
    if (holdIx >= 0) {
      const hold = holds.splice(holdIx, 1)[0]!;
      await new Promise<void>((resolve, reject) => {
        const onAbort = () => reject(abortError());
        if (signal?.aborted) return onAbort();
        signal?.addEventListener("abort", onAbort, { once: true });
        void hold.release.then(() => {
          signal?.removeEventListener("abort", onAbort);
          resolve();
        });
      });
    }
    if (signal?.aborted) throw abortError();

    const failIx = failures.findIndex((f) => f.path === path);
    if (failIx >= 0) {
      const failure = failures.splice(failIx, 1)[0]!;
      return jsonResponse(failure.status, failure.payload);
    }
    const { status, payload } = route(request);
    return jsonResponse(status, payload);
  };

  return {
    fetch: fetchFn,
    requests,
    to(path) {
      return requests.filter((r) => r.url.split("?")[0] === path);
    },
    holdNext(path) {
      let trigger!: () => void;
      const release = new Promise<void>((resolve) => {
        trigger = resolve;
      });
      holds.push({ path, release, trigger });
      return trigger;
    },
    failNext(path, status, code, message) {
      failures.push({ path, status, payload: { error: { code, message } } });
    },
  };
}

/** Drain the microtask chain a store action leaves behind. */
export async function flush(rounds = 8): Promise<void> {
  for (let i = 0; i < rounds; i++) await Promise.resolve();
}
