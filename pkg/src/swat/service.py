"""HTTP/JSON API over an atomically swappable snapshot.

Every response body is produced by a payload builder and serialized with
``canonical_dumps``; the CLI's ``--json`` output reuses the same builders,
so the two interfaces are byte-identical for identical queries.  Error
bodies always look like ``{"error": {"code": ..., "message": ...}}`` with
codes drawn from a closed enum — request validation is done by hand rather
than delegated to the framework so no other error shape can leak out.
"""

from __future__ import annotations

import json
import threading
from dataclasses import dataclass
from pathlib import Path
from typing import Callable, Iterable, Mapping

from fastapi import FastAPI, Request, Response
from fastapi.middleware.cors import CORSMiddleware
from fastapi.staticfiles import StaticFiles

from swat.corpus import cross_validate_history, parse_corpus
from swat.errors import (
    CandidateExplosionError,
    FormatError,
    InvalidParamsError,
    SwatError,
    UnknownAreaError,
    UnknownIndividualError,
)
from swat.index import ConceptIndex
from swat.metrics import COMPETENCE_MODES
from swat.model import GraphSnapshot, build_snapshot, ego_network, pairwise_hop_distances
from swat.stats import compute_stats
from swat.teams import (
    DEFAULT_CANDIDATE_CAP,
    MetricWeights,
    ScoreCard,
    enumerate_candidates,
    rank_candidates,
    score_team,
)

DEFAULT_K = 20
DEFAULT_LIMIT = 20
DEFAULT_SUGGEST_LIMIT = 10


def canonical_dumps(payload) -> str:
    """The one JSON serialization used on every interface."""
    return json.dumps(payload, ensure_ascii=False, separators=(",", ":"), allow_nan=False)


@dataclass(frozen=True)
class Engine:
    """A snapshot plus the indexes derived from it, swapped as a unit."""

    snapshot: GraphSnapshot
    index: ConceptIndex

    @classmethod
    def from_snapshot(cls, snapshot: GraphSnapshot) -> "Engine":
        return cls(snapshot=snapshot, index=ConceptIndex(snapshot))


class EngineHolder:
    """Atomic reference to the active engine.

    Readers grab ``holder.engine`` once per request and keep using that
    object; a concurrent swap never mutates an engine in place, so
    in-flight requests finish on the snapshot they started with.
    """

    def __init__(self, engine: Engine | None = None):
        self._engine = engine
        self._swap_lock = threading.Lock()

    @property
    def engine(self) -> Engine | None:
        return self._engine

    def swap(self, engine: Engine) -> None:
        with self._swap_lock:
            self._engine = engine


# --- payload builders (shared with the CLI) -----------------------------------


def suggest_payload(index: ConceptIndex, query: str, limit: int) -> list[dict]:
    return [
        {"area": h.area, "name": h.name, "score": h.score, "match_kind": h.match_kind}
        for h in index.suggest(query, limit)
    ]


def experts_payload(
    snapshot: GraphSnapshot, index: ConceptIndex, area: str, k: int, expand: bool
) -> list[dict]:
    out = []
    for hit in index.top_experts(area, k, expand=expand):
        via = None
        if hit.via_related is not None:
            via = {"area": hit.via_related[0], "weight": hit.effective_weight}
        out.append(
            {
                "individual": hit.individual,
                "name": snapshot.individuals[hit.individual].name,
                "area": hit.area,
                "competence": hit.competence,
                "effective_weight": hit.effective_weight,
                "via_related": via,
            }
        )
    return out


def _scorecard_payload(card: ScoreCard) -> dict:
    return {
        "raw": {
            "competence": card.raw.competence,
            "cohesiveness": card.raw.cohesiveness,
            "user_repetition": card.raw.user_repetition,
            "concept_repetition": card.raw.concept_repetition,
        },
        "normalized": {
            "competence": card.normalized.competence,
            "cohesiveness": card.normalized.cohesiveness,
            "user_repetition": card.normalized.user_repetition,
            "concept_repetition": card.normalized.concept_repetition,
        },
        "total": card.total,
        "weights": card.weights.as_dict(),
    }


def recommend_payload(
    snapshot: GraphSnapshot,
    index: ConceptIndex,
    areas: list[str],
    k: int = DEFAULT_K,
    weights: MetricWeights | None = None,
    mode: str = "avg",
    limit: int = DEFAULT_LIMIT,
    cap: int = DEFAULT_CANDIDATE_CAP,
) -> dict:
    weights = weights or MetricWeights.uniform()
    candidates = enumerate_candidates(snapshot, areas, k, index=index, cap=cap)
    ranked = rank_candidates(snapshot, candidates, areas, weights, mode=mode, limit=limit)
    teams = []
    for team in ranked:
        teams.append(
            {
                "members": [
                    {"id": m, "name": snapshot.individuals[m].name}
                    for m in team.sorted_members()
                ],
                "assignment": {a: sorted(v) for a, v in sorted(team.assignment.items())},
                "scorecard": _scorecard_payload(team.scorecard),
            }
        )
    return {
        "areas": list(areas),
        "k": k,
        "mode": mode,
        "limit": limit,
        "weights": weights.as_dict(),
        "teams": teams,
    }


def score_payload(
    snapshot: GraphSnapshot,
    members: list[str],
    areas: list[str],
    weights: MetricWeights | None = None,
    mode: str = "avg",
) -> dict:
    weights = weights or MetricWeights.uniform()
    card = score_team(snapshot, members, areas, weights, mode=mode)
    ordered = sorted(set(members))
    distances = pairwise_hop_distances(snapshot, ordered)
    pairs = [
        {"source": a, "target": b, "distance": distances[(a, b)]}
        for a, b in sorted(distances)
    ]
    return {
        "members": [{"id": m, "name": snapshot.individuals[m].name} for m in ordered],
        "areas": list(areas),
        "mode": mode,
        "scorecard": _scorecard_payload(card),
        "distances": pairs,
    }


def stats_payload(snapshot: GraphSnapshot) -> dict:
    return compute_stats(snapshot).as_dict()


def ego_payload(snapshot: GraphSnapshot, individual_id: str, radius: int) -> dict:
    net = ego_network(snapshot, individual_id, radius)
    return {
        "root": net.root,
        "radius": net.radius,
        "individuals": [{"id": i.id, "name": i.name} for i in net.individuals],
        "social_edges": [
            {"src": e.src, "dst": e.dst, "dimension": e.dimension, "strength": e.strength}
            for e in net.social_edges
        ],
        "competence": [
            {"individual": c.individual, "area": c.area, "weight": c.weight}
            for c in net.competence_edges
        ],
    }


def snapshot_summary(snapshot: GraphSnapshot, anomalies: int | None = None) -> dict:
    summary = {
        "individuals": len(snapshot.individuals),
        "areas": len(snapshot.areas),
        "competence_edges": len(snapshot.competence),
        "social_edges": len(snapshot.social_edges),
        "publications": len(snapshot.publications),
        "history_teams": len(snapshot.history_teams),
        "dimensions": list(snapshot.dimensions),
        "build_timestamp": snapshot.build_timestamp,
    }
    if anomalies is not None:
        summary["anomalies"] = anomalies
    return summary


# --- request plumbing ---------------------------------------------------------


def _json_response(payload, status: int = 200) -> Response:
    return Response(
        content=canonical_dumps(payload),
        status_code=status,
        media_type="application/json",
    )


def _error(status: int, code: str, message: str) -> Response:
    return _json_response({"error": {"code": code, "message": message}}, status)


def _dispatch(fn: Callable[[], object]) -> Response:
    """Run a payload builder, mapping domain errors onto the wire contract."""
    try:
        return _json_response(fn())
    except UnknownAreaError as exc:
        return _error(404, "unknown_area", str(exc))
    except UnknownIndividualError as exc:
        return _error(404, "unknown_individual", str(exc))
    except CandidateExplosionError as exc:
        return _error(422, "candidate_explosion", str(exc))
    except (InvalidParamsError, FormatError, ValueError) as exc:
        return _error(400, "bad_request", str(exc))
    except SwatError as exc:
        return _error(400, "bad_request", str(exc))
    except OSError as exc:
        return _error(400, "bad_request", str(exc))
    except Exception as exc:  # pragma: no cover - last-resort guard
        return _error(500, "internal", f"{type(exc).__name__}: {exc}")


def _require_int(value: str | None, default: int, name: str, minimum: int = 1) -> int:
    if value is None or value == "":
        return default
    try:
        parsed = int(value)
    except ValueError:
        raise InvalidParamsError(f"{name} must be an integer") from None
    if parsed < minimum:
        raise InvalidParamsError(f"{name} must be >= {minimum}")
    return parsed


def _require_bool(value: str | None, default: bool, name: str) -> bool:
    if value is None or value == "":
        return default
    lowered = value.lower()
    if lowered in ("1", "true", "yes", "on"):
        return True
    if lowered in ("0", "false", "no", "off"):
        return False
    raise InvalidParamsError(f"{name} must be a boolean")


def _str_list(body: Mapping, key: str) -> list[str]:
    value = body.get(key)
    if not isinstance(value, list) or not value or not all(
        isinstance(x, str) and x for x in value
    ):
        raise InvalidParamsError(f"{key} must be a non-empty list of ids")
    return value


def _body_weights(body: Mapping) -> MetricWeights:
    weights = body.get("weights")
    if weights is None:
        return MetricWeights.uniform()
    if not isinstance(weights, Mapping):
        raise InvalidParamsError("weights must be an object of metric name -> value")
    return MetricWeights.from_mapping(weights)


def _body_mode(body: Mapping) -> str:
    mode = body.get("mode", "avg")
    if mode not in COMPETENCE_MODES:
        raise InvalidParamsError(f"mode must be one of {COMPETENCE_MODES}")
    return mode


def _body_int(body: Mapping, key: str, default: int, minimum: int = 1) -> int:
    value = body.get(key, default)
    if isinstance(value, bool) or not isinstance(value, int):
        raise InvalidParamsError(f"{key} must be an integer")
    if value < minimum:
        raise InvalidParamsError(f"{key} must be >= {minimum}")
    return value


async def _read_body(request: Request) -> dict:
    try:
        body = await request.json()
    except Exception:
        raise InvalidParamsError("request body must be a JSON object") from None
    if not isinstance(body, dict):
        raise InvalidParamsError("request body must be a JSON object")
    return body


def create_app(
    engine: Engine | None = None,
    holder: EngineHolder | None = None,
    ui_dir: str | Path | None = None,
) -> FastAPI:
    """Build the API app around an engine holder.

    Pass ``ui_dir`` to also serve a built web UI bundle at the site root;
    API routes are registered first so ``/api/...`` always wins.
    """
    holder = holder or EngineHolder(engine)
    app = FastAPI(title="swat", docs_url=None, redoc_url=None, openapi_url=None)
    app.state.holder = holder
    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"],
        allow_methods=["*"],
        allow_headers=["*"],
    )

    def _engine() -> Engine:
        engine = holder.engine
        if engine is None:
            raise SwatError("no snapshot loaded")
        return engine

    @app.get("/api/concepts/suggest")
    def api_suggest(request: Request):
        if "q" not in request.query_params:
            return _error(400, "bad_request", "missing query parameter q")
        q = request.query_params["q"]
        return _dispatch(
            lambda: suggest_payload(
                _engine().index,
                q,
                _require_int(request.query_params.get("limit"), DEFAULT_SUGGEST_LIMIT, "limit"),
            )
        )

    @app.get("/api/experts")
    def api_experts(request: Request):
        params = request.query_params
        if "area" not in params or not params["area"]:
            return _error(400, "bad_request", "missing query parameter area")

        def build():
            eng = _engine()
            return experts_payload(
                eng.snapshot,
                eng.index,
                params["area"],
                _require_int(params.get("k"), DEFAULT_K, "k"),
                _require_bool(params.get("expand"), False, "expand"),
            )

        return _dispatch(build)

    @app.get("/api/stats")
    def api_stats():
        return _dispatch(lambda: stats_payload(_engine().snapshot))

    @app.get("/api/individuals/{individual_id}/ego")
    def api_ego(individual_id: str, request: Request):
        return _dispatch(
            lambda: ego_payload(
                _engine().snapshot,
                individual_id,
                _require_int(request.query_params.get("radius"), 1, "radius"),
            )
        )

    @app.post("/api/teams/recommend")
    async def api_recommend(request: Request):
        try:
            body = await _read_body(request)
        except InvalidParamsError as exc:
            return _error(400, "bad_request", str(exc))

        def build():
            eng = _engine()
            return recommend_payload(
                eng.snapshot,
                eng.index,
                _str_list(body, "areas"),
                k=_body_int(body, "k", DEFAULT_K),
                weights=_body_weights(body),
                mode=_body_mode(body),
                limit=_body_int(body, "limit", DEFAULT_LIMIT),
            )

        return _dispatch(build)

    @app.post("/api/teams/score")
    async def api_score(request: Request):
        try:
            body = await _read_body(request)
        except InvalidParamsError as exc:
            return _error(400, "bad_request", str(exc))

        def build():
            return score_payload(
                _engine().snapshot,
                _str_list(body, "members"),
                _str_list(body, "areas"),
                weights=_body_weights(body),
                mode=_body_mode(body),
            )

        return _dispatch(build)

    @app.post("/api/admin/reload")
    async def api_reload(request: Request):
        try:
            body = await _read_body(request)
        except InvalidParamsError as exc:
            return _error(400, "bad_request", str(exc))

        def build():
            corpus_dir = body.get("corpus_dir")
            if not isinstance(corpus_dir, str) or not corpus_dir:
                raise InvalidParamsError("corpus_dir must be a non-empty string")
            records, report = parse_corpus(corpus_dir)
            if body.get("cross_validate") is True:
                records, derived = cross_validate_history(records)
                report.extend(derived)
            snapshot = build_snapshot(records)
            holder.swap(Engine.from_snapshot(snapshot))
            return snapshot_summary(snapshot, anomalies=len(report))

        return _dispatch(build)

    if ui_dir is not None and Path(ui_dir).is_dir():
        app.mount("/", StaticFiles(directory=str(ui_dir), html=True), name="ui")
    else:

        @app.get("/")
        def api_root():
            def build():
                eng = holder.engine
                return {
                    "service": "swat",
                    "snapshot": snapshot_summary(eng.snapshot) if eng else None,
                }

            return _dispatch(build)

    return app
