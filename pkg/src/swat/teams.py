"""Candidate team enumeration, weighted ranking, and what-if scoring.

Candidates come from the Cartesian product of per-area expert slates; every
combination choosing one expert per required area becomes a member set.
Sets with fewer than two distinct members are discarded and identical
member sets are merged.  Ranking computes the four metrics per candidate,
normalizes them onto [0,1] and sorts by the user-weighted total.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from swat.errors import (
    CandidateExplosionError,
    InvalidParamsError,
    UnknownAreaError,
)
from swat.index import ConceptIndex
from swat.metrics import (
    COMPETENCE_MODES,
    competence_score,
    social_cohesiveness,
    team_concept_repetition,
    team_user_repetition,
)
from swat.model import DEFAULT_HORIZON, GraphSnapshot, pairwise_hop_distances

DEFAULT_CANDIDATE_CAP = 200_000

METRIC_NAMES = ("competence", "cohesiveness", "user_repetition", "concept_repetition")

_WEIGHT_ALIASES = {
    "competence": "competence",
    "comp": "competence",
    "cohesiveness": "cohesiveness",
    "coh": "cohesiveness",
    "user_repetition": "user_repetition",
    "user": "user_repetition",
    "tur": "user_repetition",
    "concept_repetition": "concept_repetition",
    "concept": "concept_repetition",
    "tcr": "concept_repetition",
}


@dataclass(frozen=True, slots=True)
class MetricWeights:
    """Non-negative metric weights, normalized to sum to 1 on construction."""

    competence: float
    cohesiveness: float
    user_repetition: float
    concept_repetition: float

    def __post_init__(self):
        values = (
            self.competence,
            self.cohesiveness,
            self.user_repetition,
            self.concept_repetition,
        )
        if any(v < 0 for v in values):
            raise InvalidParamsError("metric weights must be >= 0")
        total = sum(values)
        if total <= 0:
            raise InvalidParamsError("at least one metric weight must be > 0")
        object.__setattr__(self, "competence", self.competence / total)
        object.__setattr__(self, "cohesiveness", self.cohesiveness / total)
        object.__setattr__(self, "user_repetition", self.user_repetition / total)
        object.__setattr__(self, "concept_repetition", self.concept_repetition / total)

    @classmethod
    def uniform(cls) -> "MetricWeights":
        return cls(1.0, 1.0, 1.0, 1.0)

    @classmethod
    def from_mapping(cls, mapping: Mapping[str, float] | None) -> "MetricWeights":
        """Weights from a (possibly partial) name→value mapping.

        Accepts the short names used on the command line (comp, coh, tur,
        tcr) as well as the full metric names.  Metrics absent from a
        non-empty mapping weigh 0; an empty/None mapping means uniform.
        """
        if not mapping:
            return cls.uniform()
        resolved = dict.fromkeys(METRIC_NAMES, 0.0)
        for key, value in mapping.items():
            name = _WEIGHT_ALIASES.get(str(key).strip().lower().replace("-", "_"))
            if name is None:
                raise InvalidParamsError(f"unknown metric weight {key!r}")
            if isinstance(value, bool) or not isinstance(value, (int, float)):
                raise InvalidParamsError(f"weight {key!r} must be a number")
            resolved[name] = float(value)
        return cls(**resolved)

    def as_dict(self) -> dict[str, float]:
        return {name: getattr(self, name) for name in METRIC_NAMES}


@dataclass(frozen=True, slots=True)
class MetricValues:
    competence: float
    cohesiveness: float
    user_repetition: int
    concept_repetition: float


@dataclass(frozen=True, slots=True)
class NormalizedMetrics:
    competence: float
    cohesiveness: float
    user_repetition: float
    concept_repetition: float


@dataclass(frozen=True, slots=True)
class ScoreCard:
    raw: MetricValues
    normalized: NormalizedMetrics
    total: float
    weights: MetricWeights


@dataclass(slots=True)
class CandidateTeam:
    members: frozenset[str]
    assignment: dict[str, frozenset[str]]
    scorecard: ScoreCard | None = None

    def sorted_members(self) -> tuple[str, ...]:
        return tuple(sorted(self.members))


def slate_product_size(slates: Mapping[str, Sequence[str]]) -> int:
    product = 1
    for slate in slates.values():
        product *= len(slate)
    return product


def enumerate_candidates(
    snapshot: GraphSnapshot,
    required: Sequence[str],
    k: int,
    index: ConceptIndex | None = None,
    cap: int = DEFAULT_CANDIDATE_CAP,
) -> list[CandidateTeam]:
    """All teams formable by picking one top-k expert per required area.

    Deterministic: output is ordered lexicographically by sorted member ids.
    Raises CandidateExplosionError instead of silently truncating when the
    slate product exceeds ``cap`` — a truncated ranking would not be
    reproducible.
    """
    if not required:
        raise InvalidParamsError("at least one required area is needed")
    if k < 1:
        raise InvalidParamsError("k must be >= 1")
    index = index or ConceptIndex(snapshot)
    for area in required:
        if area not in snapshot.areas:
            raise UnknownAreaError(area)
    areas = list(dict.fromkeys(required))
    slates = {
        area: [hit.individual for hit in index.top_experts(area, k, expand=False)]
        for area in areas
    }
    product = slate_product_size(slates)
    if product > cap:
        raise CandidateExplosionError(product, cap)

    merged: dict[tuple[str, ...], dict[str, set[str]]] = {}
    for combo in itertools.product(*(slates[a] for a in areas)):
        members = set(combo)
        if len(members) < 2:
            continue
        key = tuple(sorted(members))
        assignment = merged.get(key)
        if assignment is None:
            assignment = {a: set() for a in areas}
            merged[key] = assignment
        for area, chosen in zip(areas, combo):
            assignment[area].add(chosen)

    return [
        CandidateTeam(
            members=frozenset(key),
            assignment={a: frozenset(v) for a, v in merged[key].items()},
        )
        for key in sorted(merged)
    ]


def _normalize(raw: MetricValues, max_tur: int) -> NormalizedMetrics:
    return NormalizedMetrics(
        competence=raw.competence,
        cohesiveness=raw.cohesiveness,
        user_repetition=raw.user_repetition / max_tur if max_tur > 0 else 0.0,
        concept_repetition=raw.concept_repetition,
    )


def _total(normalized: NormalizedMetrics, weights: MetricWeights) -> float:
    return (
        weights.competence * normalized.competence
        + weights.cohesiveness * normalized.cohesiveness
        + weights.user_repetition * normalized.user_repetition
        + weights.concept_repetition * normalized.concept_repetition
    )


def compute_raw_metrics(
    snapshot: GraphSnapshot,
    candidate: CandidateTeam,
    required: Iterable[str],
    mode: str,
    distances: Mapping[tuple[str, str], int | None] | None = None,
) -> MetricValues:
    return MetricValues(
        competence=competence_score(snapshot, candidate.members, candidate.assignment, mode),
        cohesiveness=social_cohesiveness(snapshot, candidate.members, distances=distances),
        user_repetition=team_user_repetition(snapshot, candidate.members),
        concept_repetition=team_concept_repetition(snapshot, candidate.members, required),
    )


def rank_candidates(
    snapshot: GraphSnapshot,
    candidates: Sequence[CandidateTeam],
    required: Sequence[str],
    weights: MetricWeights,
    mode: str = "avg",
    limit: int | None = None,
) -> list[CandidateTeam]:
    """Score every candidate and return them best-first.

    Competence, cohesiveness and concept repetition are already in [0,1]
    and pass through; the raw user-repetition count is scaled by the best
    count in this slate so the integer metric is commensurable.  Ties break
    on sorted member ids, so identical inputs always rank identically.
    """
    if mode not in COMPETENCE_MODES:
        raise InvalidParamsError(f"mode must be one of {COMPETENCE_MODES}")
    if not candidates:
        return []

    pool: set[str] = set()
    for c in candidates:
        pool.update(c.members)
    distances = pairwise_hop_distances(snapshot, pool, DEFAULT_HORIZON)

    raws = [
        compute_raw_metrics(snapshot, c, required, mode, distances) for c in candidates
    ]
    max_tur = max(r.user_repetition for r in raws)

    scored: list[CandidateTeam] = []
    for candidate, raw in zip(candidates, raws):
        normalized = _normalize(raw, max_tur)
        card = ScoreCard(raw, normalized, _total(normalized, weights), weights)
        scored.append(CandidateTeam(candidate.members, dict(candidate.assignment), card))
    scored.sort(key=lambda c: (-c.scorecard.total, c.sorted_members()))
    return scored[:limit] if limit is not None else scored


def derive_assignment(
    snapshot: GraphSnapshot,
    members: Iterable[str],
    required: Iterable[str],
) -> dict[str, frozenset[str]]:
    """Each required area mapped to the members holding competence in it."""
    members = sorted(set(members))
    return {
        area: frozenset(
            m for m in members if area in snapshot.competence_of(m)
        )
        for area in required
    }


def score_team(
    snapshot: GraphSnapshot,
    members: Iterable[str],
    required: Iterable[str],
    weights: MetricWeights,
    mode: str = "avg",
) -> ScoreCard:
    """Score a hand-composed team against a required area set.

    The assignment is auto-derived from competence edges; areas nobody
    covers count 0.  With no slate to normalize against, the raw user
    repetition n maps to n/(n+1).
    """
    if mode not in COMPETENCE_MODES:
        raise InvalidParamsError(f"mode must be one of {COMPETENCE_MODES}")
    member_set = sorted(set(members))
    if not member_set:
        raise InvalidParamsError("team must have at least one member")
    required_list = list(dict.fromkeys(required))
    if not required_list:
        raise InvalidParamsError("at least one required area is needed")
    for m in member_set:
        snapshot.require_individual(m)
    for area in required_list:
        if area not in snapshot.areas:
            raise UnknownAreaError(area)

    assignment = derive_assignment(snapshot, member_set, required_list)
    candidate = CandidateTeam(frozenset(member_set), assignment)
    raw = compute_raw_metrics(snapshot, candidate, required_list, mode)
    normalized = NormalizedMetrics(
        competence=raw.competence,
        cohesiveness=raw.cohesiveness,
        user_repetition=raw.user_repetition / (raw.user_repetition + 1),
        concept_repetition=raw.concept_repetition,
    )
    return ScoreCard(raw, normalized, _total(normalized, weights), weights)
