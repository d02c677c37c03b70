"""The four team-quality metrics.

All metrics are pure functions of an immutable snapshot, safe to evaluate
in parallel across candidate teams.

* competence_score    — how well the assigned members cover the required
                        areas, averaged or maxed over areas
* social_cohesiveness — mean inverse pairwise hop distance on the union
                        social graph, in [0,1]; 1 exactly on direct cliques
* team_user_repetition    — how many past teams were subsets of this one
* team_concept_repetition — mean Jaccard overlap between the required
                        concepts and the concepts of past teams that share
                        at least one member with this one
"""

from __future__ import annotations

from typing import Iterable, Mapping

from swat.errors import EmptyAssignmentError
from swat.model import DEFAULT_HORIZON, GraphSnapshot, pairwise_hop_distances

COMPETENCE_MODES = ("avg", "max")


def area_coverage(
    snapshot: GraphSnapshot,
    assignment: Mapping[str, Iterable[str]],
) -> dict[str, float]:
    """Per-area coverage value: best competence among the assigned members.

    A member without a competence edge to the area contributes 0, so
    hand-edited teams with arbitrary member swaps still score.
    """
    coverage: dict[str, float] = {}
    for area, members in assignment.items():
        best = 0.0
        for m in members:
            w = snapshot.competence_of(m).get(area, 0.0)
            if w > best:
                best = w
        coverage[area] = best
    return coverage


def competence_score(
    snapshot: GraphSnapshot,
    team: Iterable[str],
    assignment: Mapping[str, Iterable[str]],
    mode: str = "avg",
) -> float:
    """Team competence over the assigned areas.

    ``avg`` favours evenly competent teams; ``max`` favours teams with at
    least one highly competent member.
    """
    if mode not in COMPETENCE_MODES:
        raise ValueError(f"mode must be one of {COMPETENCE_MODES}")
    if not assignment:
        raise EmptyAssignmentError("assignment covers no areas")
    coverage = area_coverage(snapshot, assignment)
    values = list(coverage.values())
    return max(values) if mode == "max" else sum(values) / len(values)


def social_cohesiveness(
    snapshot: GraphSnapshot,
    team: Iterable[str],
    horizon: int = DEFAULT_HORIZON,
    distances: Mapping[tuple[str, str], int | None] | None = None,
) -> float:
    """Mean inverse pairwise hop distance, scaled to [0,1].

    Directly connected pairs contribute 1, pairs at distance d contribute
    1/d, unreachable pairs 0.  Singleton teams score 0.  ``distances`` may
    carry precomputed (min,max)-keyed hop counts to share traversals across
    many candidates from the same slates.
    """
    members = sorted(set(team))
    for m in members:
        snapshot.require_individual(m)
    n = len(members)
    if n < 2:
        return 0.0
    if distances is None:
        distances = pairwise_hop_distances(snapshot, members, horizon)
    total = 0.0
    for a_pos in range(n):
        for b_pos in range(a_pos + 1, n):
            d = distances[(members[a_pos], members[b_pos])]
            if d is not None:
                total += 1.0 / d
    return total * 2.0 / (n * (n - 1))


def team_user_repetition(snapshot: GraphSnapshot, team: Iterable[str]) -> int:
    """Number of past teams whose member set is a subset of ``team``."""
    members = frozenset(team)
    candidates: set[int] = set()
    for m in members:
        candidates.update(snapshot.teams_containing(m))
    return sum(
        1 for tix in candidates if snapshot.history_teams[tix].members <= members
    )


def team_concept_repetition(
    snapshot: GraphSnapshot,
    team: Iterable[str],
    required: Iterable[str],
) -> float:
    """Concept overlap with the past teams this team's members belong to.

    Mean Jaccard similarity between the required area set and the area set
    of every history team sharing at least one member with ``team``; 0 when
    no past team qualifies.
    """
    required_set = frozenset(required)
    if not required_set:
        raise ValueError("required area set is empty")
    members = frozenset(team)
    relevant: set[int] = set()
    for m in members:
        relevant.update(snapshot.teams_containing(m))
    if not relevant:
        return 0.0
    total = 0.0
    # Sorted so the sum's float rounding never depends on set layout.
    for tix in sorted(relevant):
        areas = snapshot.history_teams[tix].areas
        total += len(required_set & areas) / len(required_set | areas)
    return total / len(relevant)
