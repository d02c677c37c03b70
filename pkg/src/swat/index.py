"""Concept catalog queries: autocomplete suggestions and expert retrieval.

A ConceptIndex is built once per snapshot and is immutable afterwards, so
queries are concurrent-read safe.  Expert slates are pre-sorted at build
time, which keeps top-k retrieval independent of corpus size.
"""

from __future__ import annotations

from dataclasses import dataclass

from swat.errors import UnknownAreaError
from swat.model import GraphSnapshot


@dataclass(frozen=True, slots=True)
class SuggestionHit:
    area: str
    name: str
    score: float
    match_kind: str  # exact | name-prefix | token-prefix | alias


@dataclass(frozen=True, slots=True)
class RelatedArea:
    area: str
    kind: str
    similarity: float


@dataclass(frozen=True, slots=True)
class ExpertHit:
    """One retrieved expert for a queried area.

    ``competence`` is the raw edge weight backing the hit.  When the hit
    came through a concept relation, ``via_related`` names the related area
    and carries the discounted weight competence * similarity, which is what
    the hit competes with in the ranking.
    """

    individual: str
    area: str
    competence: float
    via_related: tuple[str, float] | None = None

    @property
    def effective_weight(self) -> float:
        return self.via_related[1] if self.via_related else self.competence


def _string_score(candidate: str, query: str) -> float:
    score = 0.0
    if candidate == query:
        score += 3
    if candidate.startswith(query):
        score += 2
    score += sum(1 for token in candidate.split() if token.startswith(query))
    return score


class ConceptIndex:
    def __init__(self, snapshot: GraphSnapshot):
        self.snapshot = snapshot

        self._names: list[tuple[str, str, str, bool]] = []  # (lowered, area id, name, is_alias)
        for area in snapshot.areas.values():
            self._names.append((area.name.lower(), area.id, area.name, False))
            for alias in area.aliases:
                self._names.append((alias.lower(), area.id, area.name, True))

        holders: dict[str, list[tuple[float, str]]] = {}
        for edge in snapshot.competence:
            holders.setdefault(edge.area, []).append((edge.weight, edge.individual))
        self._holders: dict[str, list[tuple[float, str]]] = {
            area: sorted(rows, key=lambda r: (-r[0], r[1])) for area, rows in holders.items()
        }

        relations: dict[str, list[RelatedArea]] = {}
        for rel in snapshot.relations:
            relations.setdefault(rel.src, []).append(
                RelatedArea(rel.dst, rel.kind, rel.similarity)
            )
        self._relations: dict[str, list[RelatedArea]] = {
            src: sorted(rows, key=lambda r: (-r.similarity, r.area))
            for src, rows in relations.items()
        }

    def _require_area(self, area_id: str) -> None:
        if area_id not in self.snapshot.areas:
            raise UnknownAreaError(area_id)

    def suggest(self, query: str, limit: int = 10) -> list[SuggestionHit]:
        """Case-insensitive token-prefix search over names and aliases.

        Exact matches score 3, whole-name prefixes 2, and each matching
        token prefix adds 1; the kinds stack.  Ties break alphabetically.
        """
        if limit < 1:
            raise ValueError("limit must be >= 1")
        q = query.strip().lower()
        if not q:
            return []
        best: dict[str, SuggestionHit] = {}
        for lowered, area_id, name, is_alias in self._names:
            score = _string_score(lowered, q)
            if score <= 0:
                continue
            if is_alias:
                kind = "alias"
            elif lowered == q:
                kind = "exact"
            elif lowered.startswith(q):
                kind = "name-prefix"
            else:
                kind = "token-prefix"
            hit = SuggestionHit(area_id, name, score, kind)
            current = best.get(area_id)
            if current is None or score > current.score:
                best[area_id] = hit
        ranked = sorted(best.values(), key=lambda h: (-h.score, h.name.lower(), h.area))
        return ranked[:limit]

    def related(self, area_id: str) -> list[RelatedArea]:
        """Declared concept relations from ``area_id``, similarity descending."""
        self._require_area(area_id)
        return list(self._relations.get(area_id, ()))

    def populated_areas(self) -> list[tuple[str, int]]:
        """(area id, direct holder count), most populated first."""
        counts = [(area, len(rows)) for area, rows in self._holders.items()]
        counts.sort(key=lambda c: (-c[1], c[0]))
        return counts

    def top_experts(self, area_id: str, k: int, expand: bool = False) -> list[ExpertHit]:
        """Best-ranked holders of competence in ``area_id``.

        Direct holders rank by competence weight.  With ``expand`` set,
        holders of related areas join the pool at competence * similarity;
        each individual appears once with their best-weighted route.
        """
        self._require_area(area_id)
        if k < 1:
            raise ValueError("k must be >= 1")
        direct = self._holders.get(area_id, ())
        if not expand:
            return [
                ExpertHit(individual, area_id, weight)
                for weight, individual in direct[:k]
            ]
        pool: dict[str, ExpertHit] = {
            individual: ExpertHit(individual, area_id, weight)
            for weight, individual in direct
        }
        for rel in self._relations.get(area_id, ()):
            for weight, individual in self._holders.get(rel.area, ()):
                discounted = weight * rel.similarity
                hit = ExpertHit(individual, area_id, weight, (rel.area, discounted))
                current = pool.get(individual)
                if current is None or discounted > current.effective_weight:
                    pool[individual] = hit
        ranked = sorted(pool.values(), key=lambda h: (-h.effective_weight, h.individual))
        return ranked[:k]
