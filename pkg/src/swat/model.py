"""Three-graph data model: competence, social and collaboration history.

A GraphSnapshot is the immutable, atomically replaceable in-memory form of
a corpus.  It bundles:

  * the competence graph — bipartite individual→area edges weighted in (0,1)
  * the social graph — a directed multigraph whose edges carry a dimension
    (coauthor, colleague, friend, ...) and a strength in (0,1)
  * the history graph — hyperedges linking a past team's member set to the
    concept set it worked on, derived from multi-author publications

All query operations are pure functions of the snapshot, so one snapshot can
serve unlimited concurrent readers.  Path queries run over the *undirected
union* of social dimensions: hop counts only, strengths do not shorten paths.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from datetime import datetime, timezone
from typing import Iterable, Mapping

import numpy as np
from scipy import sparse

from swat.corpus import CorpusRecords
from swat.errors import IntegrityError, UnknownIndividualError

DEFAULT_HORIZON = 6

#: Sentinel distance for pairs with no path inside the horizon.
UNREACHABLE = None


@dataclass(frozen=True, slots=True)
class Individual:
    id: str
    name: str
    affiliations: tuple[str, ...] = ()
    country: str | None = None
    profile: tuple[tuple[str, str], ...] = ()


@dataclass(frozen=True, slots=True)
class ExpertiseArea:
    id: str
    name: str
    aliases: tuple[str, ...] = ()


@dataclass(frozen=True, slots=True)
class CompetenceEdge:
    individual: str
    area: str
    weight: float
    derived: bool = False


@dataclass(frozen=True, slots=True)
class AreaRelation:
    src: str
    dst: str
    kind: str  # subsumes | similar | synonym
    similarity: float


@dataclass(frozen=True, slots=True)
class SocialEdge:
    src: str
    dst: str
    dimension: str
    strength: float


@dataclass(frozen=True, slots=True)
class Publication:
    id: str
    authors: tuple[str, ...]
    areas: frozenset[str]
    year: int
    venue: str | None = None


@dataclass(frozen=True, slots=True)
class HistoryTeam:
    members: frozenset[str]
    areas: frozenset[str]
    year: int
    source_publication: str


@dataclass(frozen=True)
class EgoNetwork:
    """Radius-bounded neighborhood of one individual."""

    root: str
    radius: int
    individuals: tuple[Individual, ...]
    social_edges: tuple[SocialEdge, ...]
    competence_edges: tuple[CompetenceEdge, ...]


@dataclass(frozen=True)
class GraphSnapshot:
    """Immutable bundle of the three graphs plus the concept catalog."""

    individuals: Mapping[str, Individual]
    areas: Mapping[str, ExpertiseArea]
    relations: tuple[AreaRelation, ...]
    competence: tuple[CompetenceEdge, ...]
    social_edges: tuple[SocialEdge, ...]
    publications: tuple[Publication, ...]
    history_teams: tuple[HistoryTeam, ...]
    dimensions: tuple[str, ...]
    build_timestamp: str = field(default="")

    def __post_init__(self):
        # Derived read-only indexes; built once, shared by every query.
        neighbors: dict[str, set[str]] = {i: set() for i in self.individuals}
        for e in self.social_edges:
            neighbors[e.src].add(e.dst)
            neighbors[e.dst].add(e.src)
        frozen = {i: frozenset(n) for i, n in neighbors.items()}

        competence_of: dict[str, dict[str, float]] = {}
        for c in self.competence:
            competence_of.setdefault(c.individual, {})[c.area] = c.weight

        teams_by_member: dict[str, list[int]] = {}
        for tix, team in enumerate(self.history_teams):
            for m in team.members:
                teams_by_member.setdefault(m, []).append(tix)

        order = tuple(sorted(self.individuals))
        index_of = {ind: ix for ix, ind in enumerate(order)}
        n = len(order)
        rows: list[int] = []
        cols: list[int] = []
        for src, nbrs in frozen.items():
            six = index_of[src]
            for dst in nbrs:
                rows.append(six)
                cols.append(index_of[dst])
        adjacency = sparse.csr_matrix(
            (np.ones(len(rows), dtype=np.int8), (rows, cols)), shape=(n, n)
        )

        object.__setattr__(self, "_neighbors", frozen)
        object.__setattr__(self, "_competence_of", competence_of)
        object.__setattr__(
            self, "_teams_by_member", {m: tuple(ts) for m, ts in teams_by_member.items()}
        )
        object.__setattr__(self, "_order", order)
        object.__setattr__(self, "_index_of", index_of)
        object.__setattr__(self, "_adjacency", adjacency)

    # -- lookups -------------------------------------------------------------

    def require_individual(self, individual_id: str) -> Individual:
        try:
            return self.individuals[individual_id]
        except KeyError:
            raise UnknownIndividualError(individual_id) from None

    def neighbors(self, individual_id: str) -> frozenset[str]:
        """Distinct undirected social neighbors across all dimensions."""
        self.require_individual(individual_id)
        return self._neighbors[individual_id]

    def competence_of(self, individual_id: str) -> Mapping[str, float]:
        """area id -> competence weight for one individual (may be empty)."""
        return self._competence_of.get(individual_id, {})

    def teams_containing(self, individual_id: str) -> tuple[int, ...]:
        """Indexes into history_teams of teams this individual was part of."""
        return self._teams_by_member.get(individual_id, ())


def build_snapshot(records: CorpusRecords, build_timestamp: str | None = None) -> GraphSnapshot:
    """Validate parsed records and assemble an immutable snapshot.

    History teams are derived here: one per publication with at least two
    authors and at least one annotated area.  Publications that do not
    qualify are still retained for corpus statistics.

    Raises IntegrityError (with the offending record's locator) on dangling
    ids, duplicate edges or out-of-range labels.
    """
    individuals: dict[str, Individual] = {}
    for r in records.individuals:
        if r.id in individuals:
            raise IntegrityError(f"duplicate individual id {r.id!r}", r.loc)
        if not r.name:
            raise IntegrityError("individual name is empty", r.loc)
        individuals[r.id] = Individual(r.id, r.name, r.affiliations, r.country, r.profile)

    areas: dict[str, ExpertiseArea] = {}
    for r in records.areas:
        if r.id in areas:
            raise IntegrityError(f"duplicate area id {r.id!r}", r.loc)
        if not r.name:
            raise IntegrityError("area name is empty", r.loc)
        if len(set(r.aliases)) != len(r.aliases):
            raise IntegrityError("duplicate aliases", r.loc)
        areas[r.id] = ExpertiseArea(r.id, r.name, r.aliases)

    relations: list[AreaRelation] = []
    for r in records.relations:
        if r.src not in areas:
            raise IntegrityError(f"relation references unknown area {r.src!r}", r.loc)
        if r.dst not in areas:
            raise IntegrityError(f"relation references unknown area {r.dst!r}", r.loc)
        if r.src == r.dst:
            raise IntegrityError("relation endpoints are the same area", r.loc)
        if not 0.0 < r.similarity <= 1.0:
            raise IntegrityError(f"relation similarity {r.similarity} out of (0,1]", r.loc)
        if r.kind == "synonym" and r.similarity != 1.0:
            raise IntegrityError("synonym relation requires similarity 1", r.loc)
        relations.append(AreaRelation(r.src, r.dst, r.kind, r.similarity))

    competence: list[CompetenceEdge] = []
    seen_pairs: set[tuple[str, str]] = set()
    for r in records.competence:
        if r.individual not in individuals:
            raise IntegrityError(f"competence references unknown individual {r.individual!r}", r.loc)
        if r.area not in areas:
            raise IntegrityError(f"competence references unknown area {r.area!r}", r.loc)
        if not 0.0 < r.weight < 1.0:
            raise IntegrityError(f"competence weight {r.weight} out of open (0,1)", r.loc)
        pair = (r.individual, r.area)
        if pair in seen_pairs:
            raise IntegrityError(f"duplicate competence edge {pair}", r.loc)
        seen_pairs.add(pair)
        competence.append(CompetenceEdge(r.individual, r.area, r.weight, r.derived))

    social: list[SocialEdge] = []
    seen_social: set[tuple[str, str, str]] = set()
    for r in records.social:
        if r.src not in individuals:
            raise IntegrityError(f"social edge references unknown individual {r.src!r}", r.loc)
        if r.dst not in individuals:
            raise IntegrityError(f"social edge references unknown individual {r.dst!r}", r.loc)
        if r.src == r.dst:
            raise IntegrityError("social self-loop", r.loc)
        if not 0.0 < r.strength < 1.0:
            raise IntegrityError(f"social strength {r.strength} out of open (0,1)", r.loc)
        key = (r.src, r.dst, r.dimension)
        if key in seen_social:
            raise IntegrityError(f"duplicate social edge {key}", r.loc)
        seen_social.add(key)
        social.append(SocialEdge(r.src, r.dst, r.dimension, r.strength))

    publications: list[Publication] = []
    history: list[HistoryTeam] = []
    seen_pubs: set[str] = set()
    for r in records.publications:
        if r.id in seen_pubs:
            raise IntegrityError(f"duplicate publication id {r.id!r}", r.loc)
        seen_pubs.add(r.id)
        if not r.authors:
            raise IntegrityError("publication has no authors", r.loc)
        if len(set(r.authors)) != len(r.authors):
            raise IntegrityError("duplicate authors on publication", r.loc)
        for a in r.authors:
            if a not in individuals:
                raise IntegrityError(f"publication references unknown individual {a!r}", r.loc)
        for area in r.areas:
            if area not in areas:
                raise IntegrityError(f"publication references unknown area {area!r}", r.loc)
        pub = Publication(r.id, r.authors, frozenset(r.areas), r.year, r.venue)
        publications.append(pub)
        if len(pub.authors) >= 2 and pub.areas:
            history.append(
                HistoryTeam(frozenset(pub.authors), pub.areas, pub.year, pub.id)
            )

    dimensions = tuple(sorted({e.dimension for e in social}))
    stamp = build_timestamp or datetime.now(timezone.utc).isoformat(timespec="seconds")
    return GraphSnapshot(
        individuals=individuals,
        areas=areas,
        relations=tuple(relations),
        competence=tuple(competence),
        social_edges=tuple(social),
        publications=tuple(publications),
        history_teams=tuple(history),
        dimensions=dimensions,
        build_timestamp=stamp,
    )


# --- path and neighborhood queries -------------------------------------------


def _filtered_neighbors(snapshot: GraphSnapshot, dims: set[str]) -> dict[str, set[str]]:
    adj: dict[str, set[str]] = {i: set() for i in snapshot.individuals}
    for e in snapshot.social_edges:
        if e.dimension in dims:
            adj[e.src].add(e.dst)
            adj[e.dst].add(e.src)
    return adj


def shortest_social_distance(
    snapshot: GraphSnapshot,
    i: str,
    j: str,
    dims: Iterable[str] | None = None,
    horizon: int = DEFAULT_HORIZON,
) -> int | None:
    """Hop count between two individuals on the undirected union graph.

    ``dims`` restricts the union to the named social dimensions.  Returns
    UNREACHABLE (None) when no path of length <= horizon exists; the
    distance of an individual to itself is 0.
    """
    snapshot.require_individual(i)
    snapshot.require_individual(j)
    if horizon < 1:
        raise ValueError("horizon must be >= 1")
    if i == j:
        return 0
    if dims is None:
        adj = snapshot._neighbors
    else:
        adj = _filtered_neighbors(snapshot, set(dims))
    dist = {i: 0}
    queue = deque([i])
    while queue:
        v = queue.popleft()
        d = dist[v] + 1
        if d > horizon:
            break
        for w in adj[v]:
            if w not in dist:
                if w == j:
                    return d
                dist[w] = d
                queue.append(w)
    return UNREACHABLE


def _bfs_levels(
    indptr: np.ndarray,
    indices: np.ndarray,
    n: int,
    source: int,
    horizon: int,
    targets_mask: np.ndarray,
) -> np.ndarray:
    """Vectorized BFS level array from one source, -1 where unreached.

    Expands whole frontiers with ragged gathers instead of per-node loops
    and stops early once every marked target has a level — on small-world
    graphs that prunes the expensive outer hops.
    """
    dist = np.full(n, -1, dtype=np.int16)
    dist[source] = 0
    frontier = np.array([source], dtype=np.int64)
    remaining = int(targets_mask.sum()) - int(targets_mask[source])
    for hop in range(1, horizon + 1):
        starts = indptr[frontier]
        counts = indptr[frontier + 1] - starts
        total = int(counts.sum())
        if total == 0:
            break
        offsets = (
            np.repeat(starts, counts)
            + np.arange(total)
            - np.repeat(np.cumsum(counts) - counts, counts)
        )
        neighbors = indices[offsets]
        neighbors = neighbors[dist[neighbors] < 0]
        if neighbors.size == 0:
            break
        dist[neighbors] = hop
        frontier = np.flatnonzero(dist == hop)
        if remaining:
            remaining -= int(targets_mask[frontier].sum())
            if remaining == 0:
                break
    return dist


def pairwise_hop_distances(
    snapshot: GraphSnapshot,
    members: Iterable[str],
    horizon: int = DEFAULT_HORIZON,
) -> dict[tuple[str, str], int | None]:
    """Hop distances for every unordered pair of ``members``.

    Batched over the snapshot's sparse adjacency so that scoring thousands
    of candidate teams drawn from the same slates costs one traversal per
    distinct member, not one per pair.  Keys are (min, max) id tuples.
    """
    ids = sorted(set(members))
    for m in ids:
        snapshot.require_individual(m)
    if len(ids) < 2:
        return {}
    adjacency = snapshot._adjacency
    indptr, indices = adjacency.indptr, adjacency.indices
    n = adjacency.shape[0]
    index_of = snapshot._index_of
    sources = [index_of[m] for m in ids]
    targets_mask = np.zeros(n, dtype=bool)
    targets_mask[sources] = True

    out: dict[tuple[str, str], int | None] = {}
    for a_pos in range(len(ids) - 1):
        # The union graph is undirected, so pairs with earlier members are
        # already known; only later targets matter for this traversal.
        targets_mask[sources[a_pos]] = False
        dist = _bfs_levels(indptr, indices, n, sources[a_pos], horizon, targets_mask)
        for b_pos in range(a_pos + 1, len(ids)):
            d = int(dist[sources[b_pos]])
            out[(ids[a_pos], ids[b_pos])] = d if d >= 0 else UNREACHABLE
    for pos in sources:
        targets_mask[pos] = False
    return out


def ego_network(snapshot: GraphSnapshot, i: str, radius: int) -> EgoNetwork:
    """Induced subgraph of everyone within ``radius`` hops of ``i``."""
    snapshot.require_individual(i)
    if radius < 1:
        raise ValueError("radius must be >= 1")
    dist = {i: 0}
    queue = deque([i])
    while queue:
        v = queue.popleft()
        d = dist[v] + 1
        if d > radius:
            continue
        for w in snapshot._neighbors[v]:
            if w not in dist:
                dist[w] = d
                queue.append(w)
    included = set(dist)
    members = tuple(snapshot.individuals[x] for x in sorted(included))
    social = tuple(
        e for e in snapshot.social_edges if e.src in included and e.dst in included
    )
    competence = tuple(c for c in snapshot.competence if c.individual in included)
    return EgoNetwork(i, radius, members, social, competence)
