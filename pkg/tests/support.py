"""Fixture builders and independent oracle implementations.

The oracles recompute everything definitionally — Floyd-Warshall for hop
distances, explicit formulas for the metrics, exhaustive product plus
re-scoring for rankings, raw JSONL recounts for statistics — so the engine
and its tests never share a code path for the quantities under test.
"""

from __future__ import annotations

import itertools
import json
import random
from pathlib import Path

from swat.corpus import (
    AreaRecord,
    CompetenceRecord,
    CorpusRecords,
    IndividualRecord,
    PublicationRecord,
    RelationRecord,
    SocialRecord,
)
from swat.model import GraphSnapshot, build_snapshot

LOC = "fixture"


# --- corpus/snapshot builders -------------------------------------------------


def make_records(
    individuals=(),
    areas=(),
    competence=(),
    social=(),
    publications=(),
    relations=(),
) -> CorpusRecords:
    """Records from terse tuples.

    individuals: id or (id, name); areas: id or (id, name) or (id, name, aliases);
    competence: (individual, area, weight); social: (src, dst, dim, strength);
    publications: (id, authors, areas, year); relations: (src, dst, kind, sim).
    """
    records = CorpusRecords()
    for ind in individuals:
        if isinstance(ind, str):
            ind = (ind, f"Name {ind}")
        records.individuals.append(IndividualRecord(ind[0], ind[1], (), None, (), LOC))
    for area in areas:
        if isinstance(area, str):
            area = (area, f"Area {area}")
        aliases = tuple(area[2]) if len(area) > 2 else ()
        records.areas.append(AreaRecord(area[0], area[1], aliases, LOC))
    for individual, area, weight in competence:
        records.competence.append(CompetenceRecord(individual, area, weight, False, LOC))
    for src, dst, dim, strength in social:
        records.social.append(SocialRecord(src, dst, dim, strength, LOC))
    for pid, authors, pub_areas, year in publications:
        records.publications.append(
            PublicationRecord(pid, tuple(authors), tuple(pub_areas), year, None, LOC)
        )
    for src, dst, kind, sim in relations:
        records.relations.append(RelationRecord(src, dst, kind, sim, LOC))
    return records


def make_snapshot(**kwargs) -> GraphSnapshot:
    return build_snapshot(make_records(**kwargs))


# --- distance oracle: Floyd-Warshall ------------------------------------------


def oracle_all_distances(snapshot: GraphSnapshot, horizon: int = 6) -> dict:
    """All-pairs hop distances on the undirected union graph, or None.

    Floyd-Warshall over an explicit matrix — deliberately nothing like the
    engine's frontier BFS.
    """
    ids = sorted(snapshot.individuals)
    pos = {x: i for i, x in enumerate(ids)}
    n = len(ids)
    inf = float("inf")
    dist = [[0 if i == j else inf for j in range(n)] for i in range(n)]
    for edge in snapshot.social_edges:
        a, b = pos[edge.src], pos[edge.dst]
        dist[a][b] = dist[b][a] = 1
    for k in range(n):
        dk = dist[k]
        for i in range(n):
            dik = dist[i][k]
            if dik == inf:
                continue
            di = dist[i]
            for j in range(n):
                alt = dik + dk[j]
                if alt < di[j]:
                    di[j] = alt
    out = {}
    for i in range(n):
        for j in range(i + 1, n):
            d = dist[i][j]
            out[(ids[i], ids[j])] = int(d) if d <= horizon else None
    return out


def oracle_distance(snapshot, a, b, horizon: int = 6):
    if a == b:
        return 0
    return oracle_all_distances(snapshot, horizon)[(min(a, b), max(a, b))]


# --- metric oracles -----------------------------------------------------------


def _competence_weight(snapshot, individual, area) -> float:
    for edge in snapshot.competence:
        if edge.individual == individual and edge.area == area:
            return edge.weight
    return 0.0


def oracle_competence(snapshot, assignment, mode: str, area_order) -> float:
    values = []
    for area in area_order:
        best = 0.0
        for member in assignment[area]:
            w = _competence_weight(snapshot, member, area)
            if w > best:
                best = w
        values.append(best)
    return max(values) if mode == "max" else sum(values) / len(values)


def oracle_cohesiveness(snapshot, team, horizon: int = 6) -> float:
    members = sorted(set(team))
    n = len(members)
    if n < 2:
        return 0.0
    table = oracle_all_distances(snapshot, horizon)
    total = 0.0
    for a, b in itertools.combinations(members, 2):
        d = table[(a, b)]
        if d is not None:
            total += 1.0 / d
    return total * 2.0 / (n * (n - 1))


def oracle_tur(snapshot, team) -> int:
    members = set(team)
    return sum(1 for t in snapshot.history_teams if set(t.members) <= members)


def oracle_tcr(snapshot, team, required) -> float:
    members = set(team)
    required = set(required)
    relevant = [t for t in snapshot.history_teams if set(t.members) & members]
    if not relevant:
        return 0.0
    total = 0.0
    for t in relevant:
        areas = set(t.areas)
        total += len(required & areas) / len(required | areas)
    return total / len(relevant)


# --- ranking oracle -----------------------------------------------------------


def oracle_slate(snapshot, area, k) -> list[str]:
    holders = [
        (edge.weight, edge.individual)
        for edge in snapshot.competence
        if edge.area == area
    ]
    holders.sort(key=lambda h: (-h[0], h[1]))
    return [individual for _weight, individual in holders[:k]]


def oracle_rank(snapshot, required, k, weights, mode, limit=None):
    """Exhaustive enumerate + re-score + sort, straight from the definitions.

    Returns [(member tuple, total)] best-first.  ``weights`` is the
    normalized (competence, cohesiveness, user_repetition,
    concept_repetition) tuple.
    """
    area_order = list(dict.fromkeys(required))
    slates = {area: oracle_slate(snapshot, area, k) for area in area_order}
    merged: dict[tuple, dict] = {}
    for combo in itertools.product(*(slates[a] for a in area_order)):
        members = tuple(sorted(set(combo)))
        if len(members) < 2:
            continue
        assignment = merged.setdefault(members, {a: set() for a in area_order})
        for area, chosen in zip(area_order, combo):
            assignment[area].add(chosen)
    if not merged:
        return []

    raws = {}
    for members, assignment in merged.items():
        raws[members] = (
            oracle_competence(snapshot, assignment, mode, area_order),
            oracle_cohesiveness(snapshot, members),
            oracle_tur(snapshot, members),
            oracle_tcr(snapshot, members, area_order),
        )
    max_tur = max(r[2] for r in raws.values())
    w_comp, w_coh, w_tur, w_tcr = weights
    scored = []
    for members, (comp, coh, tur, tcr) in raws.items():
        tur_norm = tur / max_tur if max_tur > 0 else 0.0
        total = w_comp * comp + w_coh * coh + w_tur * tur_norm + w_tcr * tcr
        scored.append((members, total))
    scored.sort(key=lambda row: (-row[1], row[0]))
    return scored[:limit] if limit is not None else scored


# --- seeded random corpora for the ranking oracle -----------------------------


def random_records(seed: int) -> tuple[CorpusRecords, dict]:
    """A small random corpus plus the query to run against it.

    Sized to the oracle's comfort zone: <= 30 individuals, <= 20 history
    teams, q <= 4, k <= 4.
    """
    rng = random.Random(seed)
    n_ind = rng.randint(4, 30)
    n_areas = rng.randint(2, 6)
    ids = [f"P{i:02d}" for i in range(n_ind)]
    area_ids = [f"x{i}" for i in range(n_areas)]

    competence = []
    for ind in ids:
        for area in area_ids:
            if rng.random() < 0.4:
                competence.append((ind, area, round(rng.uniform(0.05, 0.95), 3)))

    social = []
    seen = set()
    for _ in range(rng.randint(0, 3 * n_ind)):
        src, dst = rng.sample(ids, 2)
        dim = rng.choice(("coauthor", "friend"))
        if (src, dst, dim) not in seen:
            seen.add((src, dst, dim))
            social.append((src, dst, dim, round(rng.uniform(0.1, 0.9), 3)))

    publications = []
    for t in range(rng.randint(0, 20)):
        pool = ids[:6] if rng.random() < 0.5 and n_ind >= 6 else ids
        authors = rng.sample(pool, rng.randint(2, min(4, len(pool))))
        pub_areas = rng.sample(area_ids, rng.randint(1, min(3, n_areas)))
        publications.append((f"pub{t}", authors, pub_areas, 2000 + t))

    q = rng.randint(1, min(4, n_areas))
    query = {
        "required": rng.sample(area_ids, q),
        "k": rng.randint(1, 4),
        "mode": rng.choice(("avg", "max")),
        "weights_raw": rng.choice(
            (
                (1.0, 1.0, 1.0, 1.0),
                tuple(round(rng.uniform(0.05, 1.0), 3) for _ in range(4)),
                (1.0, 0.0, 0.0, 0.0),
                (0.0, 0.5, 0.5, 0.0),
            )
        ),
    }
    records = make_records(
        individuals=ids,
        areas=area_ids,
        competence=competence,
        social=social,
        publications=publications,
    )
    return records, query


# --- raw corpus directory helper -----------------------------------------------


def write_corpus_dir(root: Path, **lines_by_file) -> Path:
    """Write a corpus directory from raw line lists (keys without .jsonl)."""
    root.mkdir(parents=True, exist_ok=True)
    for stem in ("individuals", "areas", "relations", "competence", "social", "publications"):
        lines = lines_by_file.get(stem, [])
        body = "\n".join(
            line if isinstance(line, str) else json.dumps(line) for line in lines
        )
        (root / f"{stem}.jsonl").write_text(body + "\n" if body else "", encoding="utf-8")
    return root


# --- statistics oracle: raw JSONL recount --------------------------------------


def oracle_stats_from_dir(corpus_dir: str | Path) -> dict:
    """Brute recount straight off the corpus files, no engine types."""
    corpus_dir = Path(corpus_dir)

    def rows(name):
        return [
            json.loads(line)
            for line in (corpus_dir / name).read_text(encoding="utf-8").splitlines()
            if line.strip()
        ]

    individuals = rows("individuals.jsonl")
    areas = rows("areas.jsonl")
    social = rows("social.jsonl")
    publications = rows("publications.jsonl")

    neighbors = {ind["id"]: set() for ind in individuals}
    for edge in social:
        neighbors[edge["src"]].add(edge["dst"])
        neighbors[edge["dst"]].add(edge["src"])
    n_ind = len(individuals)
    avg_connections = (
        sum(len(neighbors[ind["id"]]) for ind in individuals) / n_ind if n_ind else 0.0
    )

    team_sizes = [
        len(p["authors"]) for p in publications if len(p["authors"]) >= 2 and p["areas"]
    ]
    organizations = {org for ind in individuals for org in ind.get("affiliations", ())}
    countries = {ind["country"] for ind in individuals if ind.get("country")}

    histogram = {}
    for p in publications:
        histogram[len(p["authors"])] = histogram.get(len(p["authors"]), 0) + 1
    cdf, running = {}, 0
    for count in sorted(histogram):
        running += histogram[count]
        cdf[count] = running / len(publications)

    by_year = {}
    for p in publications:
        by_year.setdefault(p["year"], []).append(len(p["authors"]))
    yearly_single = {
        year: sum(1 for c in counts if c == 1) / len(counts)
        for year, counts in by_year.items()
    }
    yearly_max = {year: max(counts) for year, counts in by_year.items()}

    return {
        "individuals_count": n_ind,
        "concepts_count": len(areas),
        "teams_count": len(team_sizes),
        "avg_connections_per_individual": avg_connections,
        "avg_individuals_per_team": sum(team_sizes) / len(team_sizes) if team_sizes else 0.0,
        "max_individuals_per_team": max(team_sizes, default=0),
        "organizations_count": len(organizations),
        "countries_count": len(countries),
        "authors_histogram": dict(sorted(histogram.items())),
        "authors_cdf": cdf,
        "yearly_single_author_pct": dict(sorted(yearly_single.items())),
        "yearly_max_authors": dict(sorted(yearly_max.items())),
    }
