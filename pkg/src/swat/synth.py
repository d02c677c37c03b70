"""Deterministic synthetic corpus generator.

Stands in for the live crawlers: produces a parseable, anomaly-free corpus
of any size from a seed.  Author counts follow a truncated geometric so
multi-author publications dominate; coauthor social edges are emitted for
exactly the pairs that publish together; every (author, area) pair that
occurs in a publication gets a competence edge, so cross-validation on a
fresh synthetic corpus derives nothing.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from pathlib import Path

from swat.corpus import (
    AreaRecord,
    CompetenceRecord,
    CorpusRecords,
    IndividualRecord,
    PublicationRecord,
    RelationRecord,
    SocialRecord,
    serialize_corpus,
)
from swat.errors import InvalidParamsError

_AREA_ADJ = (
    "Social", "Distributed", "Semantic", "Statistical", "Cognitive",
    "Digital", "Computational", "Adaptive", "Secure", "Parallel",
    "Mobile", "Quantum", "Neural", "Formal", "Empirical",
    "Visual", "Spatial", "Temporal", "Hybrid", "Robust",
)
_AREA_NOUN = (
    "Networks", "Systems", "Learning", "Databases", "Algorithms",
    "Optimization", "Retrieval", "Mining", "Graphics", "Security",
    "Robotics", "Linguistics", "Inference", "Simulation", "Analytics",
    "Architectures", "Compilers", "Protocols", "Interfaces", "Semantics",
)
_FIRST = (
    "Ada", "Alan", "Barbara", "Claude", "Donald", "Edsger", "Frances",
    "Grace", "Hedy", "John", "Katherine", "Kurt", "Leslie", "Margaret",
    "Niklaus", "Noam", "Radia", "Richard", "Shafi", "Sophie", "Tim",
    "Vint", "Whitfield", "Yoshua",
)
_LAST = (
    "Almeida", "Bose", "Chen", "Dietrich", "Eriksson", "Fontaine",
    "Garcia", "Haddad", "Ivanova", "Jensen", "Kovacs", "Laurent",
    "Moreau", "Nakamura", "Okafor", "Petrov", "Quinn", "Rossi",
    "Silva", "Tanaka", "Ueda", "Varga", "Weber", "Zhang",
)
_ORGS = (
    "Aalto University", "Cordoba Institute of Technology", "CNR Pisa",
    "Delft Polytechnic", "ETH Lausanne", "Fudan University",
    "KTH Stockholm", "McGill University", "NII Tokyo",
    "TU Dresden", "University of Patras", "Waterloo Research Centre",
)
_COUNTRIES = (
    "Finland", "Argentina", "Italy", "Netherlands", "Switzerland",
    "China", "Sweden", "Canada", "Japan", "Germany",
)
_VENUES = (
    "CSCW", "CIKM", "SocInfo", "WWW", "JCDL", "ASONAM", "HT", "SAC",
)
_DIM_NAMES = ("coauthor", "colleague", "friend", "advisor", "committee", "coeditor")

_MAX_AUTHORS = 6
_GEOMETRIC_RATIO = 0.6
_YEARS = (1995, 2014)


@dataclass(frozen=True, slots=True)
class SynthParams:
    individuals: int
    areas: int
    publications: int
    dimensions: int = 1
    seed: int = 0

    def __post_init__(self):
        for name in ("individuals", "areas", "publications", "dimensions"):
            if getattr(self, name) < 1:
                raise InvalidParamsError(f"{name} must be >= 1")


def _author_count_cdf() -> list[float]:
    weights = [_GEOMETRIC_RATIO ** (c - 1) for c in range(1, _MAX_AUTHORS + 1)]
    total = sum(weights)
    cdf, running = [], 0.0
    for w in weights:
        running += w
        cdf.append(running / total)
    return cdf


_AUTHOR_CDF = _author_count_cdf()


def _draw_author_count(rng: random.Random) -> int:
    u = rng.random()
    for count, threshold in enumerate(_AUTHOR_CDF, start=1):
        if u <= threshold:
            return count
    return _MAX_AUTHORS


def _area_name(ix: int) -> str:
    adj = _AREA_ADJ[ix % len(_AREA_ADJ)]
    noun = _AREA_NOUN[(ix // len(_AREA_ADJ)) % len(_AREA_NOUN)]
    cycle = ix // (len(_AREA_ADJ) * len(_AREA_NOUN))
    return f"{adj} {noun}" if cycle == 0 else f"{adj} {noun} {cycle + 1}"


def _individual_name(ix: int) -> str:
    first = _FIRST[ix % len(_FIRST)]
    last = _LAST[(ix // len(_FIRST)) % len(_LAST)]
    cycle = ix // (len(_FIRST) * len(_LAST))
    return f"{first} {last}" if cycle == 0 else f"{first} {last} {cycle + 1}"


def generate_synthetic(params: SynthParams, out_dir: str | Path) -> dict:
    """Write a seeded corpus into ``out_dir``; returns a count summary.

    The same params always produce byte-identical files: a single RNG
    drives every draw in a fixed order and all labels are rounded to four
    decimals.
    """
    rng = random.Random(params.seed)
    out_dir = Path(out_dir)
    records = CorpusRecords()
    loc = "synth"

    area_ids = [f"a{ix:05d}" for ix in range(params.areas)]
    for ix, area_id in enumerate(area_ids):
        name = _area_name(ix)
        aliases = []
        if ix % 3 == 0:
            aliases.append("".join(word[0] for word in name.split()))
        records.areas.append(AreaRecord(area_id, name, tuple(aliases), loc))

    individual_ids = [f"p{ix:06d}" for ix in range(params.individuals)]
    home_areas: list[list[int]] = []
    for ix, ind_id in enumerate(individual_ids):
        affiliations = [_ORGS[rng.randrange(len(_ORGS))]]
        if rng.random() < 0.2:
            second = _ORGS[rng.randrange(len(_ORGS))]
            if second not in affiliations:
                affiliations.append(second)
        country = _COUNTRIES[rng.randrange(len(_COUNTRIES))] if rng.random() < 0.9 else None
        records.individuals.append(
            IndividualRecord(ind_id, _individual_name(ix), tuple(affiliations), country, (), loc)
        )
        home = [ix % params.areas]
        if rng.random() < 0.35:
            extra = rng.randrange(params.areas)
            if extra not in home:
                home.append(extra)
        home_areas.append(home)

    pools: list[list[str]] = [[] for _ in range(params.areas)]
    for ix, home in enumerate(home_areas):
        for a in home:
            pools[a].append(individual_ids[ix])

    competence_pairs: dict[tuple[str, str], int] = {}
    coauthor_pairs: dict[tuple[str, str], int] = {}
    for pix in range(params.publications):
        # Quadratic skew so low-index areas accumulate more publications.
        primary = int(params.areas * rng.random() ** 2)
        pub_areas = [primary]
        if params.areas > 1 and rng.random() < 0.35:
            extra = rng.randrange(params.areas)
            if extra != primary:
                pub_areas.append(extra)
        pool = pools[primary] or individual_ids
        count = min(_draw_author_count(rng), len(pool))
        authors = rng.sample(pool, count)
        year = rng.randrange(_YEARS[0], _YEARS[1] + 1)
        venue = _VENUES[rng.randrange(len(_VENUES))] if rng.random() < 0.8 else None
        records.publications.append(
            PublicationRecord(
                f"pub{pix:06d}",
                tuple(authors),
                tuple(area_ids[a] for a in pub_areas),
                year,
                venue,
                loc,
            )
        )
        for author in authors:
            for a in pub_areas:
                key = (author, area_ids[a])
                competence_pairs[key] = competence_pairs.get(key, 0) + 1
        for i in range(len(authors)):
            for j in range(i + 1, len(authors)):
                pair = tuple(sorted((authors[i], authors[j])))
                coauthor_pairs[pair] = coauthor_pairs.get(pair, 0) + 1

    for ix, ind_id in enumerate(individual_ids):
        for a in home_areas[ix]:
            competence_pairs.setdefault((ind_id, area_ids[a]), 0)
    for individual, area in sorted(competence_pairs):
        weight = round(rng.uniform(0.15, 0.95), 4)
        records.competence.append(CompetenceRecord(individual, area, weight, False, loc))

    for src, dst in sorted(coauthor_pairs):
        strength = round(min(0.95, 0.2 + 0.1 * coauthor_pairs[(src, dst)] + 0.3 * rng.random()), 4)
        records.social.append(SocialRecord(src, dst, _DIM_NAMES[0], strength, loc))
    dimensions = [
        _DIM_NAMES[d] if d < len(_DIM_NAMES) else f"dim{d}"
        for d in range(params.dimensions)
    ]
    for dim in dimensions[1:]:
        seen: set[tuple[str, str]] = set()
        for _ in range(max(1, params.individuals // 3)):
            six = rng.randrange(params.individuals)
            dix = rng.randrange(params.individuals)
            if six == dix or (six, dix) in seen:
                continue
            seen.add((six, dix))
            strength = round(rng.uniform(0.1, 0.9), 4)
            records.social.append(
                SocialRecord(individual_ids[six], individual_ids[dix], dim, strength, loc)
            )

    seen_relations: set[tuple[int, int]] = set()
    for _ in range(params.areas // 3):
        src = rng.randrange(params.areas)
        dst = rng.randrange(params.areas)
        if src == dst or (src, dst) in seen_relations:
            continue
        seen_relations.add((src, dst))
        kind = "similar" if rng.random() < 0.7 else "subsumes"
        similarity = round(rng.uniform(0.3, 0.9), 4)
        records.relations.append(
            RelationRecord(area_ids[src], area_ids[dst], kind, similarity, loc)
        )

    serialize_corpus(records, out_dir)
    return {
        "corpus_dir": str(out_dir),
        "seed": params.seed,
        "individuals": len(records.individuals),
        "areas": len(records.areas),
        "publications": len(records.publications),
        "competence_edges": len(records.competence),
        "social_edges": len(records.social),
        "relations": len(records.relations),
        "dimensions": dimensions,
    }
