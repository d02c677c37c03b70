"""Corpus file formats: parsing, cleaning, serialization, cross-validation.

A corpus is a directory of UTF-8 JSONL files (one object per line):

    individuals.jsonl   {id, name, affiliations[], country?, profile{}}
    areas.jsonl         {id, name, aliases[]}
    relations.jsonl     {from, to, kind, similarity}
    competence.jsonl    {individual, area, weight}
    social.jsonl        {src, dst, dimension, strength}
    publications.jsonl  {id, authors[], areas[], year, venue?}

Parsing is forgiving: out-of-range labels are clamped into [0.001, 0.999],
malformed lines are dropped, and every such mutation is recorded in an
AnomalyReport.  Referential checks (dangling ids, duplicate edges) are the
snapshot builder's job, not the parser's.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field, replace
from pathlib import Path

from swat.errors import FormatError

WEIGHT_FLOOR = 0.001
WEIGHT_CEIL = 0.999

RELATION_KINDS = ("subsumes", "similar", "synonym")

CORPUS_FILES = (
    "individuals.jsonl",
    "areas.jsonl",
    "relations.jsonl",
    "competence.jsonl",
    "social.jsonl",
    "publications.jsonl",
)


@dataclass(frozen=True, slots=True)
class IndividualRecord:
    id: str
    name: str
    affiliations: tuple[str, ...]
    country: str | None
    profile: tuple[tuple[str, str], ...]
    loc: str


@dataclass(frozen=True, slots=True)
class AreaRecord:
    id: str
    name: str
    aliases: tuple[str, ...]
    loc: str


@dataclass(frozen=True, slots=True)
class RelationRecord:
    src: str
    dst: str
    kind: str
    similarity: float
    loc: str


@dataclass(frozen=True, slots=True)
class CompetenceRecord:
    individual: str
    area: str
    weight: float
    derived: bool
    loc: str


@dataclass(frozen=True, slots=True)
class SocialRecord:
    src: str
    dst: str
    dimension: str
    strength: float
    loc: str


@dataclass(frozen=True, slots=True)
class PublicationRecord:
    id: str
    authors: tuple[str, ...]
    areas: tuple[str, ...]
    year: int
    venue: str | None
    loc: str


@dataclass(slots=True)
class CorpusRecords:
    """Parsed corpus: record lists with per-record source locators."""

    individuals: list[IndividualRecord] = field(default_factory=list)
    areas: list[AreaRecord] = field(default_factory=list)
    relations: list[RelationRecord] = field(default_factory=list)
    competence: list[CompetenceRecord] = field(default_factory=list)
    social: list[SocialRecord] = field(default_factory=list)
    publications: list[PublicationRecord] = field(default_factory=list)


@dataclass(frozen=True, slots=True)
class Anomaly:
    loc: str
    rule: str
    action: str  # clamped | dropped | derived-edge-added


@dataclass(slots=True)
class AnomalyReport:
    entries: list[Anomaly] = field(default_factory=list)

    def add(self, loc: str, rule: str, action: str) -> None:
        self.entries.append(Anomaly(loc, rule, action))

    def extend(self, other: "AnomalyReport") -> None:
        self.entries.extend(other.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)


def _iter_jsonl(path: Path, report: AnomalyReport):
    """Yield (locator, object) per well-formed line; log bad lines as dropped."""
    try:
        text = path.read_text(encoding="utf-8")
    except UnicodeDecodeError as exc:
        raise FormatError(f"{path.name} is not valid UTF-8: {exc}") from None
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        loc = f"{path.name}:{lineno}"
        try:
            obj = json.loads(line)
        except json.JSONDecodeError:
            report.add(loc, "invalid JSON", "dropped")
            continue
        if not isinstance(obj, dict):
            report.add(loc, "record is not an object", "dropped")
            continue
        yield loc, obj


def _str_field(obj: dict, key: str) -> str | None:
    v = obj.get(key)
    return v if isinstance(v, str) and v else None


def _str_list(v) -> list[str] | None:
    if v is None:
        return []
    if isinstance(v, list) and all(isinstance(x, str) for x in v):
        return v
    return None


def _clamp_label(value, loc: str, rule: str, report: AnomalyReport) -> float | None:
    """Coerce a competence/strength label into [0.001, 0.999], logging clamps."""
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        return None
    value = float(value)
    if math.isnan(value):
        return None
    if value < WEIGHT_FLOOR:
        report.add(loc, rule, "clamped")
        return WEIGHT_FLOOR
    if value > WEIGHT_CEIL:
        report.add(loc, rule, "clamped")
        return WEIGHT_CEIL
    return value


def _parse_individual(loc, obj, records, report):
    id_ = _str_field(obj, "id")
    name = _str_field(obj, "name")
    affiliations = _str_list(obj.get("affiliations"))
    if id_ is None or name is None or affiliations is None:
        report.add(loc, "individual needs id, name, affiliations[]", "dropped")
        return
    country = obj.get("country")
    if country is not None and not isinstance(country, str):
        report.add(loc, "country must be a string", "dropped")
        return
    profile = obj.get("profile") or {}
    if not isinstance(profile, dict) or not all(
        isinstance(k, str) and isinstance(v, str) for k, v in profile.items()
    ):
        report.add(loc, "profile must map strings to strings", "dropped")
        return
    records.individuals.append(
        IndividualRecord(id_, name, tuple(affiliations), country, tuple(profile.items()), loc)
    )


def _parse_area(loc, obj, records, report):
    id_ = _str_field(obj, "id")
    name = _str_field(obj, "name")
    aliases = _str_list(obj.get("aliases"))
    if id_ is None or name is None or aliases is None:
        report.add(loc, "area needs id, name, aliases[]", "dropped")
        return
    deduped = list(dict.fromkeys(aliases))
    if len(deduped) != len(aliases):
        report.add(loc, "duplicate aliases", "clamped")
    records.areas.append(AreaRecord(id_, name, tuple(deduped), loc))


def _parse_relation(loc, obj, records, report):
    src = _str_field(obj, "from")
    dst = _str_field(obj, "to")
    kind = obj.get("kind")
    if src is None or dst is None or kind not in RELATION_KINDS:
        report.add(loc, "relation needs from, to, kind in {subsumes,similar,synonym}", "dropped")
        return
    if src == dst:
        report.add(loc, "self-relation", "dropped")
        return
    sim = obj.get("similarity")
    if isinstance(sim, bool) or not isinstance(sim, (int, float)) or math.isnan(float(sim)):
        report.add(loc, "similarity must be a number", "dropped")
        return
    sim = float(sim)
    if kind == "synonym":
        if sim != 1.0:
            report.add(loc, "synonym similarity forced to 1", "clamped")
            sim = 1.0
    elif sim <= 0.0:
        report.add(loc, "similarity out of (0,1]", "clamped")
        sim = WEIGHT_FLOOR
    elif sim > 1.0:
        report.add(loc, "similarity out of (0,1]", "clamped")
        sim = 1.0
    records.relations.append(RelationRecord(src, dst, kind, sim, loc))


def _parse_competence(loc, obj, records, report):
    individual = _str_field(obj, "individual")
    area = _str_field(obj, "area")
    if individual is None or area is None:
        report.add(loc, "competence needs individual, area", "dropped")
        return
    weight = _clamp_label(obj.get("weight"), loc, "competence weight out of (0,1)", report)
    if weight is None:
        report.add(loc, "weight must be a number", "dropped")
        return
    derived = obj.get("derived") is True
    records.competence.append(CompetenceRecord(individual, area, weight, derived, loc))


def _parse_social(loc, obj, records, report):
    src = _str_field(obj, "src")
    dst = _str_field(obj, "dst")
    dimension = _str_field(obj, "dimension")
    if src is None or dst is None or dimension is None:
        report.add(loc, "social edge needs src, dst, dimension", "dropped")
        return
    if src == dst:
        report.add(loc, "social self-loop", "dropped")
        return
    strength = _clamp_label(obj.get("strength"), loc, "social strength out of (0,1)", report)
    if strength is None:
        report.add(loc, "strength must be a number", "dropped")
        return
    records.social.append(SocialRecord(src, dst, dimension, strength, loc))


def _parse_publication(loc, obj, records, report):
    id_ = _str_field(obj, "id")
    authors = _str_list(obj.get("authors"))
    areas = _str_list(obj.get("areas"))
    year = obj.get("year")
    if id_ is None or not authors or areas is None:
        report.add(loc, "publication needs id, authors[], areas[]", "dropped")
        return
    if len(set(authors)) != len(authors):
        report.add(loc, "duplicate authors", "dropped")
        return
    if isinstance(year, bool) or not isinstance(year, int):
        report.add(loc, "year must be an integer", "dropped")
        return
    venue = obj.get("venue")
    if venue is not None and not isinstance(venue, str):
        report.add(loc, "venue must be a string", "dropped")
        return
    records.publications.append(
        PublicationRecord(id_, tuple(authors), tuple(dict.fromkeys(areas)), year, venue, loc)
    )


_PARSERS = {
    "individuals.jsonl": _parse_individual,
    "areas.jsonl": _parse_area,
    "relations.jsonl": _parse_relation,
    "competence.jsonl": _parse_competence,
    "social.jsonl": _parse_social,
    "publications.jsonl": _parse_publication,
}


def parse_corpus(corpus_dir: str | Path) -> tuple[CorpusRecords, AnomalyReport]:
    """Load a corpus directory into records, cleaning as it goes.

    Raises OSError when a corpus file is missing or unreadable and
    FormatError when a file is not valid UTF-8.  Everything recoverable
    lands in the anomaly report instead.
    """
    corpus_dir = Path(corpus_dir)
    records = CorpusRecords()
    report = AnomalyReport()
    for filename, parser in _PARSERS.items():
        path = corpus_dir / filename
        if not path.is_file():
            raise FileNotFoundError(f"missing corpus file: {path}")
        for loc, obj in _iter_jsonl(path, report):
            parser(loc, obj, records, report)
    return records, report


# --- serialization ----------------------------------------------------------


def _dump(obj: dict) -> str:
    return json.dumps(obj, ensure_ascii=False, separators=(",", ":"))


def serialize_corpus(records: CorpusRecords, corpus_dir: str | Path) -> None:
    """Write records back out as a corpus directory (inverse of parse_corpus)."""
    corpus_dir = Path(corpus_dir)
    corpus_dir.mkdir(parents=True, exist_ok=True)

    lines: dict[str, list[str]] = {name: [] for name in CORPUS_FILES}
    for r in records.individuals:
        obj = {"id": r.id, "name": r.name, "affiliations": list(r.affiliations)}
        if r.country is not None:
            obj["country"] = r.country
        if r.profile:
            obj["profile"] = dict(r.profile)
        lines["individuals.jsonl"].append(_dump(obj))
    for r in records.areas:
        lines["areas.jsonl"].append(
            _dump({"id": r.id, "name": r.name, "aliases": list(r.aliases)})
        )
    for r in records.relations:
        lines["relations.jsonl"].append(
            _dump({"from": r.src, "to": r.dst, "kind": r.kind, "similarity": r.similarity})
        )
    for r in records.competence:
        obj = {"individual": r.individual, "area": r.area, "weight": r.weight}
        if r.derived:
            obj["derived"] = True
        lines["competence.jsonl"].append(_dump(obj))
    for r in records.social:
        lines["social.jsonl"].append(
            _dump({"src": r.src, "dst": r.dst, "dimension": r.dimension, "strength": r.strength})
        )
    for r in records.publications:
        obj = {"id": r.id, "authors": list(r.authors), "areas": list(r.areas), "year": r.year}
        if r.venue is not None:
            obj["venue"] = r.venue
        lines["publications.jsonl"].append(_dump(obj))

    for filename, rows in lines.items():
        body = "\n".join(rows)
        (corpus_dir / filename).write_text(body + "\n" if rows else "", encoding="utf-8")


# --- cross-validation -------------------------------------------------------


def cross_validate_history(records: CorpusRecords) -> tuple[CorpusRecords, AnomalyReport]:
    """Fill competence gaps from collaboration evidence.

    Every (individual, area) pair that co-occurs in at least one
    multi-author publication but has no competence edge gets a derived
    edge weighted n / (n + 2), where n counts those publications.  The
    weight saturates toward 1 with repeat evidence and never reaches it.
    Existing edges are left untouched; a second pass is a no-op.
    """
    report = AnomalyReport()
    existing = {(c.individual, c.area) for c in records.competence}
    evidence: dict[tuple[str, str], int] = {}
    for pub in records.publications:
        if len(pub.authors) < 2:
            continue
        for author in pub.authors:
            for area in pub.areas:
                key = (author, area)
                if key not in existing:
                    evidence[key] = evidence.get(key, 0) + 1
    for (individual, area), n in evidence.items():
        weight = n / (n + 2)
        records.competence.append(
            CompetenceRecord(individual, area, weight, True, "derived:cross-validation")
        )
        report.add(
            "derived:cross-validation",
            f"competence edge ({individual}, {area}) inferred from {n} publication(s)",
            "derived-edge-added",
        )
    return records, report


def strip_locators(records: CorpusRecords) -> CorpusRecords:
    """Copy of the records with locators blanked; useful for comparisons."""
    return CorpusRecords(
        individuals=[replace(r, loc="") for r in records.individuals],
        areas=[replace(r, loc="") for r in records.areas],
        relations=[replace(r, loc="") for r in records.relations],
        competence=[replace(r, loc="") for r in records.competence],
        social=[replace(r, loc="") for r in records.social],
        publications=[replace(r, loc="") for r in records.publications],
    )
