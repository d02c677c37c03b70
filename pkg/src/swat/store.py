"""Snapshot persistence: one gzip-compressed JSON artifact per corpus.

`ingest` writes it once; every query command loads it instead of re-parsing
six JSONL files.  The format is an internal contract guarded by a magic
header and version — on mismatch the only remedy is re-ingesting, so
load_snapshot fails loudly with FormatError rather than guessing.
"""

from __future__ import annotations

import gzip
import json
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
from swat.errors import FormatError, IntegrityError
from swat.model import GraphSnapshot, build_snapshot

MAGIC = "swat-snapshot"
VERSION = 1


def save_snapshot(snapshot: GraphSnapshot, path: str | Path) -> None:
    doc = {
        "format": MAGIC,
        "version": VERSION,
        "build_timestamp": snapshot.build_timestamp,
        "individuals": [
            {
                "id": i.id,
                "name": i.name,
                "affiliations": list(i.affiliations),
                "country": i.country,
                "profile": dict(i.profile),
            }
            for i in snapshot.individuals.values()
        ],
        "areas": [
            {"id": a.id, "name": a.name, "aliases": list(a.aliases)}
            for a in snapshot.areas.values()
        ],
        "relations": [
            {"from": r.src, "to": r.dst, "kind": r.kind, "similarity": r.similarity}
            for r in snapshot.relations
        ],
        "competence": [
            {"individual": c.individual, "area": c.area, "weight": c.weight, "derived": c.derived}
            for c in snapshot.competence
        ],
        "social": [
            {"src": e.src, "dst": e.dst, "dimension": e.dimension, "strength": e.strength}
            for e in snapshot.social_edges
        ],
        "publications": [
            {
                "id": p.id,
                "authors": list(p.authors),
                "areas": sorted(p.areas),
                "year": p.year,
                "venue": p.venue,
            }
            for p in snapshot.publications
        ],
    }
    path = Path(path)
    with gzip.open(path, "wt", encoding="utf-8") as fh:
        json.dump(doc, fh, ensure_ascii=False, separators=(",", ":"))


def load_snapshot(path: str | Path) -> GraphSnapshot:
    """Rebuild a snapshot from disk through the normal validation path."""
    path = Path(path)
    try:
        with gzip.open(path, "rt", encoding="utf-8") as fh:
            doc = json.load(fh)
    except (gzip.BadGzipFile, EOFError, json.JSONDecodeError, UnicodeDecodeError) as exc:
        raise FormatError(f"{path} is not a snapshot file: {exc}") from None
    if not isinstance(doc, dict) or doc.get("format") != MAGIC:
        raise FormatError(f"{path} is not a snapshot file (bad magic header)")
    if doc.get("version") != VERSION:
        raise FormatError(
            f"{path} has snapshot version {doc.get('version')!r}, "
            f"expected {VERSION}; re-ingest the corpus"
        )

    # Ingest validated the corpus before saving, so any rebuild failure —
    # missing fields or broken referential integrity — means a damaged
    # artifact, not a domain condition.
    try:
        records = _rebuild_records(doc, str(path))
        return build_snapshot(records, doc.get("build_timestamp") or None)
    except (KeyError, TypeError, AttributeError, IntegrityError) as exc:
        raise FormatError(f"{path} snapshot payload is malformed: {exc!r}") from None


def _rebuild_records(doc: dict, loc: str) -> CorpusRecords:
    records = CorpusRecords()
    for obj in doc.get("individuals", ()):
        records.individuals.append(
            IndividualRecord(
                obj["id"],
                obj["name"],
                tuple(obj.get("affiliations", ())),
                obj.get("country"),
                tuple((obj.get("profile") or {}).items()),
                loc,
            )
        )
    for obj in doc.get("areas", ()):
        records.areas.append(
            AreaRecord(obj["id"], obj["name"], tuple(obj.get("aliases", ())), loc)
        )
    for obj in doc.get("relations", ()):
        records.relations.append(
            RelationRecord(obj["from"], obj["to"], obj["kind"], obj["similarity"], loc)
        )
    for obj in doc.get("competence", ()):
        records.competence.append(
            CompetenceRecord(
                obj["individual"], obj["area"], obj["weight"], bool(obj.get("derived")), loc
            )
        )
    for obj in doc.get("social", ()):
        records.social.append(
            SocialRecord(obj["src"], obj["dst"], obj["dimension"], obj["strength"], loc)
        )
    for obj in doc.get("publications", ()):
        records.publications.append(
            PublicationRecord(
                obj["id"],
                tuple(obj["authors"]),
                tuple(obj.get("areas", ())),
                obj["year"],
                obj.get("venue"),
                loc,
            )
        )
    return records
