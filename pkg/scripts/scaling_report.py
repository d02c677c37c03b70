"""Scaling sweep: build synthetic corpora at several sizes and report
ingest cost, expert-query latency, and end-to-end recommendation time.

Usage:
    python3 scripts/scaling_report.py --sizes 1000,10000,100000 --out report.csv
"""

from __future__ import annotations

import csv
import statistics
import tempfile
import time
from pathlib import Path

import click

from swat.corpus import parse_corpus
from swat.index import ConceptIndex
from swat.model import build_snapshot
from swat.synth import SynthParams, generate_synthetic
from swat.teams import MetricWeights, enumerate_candidates, rank_candidates

FIELDS = (
    "individuals",
    "publications",
    "synth_s",
    "parse_s",
    "build_s",
    "index_s",
    "expert_query_ms",
    "recommend_s",
)


def timed(fn):
    start = time.perf_counter()
    result = fn()
    return result, time.perf_counter() - start


def measure(individuals: int, seed: int, workdir: Path) -> dict:
    params = SynthParams(
        individuals=individuals,
        areas=max(8, individuals // 200),
        publications=individuals * 3,
        dimensions=2,
        seed=seed,
    )
    corpus = workdir / f"corpus_{individuals}"
    _, synth_s = timed(lambda: generate_synthetic(params, corpus))
    (records, _), parse_s = timed(lambda: parse_corpus(corpus))
    snapshot, build_s = timed(lambda: build_snapshot(records))
    index, index_s = timed(lambda: ConceptIndex(snapshot))

    areas = [a for a, _ in index.populated_areas()[:30]]
    samples = []
    for _ in range(7):
        for area in areas:
            start = time.perf_counter()
            index.top_experts(area, 20, expand=False)
            samples.append((time.perf_counter() - start) * 1000.0)

    required = areas[:3]
    start = time.perf_counter()
    candidates = enumerate_candidates(snapshot, required, 10, index=index)
    rank_candidates(snapshot, candidates, required, MetricWeights.uniform(),
                    "avg", limit=20)
    recommend_s = time.perf_counter() - start

    return {
        "individuals": individuals,
        "publications": params.publications,
        "synth_s": round(synth_s, 2),
        "parse_s": round(parse_s, 2),
        "build_s": round(build_s, 2),
        "index_s": round(index_s, 2),
        "expert_query_ms": round(statistics.median(samples), 4),
        "recommend_s": round(recommend_s, 3),
    }


@click.command()
@click.option("--sizes", default="1000,10000,100000", show_default=True,
              help="Comma-separated individual counts to sweep.")
@click.option("--seed", default=42, show_default=True, type=int)
@click.option("--out", "out_csv", default=None, type=click.Path(dir_okay=False),
              help="Optional CSV destination; the table prints regardless.")
def main(sizes, seed, out_csv):
    counts = [int(s) for s in sizes.split(",") if s.strip()]
    rows = []
    with tempfile.TemporaryDirectory(prefix="swat-scaling-") as tmp:
        for count in counts:
            click.echo(f"measuring {count:,} individuals ...", err=True)
            rows.append(measure(count, seed, Path(tmp)))

    widths = {f: max(len(f), *(len(str(r[f])) for r in rows)) for f in FIELDS}
    click.echo("  ".join(f"{f:>{widths[f]}}" for f in FIELDS))
    for row in rows:
        click.echo("  ".join(f"{str(row[f]):>{widths[f]}}" for f in FIELDS))

    if out_csv:
        with open(out_csv, "w", newline="", encoding="utf-8") as fh:
            writer = csv.DictWriter(fh, fieldnames=FIELDS)
            writer.writeheader()
            writer.writerows(rows)
        click.echo(f"wrote {out_csv}", err=True)


if __name__ == "__main__":
    main()
