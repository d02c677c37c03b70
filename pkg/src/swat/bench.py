"""Benchmark harness: per-phase latency medians over the live engine.

For each query size q the harness picks the q most-populated areas, then
times the expert query, each team metric in isolation across the full
candidate set, and the end-to-end recommendation.  Medians over ``reps``
repetitions keep desk-hardware timer noise out of the trend; candidate
counts are deterministic, so the exponential growth in q is visible in the
``candidates_scored`` column independent of clock quality.
"""

from __future__ import annotations

import csv
import statistics
import time
from dataclasses import asdict, dataclass
from pathlib import Path
from typing import Callable, Iterable

from swat.errors import InsufficientAreasError, InvalidParamsError
from swat.index import ConceptIndex
from swat.metrics import (
    competence_score,
    social_cohesiveness,
    team_concept_repetition,
    team_user_repetition,
)
from swat.model import DEFAULT_HORIZON, GraphSnapshot, pairwise_hop_distances
from swat.teams import (
    MetricWeights,
    enumerate_candidates,
    rank_candidates,
    slate_product_size,
)

PHASES = (
    "expert_query",
    "metric_competence",
    "metric_cohesiveness",
    "metric_tur",
    "metric_tcr",
    "end_to_end",
)


@dataclass(frozen=True, slots=True)
class BenchRow:
    phase: str
    areas_count: int
    k: int
    candidates_scored: int
    elapsed_ms: float
    reps: int


def _median_ms(fn: Callable[[], object], reps: int) -> float:
    samples = []
    for _ in range(reps):
        start = time.perf_counter()
        fn()
        samples.append((time.perf_counter() - start) * 1000.0)
    return statistics.median(samples)


def run_bench(
    snapshot: GraphSnapshot,
    areas_min: int = 2,
    areas_max: int = 4,
    k: int = 20,
    reps: int = 3,
    index: ConceptIndex | None = None,
) -> list[BenchRow]:
    """Six timed phases for every q in [areas_min, areas_max].

    ``candidates_scored`` is the slate-size product before dedup — with
    full disjoint slates that is exactly k^q, so consecutive rows expose
    the factor-k growth.  Raises InsufficientAreasError when the snapshot
    has fewer than ``areas_max`` populated areas.
    """
    if areas_min < 2:
        raise InvalidParamsError("areas_min must be >= 2")
    if areas_max < areas_min:
        raise InvalidParamsError("areas_max must be >= areas_min")
    if k < 1 or reps < 1:
        raise InvalidParamsError("k and reps must be >= 1")
    index = index or ConceptIndex(snapshot)
    populated = [area for area, _count in index.populated_areas()]
    if len(populated) < areas_max:
        raise InsufficientAreasError(areas_max, len(populated))

    weights = MetricWeights.uniform()
    rows: list[BenchRow] = []
    for q in range(areas_min, areas_max + 1):
        required = populated[:q]
        candidates = enumerate_candidates(snapshot, required, k, index=index)
        slates = {
            area: [h.individual for h in index.top_experts(area, k, expand=False)]
            for area in required
        }
        scored = slate_product_size(slates)

        def time_phase(phase: str, fn: Callable[[], object]) -> None:
            rows.append(BenchRow(phase, q, k, scored, _median_ms(fn, reps), reps))

        time_phase("expert_query", lambda: index.top_experts(required[0], k, expand=False))
        time_phase(
            "metric_competence",
            lambda: [
                competence_score(snapshot, c.members, c.assignment, "avg")
                for c in candidates
            ],
        )

        def cohesiveness_pass():
            pool: set[str] = set()
            for c in candidates:
                pool.update(c.members)
            distances = pairwise_hop_distances(snapshot, pool, DEFAULT_HORIZON)
            return [
                social_cohesiveness(snapshot, c.members, distances=distances)
                for c in candidates
            ]

        time_phase("metric_cohesiveness", cohesiveness_pass)
        time_phase(
            "metric_tur",
            lambda: [team_user_repetition(snapshot, c.members) for c in candidates],
        )
        time_phase(
            "metric_tcr",
            lambda: [
                team_concept_repetition(snapshot, c.members, required) for c in candidates
            ],
        )
        time_phase(
            "end_to_end",
            lambda: rank_candidates(
                snapshot,
                enumerate_candidates(snapshot, required, k, index=index),
                required,
                weights,
                mode="avg",
                limit=20,
            ),
        )
    return rows


def write_csv(rows: Iterable[BenchRow], path: str | Path) -> None:
    path = Path(path)
    with path.open("w", encoding="utf-8", newline="") as fh:
        writer = csv.DictWriter(
            fh,
            fieldnames=["phase", "areas_count", "k", "candidates_scored", "elapsed_ms", "reps"],
        )
        writer.writeheader()
        for row in rows:
            writer.writerow(asdict(row))


def read_csv(path: str | Path) -> list[BenchRow]:
    rows = []
    with Path(path).open(encoding="utf-8", newline="") as fh:
        for rec in csv.DictReader(fh):
            rows.append(
                BenchRow(
                    phase=rec["phase"],
                    areas_count=int(rec["areas_count"]),
                    k=int(rec["k"]),
                    candidates_scored=int(rec["candidates_scored"]),
                    elapsed_ms=float(rec["elapsed_ms"]),
                    reps=int(rec["reps"]),
                )
            )
    return rows
