from __future__ import annotations

import sys
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings

sys.path.insert(0, str(Path(__file__).parent))

settings.register_profile(
    "default",
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.filter_too_much],
)
settings.load_profile("default")


@pytest.fixture
def tiny_snapshot():
    """Three connected individuals over two areas with one past team."""
    from support import make_snapshot

    return make_snapshot(
        individuals=["A", "B", "C"],
        areas=["x", "y"],
        competence=[("A", "x", 0.8), ("B", "y", 0.6), ("C", "x", 0.5)],
        social=[("A", "B", "coauthor", 0.9), ("B", "C", "coauthor", 0.7)],
        publications=[("p1", ["A", "B"], ["x"], 2010)],
    )
