"""Worked examples and edge cases for the four team-quality metrics."""

from __future__ import annotations

import pytest

from support import make_snapshot
from swat.errors import EmptyAssignmentError, UnknownIndividualError
from swat.metrics import (
    competence_score,
    social_cohesiveness,
    team_concept_repetition,
    team_user_repetition,
)


@pytest.fixture()
def duo_snapshot():
    return make_snapshot(
        individuals=["A", "B"],
        areas=["x", "y"],
        competence=[("A", "x", 0.7), ("A", "y", 0.4), ("B", "x", 0.8)],
        social=[("A", "B", "coauthor", 0.5)],
    )


# --- competence -----------------------------------------------------------------


def test_single_member_single_area(duo_snapshot):
    value = competence_score(duo_snapshot, {"A"}, {"x": {"A"}}, mode="avg")
    assert value == 0.7


def test_avg_means_per_area_maxima(duo_snapshot):
    assignment = {"x": {"A", "B"}, "y": {"A"}}
    # v(x) = max(0.7, 0.8) = 0.8, v(y) = 0.4
    assert competence_score(duo_snapshot, {"A", "B"}, assignment, mode="avg") == pytest.approx(0.6)


def test_max_takes_best_area(duo_snapshot):
    assignment = {"x": {"A", "B"}, "y": {"A"}}
    assert competence_score(duo_snapshot, {"A", "B"}, assignment, mode="max") == 0.8


def test_missing_edge_counts_zero(duo_snapshot):
    # B has no competence in y; a what-if assignment must not blow up.
    assert competence_score(duo_snapshot, {"B"}, {"y": {"B"}}, mode="avg") == 0.0
    assignment = {"x": {"B"}, "y": {"B"}}
    assert competence_score(duo_snapshot, {"B"}, assignment, mode="avg") == pytest.approx(0.4)


def test_empty_assignment_raises(duo_snapshot):
    with pytest.raises(EmptyAssignmentError):
        competence_score(duo_snapshot, {"A"}, {}, mode="avg")


def test_bad_mode_raises(duo_snapshot):
    with pytest.raises(ValueError):
        competence_score(duo_snapshot, {"A"}, {"x": {"A"}}, mode="median")


# --- cohesiveness ---------------------------------------------------------------


def test_connected_pair_is_fully_cohesive(duo_snapshot):
    assert social_cohesiveness(duo_snapshot, {"A", "B"}) == 1.0


def test_clique_of_three_is_fully_cohesive():
    snapshot = make_snapshot(
        individuals=["A", "B", "C"],
        areas=["x"],
        social=[("A", "B", "d", 0.5), ("B", "C", "d", 0.5), ("A", "C", "d", 0.5)],
    )
    assert social_cohesiveness(snapshot, {"A", "B", "C"}) == 1.0


def test_chain_of_three(tiny_snapshot):
    # Pairs: d(A,B)=1, d(B,C)=1, d(A,C)=2 → (1 + 1 + 0.5) / 3
    value = social_cohesiveness(tiny_snapshot, {"A", "B", "C"})
    assert value == pytest.approx(2.5 / 3)


def test_unreachable_pair_contributes_zero():
    snapshot = make_snapshot(
        individuals=["A", "B", "C"],
        areas=["x"],
        social=[("A", "B", "d", 0.5)],
    )
    # Pairs: d(A,B)=1, the two C pairs unreachable → 1/3
    assert social_cohesiveness(snapshot, {"A", "B", "C"}) == pytest.approx(1 / 3)
    assert social_cohesiveness(snapshot, {"A", "C"}) == 0.0


def test_singleton_team_scores_zero(duo_snapshot):
    assert social_cohesiveness(duo_snapshot, {"A"}) == 0.0


def test_beyond_horizon_counts_as_unreachable():
    ids = [f"P{i}" for i in range(9)]
    snapshot = make_snapshot(
        individuals=ids,
        areas=["x"],
        social=[(ids[i], ids[i + 1], "d", 0.5) for i in range(8)],
    )
    assert social_cohesiveness(snapshot, {"P0", "P6"}) == pytest.approx(1 / 6)
    assert social_cohesiveness(snapshot, {"P0", "P7"}) == 0.0


def test_cohesiveness_unknown_member_raises(duo_snapshot):
    with pytest.raises(UnknownIndividualError):
        social_cohesiveness(duo_snapshot, {"A", "Z"})


# --- user repetition -------------------------------------------------------------


@pytest.fixture()
def history_snapshot():
    return make_snapshot(
        individuals=["A", "B", "C", "D"],
        areas=["x", "y", "z"],
        publications=[
            ("p1", ["A", "B"], ["x", "y"], 2001),
            ("p2", ["A", "B", "C"], ["x", "z"], 2003),
            ("p3", ["C", "D"], ["z"], 2005),
        ],
    )


def test_counts_history_subteams(history_snapshot):
    assert team_user_repetition(history_snapshot, {"A", "B", "C"}) == 2
    assert team_user_repetition(history_snapshot, {"A", "B"}) == 1
    assert team_user_repetition(history_snapshot, {"A", "C"}) == 0
    assert team_user_repetition(history_snapshot, {"A", "B", "C", "D"}) == 3


def test_no_history_means_zero(duo_snapshot):
    assert team_user_repetition(duo_snapshot, {"A", "B"}) == 0


def test_repeated_publications_count_separately():
    snapshot = make_snapshot(
        individuals=["A", "B"],
        areas=["x"],
        publications=[
            ("p1", ["A", "B"], ["x"], 2001),
            ("p2", ["A", "B"], ["x"], 2002),
        ],
    )
    # Two distinct past collaborations of the same pair are two teams.
    assert team_user_repetition(snapshot, {"A", "B"}) == 2


# --- concept repetition -----------------------------------------------------------


def test_identical_area_set_scores_one(history_snapshot):
    # D appears only in p3 whose areas equal the requirement exactly.
    assert team_concept_repetition(history_snapshot, {"D"}, {"z"}) == 1.0
    # C also drags in p2 (areas {x,z}): mean of 1.0 and 1/2.
    assert team_concept_repetition(history_snapshot, {"C", "D"}, {"z"}) == pytest.approx(0.75)


def test_partial_overlap_is_jaccard(history_snapshot):
    # Team {D} touches only p3 (areas {z}); required {x, y} shares nothing.
    assert team_concept_repetition(history_snapshot, {"D"}, {"x", "y"}) == 0.0
    # Team {A} touches p1 {x,y} and p2 {x,z}; required {x,y}:
    # J = 1.0 and 1/3 → mean 2/3
    value = team_concept_repetition(history_snapshot, {"A"}, {"x", "y"})
    assert value == pytest.approx((1.0 + 1 / 3) / 2)


def test_single_relevant_team_partial():
    snapshot = make_snapshot(
        individuals=["A", "B"],
        areas=["x", "y", "z"],
        publications=[("p1", ["A", "B"], ["x", "z"], 2001)],
    )
    assert team_concept_repetition(snapshot, {"A"}, {"x", "y"}) == pytest.approx(1 / 3)


def test_no_shared_member_scores_zero(history_snapshot):
    snapshot = make_snapshot(
        individuals=["A", "B", "C"],
        areas=["x"],
        publications=[("p1", ["A", "B"], ["x"], 2001)],
    )
    assert team_concept_repetition(snapshot, {"C"}, {"x"}) == 0.0


def test_required_areas_must_be_non_empty(history_snapshot):
    with pytest.raises(ValueError):
        team_concept_repetition(history_snapshot, {"A"}, set())
