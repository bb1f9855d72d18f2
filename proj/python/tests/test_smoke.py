"""Smoke tests for the tropgame extension module."""

from fractions import Fraction

import pytest

import tropgame

NINF = float("-inf")

# The running 3x2 example: a cone whose game has values (-1, 5).
A1 = [[2, NINF], [8, NINF], [NINF, 0]]
B1 = [[1, NINF], [-3, -12], [-9, 5]]


def test_game_values_first_example():
    assert tropgame.game_values(A1, B1) == [Fraction(-1), Fraction(5)]


def test_cone_first_example():
    rep = tropgame.cone_nontrivial(A1, B1)
    assert rep["feasible"]
    assert rep["support"] == [2]
    assert rep["witness"] == [NINF, 0]


def test_winning_states_first_example():
    assert tropgame.winning_states(A1, B1) == [2]


def test_power_trace_first_example():
    trace = tropgame.power_trace(A1, B1)
    assert trace["iterates"] == [[0, 0], [-11, 0]]
    assert trace["stop"] == "partial_fixed_point"
    assert trace["nonneg"]
    assert trace["witness"] == [NINF, 0]


def test_columns_dependent_hyperplane():
    rows = [[0, 2, 0], [0, 3, 2], [0, 1, 1], [1, 3, 0]]
    rep = tropgame.columns_independent(rows)
    assert not rep["independent"]
    assert rep["witness"] == ["0", "-2", "-1"]


def test_columns_independent_certificate():
    rows = [[0, 2, 0], [0, 3, 2], [0, 1, 1], [1, 1, 0]]
    rep = tropgame.columns_independent(rows)
    assert rep["independent"]
    assert rep["witness"] is None
    assert len(rep["rows"]) == 3


def test_rank_and_singularity():
    rows_dep = [[0, 2, 0], [0, 3, 2], [0, 1, 1], [1, 3, 0]]
    assert tropgame.tropical_rank(rows_dep) == 2
    assert tropgame.is_tropically_singular([[0, 0], [0, 0]])
    assert not tropgame.is_tropically_singular([[0, NINF], [NINF, 0]])
    assert tropgame.tropical_permanent([["0g", NINF], [NINF, 0]]) == "0g"


def test_cramer():
    x = tropgame.cramer_solve([[2, NINF], [NINF, 3]], [5, 5])
    assert x == ["3", "2"]
    assert tropgame.cramer_solve([[0, 0], [0, 0]], [1, 2]) is None


def test_poly_nonempty():
    # 0 <= max(x_1, -inf): forced lower bound, witness x_1 = 0.
    rep = tropgame.poly_nonempty([[NINF]], [[0]], [0], [NINF])
    assert rep["feasible"]
    assert rep["witness"] == [0]


def test_errors_are_typed():
    with pytest.raises(tropgame.TropgameError):
        tropgame.cone_nontrivial([[0, 1]], [[0]])
