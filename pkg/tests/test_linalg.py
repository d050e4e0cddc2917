"""Exact linear algebra over the integers and rationals."""

from __future__ import annotations

import random
from fractions import Fraction

import pytest

from quiverchow.linalg import nullity_int, rank_int, rref_fractions, solve_exact


def test_rank_known_matrices():
    assert rank_int([[1, 0], [0, 1]], 2) == 2
    assert rank_int([[1, 2], [2, 4]], 2) == 1
    assert rank_int([[0, 0], [0, 0]], 2) == 0
    assert rank_int([], 3) == 0
    # wide and tall
    assert rank_int([[1, 2, 3]], 3) == 1
    assert rank_int([[1], [2], [3]], 1) == 1


def test_rank_survives_large_entries():
    # gcd normalization must keep intermediate entries bounded
    rows = [[10**12, 1, 0], [0, 10**12, 1], [1, 0, 10**12]]
    assert rank_int(rows, 3) == 3


def test_nullity_complements_rank():
    rng = random.Random(23)
    for _ in range(20):
        r, c = rng.randint(1, 5), rng.randint(1, 5)
        rows = [[rng.randint(-4, 4) for _ in range(c)] for _ in range(r)]
        assert rank_int([row[:] for row in rows], c) + nullity_int(
            [row[:] for row in rows], c) == c


def test_rref_pivot_columns():
    mat, pivots = rref_fractions([[2, 4, 0], [1, 2, 1]])
    assert pivots == [0, 2]
    assert mat[0][0] == 1 and mat[0][1] == 2
    assert mat[1][2] == 1


def test_solve_exact_consistent_system():
    # columns c1, c2 with rhs = 3 c1 - 2 c2
    c1, c2 = [1, 0, 2], [0, 1, 1]
    rhs = [3, -2, 4]
    sol = solve_exact([c1, c2], rhs)
    assert sol == [Fraction(3), Fraction(-2)]


def test_solve_exact_inconsistent_returns_none():
    assert solve_exact([[1, 1]], [1, 2]) is None
    assert solve_exact([[1, 0, 0], [0, 1, 0]], [0, 0, 1]) is None


def test_solve_exact_rejects_ragged_shapes():
    with pytest.raises(ValueError):
        solve_exact([[1, 0], [0, 1]], [0, 0, 1])


def test_solve_exact_rational_solution():
    sol = solve_exact([[2, 0], [0, 3]], [1, 1])
    assert sol == [Fraction(1, 2), Fraction(1, 3)]


def test_solve_exact_random_roundtrip():
    rng = random.Random(41)
    for _ in range(25):
        rows, cols = rng.randint(1, 5), rng.randint(1, 4)
        columns = [[rng.randint(-3, 3) for _ in range(rows)] for _ in range(cols)]
        coeffs = [rng.randint(-3, 3) for _ in range(cols)]
        rhs = [sum(c * col[r] for c, col in zip(coeffs, columns))
               for r in range(rows)]
        sol = solve_exact(columns, rhs)
        assert sol is not None
        rebuilt = [sum(c * col[r] for c, col in zip(sol, columns))
                   for r in range(rows)]
        assert rebuilt == [Fraction(v) for v in rhs]
