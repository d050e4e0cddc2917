"""Truncated Laurent series in $u$ with exact integer coefficients.

A HalfLaurentSeries stores finitely many exponents below zero and a
truncation order above; arithmetic tracks the tightest valid
truncation.  The graded dimension of $BGL_m$ is the generating
function $\\prod_{k=1}^{m} (1-u^{2k})^{-1}$, whose coefficients count
partitions with at most $m$ part sizes.
"""

from __future__ import annotations

import random

import pytest

from quiverchow.series import (
    DEFAULT_TRUNC,
    INF,
    HalfLaurentSeries,
    bgl,
    first_discrepancy,
)


def test_monomial_and_coefficient():
    s = HalfLaurentSeries.monomial(-2, 3)
    assert s.coefficient(-2) == 3
    assert s.coefficient(0) == 0
    assert HalfLaurentSeries.one().coefficient(0) == 1


def test_add_and_scale_exact():
    a = HalfLaurentSeries.from_map({0: 1, 2: 4}, trunc=10)
    b = HalfLaurentSeries.from_map({2: -4, 4: 1}, trunc=10)
    c = a.add(b)
    assert c.coefficient(2) == 0
    assert c.coefficient(4) == 1
    assert a.scale(-2).coefficient(2) == -8


def test_mul_truncation_is_tightest_valid():
    # multiplying by u^{-2} must lower the reliable truncation by 2
    a = HalfLaurentSeries.from_map({0: 1, 1: 1}, trunc=5)
    shift = HalfLaurentSeries.monomial(-2)
    prod = a.mul(shift)
    assert prod.trunc == 3
    assert prod.coefficient(-2) == 1


def test_geometric_series_inverse():
    # (1 - u^2) * sum u^{2k} = 1 up to the truncation order
    geom = bgl(1, trunc=20)
    one_minus = HalfLaurentSeries.from_map({0: 1, 2: -1}, trunc=INF)
    prod = geom.mul(one_minus)
    assert first_discrepancy(prod, HalfLaurentSeries.one().truncate(20)) is None


def test_bgl_counts_bounded_partitions():
    # coefficient of u^{2j} in bgl(m) counts partitions of j with parts <= m
    table = [1] + [0] * 12
    for part in range(1, 3):
        for total in range(part, 13):
            table[total] += table[total - part]
    series = bgl(2, trunc=24)
    for j in range(13):
        assert series.coefficient(2 * j) == table[j]
    for j in range(12):
        assert series.coefficient(2 * j + 1) == 0


def test_pow_matches_repeated_mul():
    rng = random.Random(3)
    base = HalfLaurentSeries.from_map(
        {e: rng.randint(-3, 3) for e in range(-2, 6)}, trunc=12)
    acc = HalfLaurentSeries.one()
    for k in range(4):
        assert first_discrepancy(base.pow(k), acc) is None
        acc = acc.mul(base)


def test_truncate_discards_high_terms():
    s = HalfLaurentSeries.from_map({0: 1, 6: 5}, trunc=10)
    t = s.truncate(4)
    assert t.trunc == 4
    assert t.coefficient(6) == 0
    # truncation is monotone: re-truncating higher does not resurrect terms
    assert t.truncate(10).trunc == 4


def test_first_discrepancy_finds_lowest_mismatch():
    a = HalfLaurentSeries.from_map({0: 1, 2: 2, 4: 3}, trunc=8)
    b = HalfLaurentSeries.from_map({0: 1, 2: 5, 4: 9}, trunc=8)
    assert first_discrepancy(a, b) == 2
    assert first_discrepancy(a, a) is None


def test_agreement_respects_common_truncation():
    # series equal below the tighter truncation agree, whatever lies above it
    a = HalfLaurentSeries.from_map({0: 1, 2: 1}, trunc=2)
    b = HalfLaurentSeries.from_map({0: 1, 2: 1, 4: 99}, trunc=8)
    assert first_discrepancy(a, b) is None


def test_default_truncation_order():
    assert DEFAULT_TRUNC == 24
    assert bgl(1).trunc == 24


def test_zero_and_one_identities():
    z = HalfLaurentSeries.zero()
    s = bgl(2, trunc=10)
    assert first_discrepancy(s.add(z), s) is None
    assert first_discrepancy(s.mul(HalfLaurentSeries.one()), s) is None
    assert z.mul(s).is_zero()
    assert not s.is_zero()
