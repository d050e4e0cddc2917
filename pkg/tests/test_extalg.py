"""Graded dimensions of convolution blocks.

For a pair of compositions $i, j$ of $d$ the geometric series
gdim_geo sums, over the strata $M$, the cell counts of the two
pavings against the automorphy series of the stratum.  The algebraic
series gdim_alg_klr counts the basis $\\{\\psi_w x^\\alpha e(i)\\}$ of
the corresponding quiver Hecke block.  The two agree up to the
monomial shift $u^{\\dim_j - \\dim_i}$ in the flag-variety dimensions,
which is the graded shadow of formality.

The one-vertex specializations are classical: complete blocks of
$A_1$ in rank $n$ carry the nil Hecke algebra with graded dimension
$(\\sum_{w \\in S_n} u^{-2\\ell(w)})(1-u^2)^{-n}$, and the loop quiver
block carries $S(V) \\rtimes k[S_n]$ with $n!\\,(1-u^2)^{-n}$.
"""

from __future__ import annotations

from itertools import permutations

import pytest

from quiverchow.extalg import (
    BlockKey,
    GdimReport,
    compare_block,
    gdim_alg_klr,
    gdim_geo,
    gdim_schur_table,
    springer_smash_gdim,
)
from quiverchow.quiver import (
    Composition,
    DimVector,
    dim_qvariety,
    enumerate_complete_comps,
    parse_composition,
    parse_quiver,
)
from quiverchow.series import HalfLaurentSeries, bgl, first_discrepancy


A1 = parse_quiver("A1")
A2 = parse_quiver("A2")
LOOP = parse_quiver("cyclic:1")
D11 = DimVector((1, 1))


def series_of(coeffs: dict[int, int], trunc: int) -> HalfLaurentSeries:
    return HalfLaurentSeries.from_map(coeffs, trunc=trunc)


def test_a2_identity_block_is_two_variable_polynomial_ring():
    c = Composition.from_word((0, 1), 2)
    geo = gdim_geo(A2, D11, c, c, 12)
    assert first_discrepancy(geo, bgl(1, 12).pow(2)) is None


def test_a2_cross_blocks():
    up = Composition.from_word((0, 1), 2)
    dn = Composition.from_word((1, 0), 2)
    # crossing against the arrow costs u^2, with it nothing
    geo_ud = gdim_geo(A2, D11, up, dn, 12)
    expect = bgl(1, 12).pow(2).mul(HalfLaurentSeries.monomial(2))
    assert first_discrepancy(geo_ud, expect.truncate(12)) is None
    geo_du = gdim_geo(A2, D11, dn, up, 12)
    assert first_discrepancy(geo_du, bgl(1, 12).pow(2)) is None


def test_a2_algebraic_one_crossing_block():
    alg = gdim_alg_klr(A2, D11, (0, 1), (1, 0), 12)
    # single crossing of degree 1 on top of the polynomial part
    expect = bgl(1, 12).pow(2).mul(HalfLaurentSeries.monomial(1))
    assert first_discrepancy(alg, expect.truncate(12)) is None


def test_compare_block_matches_with_dimension_shift():
    for i in ((0, 1), (1, 0)):
        for j in ((0, 1), (1, 0)):
            rep = compare_block(A2, D11, i, j, 12)
            assert rep.normalized_match, (i, j)
            assert rep.first_discrepancy is None
            ci, cj = Composition.from_word(i, 2), Composition.from_word(j, 2)
            shift = dim_qvariety(A2, cj) - dim_qvariety(A2, ci)
            shifted = rep.algebraic.mul(HalfLaurentSeries.monomial(shift))
            assert first_discrepancy(rep.geometric, shifted) is None


def test_nil_hecke_closed_form_small_rank():
    for n in (1, 2, 3):
        d = DimVector((n,))
        comp = enumerate_complete_comps(A1, d)[0]
        geo = gdim_geo(A1, d, comp, comp, 16)
        numer = HalfLaurentSeries.zero()
        for w in permutations(range(n)):
            inv = sum(1 for a in range(n) for b in range(a + 1, n) if w[a] > w[b])
            numer = numer.add(HalfLaurentSeries.monomial(-2 * inv))
        expect = numer.mul(bgl(1, 16).pow(n))
        assert first_discrepancy(geo, expect.truncate(16)) is None, n


def test_loop_block_is_smash_product_series():
    for n in (1, 2):
        d = DimVector((n,))
        comp = enumerate_complete_comps(LOOP, d)[0]
        geo = gdim_geo(LOOP, d, comp, comp, 14)
        assert first_discrepancy(geo, springer_smash_gdim(n, 14)) is None


def test_springer_smash_gdim_values():
    s = springer_smash_gdim(2, 10)
    # 2 (1 + u^2 + 2u^4 + ...) with partition-like growth from (1-u^2)^{-2}
    assert s.coefficient(0) == 2
    assert s.coefficient(2) == 4
    assert first_discrepancy(s, bgl(1, 10).pow(2).scale(2)) is None


def test_schur_table_single_vertex_rank_two():
    tab = gdim_schur_table(A1, DimVector((2,)), 12)
    keys = {str(k) for k in tab}
    assert keys == {"1;1|1;1", "1;1|2", "2|1;1", "2|2"}
    whole = next(v for k, v in tab.items() if str(k) == "2|2")
    assert first_discrepancy(whole, bgl(2, 12)) is None
    # the complete block reproduces gdim_geo
    c = parse_composition("1;1", 1)
    complete = next(v for k, v in tab.items() if str(k) == "1;1|1;1")
    assert first_discrepancy(complete, gdim_geo(A1, DimVector((2,)), c, c, 12)) is None


def test_schur_table_zero_dimension_vector():
    tab = gdim_schur_table(A2, DimVector((0, 0)), 8)
    assert len(tab) == 1
    ((key, series),) = tab.items()
    assert str(key) == "|"
    assert first_discrepancy(series, HalfLaurentSeries.one().truncate(8)) is None


def test_transpose_symmetry_of_geometric_blocks():
    # swapping i and j shifts every exponent by 2(dim_i - dim_j)
    comps = enumerate_complete_comps(A2, D11)
    N = 12
    for ci in comps:
        for cj in comps:
            fwd = gdim_geo(A2, D11, ci, cj, N)
            bwd = gdim_geo(A2, D11, cj, ci, N)
            delta = 2 * (dim_qvariety(A2, ci) - dim_qvariety(A2, cj))
            for m in range(-N, N // 2):
                if m > N or m + delta > N:
                    continue
                assert fwd.coefficient(m) == bwd.coefficient(m + delta)


def test_block_key_requires_matching_targets():
    a = parse_composition("1;1", 1)
    b = parse_composition("2", 1)
    key = BlockKey("A1", DimVector((2,)), a, b)
    assert str(key) == "1;1|2"
    with pytest.raises(ValueError):
        BlockKey("A1", DimVector((2,)), a, parse_composition("1;1;1", 1))


def test_gdim_alg_rejects_mismatched_content():
    with pytest.raises(ValueError):
        gdim_alg_klr(A2, D11, (0, 1), (0, 0), 8)


def test_report_is_frozen_record():
    rep = compare_block(A2, D11, (0, 1), (0, 1), 10)
    assert isinstance(rep, GdimReport)
    with pytest.raises(AttributeError):
        rep.normalized_match = False  # type: ignore[misc]
