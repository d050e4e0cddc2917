"""Affine pavings of quiver flag varieties and point counts.

The variety $Fl(M, \\underline{d})$ of strictly $\\rho$-stable flags
admits a paving by affine cells, so its Poincaré polynomial in $q$
both lists the cells by dimension and counts its points over $F_q$:
$|Fl(M,\\underline{d})(F_q)| = \\sum_c q^{\\dim c}$.

count_points brute-forces flags over the actual finite field and
shares no code with the paving recursion; agreement between the two is
the load-bearing check here.
"""

from __future__ import annotations

import random

import pytest

from quiverchow.nilrep import enumerate_nilreps, parse_multisegment, semisimple_class
from quiverchow.paving import (
    CellSet,
    PoincarePolynomial,
    count_points,
    is_prime,
    paving_cells,
    poincare,
)
from quiverchow.quiver import (
    Composition,
    DimVector,
    enumerate_compositions,
    parse_composition,
    parse_quiver,
)


LOOP = parse_quiver("cyclic:1")


def test_zero_representation_gives_classical_flags():
    # rho = 0 imposes nothing: Fl(M, d) is the classical partial flag variety
    M = semisimple_class(LOOP, DimVector((2,)))
    P = poincare(LOOP, M, parse_composition("1;1", 1))
    assert P.as_dict() == {0: 1, 1: 1}  # P^1
    G = poincare(LOOP, semisimple_class(LOOP, DimVector((3,))),
                 parse_composition("1;2", 1))
    assert G.as_dict() == {0: 1, 1: 1, 2: 1}  # Gr(1,3) = P^2


def test_subregular_fiber_poincare_and_counts():
    M = parse_multisegment("(0,2)+(0,1)")
    comp = parse_composition("1;1;1", 1)
    P = poincare(LOOP, M, comp)
    assert P.as_dict() == {0: 1, 1: 2}
    assert count_points(LOOP, M, comp, 2) == 5
    assert count_points(LOOP, M, comp, 3) == 7
    assert P.evaluate(2) == 5 and P.evaluate(3) == 7


def test_regular_nilpotent_fiber_is_a_point():
    M = parse_multisegment("(0,3)")
    P = poincare(LOOP, M, parse_composition("1;1;1", 1))
    assert P.as_dict() == {0: 1}
    assert count_points(LOOP, M, parse_composition("1;1;1", 1), 5) == 1


def test_empty_composition_of_zero_class():
    M = parse_multisegment("0")
    P = poincare(LOOP, M, Composition(()))
    assert P.as_dict() == {0: 1}
    assert P.cell_count == 1
    assert count_points(LOOP, M, Composition(()), 2) == 1


def test_cellset_records_dimensions():
    cells = paving_cells(LOOP, parse_multisegment("(0,2)+(0,1)"),
                         parse_composition("1;1;1", 1))
    assert sorted(cells.dims) == [0, 1, 1]
    assert cells.cell_count == 3
    assert not cells.is_empty_variety()


def test_unreachable_flag_type_paves_empty():
    # one-step flag on the regular class: stability forces rho = 0, impossible
    M = parse_multisegment("(0,2)")
    comp = parse_composition("2", 1)
    cells = paving_cells(LOOP, M, comp)
    assert cells.is_empty_variety()
    assert poincare(LOOP, M, comp).cell_count == 0
    assert count_points(LOOP, M, comp, 2) == 0


def test_mismatched_total_dimension_rejected():
    M = parse_multisegment("(0,3)")
    with pytest.raises(ValueError):
        paving_cells(LOOP, M, parse_composition("1;1", 1))


def test_poincare_equals_point_count_randomized():
    # small random spot checks; the exhaustive sweep lives in the acceptance suite
    rng = random.Random(7)
    specs = ["A1", "A2", "cyclic:1", "cyclic:2"]
    for _ in range(6):
        Q = parse_quiver(rng.choice(specs))
        d = DimVector(tuple(rng.randint(0, 2) for _ in range(Q.n)))
        if d.total > 3:
            continue
        for M in enumerate_nilreps(Q, d):
            for comp in enumerate_compositions(d):
                P = poincare(Q, M, comp)
                for q in (2, 3):
                    assert P.evaluate(q) == count_points(Q, M, comp, q), (
                        str(Q), str(M), str(comp), q)


def test_poincare_polynomial_accessors():
    M = parse_multisegment("(0,2)+(0,1)")
    P = poincare(LOOP, M, parse_composition("1;1;1", 1))
    assert P.coefficients == ((0, 1), (1, 2))
    assert P.cell_count == 3
    assert P.evaluate(1) == 3  # Euler characteristic


def test_is_prime():
    assert [p for p in range(2, 20) if is_prime(p)] == [2, 3, 5, 7, 11, 13, 17, 19]
    assert not is_prime(1) and not is_prime(0) and not is_prime(9)


def test_count_points_rejects_nonprime_field_size():
    M = parse_multisegment("(0,2)")
    with pytest.raises(ValueError):
        count_points(LOOP, M, parse_composition("1;1", 1), 4)
