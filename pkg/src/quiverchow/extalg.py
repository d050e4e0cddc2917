"""Graded dimensions of extension-algebra blocks, two ways.

The geometric series for a block $(i, j)$ sums over the orbit strata of the
nilpotent representation space: each stratum contributes the product of the
cell polynomials of the two flag fibers, a Tate twist by the stratum
codimension, and the Chow series of the automorphism group of the orbit
(a product of $\\mathrm{bgl}$ factors).  Pavings make the strata sum with no
correction terms.

The algebraic series is the graded dimension of a block of the quiver Hecke
algebra read off from its permutation basis: one monomial $u^{\\deg_w(i)}$
for every $w$ carrying the word $i$ to $j$, times $(1-u^2)^{-n}$ for the
polynomial part.  The two sides agree after a single normalization shift
$u^{d_j - d_i}$; `compare_block` certifies that identity coefficientwise.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .nilrep import aut_series_exponents, enumerate_nilreps, orbit_dim
from .paving import paving_cells
from .quiver import (
    Composition,
    DimVector,
    Quiver,
    cartan,
    dim_qvariety,
    enumerate_compositions,
)
from .series import DEFAULT_TRUNC, HalfLaurentSeries, bgl, first_discrepancy


@dataclass(frozen=True)
class BlockKey:
    """Index of one block: a pair of compositions of the same vector."""

    quiver: Quiver
    dim: DimVector
    source: Composition
    target: Composition

    def __post_init__(self) -> None:
        if self.source.target != self.target.target:
            raise ValueError("source and target compositions refine different vectors")

    def __str__(self) -> str:
        return f"{self.source}|{self.target}"


@dataclass(frozen=True)
class GdimReport:
    """Outcome of comparing the two series for one complete block."""

    geometric: HalfLaurentSeries
    algebraic: HalfLaurentSeries
    normalized_match: bool
    first_discrepancy: int | None


def _check_comp(d: DimVector, c: Composition, n: int) -> None:
    target = c.target if c.parts else DimVector((0,) * n)
    if tuple(target) != tuple(d):
        raise ValueError(f"composition {c} does not refine {d}")


def gdim_geo(
    Q: Quiver,
    d: DimVector,
    i: Composition,
    j: Composition,
    N: int = DEFAULT_TRUNC,
) -> HalfLaurentSeries:
    """Stratified Chow series of the block (i, j), truncated at u^N.

    Every stratum M contributes
    sum over cell pairs of u^{2(d_j - orbit_dim(M) - c1 - c2)} times the
    automorphism-group series of M; the exponent grid is even.
    """
    _check_comp(d, i, Q.n)
    _check_comp(d, j, Q.n)
    dj = dim_qvariety(Q, j)
    total = HalfLaurentSeries.zero()
    for M in enumerate_nilreps(Q, d):
        cells_i = paving_cells(Q, M, i)
        cells_j = paving_cells(Q, M, j)
        if cells_i.is_empty_variety() or cells_j.is_empty_variety():
            continue
        shift = orbit_dim(Q, M)
        coeffs: dict[int, int] = {}
        for c1 in cells_i.dims:
            for c2 in cells_j.dims:
                e = 2 * (dj - shift - c1 - c2)
                coeffs[e] = coeffs.get(e, 0) + 1
        cell_poly = HalfLaurentSeries.from_map(coeffs)
        m0 = min(coeffs)
        aut = HalfLaurentSeries.one()
        for m in aut_series_exponents(M):
            aut = aut.mul(bgl(m, N - m0))
        if not aut_series_exponents(M):
            aut = aut.truncate(N - m0)
        total = total.add(cell_poly.mul(aut))
    return total.truncate(N)


def _word_permutations(i: tuple[int, ...], j: tuple[int, ...]):
    """All w with j[w(k)] = i[k]; grouped positions keep duplicates exact."""
    n = len(i)
    slots: dict[int, list[int]] = {}
    for pos, letter in enumerate(j):
        slots.setdefault(letter, []).append(pos)
    if sorted(i) != sorted(j):
        return
    letters = sorted(slots)
    choices = [itertools.permutations(slots[a]) for a in letters]
    positions = {a: [k for k, b in enumerate(i) if b == a] for a in letters}
    for combo in itertools.product(*choices):
        w = [0] * n
        for a, perm in zip(letters, combo):
            for src, tgt in zip(positions[a], perm):
                w[src] = tgt
        yield tuple(w)


def gdim_alg_klr(
    Q: Quiver,
    d: DimVector,
    i: tuple[int, ...],
    j: tuple[int, ...],
    N: int = DEFAULT_TRUNC,
) -> HalfLaurentSeries:
    """Permutation-basis graded dimension of the (i, j) block: one term
    u^{deg_w(i)} per permutation w with w.i = j, with deg_w summing
    -cartan(i_k, i_l) over inversions, all times (1 - u^2)^{-n}."""
    i = tuple(i)
    j = tuple(j)
    n = d.total
    if len(i) != n or len(j) != n:
        raise ValueError("words must have length total(d)")
    if sorted(i) != sorted(j):
        raise ValueError("words of different content")
    coeffs: dict[int, int] = {}
    for w in _word_permutations(i, j):
        deg = 0
        for k in range(n):
            for l in range(k + 1, n):
                if w[k] > w[l]:
                    deg += -cartan(Q, i[k], i[l])
        coeffs[deg] = coeffs.get(deg, 0) + 1
    if not coeffs:
        return HalfLaurentSeries.zero().truncate(N)
    m0 = min(coeffs)
    perm_poly = HalfLaurentSeries.from_map(coeffs)
    poly_part = bgl(1, N - m0).pow(n) if n else HalfLaurentSeries.one().truncate(N - m0)
    return perm_poly.mul(poly_part).truncate(N)


def compare_block(
    Q: Quiver,
    d: DimVector,
    i: tuple[int, ...],
    j: tuple[int, ...],
    N: int = DEFAULT_TRUNC,
) -> GdimReport:
    """Compare the two series for a complete block, coefficientwise to u^N,
    after the normalization shift u^{d_j - d_i}."""
    i = tuple(i)
    j = tuple(j)
    ci = Composition.from_word(i, Q.n)
    cj = Composition.from_word(j, Q.n)
    geo = gdim_geo(Q, d, ci, cj, N)
    alg = gdim_alg_klr(Q, d, i, j, N)
    shift = dim_qvariety(Q, cj) - dim_qvariety(Q, ci)
    alg_for_match = gdim_alg_klr(Q, d, i, j, N - shift)
    shifted = alg_for_match.mul(HalfLaurentSeries.monomial(shift)).truncate(N)
    gap = first_discrepancy(geo, shifted)
    return GdimReport(geo, alg, gap is None, gap)


def gdim_schur_table(
    Q: Quiver, d: DimVector, N: int = DEFAULT_TRUNC
) -> dict[BlockKey, HalfLaurentSeries]:
    """Geometric series for every pair of compositions of d, complete or
    not; the coarse blocks have no independent algebraic formula here."""
    comps = enumerate_compositions(d)
    table: dict[BlockKey, HalfLaurentSeries] = {}
    for ci in comps:
        for cj in comps:
            table[BlockKey(Q, d, ci, cj)] = gdim_geo(Q, d, ci, cj, N)
    return table


def springer_smash_gdim(n: int, N: int = DEFAULT_TRUNC) -> HalfLaurentSeries:
    """Graded dimension n! (1 - u^2)^{-n} of the smash product of the
    polynomial ring on n variables (degree 2 each) with S_n."""
    if n < 1:
        raise ValueError("n must be positive")
    fact = 1
    for k in range(2, n + 1):
        fact *= k
    return bgl(1, N).pow(n).scale(fact)
