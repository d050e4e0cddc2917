"""Small exact dense linear algebra over the rationals.

Everything here works on lists of lists of ints or Fractions; sizes are
desk scale (a few hundred unknowns at most), so plain Gaussian elimination
is fine and keeps the arithmetic exact.
"""

from __future__ import annotations

from fractions import Fraction


def rank_int(rows: list[list[int]], width: int) -> int:
    """Rank of an integer matrix, by fraction-free elimination.

    Rows are divided by their gcd after each update, which keeps the
    entries small on the sparse incidence-style systems this package
    produces while staying exact.
    """
    from math import gcd

    mat = [r[:] for r in rows]
    rank = 0
    col = 0
    while rank < len(mat) and col < width:
        pivot = next((r for r in range(rank, len(mat)) if mat[r][col] != 0), None)
        if pivot is None:
            col += 1
            continue
        mat[rank], mat[pivot] = mat[pivot], mat[rank]
        pv = mat[rank][col]
        for r in range(rank + 1, len(mat)):
            if mat[r][col] != 0:
                f = mat[r][col]
                new = [pv * a - f * b for a, b in zip(mat[r], mat[rank])]
                g = 0
                for x in new:
                    g = gcd(g, x)
                mat[r] = [x // g for x in new] if g > 1 else new
        rank += 1
        col += 1
    return rank


def nullity_int(rows: list[list[int]], width: int) -> int:
    return width - rank_int(rows, width)


def rref_fractions(rows: list[list]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form over Q; returns (nonzero rows, pivot columns)."""
    mat = [[Fraction(x) for x in r] for r in rows]
    width = len(mat[0]) if mat else 0
    pivots: list[int] = []
    rank = 0
    for col in range(width):
        pivot = next((r for r in range(rank, len(mat)) if mat[r][col] != 0), None)
        if pivot is None:
            continue
        mat[rank], mat[pivot] = mat[pivot], mat[rank]
        inv = 1 / mat[rank][col]
        mat[rank] = [x * inv for x in mat[rank]]
        for r in range(len(mat)):
            if r != rank and mat[r][col] != 0:
                f = mat[r][col]
                mat[r] = [a - f * b for a, b in zip(mat[r], mat[rank])]
        pivots.append(col)
        rank += 1
    return mat[:rank], pivots


def solve_exact(columns: list[list], rhs: list) -> list[Fraction] | None:
    """One exact solution x of (columns as matrix) . x = rhs, or None.

    Free variables are set to zero, so the answer is deterministic.
    """
    if not columns:
        return [] if all(Fraction(x) == 0 for x in rhs) else None
    height = len(columns[0])
    if any(len(col) != height for col in columns) or len(rhs) != height:
        raise ValueError("column heights and rhs length must agree")
    aug = [
        [Fraction(columns[j][i]) for j in range(len(columns))] + [Fraction(rhs[i])]
        for i in range(height)
    ]
    red, pivots = rref_fractions(aug)
    width = len(columns)
    if width in pivots:
        return None  # inconsistent system
    x = [Fraction(0)] * width
    for row, pc in zip(red, pivots):
        x[pc] = row[width]
    return x
