"""Affine pavings of quiver flag varieties, with a point-count oracle.

The variety in question parametrizes strictly lowering flags inside a fixed
nilpotent representation M: graded subspaces $0 = V^0 \\subset V^1 \\subset
\\dots$ with prescribed step dimensions, such that every arrow maps $V^j$
into $V^{j-1}$.  It is paved by affine cells, found recursively: the first
flag step must be a graded subspace of the socle of M, the choices of
coordinate subspaces spanned by socle lines enumerate the cells of a product
of Grassmannian Schubert pavings, and each choice contributes its Schubert
cell dimension plus the cells of the quotient representation with the
remaining steps.

`count_points` certifies the paving: it materializes M as shift matrices
over a prime field and counts the flags by direct enumeration of graded
subspaces, with no reference to the recursion.  For a variety paved by
affine cells the point count over F_q equals the Poincare polynomial at q.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .nilrep import Multisegment, quotient_by_socles, socle_basis
from .quiver import Composition, DimVector, Quiver


@dataclass(frozen=True)
class CellSet:
    """Multiset of affine cell dimensions; empty means the empty variety."""

    dims: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "dims", tuple(sorted(self.dims)))

    @property
    def cell_count(self) -> int:
        return len(self.dims)

    def is_empty_variety(self) -> bool:
        return not self.dims

    def __iter__(self):
        return iter(self.dims)


@dataclass(frozen=True)
class PoincarePolynomial:
    """Generating polynomial of a CellSet: sum of q^dim over cells."""

    coefficients: tuple[tuple[int, int], ...]  # (exponent, count), ascending

    @staticmethod
    def from_cells(cells: CellSet) -> "PoincarePolynomial":
        counts: dict[int, int] = {}
        for d in cells.dims:
            counts[d] = counts.get(d, 0) + 1
        return PoincarePolynomial(tuple(sorted(counts.items())))

    def evaluate(self, q: int) -> int:
        return sum(c * q**e for e, c in self.coefficients)

    @property
    def cell_count(self) -> int:
        return self.evaluate(1)

    def as_dict(self) -> dict[int, int]:
        return dict(self.coefficients)

    def __str__(self) -> str:
        if not self.coefficients:
            return "0"
        chunks = []
        for e, c in self.coefficients:
            if e == 0:
                chunks.append(str(c))
            else:
                head = "" if c == 1 else f"{c}*"
                chunks.append(f"{head}q" if e == 1 else f"{head}q^{e}")
        return " + ".join(chunks)


_paving_cache: dict[tuple[Quiver, Multisegment, tuple[DimVector, ...]], tuple[int, ...]] = {}


def _subset_choices(basis_sizes: list[int], step: DimVector):
    """All per-vertex index subsets with the prescribed sizes."""
    per_vertex = [
        list(itertools.combinations(range(size), step[v]))
        for v, size in enumerate(basis_sizes)
    ]
    return itertools.product(*per_vertex)


def _schubert_dim(choice) -> int:
    # dimension of the coordinate cell: for each chosen line, the number of
    # unchosen lines preceding it in the socle order
    total = 0
    for picked in choice:
        picked_set = set(picked)
        for k in picked:
            total += sum(1 for j in range(k) if j not in picked_set)
    return total


def _cells(Q: Quiver, M: Multisegment, parts: tuple[DimVector, ...]) -> tuple[int, ...]:
    key = (Q, M, parts)
    hit = _paving_cache.get(key)
    if hit is not None:
        return hit
    if not parts:
        out = (0,) if M.is_empty() else ()
        # the precondition at the public entry point guarantees M is empty
        # here; the empty tuple branch is unreachable from paving_cells
        _paving_cache[key] = out
        return out
    basis = socle_basis(Q, M)
    dims: list[int] = []
    for choice in _subset_choices([len(b) for b in basis], parts[0]):
        d0 = _schubert_dim(choice)
        quotient = quotient_by_socles(Q, M, [list(c) for c in choice])
        for rest in _cells(Q, quotient, parts[1:]):
            dims.append(d0 + rest)
    out = tuple(sorted(dims))
    _paving_cache[key] = out
    return out


def _check_target(Q: Quiver, M: Multisegment, comp: Composition) -> None:
    target = comp.target if comp.parts else DimVector((0,) * Q.n)
    if M.dim_vector(Q) != target or len(target) != Q.n:
        raise ValueError(
            f"dimension mismatch: M has {M.dim_vector(Q)}, comp targets {target}"
        )


def paving_cells(Q: Quiver, M: Multisegment, comp: Composition) -> CellSet:
    """Affine cell dimensions of the variety of strictly lowering flags of
    type comp in M.  Raises on a dimension mismatch."""
    _check_target(Q, M, comp)
    return CellSet(_cells(Q, M, comp.parts))


def poincare(Q: Quiver, M: Multisegment, comp: Composition) -> PoincarePolynomial:
    return PoincarePolynomial.from_cells(paving_cells(Q, M, comp))


# ---------------------------------------------------------------------------
# finite-field oracle

def is_prime(q: int) -> bool:
    if q < 2:
        return False
    f = 2
    while f * f <= q:
        if q % f == 0:
            return False
        f += 1
    return True


def _rref(rows: list[list[int]], p: int) -> list[list[int]]:
    """Reduced row echelon form over F_p; drops zero rows."""
    mat = [r[:] for r in rows]
    width = len(mat[0]) if mat else 0
    pivots = []
    rank = 0
    for col in range(width):
        pivot = next((r for r in range(rank, len(mat)) if mat[r][col] % p), None)
        if pivot is None:
            continue
        mat[rank], mat[pivot] = mat[pivot], mat[rank]
        inv = pow(mat[rank][col], -1, p)
        mat[rank] = [(x * inv) % p for x in mat[rank]]
        for r in range(len(mat)):
            if r != rank and mat[r][col] % p:
                f = mat[r][col]
                mat[r] = [(a - f * b) % p for a, b in zip(mat[r], mat[rank])]
        pivots.append(col)
        rank += 1
    return mat[:rank]


def _kernel_basis(rows: list[list[int]], width: int, p: int) -> list[list[int]]:
    """Basis of the right kernel of the matrix (as column vectors of length
    width, returned as lists)."""
    if not rows:
        return [[1 if i == j else 0 for i in range(width)] for j in range(width)]
    red = _rref(rows, p)
    pivots = []
    for r in red:
        pivots.append(next(c for c in range(width) if r[c]))
    free = [c for c in range(width) if c not in pivots]
    basis = []
    for fc in free:
        vec = [0] * width
        vec[fc] = 1
        for r, pc in zip(red, pivots):
            vec[pc] = (-r[fc]) % p
        basis.append(vec)
    return basis


def _rref_matrices(k: int, m: int, p: int):
    """All k x m matrices in reduced row echelon form with rank k over F_p;
    enumerates the Schubert decomposition of the Grassmannian Gr(k, m)."""
    if k == 0:
        yield []
        return
    if k > m:
        return
    for pivots in itertools.combinations(range(m), k):
        free_pos = [
            (i, j)
            for i in range(k)
            for j in range(pivots[i] + 1, m)
            if j not in pivots
        ]
        for values in itertools.product(range(p), repeat=len(free_pos)):
            mat = [[0] * m for _ in range(k)]
            for i, pc in enumerate(pivots):
                mat[i][pc] = 1
            for (i, j), val in zip(free_pos, values):
                mat[i][j] = val
            yield mat


def _mat_vec(mat: list[list[int]], vec: list[int], p: int) -> list[int]:
    return [sum(a * b for a, b in zip(row, vec)) % p for row in mat]


def _solve_coords(basis_cols: list[list[int]], vec: list[int], p: int) -> list[int]:
    """Coordinates of vec in the given basis (columns); basis must span it."""
    width = len(basis_cols)
    aug = [
        [basis_cols[j][i] for j in range(width)] + [vec[i]]
        for i in range(len(vec))
    ]
    red = _rref(aug, p)
    coords = [0] * width
    for row in red:
        pc = next(c for c in range(width + 1) if row[c])
        if pc == width:
            raise ValueError("vector outside the span")
        coords[pc] = row[width]
    return coords


class _MatRep:
    """A representation over F_p: one matrix per arrow, dense lists."""

    def __init__(self, Q: Quiver, dims: list[int], mats: dict[tuple[int, int], list[list[int]]], p: int):
        self.Q = Q
        self.dims = dims
        self.mats = mats
        self.p = p

    @staticmethod
    def from_multisegment(Q: Quiver, M: Multisegment, p: int) -> "_MatRep":
        # basis of V_v: pairs (segment index, position); position runs from
        # the head to the socle, the arrow action shifts position by one
        index: dict[tuple[int, int], int] = {}
        dims = [0] * Q.n
        for si, seg in enumerate(M.segments):
            for pos, v in enumerate(seg.support(Q)):
                index[(si, pos)] = dims[v]
                dims[v] += 1
        mats = {
            (s, t): [[0] * dims[s] for _ in range(dims[t])] for (s, t) in Q.arrows()
        }
        for si, seg in enumerate(M.segments):
            supp = seg.support(Q)
            for pos in range(seg.length - 1):
                s, t = supp[pos], supp[pos + 1]
                mats[(s, t)][index[(si, pos + 1)]][index[(si, pos)]] = 1
        return _MatRep(Q, dims, mats, p)

    def socle_kernels(self) -> list[list[list[int]]]:
        """Per vertex, a basis (list of vectors) of the joint kernel of all
        arrows leaving the vertex."""
        out = []
        for v in self.Q.vertices:
            rows: list[list[int]] = []
            for (s, t), mat in self.mats.items():
                if s == v:
                    rows.extend(mat)
            out.append(_kernel_basis(rows, self.dims[v], self.p))
        return out

    def quotient(self, sub_bases: list[list[list[int]]]) -> "_MatRep":
        """Quotient by the graded subspace spanned by sub_bases (per-vertex
        lists of vectors contained in the socle kernel)."""
        p = self.p
        new_dims = []
        # per vertex: full basis = subspace vectors then complement standard
        # vectors; store the inverse-change-of-basis data via _solve_coords
        complements: list[list[list[int]]] = []
        full_bases: list[list[list[int]]] = []
        for v in self.Q.vertices:
            sub = sub_bases[v]
            d = self.dims[v]
            red = _rref([list(u) for u in sub], p) if sub else []
            pivots = {next(c for c in range(d) if row[c]) for row in red}
            comp = [
                [1 if i == j else 0 for i in range(d)]
                for j in range(d)
                if j not in pivots
            ]
            complements.append(comp)
            full_bases.append([list(u) for u in sub] + comp)
            new_dims.append(len(comp))
        new_mats = {}
        for (s, t), mat in self.mats.items():
            cols = []
            k_t = len(sub_bases[t])
            for cvec in complements[s]:
                img = _mat_vec(mat, cvec, p)
                if any(img):
                    coords = _solve_coords(full_bases[t], img, p)
                else:
                    coords = [0] * self.dims[t]
                cols.append(coords[k_t:])
            new_mats[(s, t)] = [
                [cols[j][i] for j in range(new_dims[s])] for i in range(new_dims[t])
            ]
        return _MatRep(self.Q, new_dims, new_mats, p)


def _count_flags(rep: _MatRep, parts: tuple[DimVector, ...]) -> int:
    if not parts:
        return 1 if all(d == 0 for d in rep.dims) else 0
    step = parts[0]
    kernels = rep.socle_kernels()
    p = rep.p
    for v in rep.Q.vertices:
        if step[v] > len(kernels[v]):
            return 0
    total = 0
    per_vertex_choices = []
    for v in rep.Q.vertices:
        m = len(kernels[v])
        choices_v = []
        for rmat in _rref_matrices(step[v], m, p):
            # rows of rmat give coordinates in the kernel basis
            vecs = [
                [sum(row[a] * kernels[v][a][i] for a in range(m)) % p
                 for i in range(rep.dims[v])]
                for row in rmat
            ]
            choices_v.append(vecs)
        per_vertex_choices.append(choices_v)
    for graded_choice in itertools.product(*per_vertex_choices):
        sub = rep.quotient(list(graded_choice))
        total += _count_flags(sub, parts[1:])
    return total


def count_points(Q: Quiver, M: Multisegment, comp: Composition, q: int) -> int:
    """Number of strictly lowering flags of type comp in M over F_q.

    Independent of the paving recursion: the representation is materialized
    as shift matrices, the first flag step is enumerated as an actual graded
    subspace of the kernel of the arrow action via reduced echelon forms,
    and the count proceeds on the matrix quotient.
    """
    if not is_prime(q):
        raise ValueError(f"{q} is not prime")
    _check_target(Q, M, comp)
    rep = _MatRep.from_multisegment(Q, M, q)
    return _count_flags(rep, comp.parts)
