"""Quiver shapes, dimension vectors and compositions.

Two families of quivers are supported: the linear quiver $A_n$ with arrows
$i \\to i+1$ for $0 \\le i < n-1$, and the cyclic quiver on $n$ vertices with
arrows $i \\to i+1 \\bmod n$ (for $n = 1$ this is a single loop).  Vertices
are 0-indexed.  A composition of a dimension vector $d$ is an ordered list
of nonzero dimension vectors summing to $d$; it records the type of a flag
of graded subspaces.  A composition is complete when every part is a unit
vector, in which case it is just a word in the vertex alphabet.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import factorial


@dataclass(frozen=True)
class Quiver:
    kind: str  # "linear" or "cyclic"
    n: int

    def __post_init__(self) -> None:
        if self.kind not in ("linear", "cyclic"):
            raise ValueError(f"unknown quiver kind {self.kind!r}")
        if self.n < 1:
            raise ValueError("quiver needs at least one vertex")

    @property
    def vertices(self) -> range:
        return range(self.n)

    @property
    def cyclic(self) -> bool:
        return self.kind == "cyclic"

    def check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise ValueError(f"vertex {v} out of range for {self}")

    def arrow_count(self, v: int, w: int) -> int:
        """Number of arrows v -> w."""
        self.check_vertex(v)
        self.check_vertex(w)
        if self.cyclic:
            return 1 if (v + 1) % self.n == w else 0
        return 1 if w == v + 1 else 0

    def successor(self, v: int) -> int | None:
        """Target of the unique arrow out of v, or None if there is none."""
        self.check_vertex(v)
        if self.cyclic:
            return (v + 1) % self.n
        return v + 1 if v + 1 < self.n else None

    def predecessor_vertex(self, v: int) -> int:
        """Vertex w with an arrow w -> v; for linear quivers may be -1 (absent)."""
        self.check_vertex(v)
        if self.cyclic:
            return (v - 1) % self.n
        return v - 1

    def arrows(self) -> list[tuple[int, int]]:
        """All arrows as (source, target) pairs."""
        if self.cyclic:
            return [(v, (v + 1) % self.n) for v in range(self.n)]
        return [(v, v + 1) for v in range(self.n - 1)]

    def __str__(self) -> str:
        return f"A{self.n}" if self.kind == "linear" else f"cyclic:{self.n}"


def parse_quiver(spec: str) -> Quiver:
    """Parse "A<n>" (linear) or "cyclic:<n>"."""
    spec = spec.strip()
    if spec.startswith("cyclic:"):
        return Quiver("cyclic", int(spec[len("cyclic:"):]))
    if spec.startswith("A") and spec[1:].isdigit():
        return Quiver("linear", int(spec[1:]))
    raise ValueError(f"cannot parse quiver spec {spec!r}")


class DimVector(tuple):
    """Vertex-indexed tuple of nonnegative integers."""

    def __new__(cls, entries) -> "DimVector":
        entries = tuple(int(e) for e in entries)
        if any(e < 0 for e in entries):
            raise ValueError("dimension vector entries must be nonnegative")
        return super().__new__(cls, entries)

    @property
    def total(self) -> int:
        return sum(self)

    def __add__(self, other) -> "DimVector":
        return DimVector(a + b for a, b in zip(self, other, strict=True))

    def __sub__(self, other) -> "DimVector":
        return DimVector(a - b for a, b in zip(self, other, strict=True))

    def is_zero(self) -> bool:
        return all(e == 0 for e in self)

    def __str__(self) -> str:
        return ",".join(str(e) for e in self)


def unit_vector(n: int, v: int) -> DimVector:
    return DimVector(1 if i == v else 0 for i in range(n))


def parse_dimvector(s: str) -> DimVector:
    return DimVector(int(t) for t in s.strip().split(","))


@dataclass(frozen=True)
class Composition:
    """Ordered list of nonzero dimension vectors; a flag type."""

    parts: tuple[DimVector, ...]

    def __post_init__(self) -> None:
        for p in self.parts:
            if p.is_zero():
                raise ValueError("composition parts must be nonzero")
        n = {len(p) for p in self.parts}
        if len(n) > 1:
            raise ValueError("composition parts live over different vertex sets")

    @property
    def target(self) -> DimVector:
        if not self.parts:
            return DimVector(())
        total = self.parts[0]
        for p in self.parts[1:]:
            total = total + p
        return total

    @property
    def complete(self) -> bool:
        return all(p.total == 1 for p in self.parts)

    def word(self) -> tuple[int, ...]:
        """Vertex word of a complete composition."""
        if not self.complete:
            raise ValueError("only complete compositions have a word form")
        return tuple(p.index(1) for p in self.parts)

    @staticmethod
    def from_word(word, n: int) -> "Composition":
        return Composition(tuple(unit_vector(n, v) for v in word))

    def __str__(self) -> str:
        return ";".join(str(p) for p in self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __getitem__(self, k):
        return self.parts[k]


def parse_composition(s: str, n: int) -> Composition:
    """Parse the semicolon form "1,0;0,1"; each part must have n entries."""
    s = s.strip()
    if not s:
        return Composition(())
    parts = []
    for chunk in s.split(";"):
        p = parse_dimvector(chunk)
        if len(p) != n:
            raise ValueError(f"part {chunk!r} has {len(p)} entries, expected {n}")
        parts.append(p)
    return Composition(tuple(parts))


def parse_word(s: str) -> tuple[int, ...]:
    s = s.strip()
    if not s:
        return ()
    return tuple(int(t) for t in s.split(","))


def cartan(Q: Quiver, v: int, w: int) -> int:
    """Symmetrized Cartan pairing of the underlying graph.

    2 on the diagonal (by convention also for the loop vertex), and minus
    the number of arrows between v and w in either direction off it.
    """
    Q.check_vertex(v)
    Q.check_vertex(w)
    if v == w:
        return 2
    return -(Q.arrow_count(v, w) + Q.arrow_count(w, v))


def enumerate_complete_comps(Q: Quiver, d: DimVector) -> list[Composition]:
    """All words with content d, lexicographically ordered.

    >>> Q = Quiver("linear", 2)
    >>> [c.word() for c in enumerate_complete_comps(Q, DimVector((1, 1)))]
    [(0, 1), (1, 0)]
    """
    if len(d) != Q.n:
        raise ValueError("dimension vector does not match the quiver")
    letters = [v for v in Q.vertices for _ in range(d[v])]
    words = sorted(set(itertools.permutations(letters)))
    return [Composition.from_word(w, Q.n) for w in words]


def multinomial(d: DimVector) -> int:
    out = factorial(d.total)
    for e in d:
        out //= factorial(e)
    return out


def enumerate_compositions(d: DimVector) -> list[Composition]:
    """All compositions of d (ordered lists of nonzero subvectors), in
    lexicographic order on the part sequences."""
    n = len(d)

    def subvectors(rem: DimVector):
        ranges = [range(e + 1) for e in rem]
        for entries in itertools.product(*ranges):
            v = DimVector(entries)
            if not v.is_zero():
                yield v

    def rec(rem: DimVector):
        if rem.is_zero():
            yield ()
            return
        for first in subvectors(rem):
            for rest in rec(rem - first):
                yield (first,) + rest

    return [Composition(parts) for parts in sorted(rec(d))]


def dim_flag(comp: Composition) -> int:
    """Dimension of the product of partial flag varieties of type comp."""
    parts = comp.parts
    total = 0
    for a in range(len(parts)):
        for b in range(a + 1, len(parts)):
            total += sum(x * y for x, y in zip(parts[a], parts[b]))
    return total


def dim_qvariety(Q: Quiver, comp: Composition) -> int:
    """dim_flag plus the rank of the bundle of strictly flag-lowering
    representations: an arrow block from part a to part b is allowed only
    when b < a (the flag step strictly drops)."""
    parts = comp.parts
    extra = 0
    for (s, t) in Q.arrows():
        for a in range(len(parts)):
            for b in range(a):
                extra += parts[b][t] * parts[a][s]
    return dim_flag(comp) + extra
