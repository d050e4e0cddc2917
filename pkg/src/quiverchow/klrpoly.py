"""Polynomial realizations of the convolution algebras.

Two concrete algebras act here.  The quiver Hecke algebra on a dimension
vector d is generated by idempotents e(i) indexed by words of content d,
polynomial generators x_1..x_n, and crossings psi_1..psi_{n-1}; it acts
faithfully on word-labeled polynomials: e(i) projects, x_k multiplies, and
psi_r either applies the divided difference (equal adjacent labels) or swaps
the labels, permutes the variables, and multiplies by one linear factor per
arrow from the left label to the right one.  `relation_suite` checks the
defining relations of this presentation on seeded random inputs; it is the
normative gate for the sign conventions.

The second algebra is the smash product of a polynomial ring with the
symmetric group, S # Q[S_n], with multiplication (f.w)(g.v) = f w(g) . wv;
its degree-slice centralizer dimensions reproduce partition counts.

All arithmetic is exact (ints and Fractions); nothing here floats.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction

from .linalg import rank_int
from .quiver import DimVector, Quiver, cartan


def _norm(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return int(c)
    return c


# ---------------------------------------------------------------------------
# exact multivariate polynomials


class Poly:
    """Polynomial in x_1..x_n: dict from exponent tuples to coefficients."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms=None):
        self.n = n
        self.terms = {}
        if terms:
            for e, c in terms.items():
                if c != 0:
                    self.terms[e] = _norm(c)

    @staticmethod
    def zero(n: int) -> "Poly":
        return Poly(n)

    @staticmethod
    def constant(n: int, c) -> "Poly":
        return Poly(n, {(0,) * n: c})

    @staticmethod
    def one(n: int) -> "Poly":
        return Poly.constant(n, 1)

    @staticmethod
    def x(n: int, k: int) -> "Poly":
        """The variable x_k, 1-based."""
        if not 1 <= k <= n:
            raise ValueError(f"x_{k} out of range for {n} variables")
        e = tuple(1 if i == k - 1 else 0 for i in range(n))
        return Poly(n, {e: 1})

    @staticmethod
    def monomial(n: int, exps, coeff=1) -> "Poly":
        return Poly(n, {tuple(exps): coeff})

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        return isinstance(other, Poly) and self.n == other.n and self.terms == other.terms

    def __hash__(self):
        return hash((self.n, frozenset(self.terms.items())))

    def add(self, other: "Poly") -> "Poly":
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return Poly(self.n, out)

    def neg(self) -> "Poly":
        return Poly(self.n, {e: -c for e, c in self.terms.items()})

    def sub(self, other: "Poly") -> "Poly":
        return self.add(other.neg())

    def scale(self, factor) -> "Poly":
        return Poly(self.n, {e: c * factor for e, c in self.terms.items()})

    def mul(self, other: "Poly") -> "Poly":
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return Poly(self.n, out)

    def pow(self, k: int) -> "Poly":
        out = Poly.one(self.n)
        for _ in range(k):
            out = out.mul(self)
        return out

    def permute(self, perm: tuple[int, ...]) -> "Poly":
        """Variable permutation: x_k goes to x_{perm[k]+1} (perm 0-based)."""
        out: dict = {}
        for e, c in self.terms.items():
            b = [0] * self.n
            for k, a in enumerate(e):
                b[perm[k]] = a
            out[tuple(b)] = out.get(tuple(b), 0) + c
        return Poly(self.n, out)

    def swap(self, a: int, b: int) -> "Poly":
        """Transposition of variables at 0-based positions a, b."""
        perm = list(range(self.n))
        perm[a], perm[b] = perm[b], perm[a]
        return self.permute(tuple(perm))

    def divided_difference(self, a: int, b: int) -> "Poly":
        """(f - t f) / (x_{a+1} - x_{b+1}) for the transposition t of the
        0-based variable positions a and b; exact, no division happens.

        On a monomial with exponents (p, q) at (a, b) the quotient is a
        signed sum of p+q-1-degree monomials interpolating between them.
        """
        out: dict = {}
        for e, c in self.terms.items():
            p, q = e[a], e[b]
            if p == q:
                continue
            sign = 1 if p > q else -1
            lo, hi = min(p, q), max(p, q)
            for t in range(hi - lo):
                ne = list(e)
                ne[a] = lo + t
                ne[b] = hi - 1 - t
                key = tuple(ne)
                out[key] = out.get(key, 0) + sign * c
        return Poly(self.n, out)

    def total_degrees(self) -> set[int]:
        return {sum(e) for e in self.terms}

    def degree(self) -> int:
        """Maximal total degree; -1 for the zero polynomial."""
        return max((sum(e) for e in self.terms), default=-1)

    def homogeneous_part(self, deg: int) -> "Poly":
        return Poly(self.n, {e: c for e, c in self.terms.items() if sum(e) == deg})

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        chunks = []
        for e, c in sorted(self.terms.items()):
            factors = []
            for k, a in enumerate(e):
                if a == 1:
                    factors.append(f"x{k + 1}")
                elif a > 1:
                    factors.append(f"x{k + 1}^{a}")
            if not factors:
                chunks.append(str(c))
            elif c == 1:
                chunks.append("*".join(factors))
            elif c == -1:
                chunks.append("-" + "*".join(factors))
            else:
                chunks.append(f"{c}*" + "*".join(factors))
        return " + ".join(chunks).replace("+ -", "- ")

    __repr__ = __str__


# ---------------------------------------------------------------------------
# words and labeled polynomials


def content_words(Q: Quiver, d: DimVector) -> list[tuple[int, ...]]:
    letters = [v for v in Q.vertices for _ in range(d[v])]
    return sorted(set(itertools.permutations(letters)))


def word_offset(Q: Quiver, word: tuple[int, ...]) -> int:
    """Grading offset of the word component: one unit per ordered pair of
    positions k < l with an arrow from the k-th label to the l-th.  With
    this offset the crossing action is homogeneous of degree
    -cartan(i_r, i_{r+1}) even though the arrow factor is asymmetric."""
    n = len(word)
    total = 0
    for k in range(n):
        for l in range(k + 1, n):
            total += Q.arrow_count(word[k], word[l])
    return total


class LabeledPoly:
    """Finite map from words (all of one content) to polynomials."""

    __slots__ = ("n", "components")

    def __init__(self, n: int, components=None):
        self.n = n
        self.components = {}
        if components:
            for w, f in components.items():
                if not f.is_zero():
                    self.components[w] = f

    @staticmethod
    def zero(n: int) -> "LabeledPoly":
        return LabeledPoly(n)

    @staticmethod
    def from_poly(word: tuple[int, ...], f: Poly) -> "LabeledPoly":
        return LabeledPoly(f.n, {word: f})

    def is_zero(self) -> bool:
        return not self.components

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, LabeledPoly)
            and self.n == other.n
            and self.components == other.components
        )

    def __hash__(self):
        return hash((self.n, frozenset(self.components.items())))

    def add(self, other: "LabeledPoly") -> "LabeledPoly":
        out = dict(self.components)
        for w, f in other.components.items():
            out[w] = out[w].add(f) if w in out else f
        return LabeledPoly(self.n, out)

    def sub(self, other: "LabeledPoly") -> "LabeledPoly":
        return self.add(other.scale(-1))

    def scale(self, factor) -> "LabeledPoly":
        return LabeledPoly(
            self.n, {w: f.scale(factor) for w, f in self.components.items()}
        )

    def offset_degrees(self, Q: Quiver) -> set[int]:
        """All graded degrees present: twice the polynomial degree plus the
        word offset, over every monomial of every component."""
        out: set[int] = set()
        for w, f in self.components.items():
            c = word_offset(Q, w)
            out.update(2 * t + c for t in f.total_degrees())
        return out

    def __str__(self) -> str:
        if not self.components:
            return "0"
        return " ; ".join(
            f"[{','.join(map(str, w))}] {f}" for w, f in sorted(self.components.items())
        )

    __repr__ = __str__


# ---------------------------------------------------------------------------
# the quiver Hecke action


def _apply_atom(Q: Quiver, atom: tuple, m: LabeledPoly) -> LabeledPoly:
    kind = atom[0]
    n = m.n
    if kind == "e":
        word = atom[1]
        f = m.components.get(word)
        return LabeledPoly(n, {word: f}) if f is not None else LabeledPoly(n)
    if kind == "x":
        xk = Poly.x(n, atom[1])
        return LabeledPoly(n, {w: f.mul(xk) for w, f in m.components.items()})
    if kind == "psi":
        r = atom[1]  # crossing of positions r, r+1 (1-based)
        out = LabeledPoly(n)
        for w, f in m.components.items():
            v, u = w[r - 1], w[r]
            if v == u:
                piece = LabeledPoly(n, {w: f.divided_difference(r - 1, r)})
            else:
                sw = list(w)
                sw[r - 1], sw[r] = sw[r], sw[r - 1]
                g = f.swap(r - 1, r)
                arrows = Q.arrow_count(v, u)
                if arrows:
                    factor = Poly.x(n, r).sub(Poly.x(n, r + 1)).pow(arrows)
                    g = g.mul(factor)
                piece = LabeledPoly(n, {tuple(sw): g})
            out = out.add(piece)
        return out
    raise ValueError(f"unknown atom {atom!r}")


def atom_degree(Q: Quiver, atom: tuple, word: tuple[int, ...]) -> int:
    """Declared degree of a generator applied to the given word."""
    kind = atom[0]
    if kind == "e":
        return 0
    if kind == "x":
        return 2
    r = atom[1]
    return -cartan(Q, word[r - 1], word[r])


def atom_target(atom: tuple, word: tuple[int, ...]) -> tuple[int, ...] | None:
    """Word after applying the atom, or None when an idempotent kills it."""
    kind = atom[0]
    if kind == "e":
        return word if atom[1] == word else None
    if kind == "x":
        return word
    r = atom[1]
    if word[r - 1] == word[r]:
        return word
    sw = list(word)
    sw[r - 1], sw[r] = sw[r], sw[r - 1]
    return tuple(sw)


@dataclass(frozen=True)
class KLROperator:
    """Formal sum of generator compositions, evaluated by action.

    Terms are (coefficient, atoms) with atoms written left to right in
    operator order: the rightmost atom acts first.  Elements are never
    normal-formed; equality questions go through the action.
    """

    Q: Quiver
    n: int
    terms: tuple[tuple[object, tuple[tuple, ...]], ...]

    def __post_init__(self) -> None:
        merged: dict[tuple, object] = {}
        for c, atoms in self.terms:
            merged[atoms] = merged.get(atoms, 0) + c
        cleaned = tuple(
            sorted((atoms, _norm(c)) for atoms, c in merged.items() if c != 0)
        )
        object.__setattr__(
            self, "terms", tuple((c, atoms) for atoms, c in cleaned)
        )

    # constructors

    @staticmethod
    def zero(Q: Quiver, n: int) -> "KLROperator":
        return KLROperator(Q, n, ())

    @staticmethod
    def one(Q: Quiver, n: int) -> "KLROperator":
        return KLROperator(Q, n, ((1, ()),))

    @staticmethod
    def e(Q: Quiver, n: int, word) -> "KLROperator":
        return KLROperator(Q, n, ((1, (("e", tuple(word)),)),))

    @staticmethod
    def x(Q: Quiver, n: int, k: int) -> "KLROperator":
        return KLROperator(Q, n, ((1, (("x", k),)),))

    @staticmethod
    def psi(Q: Quiver, n: int, r: int) -> "KLROperator":
        return KLROperator(Q, n, ((1, (("psi", r),)),))

    @staticmethod
    def from_poly(Q: Quiver, n: int, f: Poly) -> "KLROperator":
        """Multiplication by a polynomial, as a sum of x-monomial atoms."""
        terms = []
        for e, c in f.terms.items():
            atoms = tuple(("x", k + 1) for k, a in enumerate(e) for _ in range(a))
            terms.append((c, atoms))
        return KLROperator(Q, n, tuple(terms))

    # arithmetic

    def __add__(self, other: "KLROperator") -> "KLROperator":
        return KLROperator(self.Q, self.n, self.terms + other.terms)

    def __sub__(self, other: "KLROperator") -> "KLROperator":
        return self + other.scale(-1)

    def scale(self, factor) -> "KLROperator":
        return KLROperator(
            self.Q, self.n, tuple((c * factor, atoms) for c, atoms in self.terms)
        )

    def __neg__(self) -> "KLROperator":
        return self.scale(-1)

    def __mul__(self, other: "KLROperator") -> "KLROperator":
        out = []
        for c1, a1 in self.terms:
            for c2, a2 in other.terms:
                out.append((c1 * c2, a1 + a2))
        return KLROperator(self.Q, self.n, tuple(out))

    def apply(self, m: LabeledPoly) -> LabeledPoly:
        total = LabeledPoly.zero(self.n)
        for c, atoms in self.terms:
            cur = m
            for atom in reversed(atoms):
                if cur.is_zero():
                    break
                cur = _apply_atom(self.Q, atom, cur)
            total = total.add(cur.scale(c))
        return total

    # block structure (used by complexes)

    def term_block(
        self, atoms: tuple, source: tuple[int, ...]
    ) -> tuple[tuple[int, ...], int] | None:
        """Target word and degree of one atom string on a source word, or
        None when an idempotent mismatch kills the term."""
        cur = source
        deg = 0
        for atom in reversed(atoms):
            nxt = atom_target(atom, cur)
            if nxt is None:
                return None
            deg += atom_degree(self.Q, atom, cur)
            cur = nxt
        return cur, deg

    def blocks(
        self, words: list[tuple[int, ...]]
    ) -> dict[tuple[tuple[int, ...], tuple[int, ...], int], "KLROperator"]:
        """Split into components supported on (source word, target word,
        degree); purely structural, zero components are not pruned."""
        out: dict = {}
        for c, atoms in self.terms:
            for src in words:
                tb = self.term_block(atoms, src)
                if tb is None:
                    continue
                tgt, deg = tb
                key = (src, tgt, deg)
                extra = (c, (("e", tgt),) + atoms + (("e", src),))
                if key in out:
                    out[key] = out[key] + KLROperator(self.Q, self.n, (extra,))
                else:
                    out[key] = KLROperator(self.Q, self.n, (extra,))
        return out

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        chunks = []
        for c, atoms in self.terms:
            names = []
            for atom in atoms:
                if atom[0] == "e":
                    names.append("e(" + ",".join(map(str, atom[1])) + ")")
                elif atom[0] == "x":
                    names.append(f"x{atom[1]}")
                else:
                    names.append(f"psi{atom[1]}")
            body = "*".join(names) if names else "1"
            if c == 1:
                chunks.append(body)
            elif c == -1:
                chunks.append("-" + body)
            else:
                chunks.append(f"{c}*{body}")
        return " + ".join(chunks).replace("+ -", "- ")

    __repr__ = __str__


def act(op: KLROperator, m: LabeledPoly) -> LabeledPoly:
    """Evaluate an operator on a labeled polynomial."""
    return op.apply(m)


def q_factor(Q: Quiver, n: int, v: int, u: int, r: int) -> Poly:
    """The polynomial Q_{vu}(x_r, x_{r+1}) appearing in the square of a
    crossing: one factor (x_{r+1} - x_r) per arrow v -> u and one factor
    (x_r - x_{r+1}) per arrow u -> v; zero for equal labels."""
    if v == u:
        return Poly.zero(n)
    fwd = Q.arrow_count(v, u)
    bwd = Q.arrow_count(u, v)
    xr = Poly.x(n, r)
    xr1 = Poly.x(n, r + 1)
    return xr1.sub(xr).pow(fwd).mul(xr.sub(xr1).pow(bwd))


def braid_correction(Q: Quiver, n: int, word: tuple[int, ...], r: int) -> Poly:
    """Right-hand side of the braid relation at positions r, r+1, r+2:
    nonzero only when the outer labels agree, in which case it is the
    divided difference of Q_{i_r, i_{r+1}}(x_r, x_{r+1}) with respect to
    the outer variable pair."""
    if word[r - 1] != word[r + 1]:
        return Poly.zero(n)
    q = q_factor(Q, n, word[r - 1], word[r], r)
    return q.divided_difference(r - 1, r + 1)


# ---------------------------------------------------------------------------
# relation suite


@dataclass(frozen=True)
class RelationVerdict:
    name: str
    trials: int
    failures: int
    witness: str | None

    @property
    def ok(self) -> bool:
        return self.failures == 0


@dataclass(frozen=True)
class SuiteReport:
    quiver: str
    dim: str
    seed: int
    verdicts: tuple[RelationVerdict, ...]

    @property
    def ok(self) -> bool:
        return all(v.ok for v in self.verdicts)


def _rand_poly(rng: random.Random, n: int, max_terms: int = 2) -> Poly:
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        exps = [rng.randint(0, 2) for _ in range(n)]
        while sum(exps) > 6:
            exps[rng.randrange(n)] = 0
        coeff = rng.choice([-3, -2, -1, 1, 2, 3])
        key = tuple(exps)
        terms[key] = terms.get(key, 0) + coeff
    return Poly(n, terms)


def _rand_labeled(rng: random.Random, n: int, words) -> LabeledPoly:
    count = min(len(words), rng.randint(1, 2))
    chosen = rng.sample(words, count)
    return LabeledPoly(n, {w: _rand_poly(rng, n) for w in chosen})


def relation_suite(Q: Quiver, d: DimVector, trials: int = 100, seed: int = 0) -> SuiteReport:
    """Checks the defining relations of the labeled-polynomial action on
    seeded random inputs; also checks degree homogeneity of every
    generator.  Zero failures is the correctness gate for the crossing
    conventions."""
    n = d.total
    words = content_words(Q, d)
    E = lambda w: KLROperator.e(Q, n, w)
    X = lambda k: KLROperator.x(Q, n, k)
    PSI = lambda r: KLROperator.psi(Q, n, r)

    def check_equal(lhs: KLROperator, rhs: KLROperator, f: LabeledPoly) -> bool:
        return lhs.apply(f) == rhs.apply(f)

    families: list[tuple[str, object]] = []

    def fam(name):
        def wrap(fn):
            families.append((name, fn))
            return fn
        return wrap

    @fam("idempotents")
    def _idem(rng: random.Random) -> str | None:
        f = _rand_labeled(rng, n, words)
        i = rng.choice(words)
        j = rng.choice(words)
        lhs = (E(i) * E(j)).apply(f)
        rhs = E(i).apply(f) if i == j else LabeledPoly.zero(n)
        if lhs != rhs:
            return f"e({i})e({j}) on {f}"
        total = LabeledPoly.zero(n)
        for w in words:
            total = total.add(E(w).apply(f))
        if total != f:
            return f"sum of idempotents on {f}"
        return None

    @fam("x-commute")
    def _xcomm(rng: random.Random) -> str | None:
        f = _rand_labeled(rng, n, words)
        k = rng.randint(1, n)
        l = rng.randint(1, n)
        if not check_equal(X(k) * X(l), X(l) * X(k), f):
            return f"x{k} x{l} on {f}"
        return None

    if n >= 2:

        @fam("label-exchange")
        def _exchange(rng: random.Random) -> str | None:
            f = _rand_labeled(rng, n, words)
            r = rng.randint(1, n - 1)
            i = rng.choice(words)
            si = list(i)
            si[r - 1], si[r] = si[r], si[r - 1]
            if not check_equal(PSI(r) * E(i), E(tuple(si)) * PSI(r), f):
                return f"psi{r} e({i}) exchange on {f}"
            return None

        @fam("mixed-left")
        def _mixed_left(rng: random.Random) -> str | None:
            f = _rand_labeled(rng, n, words)
            r = rng.randint(1, n - 1)
            i = rng.choice(words)
            delta = 1 if i[r - 1] == i[r] else 0
            lhs = PSI(r) * X(r) * E(i) - X(r + 1) * PSI(r) * E(i)
            rhs = E(i).scale(delta)
            if not check_equal(lhs, rhs, f):
                return f"(psi{r} x{r} - x{r + 1} psi{r}) e({i}) on {f}"
            return None

        @fam("mixed-right")
        def _mixed_right(rng: random.Random) -> str | None:
            f = _rand_labeled(rng, n, words)
            r = rng.randint(1, n - 1)
            i = rng.choice(words)
            delta = 1 if i[r - 1] == i[r] else 0
            lhs = X(r) * PSI(r) * E(i) - PSI(r) * X(r + 1) * E(i)
            rhs = E(i).scale(delta)
            if not check_equal(lhs, rhs, f):
                return f"(x{r} psi{r} - psi{r} x{r + 1}) e({i}) on {f}"
            return None

        @fam("psi-square")
        def _square(rng: random.Random) -> str | None:
            f = _rand_labeled(rng, n, words)
            r = rng.randint(1, n - 1)
            i = rng.choice(words)
            q = q_factor(Q, n, i[r - 1], i[r], r)
            lhs = PSI(r) * PSI(r) * E(i)
            rhs = KLROperator.from_poly(Q, n, q) * E(i)
            if not check_equal(lhs, rhs, f):
                return f"psi{r}^2 e({i}) on {f}"
            return None

    if n >= 3:

        @fam("x-distant")
        def _xdist(rng: random.Random) -> str | None:
            f = _rand_labeled(rng, n, words)
            r = rng.randint(1, n - 1)
            others = [s for s in range(1, n + 1) if s not in (r, r + 1)]
            s = rng.choice(others)
            if not check_equal(PSI(r) * X(s), X(s) * PSI(r), f):
                return f"psi{r} x{s} on {f}"
            return None

        @fam("braid")
        def _braid(rng: random.Random) -> str | None:
            f = _rand_labeled(rng, n, words)
            r = rng.randint(1, n - 2)
            i = rng.choice(words)
            lhs = (
                PSI(r) * PSI(r + 1) * PSI(r) * E(i)
                - PSI(r + 1) * PSI(r) * PSI(r + 1) * E(i)
            )
            rhs = KLROperator.from_poly(Q, n, braid_correction(Q, n, i, r)) * E(i)
            if not check_equal(lhs, rhs, f):
                return f"braid at {r} on e({i}), {f}"
            return None

    if n >= 4:

        @fam("psi-distant")
        def _psidist(rng: random.Random) -> str | None:
            f = _rand_labeled(rng, n, words)
            r = rng.randint(1, n - 3)
            s = rng.randint(r + 2, n - 1)
            if not check_equal(PSI(r) * PSI(s), PSI(s) * PSI(r), f):
                return f"psi{r} psi{s} on {f}"
            return None

    @fam("degree-homogeneity")
    def _homog(rng: random.Random) -> str | None:
        if n == 0:
            return None
        i = rng.choice(words)
        exps = tuple(rng.randint(0, 2) for _ in range(n))
        f = LabeledPoly.from_poly(i, Poly.monomial(n, exps, rng.choice([1, 2, -1])))
        in_deg = 2 * sum(exps) + word_offset(Q, i)
        gens: list[tuple] = [("e", rng.choice(words)), ("x", rng.randint(1, n))]
        if n >= 2:
            gens.append(("psi", rng.randint(1, n - 1)))
        atom = rng.choice(gens)
        shift = atom_degree(Q, atom, i)
        out = _apply_atom(Q, atom, f)
        degs = out.offset_degrees(Q)
        if degs and degs != {in_deg + shift}:
            return f"{atom} on {f}: degrees {sorted(degs)}, expected {in_deg + shift}"
        return None

    verdicts = []
    for name, fn in families:
        failures = 0
        witness = None
        for t in range(trials):
            rng = random.Random(f"{seed}:{name}:{t}")
            w = fn(rng)
            if w is not None:
                failures += 1
                if witness is None:
                    witness = f"trial {t}: {w}"
        verdicts.append(RelationVerdict(name, trials, failures, witness))
    return SuiteReport(str(Q), str(d), seed, tuple(verdicts))


# ---------------------------------------------------------------------------
# the smash product S # Q[W]


def perm_compose(w: tuple[int, ...], v: tuple[int, ...]) -> tuple[int, ...]:
    """(w v)(k) = w(v(k))."""
    return tuple(w[v[k]] for k in range(len(v)))

def perm_inverse(w: tuple[int, ...]) -> tuple[int, ...]:
    out = [0] * len(w)
    for k, img in enumerate(w):
        out[img] = k
    return tuple(out)


def identity_perm(n: int) -> tuple[int, ...]:
    return tuple(range(n))


def adjacent_transposition(n: int, r: int) -> tuple[int, ...]:
    """s_r swapping 1-based positions r, r+1."""
    p = list(range(n))
    p[r - 1], p[r] = p[r], p[r - 1]
    return tuple(p)


def perm_to_word(w: tuple[int, ...]) -> tuple[int, ...]:
    """A reduced word (list of 1-based adjacent transposition indices) for
    w, produced by bubble sort; deterministic."""
    n = len(w)
    cur = list(w)
    word = []
    changed = True
    while changed:
        changed = False
        for r in range(n - 1):
            if cur[r] > cur[r + 1]:
                cur[r], cur[r + 1] = cur[r + 1], cur[r]
                word.append(r + 1)
                changed = True
    # the collected swaps sort w to the identity: w = s_{r1} ... s_{rk}
    # applied in reverse order
    return tuple(reversed(word))


def inversions(w: tuple[int, ...]) -> int:
    n = len(w)
    return sum(1 for k in range(n) for l in range(k + 1, n) if w[k] > w[l])


class SmashElement:
    """Element of S # Q[S_n]: finite map permutation -> polynomial."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms=None):
        self.n = n
        self.terms = {}
        if terms:
            for w, f in terms.items():
                if not f.is_zero():
                    self.terms[w] = f

    @staticmethod
    def zero(n: int) -> "SmashElement":
        return SmashElement(n)

    @staticmethod
    def unit(n: int) -> "SmashElement":
        return SmashElement(n, {identity_perm(n): Poly.one(n)})

    @staticmethod
    def scalar(n: int, c) -> "SmashElement":
        return SmashElement(n, {identity_perm(n): Poly.constant(n, c)})

    @staticmethod
    def x(n: int, k: int) -> "SmashElement":
        return SmashElement(n, {identity_perm(n): Poly.x(n, k)})

    @staticmethod
    def s(n: int, r: int) -> "SmashElement":
        return SmashElement(n, {adjacent_transposition(n, r): Poly.one(n)})

    @staticmethod
    def from_poly(f: Poly) -> "SmashElement":
        return SmashElement(f.n, {identity_perm(f.n): f})

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, SmashElement)
            and self.n == other.n
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.n, frozenset(self.terms.items())))

    def add(self, other: "SmashElement") -> "SmashElement":
        out = dict(self.terms)
        for w, f in other.terms.items():
            out[w] = out[w].add(f) if w in out else f
        return SmashElement(self.n, out)

    def sub(self, other: "SmashElement") -> "SmashElement":
        return self.add(other.scale(-1))

    def scale(self, factor) -> "SmashElement":
        return SmashElement(self.n, {w: f.scale(factor) for w, f in self.terms.items()})

    def degrees(self) -> set[int]:
        out: set[int] = set()
        for f in self.terms.values():
            out.update(f.total_degrees())
        return out

    def homogeneous_part(self, deg: int) -> "SmashElement":
        return SmashElement(
            self.n, {w: f.homogeneous_part(deg) for w, f in self.terms.items()}
        )

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        chunks = []
        for w, f in sorted(self.terms.items()):
            word = perm_to_word(w)
            wname = "*".join(f"s{r}" for r in word) if word else "e"
            chunks.append(f"({f})*{wname}")
        return " + ".join(chunks)

    __repr__ = __str__


def smash_mul(a: SmashElement, b: SmashElement) -> SmashElement:
    """(f.w)(g.v) = f w(g) . wv, extended bilinearly."""
    if a.n != b.n:
        raise ValueError("size mismatch")
    out = SmashElement.zero(a.n)
    for w, f in a.terms.items():
        for v, g in b.terms.items():
            term = SmashElement(a.n, {perm_compose(w, v): f.mul(g.permute(w))})
            out = out.add(term)
    return out


def monomials_of_degree(n: int, deg: int) -> list[tuple[int, ...]]:
    if n == 1:
        return [(deg,)]
    out = []
    for first in range(deg + 1):
        for rest in monomials_of_degree(n - 1, deg - first):
            out.append((first,) + rest)
    return out


def smash_center_dims(n: int, maxdeg: int) -> list[int]:
    """Dimension, per degree, of the elements commuting with x_1 and all
    adjacent transpositions, found by an exact nullity computation on each
    degree slice.  Equals the partition counts with parts of size <= n."""
    perms = list(itertools.permutations(range(n)))
    gens = [adjacent_transposition(n, r) for r in range(1, n)]
    dims = []
    for deg in range(maxdeg + 1):
        monos = monomials_of_degree(n, deg)
        basis = [(m, w) for m in monos for w in perms]
        col = {b: k for k, b in enumerate(basis)}
        rows: dict[tuple, list[int]] = {}

        def row_for(key) -> list[int]:
            if key not in rows:
                rows[key] = [0] * len(basis)
            return rows[key]

        for (mono, w) in basis:
            k = col[(mono, w)]
            # commutator with x_1: (mono.w) x_1 = mono * x_{w(0)+1} . w
            # while x_1 (mono.w) = mono * x_1 . w
            if w[0] != 0:
                up = list(mono)
                up[w[0]] += 1
                row_for(("x", tuple(up), w))[k] += 1
                down = list(mono)
                down[0] += 1
                row_for(("x", tuple(down), w))[k] -= 1
            # commutator with each s_r: (mono.w) s_r = mono . (w s_r)
            # while s_r (mono.w) = s_r(mono) . (s_r w)
            for g_idx, t in enumerate(gens):
                right = perm_compose(w, t)
                row_for(("s", g_idx, mono, right))[k] += 1
                left = perm_compose(t, w)
                smono = Poly.monomial(n, mono).permute(t)
                (sm, _c) = next(iter(smono.terms.items()))
                row_for(("s", g_idx, sm, left))[k] -= 1
        mat = [r for r in rows.values() if any(r)]
        dims.append(len(basis) - rank_int(mat, len(basis)))
    return dims
