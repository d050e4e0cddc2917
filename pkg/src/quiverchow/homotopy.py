"""Bounded complexes of graded free modules, with weight truncation.

Objects here are complexes of free graded right modules $\\bigoplus
e_iA\\langle s\\rangle$ over a locally unital graded algebra $A$, accessed
purely through an `AlgebraHandle`: element arithmetic, a zero test,
homogeneity checking, and a degree-zero invertibility test.  Three handles
ship: the nil Hecke and quiver Hecke algebras (elements act on labeled
polynomials, equality is decided on a spanning family of monomial inputs up
to a recorded degree bound) and the smash product of a polynomial ring with
a symmetric group (exact arithmetic, invertibility by a linear solve on the
group algebra's regular representation).

The operations are the desk-scale shadow of the weight-structure toolkit:
cohomological shift and internal twist, mapping cones, stupid (weight)
truncation, and Gaussian-elimination minimization.  Minimization cancels
generator pairs joined by an invertible degree-zero differential entry and
applies the Schur-complement update; it terminates, preserves the homotopy
type, and fixes minimal complexes.  The decategorified check is
`euler_symbol`, the signed generator count per (idempotent, twist).
"""

from __future__ import annotations

import itertools
import random
import re
from dataclasses import dataclass
from fractions import Fraction

from .klrpoly import (
    KLROperator,
    LabeledPoly,
    Poly,
    SmashElement,
    content_words,
    identity_perm,
    monomials_of_degree,
    perm_to_word,
    smash_mul,
    word_offset,
)
from .linalg import solve_exact
from .quiver import DimVector, Quiver, cartan, parse_dimvector, parse_quiver

MAX_EQUALITY_PERMUTATIONS = 720


# ---------------------------------------------------------------------------
# algebra handles


class AlgebraHandle:
    """Interface every complex speaks through.

    Concrete handles define: `name`, `units_per_shift` (native internal
    degree carried by one twist unit), `equality_bound` (None when equality
    is exact), `idempotents`, element arithmetic, `is_zero`,
    `is_block_homogeneous`, `block_basis`, `invert_degree_zero`, and the
    expression atoms used by the parser and renderer.
    """

    name: str
    units_per_shift: int
    equality_bound: int | None
    idempotents: tuple

    def zero(self):
        raise NotImplementedError

    def unit(self, idem):
        raise NotImplementedError

    def add(self, a, b):
        raise NotImplementedError

    def neg(self, a):
        raise NotImplementedError

    def scale(self, a, c):
        raise NotImplementedError

    def mul(self, a, b):
        raise NotImplementedError

    def is_zero(self, a) -> bool:
        raise NotImplementedError

    def equal(self, a, b) -> bool:
        return self.is_zero(self.add(a, self.neg(b)))

    def is_block_homogeneous(self, a, frm, to, degree: int) -> bool:
        """Whether a lies in e_to A e_frm, homogeneous of native degree."""
        raise NotImplementedError

    def block_basis(self, frm, to, degree: int) -> list:
        """Spanning elements of the (frm -> to) block in one native degree."""
        raise NotImplementedError

    def invert_degree_zero(self, a, frm, to):
        """Two-sided inverse of a degree-0 entry as a map e_frm A -> e_to A,
        or None when no inverse is found."""
        raise NotImplementedError

    def gen_element(self, kind: str, arg):
        raise NotImplementedError

    def render(self, a) -> str:
        return str(a)

    def render_idem(self, idem):
        raise NotImplementedError

    def parse_idem(self, obj):
        raise NotImplementedError

    def random_block_element(self, rng: random.Random, frm, to, degree: int):
        if degree < 0:
            return None
        basis = self.block_basis(frm, to, degree)
        if not basis:
            return None
        out = self.zero()
        for _ in range(rng.randint(1, 2)):
            coeff = rng.choice([-2, -1, 1, 2, 3])
            out = self.add(out, self.scale(rng.choice(basis), coeff))
        return out

    def describe(self) -> dict:
        return {
            "name": self.name,
            "units_per_shift": self.units_per_shift,
            "equality_bound": self.equality_bound,
        }


class KLRHandle(AlgebraHandle):
    """Quiver Hecke algebra of (Q, d) through its polynomial action.

    Equality of elements is decided by acting on every labeled monomial of
    polynomial degree <= equality_bound; the bound makes this a recorded
    semi-decision, never silently exceeded.
    """

    def __init__(self, Q: Quiver, d: DimVector, degree_bound: int = 6, name: str | None = None):
        if d.total < 1:
            raise ValueError("handle needs a positive total dimension")
        self.Q = Q
        self.d = d
        self.n = d.total
        self.units_per_shift = 2
        self.equality_bound = degree_bound
        self.idempotents = tuple(content_words(Q, d))
        self.name = name or f"klr:{Q}:{','.join(str(e) for e in d)}"
        self._inputs = [
            (w, exps, LabeledPoly.from_poly(w, Poly.monomial(self.n, exps)))
            for w in self.idempotents
            for deg in range(degree_bound + 1)
            for exps in monomials_of_degree(self.n, deg)
        ]
        self._basis_cache: dict = {}

    def zero(self):
        return KLROperator.zero(self.Q, self.n)

    def unit(self, idem):
        return KLROperator.e(self.Q, self.n, idem)

    def add(self, a, b):
        return a + b

    def neg(self, a):
        return -a

    def scale(self, a, c):
        return a.scale(c)

    def mul(self, a, b):
        return a * b

    def is_zero(self, a) -> bool:
        if not a.terms:
            return True
        return all(a.apply(f).is_zero() for _, _, f in self._inputs)

    def is_block_homogeneous(self, a, frm, to, degree: int) -> bool:
        if not a.terms:
            return True
        for w, exps, f in self._inputs:
            out = a.apply(f)
            if w != frm:
                if not out.is_zero():
                    return False
                continue
            if any(ow != to for ow in out.components):
                return False
            degs = out.offset_degrees(self.Q)
            want = 2 * sum(exps) + word_offset(self.Q, w) + degree
            if degs and degs != {want}:
                return False
        return True

    def _word_perms(self, frm, to):
        n = self.n
        out = []
        for w in itertools.permutations(range(n)):
            img = [None] * n
            for k in range(n):
                img[w[k]] = frm[k]
            if tuple(img) == tuple(to):
                out.append(w)
        return out

    def block_basis(self, frm, to, degree: int) -> list:
        key = (frm, to, degree)
        if key in self._basis_cache:
            return self._basis_cache[key]
        n = self.n
        basis = []
        for w in self._word_perms(frm, to):
            deg_w = 0
            for k in range(n):
                for l in range(k + 1, n):
                    if w[k] > w[l]:
                        deg_w += -cartan(self.Q, frm[k], frm[l])
            rem = degree - deg_w
            if rem < 0 or rem % 2:
                continue
            psi_atoms = tuple(("psi", r) for r in perm_to_word(w))
            for exps in monomials_of_degree(n, rem // 2):
                x_atoms = tuple(
                    ("x", k + 1) for k, e in enumerate(exps) for _ in range(e)
                )
                atoms = psi_atoms + x_atoms + (("e", tuple(frm)),)
                basis.append(KLROperator(self.Q, n, ((1, atoms),)))
        self._basis_cache[key] = basis
        return basis

    def _coords(self, m: LabeledPoly) -> dict:
        return {
            (w, exps): c
            for w, f in m.components.items()
            for exps, c in f.terms.items()
        }

    def invert_degree_zero(self, a, frm, to):
        basis = self.block_basis(to, frm, 0)
        if not basis:
            return None
        eq_src = self.unit(frm)
        eq_tgt = self.unit(to)
        col_maps: list[dict] = [dict() for _ in basis]
        rhs_map: dict = {}
        for idx, f in enumerate(self._inputs):
            inp = f[2]
            for t, b in enumerate(basis):
                for key, c in self._coords((b * a).apply(inp)).items():
                    col_maps[t][("L", idx, key)] = c
                for key, c in self._coords((a * b).apply(inp)).items():
                    col_maps[t][("R", idx, key)] = c
            for key, c in self._coords(eq_src.apply(inp)).items():
                rhs_map[("L", idx, key)] = c
            for key, c in self._coords(eq_tgt.apply(inp)).items():
                rhs_map[("R", idx, key)] = c
        keys = sorted(set().union(rhs_map, *col_maps), key=repr)
        columns = [[m.get(k, 0) for k in keys] for m in col_maps]
        rhs = [rhs_map.get(k, 0) for k in keys]
        sol = solve_exact(columns, rhs)
        if sol is None:
            return None
        inv = self.zero()
        for c, b in zip(sol, basis):
            if c:
                inv = inv + b.scale(c)
        return inv

    def gen_element(self, kind: str, arg):
        if kind == "e":
            word = tuple(arg)
            if word not in self.idempotents:
                raise ValueError(f"unknown idempotent word {word}")
            return KLROperator.e(self.Q, self.n, word)
        if kind == "x":
            return KLROperator.x(self.Q, self.n, arg)
        if kind == "psi":
            return KLROperator.psi(self.Q, self.n, arg)
        if kind == "num":
            return KLROperator.one(self.Q, self.n).scale(arg)
        raise ValueError(f"symbol {kind!r} has no meaning for this handle")

    def render_idem(self, idem):
        return list(idem)

    def parse_idem(self, obj):
        word = tuple(obj)
        if word not in self.idempotents:
            raise ValueError(f"unknown idempotent word {word}")
        return word


class SmashHandle(AlgebraHandle):
    """Smash product of the polynomial ring on n variables (degree 1 each)
    with S_n; exact arithmetic, one idempotent, unital."""

    def __init__(self, n: int, name: str | None = None):
        if n < 1:
            raise ValueError("n must be positive")
        self.n = n
        self.units_per_shift = 1
        self.equality_bound = None
        self.idempotents = ("e",)
        self.name = name or f"smash:{n}"
        self._perms = sorted(itertools.permutations(range(n)))

    def zero(self):
        return SmashElement.zero(self.n)

    def unit(self, idem):
        return SmashElement.unit(self.n)

    def add(self, a, b):
        return a.add(b)

    def neg(self, a):
        return a.scale(-1)

    def scale(self, a, c):
        return a.scale(c)

    def mul(self, a, b):
        return smash_mul(a, b)

    def is_zero(self, a) -> bool:
        return a.is_zero()

    def equal(self, a, b) -> bool:
        return a == b

    def is_block_homogeneous(self, a, frm, to, degree: int) -> bool:
        return a.degrees() <= {degree}

    def block_basis(self, frm, to, degree: int) -> list:
        if degree < 0:
            return []
        return [
            SmashElement(self.n, {w: Poly.monomial(self.n, exps)})
            for exps in monomials_of_degree(self.n, degree)
            for w in self._perms
        ]

    def invert_degree_zero(self, a, frm, to):
        coeffs: dict[tuple, object] = {}
        for w, f in a.terms.items():
            const = f.terms.get((0,) * self.n, 0)
            if f.terms and set(f.terms) != {(0,) * self.n}:
                return None
            if const:
                coeffs[w] = const
        if not coeffs:
            return None
        perms = self._perms
        index = {w: k for k, w in enumerate(perms)}
        columns = []
        for v in perms:
            col = [0] * len(perms)
            for w, c in coeffs.items():
                wk = tuple(w[v[k]] for k in range(self.n))
                col[index[wk]] += c
            columns.append(col)
        rhs = [0] * len(perms)
        rhs[index[identity_perm(self.n)]] = 1
        sol = solve_exact(columns, rhs)
        if sol is None:
            return None
        inv = SmashElement(
            self.n,
            {v: Poly.constant(self.n, c) for v, c in zip(perms, sol) if c},
        )
        if self.mul(inv, a) != self.unit("e") or self.mul(a, inv) != self.unit("e"):
            return None
        return inv

    def gen_element(self, kind: str, arg):
        if kind == "e":
            if arg is not None:
                raise ValueError("this handle has a single unnamed idempotent")
            return SmashElement.unit(self.n)
        if kind == "x":
            return SmashElement.x(self.n, arg)
        if kind == "s":
            return SmashElement.s(self.n, arg)
        if kind == "num":
            return SmashElement.scalar(self.n, arg)
        raise ValueError(f"symbol {kind!r} has no meaning for this handle")

    def render_idem(self, idem):
        return "e"

    def parse_idem(self, obj):
        if obj != "e":
            raise ValueError("this handle has a single idempotent 'e'")
        return "e"


def parse_handle(spec: str, degree_bound: int = 6) -> AlgebraHandle:
    """Parse "nilhecke:<n>", "klr:<quiver>:<dims>", or "smash:<n>"."""
    spec = spec.strip()
    if spec.startswith("nilhecke:"):
        n = int(spec.split(":", 1)[1])
        return KLRHandle(
            parse_quiver("A1"), DimVector((n,)), degree_bound, name=spec
        )
    if spec.startswith("klr:"):
        rest = spec.split(":", 1)[1]
        qspec, dims = rest.rsplit(":", 1)
        return KLRHandle(
            parse_quiver(qspec), parse_dimvector(dims), degree_bound, name=spec
        )
    if spec.startswith("smash:"):
        return SmashHandle(int(spec.split(":", 1)[1]), name=spec)
    raise ValueError(f"unknown handle spec {spec!r}")


# ---------------------------------------------------------------------------
# element expressions

_TOKEN = re.compile(
    r"\s*(?:(?P<num>\d+)|(?P<name>psi\d+|x\d+|s\d+|e)|(?P<op>[()+\-*/^,]))"
)


def _tokenize(text: str) -> list[tuple[str, object]]:
    out = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            if text[pos:].strip():
                raise ValueError(f"bad expression near {text[pos:pos + 12]!r}")
            break
        pos = m.end()
        if m.group("num") is not None:
            out.append(("num", int(m.group("num"))))
        elif m.group("name") is not None:
            out.append(("name", m.group("name")))
        else:
            out.append(("op", m.group("op")))
    return out


class _ExprParser:
    """Recursive-descent parser for the algebra-term grammar: rationals,
    idempotents e / e(i), x_k, psi_r, s_r, +, -, *, ^, parentheses."""

    def __init__(self, handle: AlgebraHandle, text: str):
        self.handle = handle
        self.tokens = _tokenize(text)
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else (None, None)

    def take(self):
        tok = self.peek()
        self.pos += 1
        return tok

    def expect_op(self, op: str) -> None:
        kind, val = self.take()
        if kind != "op" or val != op:
            raise ValueError(f"expected {op!r}, found {val!r}")

    def parse(self):
        value = self.expr()
        if self.pos != len(self.tokens):
            raise ValueError("trailing tokens in expression")
        return value

    def expr(self):
        value = self.term()
        while True:
            kind, val = self.peek()
            if kind == "op" and val in "+-":
                self.take()
                rhs = self.term()
                if val == "-":
                    rhs = self.handle.neg(rhs)
                value = self.handle.add(value, rhs)
            else:
                return value

    def term(self):
        value = self.factor()
        while True:
            kind, val = self.peek()
            if kind == "op" and val == "*":
                self.take()
                value = self.handle.mul(value, self.factor())
            else:
                return value

    def factor(self):
        kind, val = self.peek()
        if kind == "op" and val == "-":
            self.take()
            return self.handle.neg(self.factor())
        value = self.primary()
        kind, val = self.peek()
        if kind == "op" and val == "^":
            self.take()
            k2, v2 = self.take()
            if k2 != "num":
                raise ValueError("exponent must be a number")
            out = self.handle.gen_element("num", 1)
            for _ in range(v2):
                out = self.handle.mul(out, value)
            return out
        return value

    def primary(self):
        kind, val = self.take()
        if kind == "num":
            k2, v2 = self.peek()
            if k2 == "op" and v2 == "/":
                self.take()
                k3, v3 = self.take()
                if k3 != "num":
                    raise ValueError("bad rational")
                return self.handle.gen_element("num", Fraction(val, v3))
            return self.handle.gen_element("num", val)
        if kind == "name":
            if val == "e":
                k2, v2 = self.peek()
                if k2 == "op" and v2 == "(":
                    self.take()
                    word = [self.num_entry()]
                    while True:
                        k3, v3 = self.take()
                        if k3 == "op" and v3 == ",":
                            word.append(self.num_entry())
                        elif k3 == "op" and v3 == ")":
                            break
                        else:
                            raise ValueError("bad idempotent word")
                    return self.handle.gen_element("e", tuple(word))
                return self.handle.gen_element("e", None)
            head = val.rstrip("0123456789")
            return self.handle.gen_element(head, int(val[len(head):]))
        if kind == "op" and val == "(":
            value = self.expr()
            self.expect_op(")")
            return value
        raise ValueError(f"unexpected token {val!r}")

    def num_entry(self) -> int:
        kind, val = self.take()
        if kind == "op" and val == "-":
            kind, val = self.take()
            if kind != "num":
                raise ValueError("bad number")
            return -val
        if kind != "num":
            raise ValueError("bad number")
        return val


def parse_element(handle: AlgebraHandle, text: str):
    return _ExprParser(handle, text).parse()


# ---------------------------------------------------------------------------
# complexes


@dataclass(frozen=True)
class Generator:
    """One free summand e_idem A <shift> sitting in a cohomological degree."""

    idem: object
    shift: int
    cohdeg: int


class FreeObject:
    """Ordered finite list of generators."""

    __slots__ = ("generators",)

    def __init__(self, generators):
        self.generators = tuple(generators)

    def in_degree(self, c: int) -> list[int]:
        return [k for k, g in enumerate(self.generators) if g.cohdeg == c]

    def __len__(self) -> int:
        return len(self.generators)


class GradedComplex:
    """Generators plus a differential matrix raising cohomological degree
    by one; entries indexed (target_index, source_index)."""

    __slots__ = ("handle", "generators", "diff")

    def __init__(self, handle: AlgebraHandle, generators, diff: dict):
        self.handle = handle
        self.generators = tuple(generators)
        self.diff = dict(diff)

    def entry(self, row: int, col: int):
        return self.diff.get((row, col))

    def cohdegs(self) -> list[int]:
        return sorted({g.cohdeg for g in self.generators})

    def __len__(self) -> int:
        return len(self.generators)


@dataclass(frozen=True)
class ChainMap:
    """Degree-0 map of complexes; entries indexed (target generator index
    in the target complex, source generator index in the source complex)."""

    source: GradedComplex
    target: GradedComplex
    entries: dict


@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    problems: tuple[str, ...]


def validate(c: GradedComplex) -> ValidationReport:
    """Check entry block-homogeneity and d after d = 0."""
    h = c.handle
    problems = []
    gens = c.generators
    for (row, col), el in sorted(c.diff.items()):
        if not (0 <= row < len(gens) and 0 <= col < len(gens)):
            problems.append(f"entry ({row},{col}) out of range")
            continue
        tg, sg = gens[row], gens[col]
        if tg.cohdeg != sg.cohdeg + 1:
            problems.append(
                f"entry ({row},{col}) spans cohdeg {sg.cohdeg}->{tg.cohdeg}"
            )
            continue
        need = (tg.shift - sg.shift) * h.units_per_shift
        if not h.is_block_homogeneous(el, sg.idem, tg.idem, need):
            problems.append(
                f"entry ({row},{col}) is not e_j A e_i homogeneous of degree {need}"
            )
    by_deg: dict[int, list[int]] = {}
    for k, g in enumerate(gens):
        by_deg.setdefault(g.cohdeg, []).append(k)
    for c0 in sorted(by_deg):
        mids = by_deg.get(c0 + 1, [])
        tops = by_deg.get(c0 + 2, [])
        for i in by_deg[c0]:
            for k in tops:
                acc = h.zero()
                for j in mids:
                    a = c.diff.get((k, j))
                    b = c.diff.get((j, i))
                    if a is not None and b is not None:
                        acc = h.add(acc, h.mul(a, b))
                if not h.is_zero(acc):
                    problems.append(f"d after d is nonzero from {i} to {k}")
    return ValidationReport(not problems, tuple(problems))


def shift(c: GradedComplex, n: int) -> GradedComplex:
    """Cohomological shift [n]: degrees drop by n, differential picks up
    the sign (-1)^n."""
    gens = [Generator(g.idem, g.shift, g.cohdeg - n) for g in c.generators]
    sign = -1 if n % 2 else 1
    diff = {
        key: (c.handle.scale(el, -1) if sign < 0 else el)
        for key, el in c.diff.items()
    }
    return GradedComplex(c.handle, gens, diff)


def twist(c: GradedComplex, n: int) -> GradedComplex:
    """Internal twist <n>: every generator's shift grows by n; entries keep
    their degrees."""
    gens = [Generator(g.idem, g.shift + n, g.cohdeg) for g in c.generators]
    return GradedComplex(c.handle, gens, dict(c.diff))


def identity_map(c: GradedComplex) -> ChainMap:
    entries = {
        (k, k): c.handle.unit(g.idem) for k, g in enumerate(c.generators)
    }
    return ChainMap(c, c, entries)


def validate_chain_map(f: ChainMap) -> ValidationReport:
    h = f.source.handle
    problems = []
    sg = f.source.generators
    tg = f.target.generators
    for (row, col), el in sorted(f.entries.items()):
        t, s = tg[row], sg[col]
        if t.cohdeg != s.cohdeg:
            problems.append(f"map entry ({row},{col}) shifts cohdeg")
            continue
        need = (t.shift - s.shift) * h.units_per_shift
        if not h.is_block_homogeneous(el, s.idem, t.idem, need):
            problems.append(f"map entry ({row},{col}) not block-homogeneous")
    for i in range(len(sg)):
        for k in range(len(tg)):
            if tg[k].cohdeg != sg[i].cohdeg + 1:
                continue
            acc = h.zero()
            for j in range(len(tg)):
                a = f.target.diff.get((k, j))
                b = f.entries.get((j, i))
                if a is not None and b is not None:
                    acc = h.add(acc, h.mul(a, b))
            for j in range(len(sg)):
                a = f.entries.get((k, j))
                b = f.source.diff.get((j, i))
                if a is not None and b is not None:
                    acc = h.add(acc, h.neg(h.mul(a, b)))
            if not h.is_zero(acc):
                problems.append(f"square at source {i}, target {k} does not commute")
    return ValidationReport(not problems, tuple(problems))


def cone(f: ChainMap) -> GradedComplex:
    """Mapping cone: source shifted up one degree with negated
    differential, glued to the target along f."""
    report = validate_chain_map(f)
    if not report.ok:
        raise ValueError("not a chain map: " + report.problems[0])
    h = f.source.handle
    src = f.source
    tgt = f.target
    gens = [Generator(g.idem, g.shift, g.cohdeg - 1) for g in src.generators]
    offset = len(gens)
    gens.extend(tgt.generators)
    diff: dict = {}
    for (row, col), el in src.diff.items():
        diff[(row, col)] = h.neg(el)
    for (row, col), el in f.entries.items():
        diff[(offset + row, col)] = el
    for (row, col), el in tgt.diff.items():
        diff[(offset + row, offset + col)] = el
    return GradedComplex(h, gens, diff)


def weight_truncate(
    c: GradedComplex, n: int
) -> tuple[GradedComplex, GradedComplex, ChainMap]:
    """Stupid truncation at n: (upper, lower, inclusion) with upper the
    cohomological degrees >= n+1, lower the degrees <= n, and inclusion the
    identity-entry chain map upper -> c."""
    upper_idx = [k for k, g in enumerate(c.generators) if g.cohdeg >= n + 1]
    lower_idx = [k for k, g in enumerate(c.generators) if g.cohdeg <= n]

    def restrict(indices: list[int]) -> GradedComplex:
        pos = {orig: new for new, orig in enumerate(indices)}
        gens = [c.generators[k] for k in indices]
        diff = {
            (pos[row], pos[col]): el
            for (row, col), el in c.diff.items()
            if row in pos and col in pos
        }
        return GradedComplex(c.handle, gens, diff)

    upper = restrict(upper_idx)
    lower = restrict(lower_idx)
    entries = {
        (orig, new): c.handle.unit(c.generators[orig].idem)
        for new, orig in enumerate(upper_idx)
    }
    return upper, lower, ChainMap(upper, c, entries)


def minimize(c: GradedComplex) -> GradedComplex:
    """Cancel generator pairs joined by invertible degree-zero entries.

    Scan order: lowest source cohomological degree, then smallest source
    and target indices; each cancellation removes the pair and applies the
    Schur-complement correction d[t][s] -= d[t][p] a^{-1} d[q][s].  The
    result has no invertible degree-zero entries and the same homotopy
    type."""
    h = c.handle
    gens = list(c.generators)
    diff = dict(c.diff)
    while True:
        candidates = sorted(
            (
                (gens[col].cohdeg, col, row)
                for (row, col) in diff
                if gens[row].shift == gens[col].shift
            ),
        )
        found = None
        for _, col, row in candidates:
            el = diff[(row, col)]
            if h.is_zero(el):
                continue
            inv = h.invert_degree_zero(el, gens[col].idem, gens[row].idem)
            if inv is not None:
                found = (row, col, inv)
                break
        if found is None:
            return GradedComplex(h, gens, {k: v for k, v in diff.items() if not h.is_zero(v)})
        q, p, inv = found
        into_q = {
            col: el for (row, col), el in diff.items() if row == q and col != p
        }
        from_p = {
            row: el for (row, col), el in diff.items() if col == p and row != q
        }
        for t, d_tp in from_p.items():
            for s, d_qs in into_q.items():
                corr = h.neg(h.mul(h.mul(d_tp, inv), d_qs))
                old = diff.get((t, s))
                diff[(t, s)] = corr if old is None else h.add(old, corr)
        keep = [k for k in range(len(gens)) if k not in (p, q)]
        remap = {orig: new for new, orig in enumerate(keep)}
        gens = [gens[k] for k in keep]
        diff = {
            (remap[row], remap[col]): el
            for (row, col), el in diff.items()
            if row in remap and col in remap
        }


def euler_symbol(c: GradedComplex) -> dict:
    """Signed generator count per (idempotent, twist)."""
    out: dict = {}
    for g in c.generators:
        key = (g.idem, g.shift)
        out[key] = out.get(key, 0) + (-1) ** (g.cohdeg % 2)
    return {k: v for k, v in out.items() if v}


def complexes_equal(a: GradedComplex, b: GradedComplex) -> bool:
    """Entrywise equality after canonical generator ordering, allowing any
    matching of generators with identical (cohdeg, idempotent, twist)."""
    if a.handle.name != b.handle.name:
        return False
    h = a.handle

    def canonical(c: GradedComplex):
        order = sorted(
            range(len(c.generators)),
            key=lambda k: (
                c.generators[k].cohdeg,
                repr(c.generators[k].idem),
                c.generators[k].shift,
                k,
            ),
        )
        remap = {orig: new for new, orig in enumerate(order)}
        gens = [c.generators[k] for k in order]
        diff = {
            (remap[row], remap[col]): el for (row, col), el in c.diff.items()
        }
        return gens, diff

    ga, da = canonical(a)
    gb, db = canonical(b)
    keys_a = [(g.cohdeg, repr(g.idem), g.shift) for g in ga]
    keys_b = [(g.cohdeg, repr(g.idem), g.shift) for g in gb]
    if keys_a != keys_b:
        return False

    def entries_match(perm: list[int]) -> bool:
        moved = {(perm[row], perm[col]): el for (row, col), el in db.items()}
        for key in set(da) | set(moved):
            x = da.get(key)
            y = moved.get(key)
            if x is None:
                if not h.is_zero(y):
                    return False
            elif y is None:
                if not h.is_zero(x):
                    return False
            elif not h.equal(x, y):
                return False
        return True

    groups: list[list[int]] = []
    start = 0
    for k in range(1, len(keys_a) + 1):
        if k == len(keys_a) or keys_a[k] != keys_a[start]:
            groups.append(list(range(start, k)))
            start = k
    size = 1
    for g in groups:
        for m in range(2, len(g) + 1):
            size *= m
    if size > MAX_EQUALITY_PERMUTATIONS:
        return entries_match(list(range(len(gb))))
    for combo in itertools.product(*[itertools.permutations(g) for g in groups]):
        perm = [0] * len(gb)
        for group, images in zip(groups, combo):
            for orig, img in zip(group, images):
                perm[orig] = img
        if entries_match(perm):
            return True
    return False


# ---------------------------------------------------------------------------
# JSON form


def complex_to_json(c: GradedComplex) -> dict:
    h = c.handle
    return {
        "schema": "complex/1",
        "handle": h.name,
        "equality_bound": h.equality_bound,
        "generators": [
            [h.render_idem(g.idem), g.shift, g.cohdeg] for g in c.generators
        ],
        "differential": [
            [row, col, h.render(el)] for (row, col), el in sorted(c.diff.items())
        ],
    }


def complex_from_json(doc: dict, handle: AlgebraHandle | None = None) -> GradedComplex:
    if doc.get("schema") not in (None, "complex/1"):
        raise ValueError(f"unknown schema {doc.get('schema')!r}")
    if handle is None:
        handle = parse_handle(doc["handle"])
    gens = [
        Generator(handle.parse_idem(idem), int(s), int(cd))
        for idem, s, cd in doc["generators"]
    ]
    diff = {}
    for row, col, expr in doc.get("differential", []):
        diff[(int(row), int(col))] = parse_element(handle, expr)
    return GradedComplex(handle, gens, diff)


# ---------------------------------------------------------------------------
# randomized corpus


def random_complex(
    handle: AlgebraHandle, rng: random.Random, max_levels: int = 3
) -> GradedComplex:
    """A random valid complex: random generators on 1-3 consecutive
    cohomological degrees, random block-homogeneous entries, then entry
    removal until d after d = 0 (removal is deterministic given the rng
    stream)."""
    levels = rng.randint(1, max_levels)
    base = rng.randint(-1, 1)
    gens: list[Generator] = []
    for lvl in range(levels):
        for _ in range(rng.randint(1, 3)):
            gens.append(
                Generator(
                    rng.choice(handle.idempotents),
                    lvl + rng.randint(-1, 1),
                    base + lvl,
                )
            )
    diff: dict = {}
    for row, tg in enumerate(gens):
        for col, sg in enumerate(gens):
            if tg.cohdeg != sg.cohdeg + 1 or rng.random() >= 0.75:
                continue
            deg = (tg.shift - sg.shift) * handle.units_per_shift
            el = handle.random_block_element(rng, sg.idem, tg.idem, deg)
            if el is not None and not handle.is_zero(el):
                diff[(row, col)] = el
    while True:
        bad = None
        for i, si in enumerate(gens):
            for k, tk in enumerate(gens):
                if tk.cohdeg != si.cohdeg + 2:
                    continue
                acc = handle.zero()
                used = []
                for j in range(len(gens)):
                    a = diff.get((k, j))
                    b = diff.get((j, i))
                    if a is not None and b is not None:
                        acc = handle.add(acc, handle.mul(a, b))
                        used.append(j)
                if used and not handle.is_zero(acc):
                    bad = (k, used[0])
                    break
            if bad:
                break
        if bad is None:
            return GradedComplex(handle, gens, diff)
        diff.pop((bad[0], bad[1]))
