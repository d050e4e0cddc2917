"""Exact truncated Laurent series in the half-twist variable u.

Graded dimensions in this package live on a single exponent lattice: the
Chow-theoretic twist contributes even powers (q = u^2) while algebra
generators can sit in odd u-degree, so everything is a Laurent series in u.
A series carries an inclusive truncation order: coefficients are exact for
every exponent up to and including `trunc`.  Polynomials and monomials are
exact everywhere and carry an infinite truncation; finite orders enter
through inversion and propagate through arithmetic as the minimum of the
operands' orders shifted by the other factor's lowest exponent.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

DEFAULT_TRUNC = 24

INF = float("inf")


def _norm_coeff(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return int(c)
    return c


@dataclass(frozen=True)
class HalfLaurentSeries:
    """coeffs: sorted tuple of (exponent, nonzero coefficient); trunc is the
    last exponent guaranteed exact (float("inf") for exact polynomials)."""

    coeffs: tuple[tuple[int, int | Fraction], ...]
    trunc: int | float = INF

    def __post_init__(self) -> None:
        cleaned = tuple(
            sorted((e, _norm_coeff(c)) for e, c in self.coeffs if c != 0 and e <= self.trunc)
        )
        object.__setattr__(self, "coeffs", cleaned)

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero() -> "HalfLaurentSeries":
        return HalfLaurentSeries((), INF)

    @staticmethod
    def one() -> "HalfLaurentSeries":
        return HalfLaurentSeries(((0, 1),), INF)

    @staticmethod
    def monomial(exp: int, coeff=1) -> "HalfLaurentSeries":
        return HalfLaurentSeries(((exp, coeff),), INF)

    @staticmethod
    def from_map(coeffs: dict, trunc=INF) -> "HalfLaurentSeries":
        return HalfLaurentSeries(tuple(coeffs.items()), trunc)

    @staticmethod
    def from_q_coeffs(coeffs: dict, trunc=INF) -> "HalfLaurentSeries":
        """Reads a polynomial in q and doubles exponents (q = u^2)."""
        t = trunc if trunc == INF else 2 * trunc
        return HalfLaurentSeries(tuple((2 * e, c) for e, c in coeffs.items()), t)

    # -- structure ---------------------------------------------------------

    @property
    def min_exp(self):
        """Lowest exponent with a nonzero coefficient; INF for the zero
        series (so that zero times anything keeps an infinite window)."""
        return self.coeffs[0][0] if self.coeffs else INF

    def coefficient(self, e: int):
        for exp, c in self.coeffs:
            if exp == e:
                return c
        return 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def as_map(self) -> dict[int, int | Fraction]:
        return dict(self.coeffs)

    # -- arithmetic --------------------------------------------------------

    def add(self, other: "HalfLaurentSeries") -> "HalfLaurentSeries":
        trunc = min(self.trunc, other.trunc)
        out: dict[int, object] = dict(self.coeffs)
        for e, c in other.coeffs:
            out[e] = out.get(e, 0) + c
        return HalfLaurentSeries(tuple(out.items()), trunc)

    def neg(self) -> "HalfLaurentSeries":
        return HalfLaurentSeries(tuple((e, -c) for e, c in self.coeffs), self.trunc)

    def sub(self, other: "HalfLaurentSeries") -> "HalfLaurentSeries":
        return self.add(other.neg())

    def scale(self, factor) -> "HalfLaurentSeries":
        return HalfLaurentSeries(
            tuple((e, c * factor) for e, c in self.coeffs), self.trunc
        )

    def mul(self, other: "HalfLaurentSeries") -> "HalfLaurentSeries":
        trunc = min(self.trunc + other.min_exp, other.trunc + self.min_exp)
        out: dict[int, object] = {}
        for e1, c1 in self.coeffs:
            for e2, c2 in other.coeffs:
                e = e1 + e2
                if e <= trunc:
                    out[e] = out.get(e, 0) + c1 * c2
        return HalfLaurentSeries(tuple(out.items()), trunc)

    def pow(self, k: int) -> "HalfLaurentSeries":
        out = HalfLaurentSeries.one()
        for _ in range(k):
            out = out.mul(self)
        return out

    def invert_unit(self, trunc=None) -> "HalfLaurentSeries":
        """Multiplicative inverse.  The lowest coefficient must be a nonzero
        rational; the result window is the input's shifted by twice the
        lowest exponent, capped at `trunc` (default DEFAULT_TRUNC when the
        input is exact)."""
        if self.is_zero():
            raise ValueError("cannot invert the zero series")
        m = self.min_exp
        c0 = self.coeffs[0][1]
        natural = self.trunc - 2 * m
        if trunc is None:
            trunc = natural
        else:
            trunc = min(trunc, natural)
        if trunc == INF:
            trunc = DEFAULT_TRUNC
        trunc = int(trunc)
        lead = Fraction(1, 1) / Fraction(c0)
        a = self.as_map()
        b: dict[int, object] = {-m: lead}
        # coefficient recurrence from (self * result) = 1, solved upward
        for e in range(-m + 1, trunc + 1):
            acc = 0
            for i in range(m + 1, e + 2 * m + 1):
                ai = a.get(i, 0)
                if ai:
                    acc += ai * b.get(e + m - i, 0)
            if acc:
                b[e] = -lead * acc
        return HalfLaurentSeries(tuple(b.items()), trunc)

    def truncate(self, trunc) -> "HalfLaurentSeries":
        return HalfLaurentSeries(self.coeffs, min(self.trunc, trunc))

    def substitute_q_squared(self) -> "HalfLaurentSeries":
        """q -> u^2 on a series read as living in q: doubles exponents."""
        t = self.trunc if self.trunc == INF else 2 * self.trunc
        return HalfLaurentSeries(tuple((2 * e, c) for e, c in self.coeffs), t)

    def evaluate(self, x: float) -> float:
        """Numerical evaluation of the stored window (smoke checks only)."""
        return float(sum(c * x**e for e, c in self.coeffs))

    # -- comparison and rendering ------------------------------------------

    def agrees_with(self, other: "HalfLaurentSeries") -> bool:
        return first_discrepancy(self, other) is None

    def __str__(self) -> str:
        if not self.coeffs:
            body = "0"
        else:
            chunks = []
            for e, c in self.coeffs:
                if e == 0:
                    chunks.append(str(c))
                else:
                    head = "" if c == 1 else ("-" if c == -1 else f"{c}*")
                    chunks.append(f"{head}u^{e}" if e != 1 else f"{head}u")
            body = " + ".join(chunks).replace("+ -", "- ")
        if self.trunc == INF:
            return body
        return f"{body} + O(u^{int(self.trunc) + 1})"


def first_discrepancy(a: HalfLaurentSeries, b: HalfLaurentSeries) -> int | None:
    """Smallest exponent within both windows where the coefficients differ,
    None when the series agree on the common window."""
    window = min(a.trunc, b.trunc)
    exps = sorted(
        {e for e, _ in a.coeffs if e <= window} | {e for e, _ in b.coeffs if e <= window}
    )
    for e in exps:
        if a.coefficient(e) != b.coefficient(e):
            return e
    return None


def bgl(m: int, trunc=DEFAULT_TRUNC) -> HalfLaurentSeries:
    """Poincare series of the Chow ring of the classifying space of GL_m in
    q = u^2: the product over k <= m of (1 - u^{2k})^{-1}.  Coefficient of
    u^{2k} counts partitions of k into parts of size at most m."""
    out = HalfLaurentSeries.one()
    for k in range(1, m + 1):
        factor = HalfLaurentSeries.one().sub(HalfLaurentSeries.monomial(2 * k))
        out = out.mul(factor.invert_unit(trunc))
    return out.truncate(trunc)
