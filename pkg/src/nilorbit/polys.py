"""Sparse polynomials over the rationals and fraction-free elimination.

Two consumers: the symbolic generic-stratum mode works with multivariate
polynomials in the dual coordinates, and the limit machinery works with
univariate polynomials in the family parameter.  Row elimination never
divides by polynomials; rows are kept small by stripping the rational
content and any monomial factor common to a whole row.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Sequence

Mono = tuple[int, ...]


@dataclass(frozen=True)
class Poly:
    nvars: int
    terms: tuple[tuple[Mono, Fraction], ...]  # sorted by monomial, nonzero coefficients

    @classmethod
    def make(cls, nvars: int, data: dict[Mono, Fraction]) -> "Poly":
        items = tuple(sorted((m, c) for m, c in data.items() if c != 0))
        return cls(nvars, items)

    @classmethod
    def zero(cls, nvars: int) -> "Poly":
        return cls(nvars, ())

    @classmethod
    def const(cls, nvars: int, c) -> "Poly":
        c = Fraction(c)
        if c == 0:
            return cls.zero(nvars)
        return cls(nvars, (((0,) * nvars, c),))

    @classmethod
    def variable(cls, nvars: int, index: int) -> "Poly":
        mono = tuple(1 if i == index else 0 for i in range(nvars))
        return cls(nvars, ((mono, Fraction(1)),))

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(m) for m, _ in self.terms)

    def __add__(self, other: "Poly") -> "Poly":
        data = dict(self.terms)
        for m, c in other.terms:
            data[m] = data.get(m, Fraction(0)) + c
        return Poly.make(self.nvars, data)

    def __sub__(self, other: "Poly") -> "Poly":
        data = dict(self.terms)
        for m, c in other.terms:
            data[m] = data.get(m, Fraction(0)) - c
        return Poly.make(self.nvars, data)

    def __neg__(self) -> "Poly":
        return Poly(self.nvars, tuple((m, -c) for m, c in self.terms))

    def __mul__(self, other: "Poly") -> "Poly":
        data: dict[Mono, Fraction] = {}
        for m1, c1 in self.terms:
            for m2, c2 in other.terms:
                m = tuple(a + b for a, b in zip(m1, m2))
                data[m] = data.get(m, Fraction(0)) + c1 * c2
        return Poly.make(self.nvars, data)

    def scale(self, c) -> "Poly":
        c = Fraction(c)
        if c == 0:
            return Poly.zero(self.nvars)
        return Poly(self.nvars, tuple((m, c * a) for m, a in self.terms))

    def evaluate(self, point: Sequence[Fraction]) -> Fraction:
        total = Fraction(0)
        for m, c in self.terms:
            v = c
            for e, x in zip(m, point):
                if e:
                    v *= Fraction(x) ** e
            total += v
        return total

    def __str__(self) -> str:  # pragma: no cover - debugging aid
        if not self.terms:
            return "0"
        parts = []
        for m, c in self.terms:
            mono = "*".join(
                f"x{i}" + (f"^{e}" if e > 1 else "") for i, e in enumerate(m) if e
            )
            parts.append(f"{c}" + (f"*{mono}" if mono else ""))
        return " + ".join(parts)


def strip_row(row: list[Poly]) -> list[Poly]:
    """Divide a row by its rational content and common monomial factor."""
    coeffs: list[Fraction] = []
    mono_min: list[int] | None = None
    for p in row:
        for m, c in p.terms:
            coeffs.append(c)
            if mono_min is None:
                mono_min = list(m)
            else:
                mono_min = [min(a, b) for a, b in zip(mono_min, m)]
    if not coeffs:
        return row
    num = 0
    den = 1
    for c in coeffs:
        num = gcd(num, c.numerator)
        den = den * c.denominator // gcd(den, c.denominator)
    content = Fraction(num, den)
    assert mono_min is not None
    shift = tuple(mono_min)
    out = []
    for p in row:
        data = {}
        for m, c in p.terms:
            data[tuple(a - b for a, b in zip(m, shift))] = c / content
        out.append(Poly.make(p.nvars, data))
    return out


def generic_rank_rows(rows: Sequence[Sequence[Poly]], ncols: int) -> tuple[int, ...]:
    """Row indices at which the generic rank jumps, scanning rows in order.

    Fraction-free Gaussian elimination: every accepted row contributes a
    pivot chosen as its lowest-degree nonzero entry; a later row is reduced
    by cross-multiplication against all pivots and joins the output iff the
    residue is not identically zero.
    """
    pivot_rows: list[list[Poly]] = []
    pivot_cols: list[int] = []
    jumps = []
    for idx, raw in enumerate(rows):
        cur = list(raw)
        for prow, pcol in zip(pivot_rows, pivot_cols):
            c = cur[pcol]
            if c.is_zero:
                continue
            piv = prow[pcol]
            cur = [piv * a - c * b for a, b in zip(cur, prow)]
            cur = strip_row(cur)
        live = [(k, p) for k, p in enumerate(cur) if not p.is_zero]
        if not live:
            continue
        jumps.append(idx)
        pc = min(live, key=lambda kp: (kp[1].degree(), kp[0]))[0]
        pivot_rows.append(cur)
        pivot_cols.append(pc)
    return tuple(jumps)


def poly_row_space(rows: Sequence[Sequence[Poly]], ncols: int) -> list[list[Poly]]:
    """A polynomial basis of the row space over the rational function field."""
    pivot_rows: list[list[Poly]] = []
    pivot_cols: list[int] = []
    for raw in rows:
        cur = list(raw)
        for prow, pcol in zip(pivot_rows, pivot_cols):
            c = cur[pcol]
            if c.is_zero:
                continue
            piv = prow[pcol]
            cur = [piv * a - c * b for a, b in zip(cur, prow)]
            cur = strip_row(cur)
        live = [(k, p) for k, p in enumerate(cur) if not p.is_zero]
        if not live:
            continue
        pc = min(live, key=lambda kp: (kp[1].degree(), kp[0]))[0]
        pivot_rows.append(cur)
        pivot_cols.append(pc)
    return pivot_rows


# ---------------------------------------------------------------------------
# univariate helpers (nvars == 1)


def upoly(coeffs: Sequence) -> Poly:
    """Univariate polynomial from an ascending coefficient list."""
    return Poly.make(1, {(k,): Fraction(c) for k, c in enumerate(coeffs)})

def ucoeffs(p: Poly) -> list[Fraction]:
    if p.nvars != 1:
        raise ValueError("not univariate")
    deg = p.degree()
    out = [Fraction(0)] * (deg + 1 if deg >= 0 else 0)
    for (e,), c in p.terms:
        out[e] = c
    return out


def udivmod(a: Poly, b: Poly) -> tuple[Poly, Poly]:
    """Long division of univariate polynomials over Q."""
    if b.is_zero:
        raise ZeroDivisionError("polynomial division by zero")
    ra = ucoeffs(a)
    rb = ucoeffs(b)
    q = [Fraction(0)] * max(len(ra) - len(rb) + 1, 0)
    while len(ra) >= len(rb) and ra:
        if ra[-1] == 0:
            ra.pop()
            continue
        shift = len(ra) - len(rb)
        f = ra[-1] / rb[-1]
        q[shift] += f
        for k, c in enumerate(rb):
            ra[shift + k] -= f * c
        ra.pop()
    return upoly(q), upoly(ra)


def udiv_exact(a: Poly, b: Poly) -> Poly:
    q, r = udivmod(a, b)
    if not r.is_zero:
        raise ArithmeticError("division is not exact")
    return q


def ugcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd over Q[t]."""
    while not b.is_zero:
        _, r = udivmod(a, b)
        a, b = b, r
    if a.is_zero:
        return a
    lead = ucoeffs(a)[-1]
    return a.scale(1 / lead)


def udet(matrix: Sequence[Sequence[Poly]]) -> Poly:
    """Determinant of a univariate polynomial matrix (Bareiss, exact divisions)."""
    n = len(matrix)
    if n == 0:
        return Poly.const(1, 1)
    a = [list(row) for row in matrix]
    sign = 1
    prev = Poly.const(1, 1)
    for k in range(n - 1):
        if a[k][k].is_zero:
            swap = next((r for r in range(k + 1, n) if not a[r][k].is_zero), None)
            if swap is None:
                return Poly.zero(1)
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = a[i][j] * a[k][k] - a[i][k] * a[k][j]
                a[i][j] = udiv_exact(num, prev)
        prev = a[k][k]
    d = a[n - 1][n - 1]
    return d if sign == 1 else -d
