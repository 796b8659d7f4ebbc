"""Exact rational linear algebra on small dense matrices.

All vectors are tuples of ``fractions.Fraction`` and all decisions (rank,
membership, kernels) are exact.  Matrices are lists of row vectors.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

Vec = tuple[Fraction, ...]

ZERO = Fraction(0)
ONE = Fraction(1)


def vec(entries: Iterable) -> Vec:
    return tuple(Fraction(e) for e in entries)


def zero_vec(n: int) -> Vec:
    return (ZERO,) * n


def unit_vec(n: int, i: int) -> Vec:
    return tuple(ONE if j == i else ZERO for j in range(n))


def add_vec(u: Sequence[Fraction], v: Sequence[Fraction]) -> Vec:
    return tuple(a + b for a, b in zip(u, v))


def sub_vec(u: Sequence[Fraction], v: Sequence[Fraction]) -> Vec:
    return tuple(a - b for a, b in zip(u, v))


def scale_vec(c: Fraction, v: Sequence[Fraction]) -> Vec:
    return tuple(c * a for a in v)


def dot(u: Sequence[Fraction], v: Sequence[Fraction]) -> Fraction:
    s = ZERO
    for a, b in zip(u, v):
        if a and b:
            s += a * b
    return s


def is_zero_vec(v: Sequence[Fraction]) -> bool:
    return all(a == 0 for a in v)


class RrefAccumulator:
    """Mutable reduced-row-echelon accumulator for incremental span building."""

    def __init__(self, ncols: int, rows: Iterable[Sequence[Fraction]] = ()):
        self.ncols = ncols
        self.rows: list[list[Fraction]] = []
        self.pivots: list[int] = []
        for r in rows:
            self.add(r)

    def reduce(self, v: Sequence[Fraction]) -> list[Fraction]:
        """Residue of v modulo the current row space."""
        w = list(v)
        for row, p in zip(self.rows, self.pivots):
            c = w[p]
            if c:
                for k in range(p, self.ncols):
                    if row[k]:
                        w[k] -= c * row[k]
        return w

    def contains(self, v: Sequence[Fraction]) -> bool:
        return is_zero_vec(self.reduce(v))

    def add(self, v: Sequence[Fraction]) -> bool:
        """Insert v; returns True if it enlarged the span."""
        w = self.reduce(v)
        p = next((k for k, a in enumerate(w) if a), None)
        if p is None:
            return False
        inv = ONE / w[p]
        w = [a * inv for a in w]
        # clear the new pivot column in the existing rows
        for row in self.rows:
            c = row[p]
            if c:
                for k in range(p, self.ncols):
                    if w[k]:
                        row[k] -= c * w[k]
        at = next((idx for idx, q in enumerate(self.pivots) if q > p), len(self.pivots))
        self.rows.insert(at, w)
        self.pivots.insert(at, p)
        return True

    @property
    def rank(self) -> int:
        return len(self.rows)

    def snapshot(self) -> tuple[tuple[Vec, ...], tuple[int, ...]]:
        return tuple(tuple(r) for r in self.rows), tuple(self.pivots)


def rref(rows: Iterable[Sequence[Fraction]], ncols: int) -> tuple[tuple[Vec, ...], tuple[int, ...]]:
    """Canonical RREF of the row space; returns (nonzero rows, pivot columns)."""
    acc = RrefAccumulator(ncols, rows)
    return acc.snapshot()


def rank(rows: Iterable[Sequence[Fraction]], ncols: int) -> int:
    return RrefAccumulator(ncols, rows).rank


def kernel_basis(rows: Iterable[Sequence[Fraction]], ncols: int) -> tuple[Vec, ...]:
    """RREF basis of the right kernel {v : A v = 0}."""
    red, pivots = rref(rows, ncols)
    pivot_set = set(pivots)
    free = [c for c in range(ncols) if c not in pivot_set]
    out = []
    for f in free:
        v = [ZERO] * ncols
        v[f] = ONE
        for row, p in zip(red, pivots):
            v[p] = -row[f]
        out.append(v)
    return rref(out, ncols)[0]


def mat_vec(rows: Sequence[Sequence[Fraction]], v: Sequence[Fraction]) -> Vec:
    return tuple(dot(r, v) for r in rows)


def vec_mat(v: Sequence[Fraction], rows: Sequence[Sequence[Fraction]]) -> Vec:
    n = len(rows[0]) if rows else 0
    out = [ZERO] * n
    for a, row in zip(v, rows):
        if a:
            for j, b in enumerate(row):
                if b:
                    out[j] += a * b
    return tuple(out)


def mat_mul(a: Sequence[Sequence[Fraction]], b: Sequence[Sequence[Fraction]]) -> list[list[Fraction]]:
    return [list(vec_mat(row, b)) for row in a]


def invert(rows: Sequence[Sequence[Fraction]]) -> list[list[Fraction]]:
    """Inverse of a square rational matrix; raises ValueError if singular."""
    n = len(rows)
    aug = [list(r) + [ONE if i == j else ZERO for j in range(n)] for i, r in enumerate(rows)]
    red, pivots = rref(aug, 2 * n)
    if list(pivots[:n]) != list(range(n)) or len(red) != n:
        raise ValueError("matrix is singular")
    return [list(r[n:]) for r in red]


def transpose(rows: Sequence[Sequence[Fraction]]) -> list[list[Fraction]]:
    return [list(col) for col in zip(*rows)] if rows else []


@dataclass(frozen=True)
class Subspace:
    """A linear subspace of Q^n stored as canonical RREF rows."""

    ambient_dim: int
    basis: tuple[Vec, ...]
    pivots: tuple[int, ...]

    @classmethod
    def from_vectors(cls, ambient_dim: int, vectors: Iterable[Sequence[Fraction]]) -> "Subspace":
        rows, pivots = rref(vectors, ambient_dim)
        return cls(ambient_dim, rows, pivots)

    @classmethod
    def zero(cls, ambient_dim: int) -> "Subspace":
        return cls(ambient_dim, (), ())

    @classmethod
    def full(cls, ambient_dim: int) -> "Subspace":
        return cls.from_vectors(ambient_dim, [unit_vec(ambient_dim, i) for i in range(ambient_dim)])

    @property
    def dim(self) -> int:
        return len(self.basis)

    def contains(self, v: Sequence[Fraction]) -> bool:
        w = list(v)
        for row, p in zip(self.basis, self.pivots):
            c = w[p]
            if c:
                for k in range(p, self.ambient_dim):
                    if row[k]:
                        w[k] -= c * row[k]
        return is_zero_vec(w)

    def contains_subspace(self, other: "Subspace") -> bool:
        return all(self.contains(v) for v in other.basis)

    def sum(self, other: "Subspace") -> "Subspace":
        return Subspace.from_vectors(self.ambient_dim, list(self.basis) + list(other.basis))

    def perp(self) -> "Subspace":
        """Annihilator in the dual coordinates: {w : <w, v> = 0 for all v here}."""
        ker = kernel_basis(self.basis, self.ambient_dim)
        return Subspace.from_vectors(self.ambient_dim, ker)

    def __contains__(self, v: Sequence[Fraction]) -> bool:
        return self.contains(v)
