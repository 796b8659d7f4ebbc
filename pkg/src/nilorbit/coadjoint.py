"""Coadjoint machinery: skew forms, isotropy, jump sets, action, flat orbits.

Conventions: a functional is a coordinate vector in the dual of the stored
basis; jump indices are 1-based subsets of {1..m} relative to a flag.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from random import Random
from typing import Sequence

from .algebra import Flag, LieAlgebra, is_ideal
from .linalg import (
    RrefAccumulator,
    Subspace,
    Vec,
    ZERO,
    dot,
    is_zero_vec,
    kernel_basis,
    sub_vec,
    unit_vec,
    vec,
    zero_vec,
)


@dataclass(frozen=True)
class Functional:
    """A point of the dual space, <xi, X_j> = coords[j]."""

    algebra: LieAlgebra
    coords: Vec

    def __post_init__(self):
        if len(self.coords) != self.algebra.dim:
            raise ValueError(
                f"functional has {len(self.coords)} coordinates for dimension {self.algebra.dim}"
            )

    def pair(self, v: Sequence[Fraction]) -> Fraction:
        return dot(self.coords, v)

    def scale(self, t: Fraction) -> "Functional":
        return Functional(self.algebra, tuple(t * c for c in self.coords))

    def add(self, other: "Functional") -> "Functional":
        return Functional(self.algebra, tuple(a + b for a, b in zip(self.coords, other.coords)))

    def is_character(self) -> bool:
        """True iff xi vanishes on every bracket, i.e. the orbit is a point."""
        return all(self.pair(self.algebra.bracket_basis(i, j)) == 0 for i, j, _ in self.algebra.brackets)


def functional(g: LieAlgebra, entries) -> Functional:
    return Functional(g, vec(entries))


def zero_functional(g: LieAlgebra) -> Functional:
    return Functional(g, zero_vec(g.dim))


def dual_basis_functional(g: LieAlgebra, index: int) -> Functional:
    """The dual vector X_index^* (0-based index)."""
    return Functional(g, unit_vec(g.dim, index))


def dual_functional_by_name(g: LieAlgebra, name: str) -> Functional:
    return dual_basis_functional(g, g.basis_names.index(name))


def random_functional(g: LieAlgebra, rng: Random, bound: int = 7) -> Functional:
    return Functional(g, tuple(Fraction(rng.randint(-bound, bound)) for _ in range(g.dim)))


def random_vector(g: LieAlgebra, rng: Random, bound: int = 7) -> Vec:
    return tuple(Fraction(rng.randint(-bound, bound)) for _ in range(g.dim))


def bform_matrix(g: LieAlgebra, xi: Functional) -> list[list[Fraction]]:
    """Skew matrix M_ij = <xi, [X_i, X_j]> in the stored basis."""
    if xi.algebra.dim != g.dim:
        raise ValueError("functional dimension does not match the algebra")
    m = g.dim
    mat = [[ZERO] * m for _ in range(m)]
    for i, j, coeffs in g.brackets:
        val = ZERO
        for k, c in coeffs:
            if xi.coords[k]:
                val += c * xi.coords[k]
        if val:
            mat[i][j] = val
            mat[j][i] = -val
    return mat


def flag_form(flag: Flag, xi: Functional) -> list[list[Fraction]]:
    """The same skew form written in flag coordinates."""
    m = flag.dim
    mat = [[ZERO] * m for _ in range(m)]
    for (a, b), sparse in flag.pair_support.items():
        val = ZERO
        for i, c in sparse:
            if xi.coords[i]:
                val += c * xi.coords[i]
        if val:
            mat[a][b] = val
            mat[b][a] = -val
    return mat


def isotropy(g: LieAlgebra, xi: Functional) -> tuple[Subspace, int]:
    """g(xi) = radical of the skew form, and the orbit dimension m - dim g(xi)."""
    mat = bform_matrix(g, xi)
    ker = kernel_basis(mat, g.dim)
    sub = Subspace.from_vectors(g.dim, ker)
    return sub, g.dim - sub.dim


def _jump_scan(form: list[list[Fraction]], k: int) -> tuple[int, ...]:
    """Jump indices of the k x k leading block, by the defining membership tests.

    For j <= k the index j jumps iff e_j lies outside ker(form|_k) + <e_1..e_{j-1}>.
    """
    block = [row[:k] for row in form[:k]]
    acc = RrefAccumulator(k, kernel_basis(block, k))
    jumps = []
    for j in range(k):
        e = unit_vec(k, j)
        if not acc.contains(e):
            jumps.append(j + 1)
        acc.add(e)
    return tuple(jumps)


def jump_set(flag: Flag, xi: Functional) -> tuple[int, ...]:
    """J_xi = {j : g_j not in g(xi) + g_{j-1}}, in flag coordinates, 1-based."""
    form = flag_form(flag, xi)
    return _jump_scan(form, flag.dim)


def fine_jump_tuple(flag: Flag, xi: Functional) -> tuple[tuple[int, ...], ...]:
    """(J_xi^1, ..., J_xi^m): jump indices of every leading block of the form."""
    form = flag_form(flag, xi)
    return tuple(_jump_scan(form, k) for k in range(1, flag.dim + 1))


@dataclass(frozen=True)
class JumpData:
    isotropy: Subspace
    partial_isotropies: tuple[Subspace, ...]
    coarse: tuple[int, ...]
    fine: tuple[tuple[int, ...], ...]
    orbit_dim: int


def jump_data(flag: Flag, xi: Functional) -> JumpData:
    """Full jump data; isotropies are returned in stored-basis coordinates."""
    g = flag.algebra
    m = flag.dim
    form = flag_form(flag, xi)
    partials = []
    for k in range(1, m + 1):
        block = [row[:k] for row in form[:k]]
        rows = []
        for kv in kernel_basis(block, k):
            w = [ZERO] * m
            for a, c in enumerate(kv):
                if c:
                    for idx, val in enumerate(flag.rows[a]):
                        if val:
                            w[idx] += c * val
            rows.append(tuple(w))
        partials.append(Subspace.from_vectors(m, rows))
    fine = fine_jump_tuple(flag, xi)
    coarse = fine[-1] if m else ()
    iso = partials[-1] if m else Subspace.zero(0)
    data = JumpData(iso, tuple(partials), coarse, fine, m - iso.dim)
    if data.orbit_dim != len(coarse) or data.orbit_dim % 2 != 0:
        raise RuntimeError("jump data is inconsistent: |J| != codim of the radical")
    return data


def coadjoint_move(g: LieAlgebra, xi: Functional, x: Sequence[Fraction]) -> Functional:
    """Ad*(exp x) xi = xi o exp(-ad x), a finite sum since ad x is nilpotent."""
    if g.dim == 0:
        return xi
    ad = g.ad_matrix(x)
    term = list(xi.coords)
    total = list(term)
    for p in range(1, g.dim + 1):
        # term <- -(term . ad) / p, i.e. the next series term of xi o exp(-ad x)
        nxt = [ZERO] * g.dim
        for i, a in enumerate(term):
            if a:
                row = ad[i]
                for j in range(g.dim):
                    if row[j]:
                        nxt[j] += a * row[j]
        if is_zero_vec(nxt):
            break
        term = [-c / p for c in nxt]
        for j in range(g.dim):
            total[j] += term[j]
    else:
        raise RuntimeError("ad x is not nilpotent; the exponential series did not terminate")
    return Functional(g, tuple(total))


@dataclass(frozen=True)
class AffineOrbit:
    base: Functional
    direction: Subspace


@dataclass(frozen=True)
class FlatnessCertificate:
    isotropy_is_ideal: bool
    samples_checked: int
    samples_inside: int
    escape_witness: Vec | None


@dataclass(frozen=True)
class FlatnessResult:
    flat: bool
    certificate: FlatnessCertificate
    orbit: AffineOrbit | None


def is_flat_orbit(
    g: LieAlgebra,
    xi: Functional,
    samples: int = 8,
    seed: int = 0,
    bound: int = 7,
) -> FlatnessResult:
    """Decide whether the orbit of xi is the affine set xi + g(xi)^perp.

    The verdict is the exact ideal criterion on g(xi).  The sampled coadjoint
    moves cross-check the implementation: when g(xi) is an ideal, every moved
    point must lie in xi + g(xi)^perp, and a violation is a hard internal
    error rather than a negative answer.
    """
    if samples < 1:
        raise ValueError("samples must be >= 1")
    iso, _ = isotropy(g, xi)
    ideal, _witness = is_ideal(g, iso)
    rng = Random(seed)
    inside = 0
    escape = None
    for _ in range(samples):
        x = random_vector(g, rng, bound)
        moved = coadjoint_move(g, xi, x)
        diff = sub_vec(moved.coords, xi.coords)
        if all(dot(diff, v) == 0 for v in iso.basis):
            inside += 1
        elif escape is None:
            escape = x
    if ideal and inside != samples:
        raise RuntimeError(
            "internal error: isotropy is an ideal but a sampled coadjoint move "
            "left xi + g(xi)^perp"
        )
    cert = FlatnessCertificate(ideal, samples, inside, escape)
    orbit = AffineOrbit(xi, iso.perp()) if ideal else None
    return FlatnessResult(ideal, cert, orbit)
