"""Nilpotent Lie algebras given by rational structure constants.

An algebra of dimension m stores only the brackets [X_i, X_j] for i < j as
sparse coefficient lists; [X_j, X_i] is minus the stored value.  All series,
flags, quotients and products are computed exactly over the rationals.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Sequence

from .linalg import (
    RrefAccumulator,
    Subspace,
    Vec,
    ZERO,
    invert,
    kernel_basis,
    mat_vec,
    transpose,
    unit_vec,
    zero_vec,
)

# ((i, j, ((k, c), ...)), ...) with 0-based i < j and nonzero c only
BracketTable = tuple[tuple[int, int, tuple[tuple[int, Fraction], ...]], ...]


class NonNilpotentError(ValueError):
    """Lower central series stabilized at a nonzero term."""

    def __init__(self, stabilized: Subspace):
        self.stabilized = stabilized
        super().__init__(
            f"lower central series stabilizes at a nonzero subspace of dimension {stabilized.dim}"
        )


class NotAnIdealError(ValueError):
    """A quotient was requested by a subspace that is not an ideal."""

    def __init__(self, basis_name: str, member: Vec, escaped: Vec):
        self.basis_name = basis_name
        self.member = member
        self.escaped = escaped
        super().__init__(
            f"not an ideal: [{basis_name}, v] leaves the subspace for v = {member}"
        )


@dataclass(frozen=True)
class Diagnostic:
    kind: str  # "malformed" | "jacobi" | "non_nilpotent"
    message: str
    data: tuple = ()


@dataclass(frozen=True)
class LieAlgebra:
    dim: int
    basis_names: tuple[str, ...]
    brackets: BracketTable
    _table: dict = field(default_factory=dict, repr=False, compare=False)

    def __post_init__(self):
        table = {}
        for i, j, coeffs in self.brackets:
            table[(i, j)] = coeffs
        object.__setattr__(self, "_table", table)

    def bracket_basis(self, i: int, j: int) -> Vec:
        """[X_i, X_j] as a coordinate vector, any index order."""
        if i == j:
            return zero_vec(self.dim)
        sign = 1
        if i > j:
            i, j, sign = j, i, -1
        out = [ZERO] * self.dim
        for k, c in self._table.get((i, j), ()):
            out[k] = c if sign == 1 else -c
        return tuple(out)

    def bracket(self, u: Sequence[Fraction], v: Sequence[Fraction]) -> Vec:
        out = [ZERO] * self.dim
        for i, j, coeffs in self.brackets:
            c = u[i] * v[j] - u[j] * v[i]
            if c:
                for k, a in coeffs:
                    out[k] += c * a
        return tuple(out)

    def ad_matrix(self, x: Sequence[Fraction]) -> list[list[Fraction]]:
        """Matrix of ad(x): columns are [x, X_j]."""
        cols = [self.bracket(x, unit_vec(self.dim, j)) for j in range(self.dim)]
        return transpose(cols) if cols else []


def lie_algebra(
    dim: int,
    basis_names: Sequence[str],
    brackets: Mapping[tuple[int, int], Mapping[int, Fraction]],
) -> LieAlgebra:
    """Build a LieAlgebra from a {(i, j): {k: c}} mapping, 0-based, i < j."""
    entries = []
    for (i, j) in sorted(brackets):
        coeffs = tuple(sorted((k, Fraction(c)) for k, c in brackets[(i, j)].items() if c != 0))
        if coeffs:
            entries.append((i, j, coeffs))
    return LieAlgebra(dim, tuple(basis_names), tuple(entries))


def validate_algebra(g: LieAlgebra) -> list[Diagnostic]:
    """Well-formedness, Jacobi and nilpotency diagnostics; empty iff valid."""
    out: list[Diagnostic] = []
    m = g.dim
    if m < 0:
        return [Diagnostic("malformed", f"negative dimension {m}")]
    if len(g.basis_names) != m:
        out.append(
            Diagnostic("malformed", f"{len(g.basis_names)} basis names for dimension {m}")
        )
    seen = set()
    for i, j, coeffs in g.brackets:
        if not (0 <= i < j < m):
            out.append(Diagnostic("malformed", f"bracket index pair ({i + 1}, {j + 1}) out of range", (i + 1, j + 1)))
            continue
        if (i, j) in seen:
            out.append(Diagnostic("malformed", f"duplicate bracket pair ({i + 1}, {j + 1})", (i + 1, j + 1)))
        seen.add((i, j))
        for k, c in coeffs:
            if not 0 <= k < m:
                out.append(Diagnostic("malformed", f"bracket target {k + 1} out of range in ({i + 1}, {j + 1})", (i + 1, j + 1, k + 1)))
    if out:
        return out

    for i in range(m):
        ei = unit_vec(m, i)
        for j in range(i + 1, m):
            ej = unit_vec(m, j)
            bij = g.bracket_basis(i, j)
            for k in range(j + 1, m):
                ek = unit_vec(m, k)
                s = g.bracket(bij, ek)
                s = tuple(a + b for a, b in zip(s, g.bracket(g.bracket_basis(j, k), ei)))
                s = tuple(a + b for a, b in zip(s, g.bracket(g.bracket_basis(k, i), ej)))
                if any(s):
                    out.append(
                        Diagnostic(
                            "jacobi",
                            f"Jacobi identity fails on ({g.basis_names[i]}, {g.basis_names[j]}, {g.basis_names[k]})",
                            (i + 1, j + 1, k + 1),
                        )
                    )
    try:
        lower_central_series(g)
    except NonNilpotentError as e:
        out.append(
            Diagnostic(
                "non_nilpotent",
                str(e),
                tuple(e.stabilized.basis),
            )
        )
    return out


def lower_central_series(g: LieAlgebra) -> tuple[list[Subspace], int]:
    """Chain g >= [g,g] >= [g,[g,g]] >= ... >= 0 and the number of nonzero terms."""
    m = g.dim
    full = Subspace.full(m)
    chain = [full]
    current = full
    while current.dim > 0:
        vectors = []
        for i in range(m):
            for v in current.basis:
                vectors.append(g.bracket(unit_vec(m, i), v))
        nxt = Subspace.from_vectors(m, vectors)
        if nxt.dim == current.dim:
            raise NonNilpotentError(current)
        chain.append(nxt)
        current = nxt
    step = len(chain) - 1 if m > 0 else 0
    return chain, max(step, 0)


def center(g: LieAlgebra) -> Subspace:
    """Joint kernel of all ad(X_i)."""
    m = g.dim
    stacked: list[Vec] = []
    for i in range(m):
        stacked.extend(tuple(r) for r in g.ad_matrix(unit_vec(m, i)))
    return Subspace.from_vectors(m, kernel_basis(stacked, m))


def derived_subalgebra(g: LieAlgebra) -> Subspace:
    """Span of all basis brackets [X_i, X_j]."""
    vectors = [g.bracket_basis(i, j) for i, j, _ in g.brackets]
    return Subspace.from_vectors(g.dim, vectors)


@dataclass(frozen=True)
class Flag:
    """A Jordan-Hoelder flag: row j of `rows` spans g_j over g_{j-1}.

    Every prefix span must be an ideal; `pair_support` caches, for each pair
    a < b, the stored-basis expansion of [rows[a], rows[b]] as a sparse list,
    so that skew forms in flag coordinates are cheap to assemble.
    """

    algebra: LieAlgebra
    rows: tuple[Vec, ...]
    pair_support: dict = field(default_factory=dict, repr=False, compare=False)

    def __post_init__(self):
        g = self.algebra
        support = {}
        for a in range(g.dim):
            for b in range(a + 1, g.dim):
                w = g.bracket(self.rows[a], self.rows[b])
                sparse = tuple((i, c) for i, c in enumerate(w) if c)
                if sparse:
                    support[(a, b)] = sparse
        object.__setattr__(self, "pair_support", support)

    @property
    def dim(self) -> int:
        return self.algebra.dim

    def prefix(self, j: int) -> Subspace:
        return Subspace.from_vectors(self.dim, self.rows[:j])


def jordan_holder_flag(g: LieAlgebra) -> Flag:
    """Deterministic Jordan-Hoelder flag refining the lower central series.

    Walking the series from its deepest nonzero member outward, each layer is
    filled with the echelon basis vectors of that member in pivot order.  The
    ideal property of every prefix is re-checked before returning.
    """
    chain, _ = lower_central_series(g)
    m = g.dim
    acc = RrefAccumulator(m)
    ordered: list[Vec] = []
    for member in reversed(chain):
        for row in member.basis:
            if acc.add(row):
                ordered.append(row)
    if len(ordered) != m:
        raise RuntimeError("flag construction failed to reach full dimension")

    # verify: [g, g_j] subset of g_j for every prefix
    for j in range(1, m + 1):
        pref = RrefAccumulator(m, ordered[:j])
        for i in range(m):
            ei = unit_vec(m, i)
            for a in range(j):
                w = g.bracket(ei, ordered[a])
                if not pref.contains(w):
                    raise RuntimeError(
                        f"flag prefix of dimension {j} is not an ideal "
                        f"(bracket with {g.basis_names[i]} escapes)"
                    )
    return Flag(g, tuple(ordered))


def is_ideal(g: LieAlgebra, sub: Subspace) -> tuple[bool, tuple[str, Vec, Vec] | None]:
    """Exact ideal test; on failure returns a witness (basis name, member, bracket)."""
    for i in range(g.dim):
        ei = unit_vec(g.dim, i)
        for v in sub.basis:
            w = g.bracket(ei, v)
            if not sub.contains(w):
                return False, (g.basis_names[i], v, w)
    return True, None


def quotient(g: LieAlgebra, ideal: Subspace) -> LieAlgebra:
    """g / ideal in the deterministic complement basis.

    The complement is the set of standard basis vectors at the non-pivot
    columns of the ideal's RREF, kept in index order.
    """
    ok, witness = is_ideal(g, ideal)
    if not ok:
        assert witness is not None
        raise NotAnIdealError(*witness)
    comp = quotient_complement(g, ideal)
    n = len(comp)
    names = tuple(g.basis_names[c] for c in comp)
    brackets: dict[tuple[int, int], dict[int, Fraction]] = {}
    for a in range(n):
        for b in range(a + 1, n):
            w = list(g.bracket(unit_vec(g.dim, comp[a]), unit_vec(g.dim, comp[b])))
            for row, p in zip(ideal.basis, ideal.pivots):
                c = w[p]
                if c:
                    for k in range(p, g.dim):
                        if row[k]:
                            w[k] -= c * row[k]
            coeffs = {idx: w[col] for idx, col in enumerate(comp) if w[col]}
            if coeffs:
                brackets[(a, b)] = coeffs
    return lie_algebra(n, names, brackets)


def quotient_complement(g: LieAlgebra, ideal: Subspace) -> tuple[int, ...]:
    """Stored-basis indices whose classes form the quotient basis."""
    pivot_set = set(ideal.pivots)
    return tuple(c for c in range(g.dim) if c not in pivot_set)


def direct_product(g1: LieAlgebra, g2: LieAlgebra) -> LieAlgebra:
    """Block-diagonal product; names are suffixed only on collision."""
    names1, names2 = list(g1.basis_names), list(g2.basis_names)
    if set(names1) & set(names2):
        names1 = [f"{s}.1" for s in names1]
        names2 = [f"{s}.2" for s in names2]
    d1 = g1.dim
    brackets: dict[tuple[int, int], dict[int, Fraction]] = {}
    for i, j, coeffs in g1.brackets:
        brackets[(i, j)] = {k: c for k, c in coeffs}
    for i, j, coeffs in g2.brackets:
        brackets[(i + d1, j + d1)] = {k + d1: c for k, c in coeffs}
    return lie_algebra(d1 + g2.dim, names1 + names2, brackets)


def change_basis(g: LieAlgebra, new_rows: Sequence[Sequence[Fraction]]) -> LieAlgebra:
    """Structure constants in the basis whose vectors are the given rows."""
    m = g.dim
    inv_t = invert(transpose(new_rows))  # sends old coordinates to new ones
    brackets: dict[tuple[int, int], dict[int, Fraction]] = {}
    for a in range(m):
        for b in range(a + 1, m):
            w_old = g.bracket(new_rows[a], new_rows[b])
            w_new = mat_vec(inv_t, w_old)
            coeffs = {k: c for k, c in enumerate(w_new) if c}
            if coeffs:
                brackets[(a, b)] = coeffs
    return lie_algebra(m, g.basis_names, brackets)
