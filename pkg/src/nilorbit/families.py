"""Example-family generators and machine verification of their properties.

The h(m, n) family has basis {X_1..X_m, Y_0..Y_n} with [X_i, Y_j] = Y_{i+j}
whenever i + j <= n; Heisenberg algebras are stored center-first so their
identity basis order is already a Jordan-Hoelder flag.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from random import Random
from typing import Sequence

from .algebra import (
    LieAlgebra,
    center,
    derived_subalgebra,
    jordan_holder_flag,
    lie_algebra,
    lower_central_series,
    quotient,
)
from .coadjoint import (
    Functional,
    bform_matrix,
    dual_functional_by_name,
    is_flat_orbit,
    isotropy,
    random_functional,
)
from .linalg import Subspace, rank, unit_vec
from .strata import generic_stratum


@dataclass(frozen=True)
class FamilySpec:
    kind: str  # "heisenberg" | "abelian" | "hmn" | "threadlike"
    params: tuple[int, ...]

    def __post_init__(self):
        kind, params = self.kind, self.params
        if kind == "heisenberg":
            if len(params) != 1 or params[0] < 1:
                raise ValueError("heisenberg(d) needs d >= 1")
        elif kind == "abelian":
            if len(params) != 1 or params[0] < 0:
                raise ValueError("abelian(k) needs k >= 0")
        elif kind == "hmn":
            if len(params) != 2 or params[0] < 1 or params[1] < 1:
                raise ValueError("hmn(m, n) needs m >= 1 and n >= 1")
        elif kind == "threadlike":
            if len(params) != 1 or params[0] < 3:
                raise ValueError("threadlike(n) needs n >= 3")
        else:
            raise ValueError(f"unknown family kind {kind!r}")


def heisenberg(d: int) -> LieAlgebra:
    """Dimension 2d+1, basis (Z, X_1..X_d, Y_1..Y_d), [X_i, Y_i] = Z."""
    names = ["Z"] + [f"X{i}" for i in range(1, d + 1)] + [f"Y{i}" for i in range(1, d + 1)]
    brackets = {(i, d + i): {0: Fraction(1)} for i in range(1, d + 1)}
    return lie_algebra(2 * d + 1, names, brackets)


def abelian(k: int) -> LieAlgebra:
    return lie_algebra(k, [f"A{i}" for i in range(1, k + 1)], {})


def hmn(m: int, n: int) -> LieAlgebra:
    """Basis (X_1..X_m, Y_0..Y_n); [X_i, Y_j] = Y_{i+j} for i + j <= n."""
    names = [f"X{i}" for i in range(1, m + 1)] + [f"Y{j}" for j in range(n + 1)]
    brackets = {}
    for i in range(1, m + 1):
        for j in range(n + 1):
            if i + j <= n:
                brackets[(i - 1, m + j)] = {m + i + j: Fraction(1)}
    return lie_algebra(m + n + 1, names, brackets)


def threadlike(n: int) -> LieAlgebra:
    """Filiform: basis (X_1..X_n), [X_1, X_j] = X_{j+1} for 2 <= j < n."""
    names = [f"X{i}" for i in range(1, n + 1)]
    brackets = {(0, j): {j + 1: Fraction(1)} for j in range(1, n - 1)}
    return lie_algebra(n, names, brackets)


def generate(spec: FamilySpec) -> LieAlgebra:
    if spec.kind == "heisenberg":
        return heisenberg(spec.params[0])
    if spec.kind == "abelian":
        return abelian(spec.params[0])
    if spec.kind == "hmn":
        return hmn(*spec.params)
    return threadlike(spec.params[0])


def _span_of_names(g: LieAlgebra, names: Sequence[str]) -> Subspace:
    return Subspace.from_vectors(
        g.dim, [unit_vec(g.dim, g.basis_names.index(s)) for s in names]
    )


@dataclass(frozen=True)
class VerifyItem:
    item: str
    applicable: bool
    passed: bool
    detail: str


@dataclass(frozen=True)
class HmnReport:
    m: int
    n: int
    items: tuple[VerifyItem, ...]
    notes: tuple[str, ...]

    @property
    def all_passed(self) -> bool:
        return all(it.passed for it in self.items if it.applicable)


def verify_hmn(m: int, n: int, seed: int = 0, flat_samples: int = 20, bound: int = 7) -> HmnReport:
    """Machine-check the stated structure of h(m, n), item by item.

    (i) center and nilpotency step; (ii) quotient by the line of Y_n
    reproduces h(m, n-1); (iii) isotropy at probes with <xi, Y_n> != 0 is
    the center, orbit dimension 2n; (iv) isotropy spans at the Y_k probes;
    (v) flatness of sampled orbits.

    The family is conventionally labeled n-step nilpotent, but its lower
    central series has n + 1 nonzero terms for every m, n >= 1 (already
    visible at n = 1, where [X_1, Y_0] = Y_1 is a nonzero bracket).  The
    verifier counts honestly: item (i) passes on the center content plus
    the computed step n + 1, and the off-by-one of the conventional label
    is recorded in the item detail and the notes instead of being silently
    redefined away.
    """
    g = hmn(m, n)
    rng = Random(seed)
    items = []
    notes = []

    # (i) nilpotency step and center
    _, step = lower_central_series(g)
    expected_step = n + 1
    step_ok = step == expected_step
    if n == 1:
        notes.append("edge case n=1: [X1, Y0] = Y1 is nonzero, so the step is 2, not 1")
    if step != n:
        notes.append(
            f"conventional n-step label undercounts: the series has {step} "
            f"nonzero terms, not n = {n}"
        )
    z = center(g)
    if m <= n:
        expected_center_names = [f"Y{n}"]
    else:
        expected_center_names = [f"Y{n}"] + [f"X{i}" for i in range(n + 1, m + 1)]
    center_ok = z == _span_of_names(g, expected_center_names)
    items.append(
        VerifyItem(
            "i",
            True,
            center_ok and step_ok,
            f"center spanned by {expected_center_names}: {center_ok}; "
            f"series has {step} nonzero terms (= n + 1: {step_ok}); "
            f"n-step label matches: {step == n}",
        )
    )

    # (ii) quotient by the center line reproduces h(m, n-1)
    if n >= 2:
        line = _span_of_names(g, [f"Y{n}"])
        q = quotient(g, line)
        target = hmn(m, n - 1)
        quo_ok = q.basis_names == target.basis_names and q.brackets == target.brackets
        items.append(
            VerifyItem("ii", True, quo_ok, f"quotient by R*Y{n} matches h({m},{n - 1}): {quo_ok}")
        )
    else:
        items.append(VerifyItem("ii", False, True, "needs n >= 2"))

    # (iii) isotropy = center at probes with <xi, Y_n> != 0 (m >= n)
    if m >= n:
        ok = True
        details = []
        for xi in _probes_iii(g, m, n, rng, bound):
            iso, odim = isotropy(g, xi)
            good = iso == z and odim == 2 * n
            ok = ok and good
            details.append(good)
        items.append(
            VerifyItem(
                "iii",
                True,
                ok,
                f"isotropy equals center with orbit dimension {2 * n} at {len(details)} probes: {ok}",
            )
        )
    else:
        items.append(VerifyItem("iii", False, True, "needs m >= n"))

    # (iv) isotropy spans at Y_k probes, 1 <= k < n <= m
    if m >= n >= 2:
        ok = True
        for k in range(1, n):
            expected = _span_of_names(
                g,
                [f"Y{j}" for j in range(k, n + 1)] + [f"X{i}" for i in range(k + 1, m + 1)],
            )
            for xi in _probes_iv(g, m, n, k, rng, bound):
                iso, _ = isotropy(g, xi)
                ok = ok and iso == expected
        items.append(
            VerifyItem("iv", True, ok, f"isotropy spans at Y_k probes for k = 1..{n - 1}: {ok}")
        )
    else:
        items.append(VerifyItem("iv", False, True, "needs m >= n >= 2"))

    # (v) flatness of sampled orbits
    flat_ok = True
    for s in range(flat_samples):
        xi = random_functional(g, rng, bound)
        res = is_flat_orbit(g, xi, samples=4, seed=seed + s, bound=bound)
        flat_ok = flat_ok and res.flat
    items.append(
        VerifyItem("v", True, flat_ok, f"{flat_samples} sampled orbits all flat: {flat_ok}")
    )

    return HmnReport(m, n, tuple(items), tuple(notes))


def _probes_iii(g: LieAlgebra, m: int, n: int, rng: Random, bound: int):
    """Y_n^* and a perturbation keeping <xi, Y_n> = 1, vanishing nowhere required."""
    base = dual_functional_by_name(g, f"Y{n}")
    yield base
    coords = list(base.coords)
    for i, name in enumerate(g.basis_names):
        if name != f"Y{n}":
            coords[i] = Fraction(rng.randint(-bound, bound))
    yield Functional(g, tuple(coords))


def _probes_iv(g: LieAlgebra, m: int, n: int, k: int, rng: Random, bound: int):
    """Y_k^* and a perturbation vanishing on Y_{k+1}..Y_n, <xi, Y_k> = 1."""
    base = dual_functional_by_name(g, f"Y{k}")
    yield base
    coords = list(base.coords)
    forbidden = {f"Y{j}" for j in range(k, n + 1)}
    for i, name in enumerate(g.basis_names):
        if name not in forbidden:
            coords[i] = Fraction(rng.randint(-bound, bound))
    yield Functional(g, tuple(coords))


@dataclass(frozen=True)
class Recognition:
    d: int
    k: int
    note: str | None


def recognize_heisenberg_times_abelian(g: LieAlgebra) -> Recognition | None:
    """Detect g isomorphic to heisenberg(d) x abelian(k); None otherwise.

    The test is basis-independent: [g, g] must be a central line R*z, and
    the skew form of any functional with <xi, z> = 1 must have rank 2d and
    kernel of dimension k + 1 containing z.  When k = 0 and the symbolic
    index is 1, the note records that the one-layer-over-characters picture
    applies.
    """
    der = derived_subalgebra(g)
    if der.dim != 1:
        return None
    z_vec = der.basis[0]
    if not center(g).contains(z_vec):
        return None
    pivot = der.pivots[0]
    xi = Functional(g, unit_vec(g.dim, pivot))  # <xi, z> = 1 since z is an RREF row
    mat = bform_matrix(g, xi)
    r = rank(mat, g.dim)
    if r % 2 != 0 or r == 0:
        return None
    iso, _ = isotropy(g, xi)
    if not iso.contains(z_vec):
        return None
    d = r // 2
    k = g.dim - 2 * d - 1
    if iso.dim != k + 1:
        return None
    note = None
    if k == 0:
        result = generic_stratum(jordan_holder_flag(g), mode="symbolic")
        if result.ind == 1:
            note = "index 1 confirmed: single generic layer over the characters"
    return Recognition(d, k, note)


def random_unimodular(dim: int, rng: Random, entry_bound: int = 3, ops: int | None = None) -> list[list[Fraction]]:
    """Random unimodular integer matrix with entries within the bound.

    Built from elementary row operations (shears, swaps, sign flips); a shear
    is skipped when it would push an entry outside [-entry_bound, entry_bound].
    """
    if dim == 0:
        return []
    mat = [[Fraction(1) if i == j else Fraction(0) for j in range(dim)] for i in range(dim)]
    if ops is None:
        ops = 6 * dim * dim
    for _ in range(ops):
        kind = rng.randrange(3)
        i = rng.randrange(dim)
        j = rng.randrange(dim)
        if kind == 0 and i != j:
            c = rng.choice([-2, -1, 1, 2])
            candidate = [mat[i][t] + c * mat[j][t] for t in range(dim)]
            if all(abs(v) <= entry_bound for v in candidate):
                mat[i] = candidate
        elif kind == 1 and i != j:
            mat[i], mat[j] = mat[j], mat[i]
        elif kind == 2:
            mat[i] = [-v for v in mat[i]]
    return mat
