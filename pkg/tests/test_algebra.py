from fractions import Fraction
from random import Random

import pytest

from nilorbit.algebra import (
    NotAnIdealError,
    center,
    change_basis,
    derived_subalgebra,
    direct_product,
    is_ideal,
    jordan_holder_flag,
    lie_algebra,
    lower_central_series,
    quotient,
    validate_algebra,
)
from nilorbit.families import abelian, heisenberg, hmn, random_unimodular, threadlike
from nilorbit.linalg import Subspace, unit_vec, vec

F = Fraction


def span_of(g, *names):
    return Subspace.from_vectors(g.dim, [unit_vec(g.dim, g.basis_names.index(s)) for s in names])


# --- validate_algebra ------------------------------------------------------


def test_validate_h12_and_abelian():
    assert validate_algebra(hmn(1, 2)) == []
    assert validate_algebra(abelian(4)) == []


def test_validate_detects_broken_nilpotency():
    # h3 with [X, Y] redirected to X: the series stabilizes at span{X}
    bad = lie_algebra(3, ["Z", "X", "Y"], {(1, 2): {1: F(1)}})
    diags = validate_algebra(bad)
    assert [d.kind for d in diags] == ["non_nilpotent"]
    assert diags[0].data == (vec([0, 1, 0]),)


def test_validate_detects_jacobi_failure():
    bad = lie_algebra(5, list("abcde"), {(0, 1): {3: F(1)}, (2, 3): {4: F(1)}})
    diags = validate_algebra(bad)
    assert any(d.kind == "jacobi" and d.data == (1, 2, 3) for d in diags)


def test_validate_reports_malformed_indices():
    from nilorbit.algebra import LieAlgebra

    bad = LieAlgebra(2, ("a", "b"), ((0, 5, ((0, F(1)),)),))
    diags = validate_algebra(bad)
    assert diags and diags[0].kind == "malformed"


def test_validate_all_generated_families():
    algebras = [heisenberg(d) for d in (1, 2, 3)]
    algebras += [abelian(k) for k in (0, 1, 5)]
    algebras += [threadlike(n) for n in (3, 4, 5)]
    algebras += [hmn(m, n) for m in range(1, 7) for n in range(1, 7)]
    for g in algebras:
        assert validate_algebra(g) == []


# --- series, center, derived ----------------------------------------------


def test_series_heisenberg_and_abelian():
    _, step = lower_central_series(heisenberg(1))
    assert step == 2
    _, step = lower_central_series(abelian(4))
    assert step == 1


def test_series_hmn_has_n_plus_one_nonzero_terms():
    # the conventional "n-step" label undercounts by one: [X_1, Y_{n-1}] = Y_n
    # keeps the (n+1)-st term alive; see the h(2,2) chain below
    for m in range(1, 6):
        for n in range(1, m + 1):
            chain, step = lower_central_series(hmn(m, n))
            assert step == n + 1
            assert chain[0].dim == m + n + 1 and chain[-1].dim == 0
            dims = [s.dim for s in chain]
            assert dims == sorted(dims, reverse=True)


def test_series_h22_chain_explicit():
    g = hmn(2, 2)
    chain, step = lower_central_series(g)
    assert step == 3
    assert chain[1] == span_of(g, "Y1", "Y2")
    assert chain[2] == span_of(g, "Y2")
    assert chain[3].dim == 0


def test_center_hmn_cases():
    g = hmn(2, 2)
    assert center(g) == span_of(g, "Y2")
    g = hmn(3, 2)
    assert center(g) == span_of(g, "Y2", "X3")
    g = abelian(4)
    assert center(g) == Subspace.full(4)


def test_derived_subalgebra():
    for d in (1, 2, 3):
        g = heisenberg(d)
        assert derived_subalgebra(g) == span_of(g, "Z")
    assert derived_subalgebra(abelian(3)).dim == 0
    g = hmn(3, 2)
    assert derived_subalgebra(g) == span_of(g, "Y1", "Y2")


# --- flags ------------------------------------------------------------------


def test_flag_h3_is_identity():
    g = heisenberg(1)  # stored order (Z, X, Y)
    flag = jordan_holder_flag(g)
    assert flag.rows == tuple(unit_vec(3, i) for i in range(3))


def test_flag_abelian_is_identity():
    flag = jordan_holder_flag(abelian(3))
    assert flag.rows == tuple(unit_vec(3, i) for i in range(3))


def test_flag_h22_starts_with_deepest_term():
    g = hmn(2, 2)
    flag = jordan_holder_flag(g)
    assert flag.rows[0] == unit_vec(5, g.basis_names.index("Y2"))


def test_flag_prefixes_are_ideals():
    for g in (heisenberg(2), hmn(3, 2), threadlike(5)):
        flag = jordan_holder_flag(g)
        for j in range(1, g.dim + 1):
            prefix = Subspace.from_vectors(g.dim, flag.rows[:j])
            for i in range(g.dim):
                for row in flag.rows[:j]:
                    assert prefix.contains(g.bracket(unit_vec(g.dim, i), row))


# --- quotients and products --------------------------------------------------


def test_quotient_hmn_by_center_line():
    for m in range(2, 5):
        for n in range(2, m + 1):
            g = hmn(m, n)
            q = quotient(g, span_of(g, f"Y{n}"))
            t = hmn(m, n - 1)
            assert q.basis_names == t.basis_names
            assert q.brackets == t.brackets


def test_quotient_by_zero_is_identity():
    g = hmn(2, 2)
    q = quotient(g, Subspace.zero(g.dim))
    assert q.brackets == g.brackets and q.basis_names == g.basis_names


def test_quotient_h3_by_center_is_abelian():
    g = heisenberg(1)
    q = quotient(g, span_of(g, "Z"))
    assert q.dim == 2 and q.brackets == ()


def test_quotient_rejects_non_ideal():
    g = heisenberg(1)
    with pytest.raises(NotAnIdealError):
        quotient(g, span_of(g, "X1"))


def test_quotient_by_non_coordinate_ideal():
    g = abelian(3)
    q = quotient(g, Subspace.from_vectors(3, [vec([1, 1, 0])]))
    assert q.dim == 2 and q.basis_names == ("A2", "A3")
    g = heisenberg(1)
    skew = Subspace.from_vectors(3, [vec([1, 0, 0]), vec([0, 1, 1])])
    q = quotient(g, skew)
    assert q.dim == 1 and q.brackets == ()


def test_direct_product():
    g = direct_product(heisenberg(1), abelian(2))
    assert g.dim == 5
    assert center(g).dim == 3
    assert direct_product(abelian(1), abelian(1)).brackets == ()
    g2 = direct_product(heisenberg(2), abelian(0))
    assert g2.brackets == heisenberg(2).brackets


def test_center_dim_additive_over_abelian_factor():
    for g in (heisenberg(2), hmn(2, 2), threadlike(4)):
        for k in (1, 3):
            prod = direct_product(g, abelian(k))
            assert center(prod).dim == center(g).dim + k


def test_product_renames_on_collision():
    g = direct_product(heisenberg(1), heisenberg(1))
    assert len(set(g.basis_names)) == 6


# --- basis change -----------------------------------------------------------


def test_change_basis_permutation_explicit():
    # h3 rewritten in the order (X, Y, Z): the only bracket becomes [1, 2] -> 3
    g = heisenberg(1)
    perm = [unit_vec(3, 1), unit_vec(3, 2), unit_vec(3, 0)]
    h = change_basis(g, perm)
    assert h.brackets == ((0, 1, ((2, F(1)),)),)


def test_change_basis_preserves_invariants():
    rng = Random(11)
    for g in (heisenberg(2), hmn(2, 2)):
        for _ in range(3):
            p = random_unimodular(g.dim, rng)
            h = change_basis(g, p)
            assert validate_algebra(h) == []
            assert center(h).dim == center(g).dim
            assert derived_subalgebra(h).dim == derived_subalgebra(g).dim
            _, step_g = lower_central_series(g)
            _, step_h = lower_central_series(h)
            assert step_g == step_h


def test_is_ideal_witness():
    g = heisenberg(1)
    ok, witness = is_ideal(g, span_of(g, "X1"))
    assert not ok and witness is not None
    name, member, escaped = witness
    assert not span_of(g, "X1").contains(escaped)
