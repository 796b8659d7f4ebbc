from fractions import Fraction

from nilorbit.linalg import (
    RrefAccumulator,
    Subspace,
    invert,
    kernel_basis,
    mat_vec,
    rank,
    rref,
    unit_vec,
    vec,
)

F = Fraction


def test_rref_canonical():
    rows = [vec([2, 4, 6]), vec([1, 2, 4])]
    red, pivots = rref(rows, 3)
    assert pivots == (0, 2)
    assert red == (vec([1, 2, 0]), vec([0, 0, 1]))


def test_rref_is_basis_independent():
    a = [vec([1, 1, 0]), vec([0, 1, 1])]
    b = [vec([1, 2, 1]), vec([2, 3, 1])]  # same row space
    assert rref(a, 3) == rref(b, 3)


def test_kernel_basis_annihilates():
    rows = [vec([1, 2, 3, 4]), vec([0, 1, 1, 1])]
    ker = kernel_basis(rows, 4)
    assert len(ker) == 2
    for v in ker:
        assert all(c == 0 for c in mat_vec(rows, v))


def test_kernel_of_full_rank_is_zero():
    rows = [unit_vec(3, i) for i in range(3)]
    assert kernel_basis(rows, 3) == ()


def test_rank_counts_independent_rows():
    rows = [vec([1, 0]), vec([2, 0]), vec([0, 5])]
    assert rank(rows, 2) == 2


def test_accumulator_membership():
    acc = RrefAccumulator(3)
    assert acc.add(vec([1, 1, 0]))
    assert not acc.add(vec([2, 2, 0]))
    assert acc.contains(vec([-3, -3, 0]))
    assert not acc.contains(vec([0, 1, 0]))


def test_invert_roundtrip():
    a = [vec([1, 2]), vec([1, 3])]
    inv = invert(a)
    prod = [mat_vec(a, col) for col in zip(*inv)]
    # a . inv == identity, read off column by column
    assert prod[0] == (F(1), F(0)) and prod[1] == (F(0), F(1))


def test_invert_singular_raises():
    import pytest

    with pytest.raises(ValueError):
        invert([vec([1, 2]), vec([2, 4])])


def test_subspace_sum_and_perp():
    s = Subspace.from_vectors(4, [vec([1, 0, 0, 0])])
    t = Subspace.from_vectors(4, [vec([0, 1, 0, 0])])
    st = s.sum(t)
    assert st.dim == 2
    p = st.perp()
    assert p.dim == 2
    for w in p.basis:
        assert all(sum(a * b for a, b in zip(w, v)) == 0 for v in st.basis)
    assert p.perp() == st


def test_subspace_zero_and_full():
    z = Subspace.zero(3)
    f = Subspace.full(3)
    assert z.dim == 0 and f.dim == 3
    assert f.contains_subspace(z)
    assert z.perp() == f
