import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from netalg.field import (
    GF,
    QQ,
    FieldMismatch,
    Matrix,
    Subspace,
    kernel_basis,
    random_matrix,
    rref,
    subspace_ops,
)


def test_field_spec_rejects_bad_moduli():
    with pytest.raises(AssertionError):
        GF(4)
    with pytest.raises(AssertionError):
        GF(2)
    with pytest.raises(AssertionError):
        GF(3)


def test_exact_arithmetic_roundtrip():
    F = QQ
    a, b = Fraction(7, 3), Fraction(-5, 11)
    assert F.mul(F.div(a, b), F.div(b, a)) == 1
    G = GF(101)
    x = G.of(Fraction(7, 3))
    assert G.mul(x, G.of(3)) == G.of(7)


def test_rref_identity_and_zero():
    F = QQ
    I3 = Matrix.identity(3, F)
    R, piv, rank = rref(I3)
    assert R == I3 and rank == 3 and piv == [0, 1, 2]
    Z = Matrix.zero(2, 4, F)
    R, piv, rank = rref(Z)
    assert R == Z and rank == 0


def test_rref_dependent_rows_gf5():
    F = GF(5)
    M = Matrix.from_ints([[1, 2], [2, 4]], F)
    _, _, rank = rref(M)
    assert rank == 1


def test_kernel_basis_examples():
    F = QQ
    assert kernel_basis(Matrix.identity(3, F)).rows == 0
    assert kernel_basis(Matrix.zero(2, 3, F)).rows == 3
    K = kernel_basis(Matrix.from_ints([[1, 1, 0]], F))
    assert K.rows == 2
    for v in K.entries:
        assert v[0] + v[1] == 0


def test_subspace_ops_examples():
    F = QQ
    A = Subspace.from_vectors([[1, 0, 0, 0], [0, 1, 0, 0]], 4, F)
    B = Subspace.from_vectors([[0, 0, 1, 0], [0, 0, 0, 1]], 4, F)
    r = subspace_ops(A, B)
    assert r["intersection"].dim == 0 and r["sum"].dim == 4
    assert not r["containment"]
    r2 = subspace_ops(A, A)
    assert r2["intersection"] == A and r2["containment"]


def test_subspace_ops_common_vector():
    # row spans of {x^2, xy} and {xy, yz} in the 6 conic coordinates
    F = QQ
    x2 = [1, 0, 0, 0, 0, 0]
    xy = [0, 1, 0, 0, 0, 0]
    yz = [0, 0, 0, 0, 1, 0]
    A = Subspace.from_vectors([x2, xy], 6, F)
    B = Subspace.from_vectors([xy, yz], 6, F)
    inter = A.intersect(B)
    assert inter.dim == 1 and inter.contains(xy)


def test_field_mismatch():
    with pytest.raises(FieldMismatch):
        Matrix.identity(2, QQ).stack(Matrix.identity(2, GF(5)))


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**6), st.integers(1, 6), st.integers(1, 6))
def test_rref_idempotent_and_rank_nullity(seed, m, n):
    rng = random.Random(seed)
    for F in (GF(101), QQ):
        M = random_matrix(m, n, F, rng)
        R, piv, rank = rref(M)
        R2, _, rank2 = rref(R)
        assert R2 == R and rank2 == rank
        assert rank + kernel_basis(M).rows == n


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 10**6), st.integers(1, 4), st.integers(1, 4))
def test_grassmann_dimension_identity(seed, da, db):
    rng = random.Random(seed)
    F = GF(101)
    n = 6
    A = Subspace(random_matrix(da, n, F, rng))
    B = Subspace(random_matrix(db, n, F, rng))
    r = subspace_ops(A, B)
    assert A.dim + B.dim == r["sum"].dim + r["intersection"].dim
