import numpy as np
import pytest

from algebra.linalg import (
    Matrix,
    conj_transpose,
    hermitian_inner,
    mat_inv,
    mat_mul,
    null_space,
    rank,
    rref,
    transpose,
    vec_mat,
    vstack,
)
from utils.errors import DimensionMismatch, FieldMismatch, Singular


def test_identity_is_neutral(gf4):
    A = Matrix(gf4, [[1, 2, 3], [0, 1, 2]])
    assert Matrix.identity(gf4, 2) @ A == A
    assert A @ Matrix.identity(gf4, 3) == A


def test_inverse_roundtrip(gf9):
    # unit triangular factors make A invertible whatever the off-diagonal entries
    L = Matrix(gf9, [[1, 0, 0, 0], [3, 1, 0, 0], [5, 7, 1, 0], [2, 8, 4, 1]])
    U = Matrix(gf9, [[1, 2, 4, 6], [0, 1, 6, 3], [0, 0, 1, 8], [0, 0, 0, 1]])
    A = L @ U
    assert rank(A) == 4
    inv = mat_inv(A)
    assert A @ inv == Matrix.identity(gf9, 4)
    assert inv @ A == Matrix.identity(gf9, 4)


def test_inverse_of_2x2_over_gf4(gf4):
    A = Matrix(gf4, [[1, 2], [2, 1]])
    inv = mat_inv(A)
    assert A @ inv == Matrix.identity(gf4, 2)
    assert inv @ A == Matrix.identity(gf4, 2)


def test_singular_matrix(gf4):
    with pytest.raises(Singular):
        mat_inv(Matrix(gf4, [[1, 2], [2, 3]]))


def test_dimension_checks(gf4):
    A = Matrix(gf4, [[1, 0, 1]])
    with pytest.raises(DimensionMismatch):
        mat_mul(A, A)
    with pytest.raises(DimensionMismatch):
        mat_inv(A)
    with pytest.raises(DimensionMismatch):
        vec_mat(gf4, [1, 2], A)


def test_entries_must_belong_to_field(gf4, gf9):
    with pytest.raises(FieldMismatch):
        Matrix(gf4, [[0, 4]])
    with pytest.raises(FieldMismatch):
        mat_mul(Matrix(gf4, [[1]]), Matrix(gf9, [[1]]))


def test_rref_pivots_and_rank(gf4):
    A = Matrix(gf4, [[1, 1, 0], [2, 2, 0], [0, 1, 1]])
    R, pivots, r = rref(A)
    assert r == 2
    assert pivots == (0, 1)
    assert R.row(2) == (0, 0, 0)


def test_null_space_is_annihilated(gf9):
    A = Matrix(gf9, [[1, 2, 0, 1], [0, 1, 1, 3]])
    N = null_space(A)
    assert N.rows == 2
    assert not (A @ transpose(N)).data.any()


def test_conj_transpose(gf4):
    A = Matrix(gf4, [[1, 2, 3]])
    assert conj_transpose(A).tolist() == [[1], [3], [2]]


def test_vstack_and_vec_mat(gf4):
    A = vstack(Matrix(gf4, [[1, 0]]), Matrix(gf4, [[0, 1]]))
    assert A == Matrix.identity(gf4, 2)
    assert vec_mat(gf4, [2, 3], A) == (2, 3)


def test_hermitian_inner_is_conjugate_symmetric(gf4):
    u, v = [1, 2, 3], [2, 2, 1]
    assert hermitian_inner(gf4, u, v) == gf4.conjugate(hermitian_inner(gf4, v, u))
    # <w, w> = w * w^2 = 1
    assert hermitian_inner(gf4, [2], [2]) == 1


def test_text_format(gf4):
    A = Matrix(gf4, [[1, 2, 3], [0, 1, 1]])
    text = A.to_text()
    assert text.splitlines()[0] == '2 3 2 2'
    assert Matrix.from_text(text) == A


def test_empty_matrix_keeps_columns(gf4):
    Z = Matrix(gf4, [], cols=5)
    assert Z.shape == (0, 5)
    assert vec_mat(gf4, [], Z) == (0, 0, 0, 0, 0)


def _random_matrix(field, rows, cols, seed):
    rng = np.random.default_rng(seed)
    return Matrix(field, rng.integers(0, field.order, size=(rows, cols)), cols=cols)


@pytest.mark.parametrize('seed', range(5))
def test_dagger_reverses_products(gf4, gf9, seed):
    for field in (gf4, gf9):
        A = _random_matrix(field, 3, 4, seed)
        B = _random_matrix(field, 4, 2, seed + 100)
        assert conj_transpose(A @ B) == conj_transpose(B) @ conj_transpose(A)


@pytest.mark.parametrize('seed', range(5))
def test_rref_is_idempotent(gf9, seed):
    R, pivots, r = rref(_random_matrix(gf9, 4, 6, seed))
    again, pivots_again, r_again = rref(R)
    assert again == R
    assert (pivots_again, r_again) == (pivots, r)


@pytest.mark.parametrize('seed', range(5))
def test_rank_plus_nullity(gf4, gf9, seed):
    for field in (gf4, gf9):
        A = _random_matrix(field, 3, 6, seed)
        # a dependent fourth row keeps the rank below the row count
        extra = [field.add(a, b) for a, b in zip(A.row(0), A.row(1))]
        A = vstack(A, Matrix(field, [extra]))
        assert rank(A) <= 3
        N = null_space(A)
        assert rank(A) + N.rows == A.cols
        if N.rows:
            assert not (A @ transpose(N)).data.any()
