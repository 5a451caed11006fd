from itertools import permutations

import pytest
from hypothesis import given

from holoforge import data
from holoforge.errors import DimensionMismatch, NotInvertible, ParseError, RingMismatch
from holoforge.matrix import (
    Matrix,
    det,
    format_matrix,
    is_invertible,
    lift,
    mat_inv,
    matrix_order,
    parse_matrix,
    reduce_mod_p,
)
from holoforge.ring import RingSpec

from conftest import invertible_matrices, matrix_pairs, square_matrices

Z8 = RingSpec(2, 3)


def naive_mul(a, b):
    q = a.ring.modulus
    return [[sum(a.row(i)[k] * b.row(k)[j] for k in range(a.cols)) % q for j in range(b.cols)]
            for i in range(a.rows)]


def leibniz_det(a):
    n = a.rows
    total = 0
    for perm in permutations(range(n)):
        sign = 1
        for i in range(n):
            for j in range(i + 1, n):
                if perm[i] > perm[j]:
                    sign = -sign
        term = sign
        for i in range(n):
            term *= a.row(i)[perm[i]]
        total += term
    return total % a.ring.modulus


@given(matrix_pairs())
def test_product_matches_schoolbook(ab):
    a, b = ab
    assert (a @ b).to_rows() == naive_mul(a, b)


@given(square_matrices())
def test_det_matches_leibniz(a):
    assert det(a) == leibniz_det(a)


@given(matrix_pairs())
def test_det_is_multiplicative(ab):
    a, b = ab
    assert det(a @ b) == det(a) * det(b) % a.ring.modulus


@given(invertible_matrices())
def test_inverse_roundtrip(a):
    ident = Matrix.identity(a.ring, a.rows)
    inv = mat_inv(a)
    assert a @ inv == ident and inv @ a == ident


@given(square_matrices())
def test_invertible_iff_det_is_unit(a):
    assert is_invertible(a) == (det(a) % a.ring.p != 0)


@given(invertible_matrices(max_n=3))
def test_order_is_least_period(a):
    k = matrix_order(a)
    ident = Matrix.identity(a.ring, a.rows)
    assert a ** k == ident
    assert all(a ** j != ident for j in range(1, k))


@given(square_matrices())
def test_text_format_roundtrip(a):
    assert parse_matrix(format_matrix(a)) == a


def test_worked_powers_of_A():
    A = data.matrix("final.A")
    assert (A @ A).row(0) == (5, 5, 6, 6)
    assert (A @ A @ A).row(0) == tuple(x % 8 for x in (3, 4, 2, -1))
    assert Matrix.identity(Z8, 4) @ A == A
    for k in (2, 3, 6, 12):
        assert A ** k == data.matrix(f"final.A^{k}")


def test_worked_determinants_and_orders():
    A, B = data.matrix("final.A"), data.matrix("final.B")
    assert det(A) == 7
    assert det(B) == 3
    assert matrix_order(A) == 24
    assert matrix_order(reduce_mod_p(A)) == 6
    assert reduce_mod_p(A).row(0) == (1, 1, 1, 0)
    assert A @ mat_inv(A) == Matrix.identity(Z8, 4)


def test_zero_divisor_diagonal_is_singular():
    with pytest.raises(NotInvertible):
        mat_inv(Matrix.diag(Z8, [2, 1]))


def test_shape_and_ring_errors():
    a = Matrix.identity(RingSpec(2), 2)
    with pytest.raises(DimensionMismatch):
        a @ Matrix.identity(RingSpec(2), 3)
    with pytest.raises(RingMismatch):
        a @ Matrix.identity(RingSpec(3), 2)
    with pytest.raises(RingMismatch):
        lift(a, RingSpec(3, 2))


@pytest.mark.parametrize("text", ["", "2 1 2 2\n1 0\n", "2 1 2 2\n1 x\n0 1\n", "4 1 1 1\n1\n"])
def test_parse_rejects_bad_input(text):
    with pytest.raises(ParseError):
        parse_matrix(text)


def test_reduce_of_field_matrix_is_identity_map():
    a = Matrix.from_rows(RingSpec(3), [[1, 2], [0, 1]])
    assert reduce_mod_p(a) is a
