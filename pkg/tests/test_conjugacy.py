from functools import lru_cache
from itertools import product
from math import gcd

import hypothesis.strategies as st
import pytest
from hypothesis import given

from holoforge import data
from holoforge.conjugacy import (
    Verdict,
    cyclic_conjugate_field,
    cyclic_conjugate_ring,
    holomorph_isomorphic,
    verify_witness,
)
from holoforge.errors import NotInvertible, RingMismatch, SizeMismatch
from holoforge.groups.library import general_linear
from holoforge.matrix import Matrix, is_invertible, mat_inv, matrix_order, reduce_mod_p
from holoforge.normal_forms import jordan_block
from holoforge.ring import RingSpec

from conftest import invertible_matrices

F2, Z4 = RingSpec(2), RingSpec(2, 2)


@lru_cache(maxsize=None)
def ring_gl(p, m, n):
    ring = RingSpec(p, m)
    out = []
    for entries in product(range(ring.modulus), repeat=n * n):
        a = Matrix(ring, n, n, entries)
        if is_invertible(a):
            out.append(a)
    return out


def brute_cyclic_conjugate(a, b, gl):
    o = matrix_order(b)
    if matrix_order(a) != o:
        return False
    targets = {b ** i for i in range(1, o + 1) if gcd(i, o) == 1}
    return any(x @ a @ mat_inv(x) in targets for x in gl)


@pytest.mark.parametrize("p,n", [(2, 2), (3, 2)])
def test_field_decision_matches_brute_force(p, n):
    gl = general_linear(p, n)
    step = 1 if p == 2 else 7
    for a in gl[::step]:
        for b in gl[::step]:
            dec = cyclic_conjugate_field(a, b)
            assert dec.is_conjugate == brute_cyclic_conjugate(a, b, gl)
            if dec.is_conjugate:
                assert verify_witness(a, b, dec.exponent, dec.conjugator)
            assert dec.verdict == cyclic_conjugate_field(b, a).verdict


def test_field_examples():
    j = jordan_block(F2, 2)
    jt = Matrix.from_rows(F2, [[1, 0], [1, 1]])
    dec = cyclic_conjugate_field(j, j)
    assert dec.is_conjugate and dec.exponent == 1 and dec.conjugator == Matrix.identity(F2, 2)
    assert cyclic_conjugate_field(j, jt).is_conjugate
    assert cyclic_conjugate_field(j, Matrix.identity(F2, 2)).verdict is Verdict.NOT_CONJUGATE
    abar, bbar = reduce_mod_p(data.matrix("final.A")), reduce_mod_p(data.matrix("final.B"))
    assert holomorph_isomorphic(abar, bbar)
    assert not holomorph_isomorphic(j, Matrix.identity(F2, 2))


def test_ring_decision_is_exact_on_gl2_z4():
    gl = ring_gl(2, 2, 2)
    for a in gl[::5]:
        for b in gl[::3]:
            dec = cyclic_conjugate_ring(a, b)
            truth = brute_cyclic_conjugate(a, b, gl)
            assert dec.verdict is not Verdict.UNKNOWN
            assert dec.is_conjugate == truth
            if truth:
                assert verify_witness(a, b, dec.exponent, dec.conjugator)


@given(invertible_matrices([RingSpec(2, 3), RingSpec(3, 2)], max_n=3), st.data())
def test_ring_finds_planted_conjugator(a, draw):
    x = draw.draw(invertible_matrices([a.ring], n=a.rows))
    b = x @ a @ mat_inv(x)
    dec = cyclic_conjugate_ring(a, b, budget=10**4)
    assert dec.verdict is Verdict.CONJUGATE
    assert verify_witness(a, b, dec.exponent, dec.conjugator)


@given(invertible_matrices([RingSpec(2, 2), RingSpec(2, 3), RingSpec(3, 2)], max_n=3),
       invertible_matrices([RingSpec(2, 2), RingSpec(2, 3), RingSpec(3, 2)], max_n=3))
def test_ring_never_contradicts_reduction(a, b):
    if a.ring != b.ring or a.shape != b.shape:
        return
    dec = cyclic_conjugate_ring(a, b, budget=200)
    if not cyclic_conjugate_field(reduce_mod_p(a), reduce_mod_p(b)).is_conjugate:
        assert dec.verdict is Verdict.NOT_CONJUGATE
    if dec.is_conjugate:
        assert verify_witness(a, b, dec.exponent, dec.conjugator)


def test_worked_ring_refutation():
    A, B = data.matrix("final.A"), data.matrix("final.B")
    dec = cyclic_conjugate_ring(A, B)
    assert dec.verdict is Verdict.NOT_CONJUGATE
    assert dec.separating_invariant == "determinant: det A = 7, det(B^i) = 3 for all i coprime to 24"
    same = cyclic_conjugate_ring(A, A)
    assert same.is_conjugate and same.exponent == 1


def test_supplied_witness_and_unknown():
    A = data.matrix("final.A")
    x = Matrix.from_rows(A.ring, [[1, 2, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]])
    b = x @ A @ mat_inv(x)
    dec = cyclic_conjugate_ring(A, b, budget=1, witness=(1, x))
    assert dec.is_conjugate and dec.conjugator == x
    # a tiny budget can leave the question open, but never produces a wrong answer
    assert cyclic_conjugate_ring(A, b, budget=1).verdict in (Verdict.CONJUGATE, Verdict.UNKNOWN)


def test_precondition_errors():
    with pytest.raises(NotInvertible):
        cyclic_conjugate_field(Matrix.zeros(F2, 2), Matrix.identity(F2, 2))
    with pytest.raises(RingMismatch):
        cyclic_conjugate_ring(Matrix.identity(Z4, 2), Matrix.identity(F2, 2))
    with pytest.raises(SizeMismatch):
        cyclic_conjugate_field(Matrix.identity(F2, 2), Matrix.identity(F2, 3))
