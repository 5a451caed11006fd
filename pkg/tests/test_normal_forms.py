from functools import lru_cache
from itertools import product

import hypothesis.strategies as st
import pytest
from hypothesis import given

from holoforge import data
from holoforge.errors import NotInvariant, NotSimilar, NotUnipotent
from holoforge.groups.library import general_linear
from holoforge.matrix import Matrix, mat_inv, matrix_order, reduce_mod_p
from holoforge.normal_forms import (
    UnipotentPartition,
    frobenius_power_similar,
    image_basis,
    invariant_factors,
    is_p_regular,
    is_similar,
    jordan_block,
    jordan_from_partition,
    rational_canonical_form,
    rcf,
    restriction,
    similarity_witness,
    unipotent_partition,
)
from holoforge.poly import Polynomial, companion
from holoforge.ring import RingSpec

from conftest import FIELDS, invertible_matrices, square_matrices

F2, F3 = RingSpec(2), RingSpec(3)


@lru_cache(maxsize=None)
def similarity_classes(p, n):
    """Conjugacy classes of all n x n matrices over F_p, by brute force."""
    ring = RingSpec(p)
    gl = general_linear(p, n)
    inv = {g: mat_inv(g) for g in gl}
    label = {}
    for entries in product(range(p), repeat=n * n):
        a = Matrix(ring, n, n, entries)
        if a in label:
            continue
        for g in gl:
            label[g @ a @ inv[g]] = a
    return label


@pytest.mark.parametrize("p,n", [(2, 2), (3, 2), (2, 3)])
def test_similarity_matches_brute_force(p, n):
    label = similarity_classes(p, n)
    reps = sorted(set(label.values()), key=lambda m: m.entries)
    forms = {rational_canonical_form(r) for r in reps}
    # one canonical form per similarity class
    assert len(forms) == len(reps)
    for a, r in list(label.items())[:: max(1, len(label) // 150)]:
        assert rational_canonical_form(a) == rational_canonical_form(r)


@given(square_matrices(FIELDS, max_n=5))
def test_rcf_witness_and_idempotence(a):
    form, x = rcf(a)
    assert x @ a @ mat_inv(x) == form
    assert rational_canonical_form(form) == form
    chain = invariant_factors(a)
    assert chain.product().degree == a.rows
    assert Matrix.block_diag([companion(f) for f in chain.factors if f.degree > 0]) == form


@given(square_matrices(FIELDS, max_n=4), st.data())
def test_similar_to_random_conjugate(a, draw):
    x = draw.draw(invertible_matrices([a.ring], n=a.rows))
    b = x @ a @ mat_inv(x)
    assert is_similar(a, b)
    w = similarity_witness(a, b)
    assert w @ a @ mat_inv(w) == b


def test_worked_similarity():
    abar = reduce_mod_p(data.matrix("final.A"))
    bbar = reduce_mod_p(data.matrix("final.B"))
    assert is_similar(abar, bbar)
    x = similarity_witness(abar, bbar)
    assert x @ abar @ mat_inv(x) == bbar
    assert len(invariant_factors(abar).factors) == 1
    assert rational_canonical_form(abar) == companion(Polynomial(2, [1, 1, 0, 1, 1]))
    assert not is_p_regular(abar)
    assert not frobenius_power_similar(abar)


def test_small_invariant_factor_chains():
    x1 = Polynomial(2, [1, 1])
    assert invariant_factors(Matrix.identity(F2, 3)).factors == (x1, x1, x1)
    a = Matrix.block_diag([jordan_block(F2, 2), jordan_block(F2, 1)])
    assert invariant_factors(a).factors == (x1, x1 ** 2)
    c = companion(Polynomial(2, [1, 1, 1]))
    form, x = rcf(c)
    assert form == c and x == Matrix.identity(F2, 2)
    assert is_p_regular(c) and frobenius_power_similar(c)
    assert not frobenius_power_similar(jordan_block(F2, 2))


def test_not_similar():
    assert not is_similar(jordan_block(F2, 2), Matrix.identity(F2, 2))
    with pytest.raises(NotSimilar):
        similarity_witness(jordan_block(F2, 2), Matrix.identity(F2, 2))


@pytest.mark.parametrize("p,n", [(2, 2), (3, 2), (2, 3)])
def test_frobenius_power_lemma_exhaustive(p, n):
    for a in general_linear(p, n):
        regular = matrix_order(a) % p != 0
        assert is_p_regular(a) == regular
        assert frobenius_power_similar(a) == is_similar(a, a ** p)
        assert frobenius_power_similar(a) == regular


@st.composite
def partitions(draw, max_dim=6):
    size = draw(st.integers(1, max_dim))
    mult = [0] * size
    left = size
    while left:
        k = draw(st.integers(1, left))
        mult[k - 1] += 1
        left -= k
    while mult and mult[-1] == 0:
        mult.pop()
    return UnipotentPartition(tuple(mult))


@given(partitions(), st.sampled_from(FIELDS), st.data())
def test_partition_roundtrip_under_conjugation(part, ring, draw):
    j = jordan_from_partition(part, ring)
    x = draw.draw(invertible_matrices([ring], n=j.rows))
    assert unipotent_partition(x @ j @ mat_inv(x)) == part


def test_partition_examples():
    assert unipotent_partition(Matrix.identity(F3, 4)).multiplicities == (4,)
    a = Matrix.block_diag([jordan_block(F2, 3), jordan_block(F2, 1)])
    assert unipotent_partition(a).multiplicities == (1, 0, 1)
    with pytest.raises(NotUnipotent):
        unipotent_partition(Matrix.diag(F3, [1, 2]))


def test_restriction():
    abar = reduce_mod_p(data.matrix("final.A"))
    basis = image_basis(abar - Matrix.identity(F2, 4))
    assert len(basis) == 3
    assert restriction(abar, basis).rows == 3
    a = jordan_block(F3, 3)
    assert restriction(a, [(1, 0, 0)]) == Matrix.identity(F3, 1)
    std = [tuple(1 if i == j else 0 for j in range(3)) for i in range(3)]
    assert restriction(a, std) == a
    with pytest.raises(NotInvariant):
        restriction(a, [(0, 0, 1)])
