from itertools import product
from math import gcd

import hypothesis.strategies as st
from hypothesis import given

from holoforge import data
from holoforge.howell import AbelianInvariants, howell_span, kernel, smith_invariants, span_of_columns
from holoforge.matrix import Matrix
from holoforge.ring import RingSpec

RINGS = [RingSpec(2), RingSpec(3), RingSpec(2, 2), RingSpec(2, 3), RingSpec(3, 2)]


def brute_span(vectors, ring, n):
    q = ring.modulus
    out = set()
    for coeffs in product(range(q), repeat=len(vectors)):
        out.add(tuple(sum(c * v[i] for c, v in zip(coeffs, vectors)) % q for i in range(n)))
    return out


@st.composite
def vector_families(draw):
    ring = draw(st.sampled_from(RINGS))
    n = draw(st.integers(1, 3))
    k = draw(st.integers(0, 3))
    vecs = draw(st.lists(st.lists(st.integers(0, ring.modulus - 1), min_size=n, max_size=n),
                         min_size=k, max_size=k))
    return ring, n, vecs


@given(vector_families())
def test_span_matches_enumeration(fam):
    ring, n, vecs = fam
    span = howell_span(vecs, ring, n)
    elems = brute_span(vecs, ring, n) if vecs else {tuple([0] * n)}
    assert span.elements() == elems
    assert span.order == len(elems)
    for v in product(range(ring.modulus), repeat=n):
        assert span.contains(v) == (v in elems)


@given(vector_families())
def test_invariants_match_element_orders(fam):
    ring, n, vecs = fam
    inv = smith_invariants(vecs, ring, n)
    elems = brute_span(vecs, ring, n) if vecs else {tuple([0] * n)}
    q = ring.modulus
    # the exponent of the span is its largest invariant
    exponent = max(q // gcd(q, *v) for v in elems)
    assert (inv.divisors[0] if inv.divisors else 1) == exponent
    assert inv.order == len(elems)


@given(vector_families())
def test_kernel_vectors_annihilate(fam):
    ring, n, rows = fam
    if not rows:
        return
    q = ring.modulus
    gens = kernel(rows, ring, n)
    ker = brute_span(gens, ring, n) if gens else {tuple([0] * n)}
    expected = {x for x in product(range(q), repeat=n)
                if all(sum(r[i] * x[i] for i in range(n)) % q == 0 for r in rows)}
    assert ker == expected


def test_commutator_span_of_worked_matrix():
    A = data.matrix("final.A")
    ident = Matrix.identity(A.ring, 4)
    assert span_of_columns((A - ident).columns(), A.ring).invariants.divisors == (8, 8, 8, 4)


def test_full_module_and_field_rank():
    ring = RingSpec(3, 2)
    basis = [[1 if i == j else 0 for j in range(3)] for i in range(3)]
    assert smith_invariants(basis, ring, 3).divisors == (9, 9, 9)
    A = data.matrix("final.A")
    F2 = RingSpec(2)
    abar = Matrix(F2, 4, 4, A.entries)
    cols = (abar - Matrix.identity(F2, 4)).columns()
    assert len(span_of_columns(cols, F2).basis) == 3


def test_mixed_invariants_recombine():
    assert AbelianInvariants.from_elementary([8, 3, 2]).divisors == (24, 2)
    assert sorted(AbelianInvariants((24, 2)).elementary_divisors()) == [2, 3, 8]
