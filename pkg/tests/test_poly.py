import hypothesis.strategies as st
import pytest
from hypothesis import given

from holoforge import data
from holoforge.errors import NotField, ZeroPolynomial
from holoforge.matrix import Matrix, reduce_mod_p
from holoforge.normal_forms import jordan_block
from holoforge.poly import (
    Polynomial,
    charpoly,
    companion,
    factor,
    is_irreducible,
    is_squarefree,
    minpoly,
    monic_irreducibles,
    poly_gcd,
)
from holoforge.ring import RingSpec

from conftest import FIELDS, square_matrices


@st.composite
def polys(draw, p=None, max_deg=6, monic=False):
    p = p or draw(st.sampled_from([2, 3, 5]))
    coeffs = draw(st.lists(st.integers(0, p - 1), min_size=1, max_size=max_deg + 1))
    if monic:
        coeffs = coeffs + [1]
    return Polynomial(p, coeffs)


@st.composite
def poly_pairs(draw):
    p = draw(st.sampled_from([2, 3, 5]))
    return draw(polys(p)), draw(polys(p)), draw(polys(p))


@given(poly_pairs())
def test_ring_axioms(fgh):
    f, g, h = fgh
    assert f * (g + h) == f * g + f * h
    assert (f * g) * h == f * (g * h)
    assert f * g == g * f


@given(poly_pairs())
def test_division_with_remainder(fgh):
    f, g, _ = fgh
    if g.is_zero():
        return
    q, r = divmod(f, g)
    assert q * g + r == f
    assert r.is_zero() or r.degree < g.degree


@given(poly_pairs())
def test_gcd_divides_both(fgh):
    f, g, _ = fgh
    if f.is_zero() and g.is_zero():
        return
    d = poly_gcd(f, g)
    assert d.divides(f) and d.divides(g)


@given(polys(monic=True))
def test_factorization_multiplies_back(f):
    prod = Polynomial(f.p, [1])
    for q, e in factor(f):
        assert is_irreducible(q) and q.is_monic()
        prod = prod * q ** e
    assert prod == f


@given(polys(monic=True))
def test_squarefree_agrees_with_factorization(f):
    assert is_squarefree(f) == all(e == 1 for _, e in factor(f))


@pytest.mark.parametrize("p,d,count", [(2, 1, 2), (2, 2, 1), (2, 3, 2), (2, 4, 3), (3, 2, 3), (5, 2, 10)])
def test_irreducible_counts(p, d, count):
    assert len(monic_irreducibles(p, d)) == count


@given(square_matrices(FIELDS))
def test_cayley_hamilton_and_minimality(a):
    chi, mu = charpoly(a), minpoly(a)
    zero = Matrix.zeros(a.ring, a.rows)
    assert chi.eval_matrix(a) == zero
    assert mu.eval_matrix(a) == zero
    assert mu.divides(chi)
    # every irreducible factor of chi divides mu
    assert all(q.divides(mu) for q, _ in factor(chi))
    assert all(not (mu // q).eval_matrix(a).is_zero() for q, _ in factor(mu))


@given(polys(monic=True, max_deg=4))
def test_companion_has_its_polynomial(f):
    if f.degree < 1:
        return
    c = companion(f)
    assert charpoly(c) == f
    assert minpoly(c) == f


def test_worked_polynomials():
    abar = reduce_mod_p(data.matrix("final.A"))
    f = Polynomial(2, [1, 1, 0, 1, 1])
    assert charpoly(abar) == f
    assert minpoly(abar) == f
    assert factor(f) == [(Polynomial(2, [1, 1]), 2), (Polynomial(2, [1, 1, 1]), 1)]
    assert not is_squarefree(f)
    assert is_squarefree(Polynomial(2, [1, 0, 0, 1]))
    assert is_squarefree(Polynomial.x(7))


def test_small_cases():
    F3 = RingSpec(3)
    assert charpoly(Matrix.identity(F3, 2)) == Polynomial(3, [-1, 1]) ** 2
    assert minpoly(Matrix.identity(F3, 5)) == Polynomial(3, [-1, 1])
    assert minpoly(jordan_block(RingSpec(2), 3)) == Polynomial(2, [1, 1]) ** 3


def test_errors():
    with pytest.raises(NotField):
        Polynomial(RingSpec(2, 2), [1])
    with pytest.raises(ZeroPolynomial):
        Polynomial(2, []).monic()
    with pytest.raises(NotField):
        charpoly(Matrix.identity(RingSpec(2, 2), 2))


@given(polys())
def test_serialize_roundtrip(f):
    assert Polynomial.parse(f.p, f.serialize()) == f
