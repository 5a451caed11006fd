import hypothesis.strategies as st
import pytest
from hypothesis import given

from holoforge.errors import NotComplement, NotFreeBasis, NotNormal
from holoforge.groups import holomorph, rebase, verify_rebase
from holoforge.groups.library import general_linear
from holoforge.matrix import mat_inv
from holoforge.normal_forms import jordan_block
from holoforge.ring import RingSpec


def _e(n, i):
    return tuple(1 if j == i else 0 for j in range(n))


@given(st.sampled_from([2, 3]), st.data())
def test_vector_basis_change_conjugates_the_action(p, draw):
    gl = general_linear(p, 2)
    a = draw.draw(st.sampled_from(gl))
    x = draw.draw(st.sampled_from(gl))
    G = holomorph((p, 1, 2), [a])
    basis = [G.vector(c) for c in x.columns()]
    res = rebase(G, [G.vector(_e(2, 0)), G.vector(_e(2, 1))], basis, [G.complement(a)])
    assert res.matrices[0] == mat_inv(x) @ a @ x
    verify_rebase(res, samples=50)


def test_identity_basis_returns_generators():
    ring = RingSpec(2, 2)
    a = jordan_block(ring, 3)
    G = holomorph((2, 2, 3), [a])
    vecs = [G.vector(_e(3, i)) for i in range(3)]
    res = rebase(G, vecs, vecs, [G.complement(a)])
    assert res.matrices == (a,)
    assert res.target.order() == G.order()


def test_rebase_preconditions():
    F2 = RingSpec(2)
    j = jordan_block(F2, 2)
    G = holomorph((2, 1, 2), [j])
    v1, v2, c = G.vector(_e(2, 0)), G.vector(_e(2, 1)), G.complement(j)
    with pytest.raises(NotNormal):
        rebase(G, [v2], [v2, v2], [c])
    with pytest.raises(NotComplement):
        rebase(G, [v1, v2], [v1, v2], [v1])
    with pytest.raises(NotFreeBasis):
        rebase(G, [v1, v2], [v1, v1], [c])
