import random

import hypothesis.strategies as st
import pytest
from hypothesis import given

from holoforge import data
from holoforge.errors import BudgetExceeded, CapExceeded
from holoforge.conjugacy import cyclic_conjugate_field
from holoforge.groups import FiniteGroup, IndexedGroup, PermutationGroup, holomorph
from holoforge.groups.library import abelian, cyclic, dihedral, general_linear, quaternion
from holoforge.matrix import matrix_order
from holoforge.normal_forms import jordan_block
from holoforge.oracle import admitting_report, are_isomorphic, fingerprint, verify_lindo
from holoforge.ring import RingSpec

F2 = RingSpec(2)
S4 = PermutationGroup([(1, 0, 2, 3), (1, 2, 3, 0)])
GROUPS = [cyclic(8), abelian(2, 4), abelian(2, 2, 2), dihedral(4), quaternion(), dihedral(6), S4,
          holomorph((2, 1, 3), [jordan_block(F2, 3)]), holomorph((3, 1, 2), [jordan_block(RingSpec(3), 2)])]


def relabel(G, seed):
    labels = list(range(G.order()))
    random.Random(seed).shuffle(labels)
    return IndexedGroup(G, labels)


def is_isomorphism(G, H, f):
    elems = G.elements()
    return (len(set(f.values())) == len(elems)
            and all(f[G.mul(a, b)] == H.mul(f[a], f[b]) for a in elems for b in elems))


@given(st.sampled_from(GROUPS), st.integers(0, 10**6))
def test_relabelled_copy_is_isomorphic(G, seed):
    H = relabel(G, seed)
    assert fingerprint(G) == fingerprint(H)
    ok, f = are_isomorphic(G, H)
    assert ok
    assert is_isomorphism(G, H, f)


@pytest.mark.parametrize("i", range(len(GROUPS)))
def test_distinct_groups_are_separated(i):
    G = GROUPS[i]
    for H in GROUPS[i + 1:]:
        ok, f = are_isomorphic(G, H)
        assert not ok and f is None


def test_small_oracle_facts():
    assert not are_isomorphic(dihedral(4), quaternion())[0]
    diff = fingerprint(cyclic(4)).differences(fingerprint(abelian(2, 2)))
    assert "order_histogram" in diff and "abelianization" in diff
    assert are_isomorphic(holomorph((2, 1, 2), [jordan_block(F2, 2)]), dihedral(4))[0]


def test_budget_and_cap():
    G = holomorph((2, 1, 3), [jordan_block(F2, 3)])
    with pytest.raises(BudgetExceeded):
        are_isomorphic(G, relabel(G, 1), budget=1)
    with pytest.raises(CapExceeded):
        fingerprint(cyclic(50), cap=10)


def test_worked_holomorph_pairs():
    F3 = RingSpec(3)
    A, B = data.matrix("e3.A", F3), data.matrix("e3.B", F3)
    L1, L2 = data.matrix("e3.L1", F3), data.matrix("e3.L2", F3)
    GH, GL = holomorph((3, 1, 2), [A, B]), holomorph((3, 1, 2), [L1, L2])
    assert GH.order() == GL.order() == 54
    ok, f = are_isomorphic(GH, GL)
    assert ok and is_isomorphism(GH, GL, f)


@pytest.mark.parametrize("p,n,scope,pairs", [(2, 2, "all", 36), (3, 2, "reps", 49), (2, 3, "reps", 25)])
def test_lindo_cross_check(p, n, scope, pairs):
    rep = verify_lindo(p, n, scope=scope)
    assert rep.pairs == pairs
    assert rep.disagreements == [] and rep.passed


def test_gl22_isomorphic_pair_count():
    assert verify_lindo(2, 2).isomorphic_pairs == 14


@pytest.mark.parametrize("G,admitting", [(abelian(2, 2), False), (cyclic(8), False), (quaternion(), False),
                                         (dihedral(4), False), (cyclic(9), False), (abelian(3, 3), True)])
def test_admitting_verdicts(G, admitting):
    rep = admitting_report(G, aut_cap=64)
    assert rep.admitting == admitting
    if admitting:
        assert rep.highly_admitting


def test_admitting_caps():
    with pytest.raises(CapExceeded):
        admitting_report(cyclic(100))
    with pytest.raises(CapExceeded):
        admitting_report(abelian(2, 2, 2), aut_cap=100)


class CyclicActionProduct(FiniteGroup):
    """V x| C_k with the generator of C_k acting by a; the action need not be faithful."""

    def __init__(self, a, k):
        self.a, self.k, self.q = a, k, a.ring.modulus
        n = a.rows
        self.powers = [a ** i for i in range(k)]
        self.identity = ((0,) * n, 0)
        self.gens = tuple([(tuple(int(i == j) for i in range(n)), 0) for j in range(n)] + [((0,) * n, 1 % k)])

    def mul(self, x, y):
        (v, i), (w, j) = x, y
        hw = self.powers[i].apply(w)
        return tuple((s + t) % self.q for s, t in zip(v, hw)), (i + j) % self.k

    def inv(self, x):
        v, i = x
        j = (-i) % self.k
        return tuple((-t) % self.q for t in self.powers[j].apply(v)), j


@pytest.mark.parametrize("p,n,k", [(2, 2, 6), (2, 2, 4), (3, 2, 6)])
def test_non_faithful_actions_conjugate_implies_isomorphic(p, n, k):
    mats = [a for a in general_linear(p, n) if k % matrix_order(a) == 0]
    groups = {a: CyclicActionProduct(a, k) for a in mats}
    checked = 0
    for a in mats[:12]:
        for b in mats[:12]:
            if cyclic_conjugate_field(a, b).is_conjugate:
                assert are_isomorphic(groups[a], groups[b])[0]
                checked += 1
    assert checked > 0
