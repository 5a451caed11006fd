"""Subgroups and structural invariants computed by closure and enumeration."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Sequence

from ..errors import DerivedNotContained, NotAbelian, NotNormal
from ..howell import AbelianInvariants
from .core import FiniteGroup, bfs_closure


@dataclass(frozen=True, eq=False)
class Subgroup:
    parent: FiniteGroup
    elements: frozenset
    gens: tuple = field(default=())

    def order(self) -> int:
        return len(self.elements)

    def __len__(self):
        return len(self.elements)

    def __contains__(self, x) -> bool:
        return x in self.elements

    def __eq__(self, other):
        return isinstance(other, Subgroup) and self.elements == other.elements

    def __hash__(self):
        return hash(self.elements)

    def is_trivial(self) -> bool:
        return len(self.elements) == 1

    def __repr__(self):
        return f"Subgroup(order={len(self.elements)}, gens={len(self.gens)})"


def subgroup_generated(G: FiniteGroup, xs: Sequence, cap: int | None = None) -> Subgroup:
    xs = tuple(x for x in xs if x != G.identity)
    elems = bfs_closure(G.identity, xs, G.mul, cap)
    return Subgroup(G, frozenset(elems), xs)


def whole_group(G: FiniteGroup, cap: int | None = None) -> Subgroup:
    return Subgroup(G, frozenset(G.elements(cap)), tuple(G.gens))


def trivial_subgroup(G: FiniteGroup) -> Subgroup:
    return Subgroup(G, frozenset([G.identity]), ())


def _normal_closure_gens(G: FiniteGroup, gens: list, cap: int | None):
    elems = frozenset(bfs_closure(G.identity, gens, G.mul, cap))
    changed = True
    while changed:
        changed = False
        for g in G.gens:
            gi = G.inv(g)
            for s in list(gens):
                # conjugation by g and g^-1 covers the finite case either way
                c = G.mul(G.mul(g, s), gi)
                if c not in elems:
                    gens.append(c)
                    elems = frozenset(bfs_closure(G.identity, gens, G.mul, cap))
                    changed = True
    return gens, elems


def normal_closure(G: FiniteGroup, xs: Sequence, cap: int | None = None) -> Subgroup:
    """Smallest normal subgroup of G containing xs; only G's generators are used."""
    gens = [x for x in xs if x != G.identity]
    gens, elems = _normal_closure_gens(G, gens, cap)
    return Subgroup(G, elems, tuple(gens))


def commutator_subgroup(G: FiniteGroup, xs: Sequence, ys: Sequence, cap: int | None = None) -> Subgroup:
    """[<xs>, <ys>] for subgroups normalized by G: normal closure of the generator commutators."""
    comms = {G.commutator(x, y) for x in xs for y in ys}
    comms.discard(G.identity)
    return normal_closure(G, sorted(comms, key=repr), cap)


def derived_subgroup(G: FiniteGroup, cap: int | None = None) -> Subgroup:
    return commutator_subgroup(G, G.gens, G.gens, cap)


def derived_series(G: FiniteGroup, cap: int | None = None) -> list[Subgroup]:
    """G, G', G'', ... until it stabilises.  Each term is a group in its own right."""
    terms = [whole_group(G, cap)]
    while True:
        cur = terms[-1]
        sub = _as_group(G, cur)
        nxt = commutator_subgroup(sub, sub.gens, sub.gens, cap)
        nxt = Subgroup(G, nxt.elements, nxt.gens)
        if nxt.elements == cur.elements:
            return terms
        terms.append(nxt)


class _SubgroupView(FiniteGroup):
    def __init__(self, G: FiniteGroup, S: Subgroup):
        self._G = G
        self.identity = G.identity
        self.gens = tuple(S.gens)
        self.mul = G.mul
        self.inv = G.inv
        self.__dict__["_elements"] = list(S.elements)
        self.__dict__["_element_set"] = S.elements


def _as_group(G: FiniteGroup, S: Subgroup) -> FiniteGroup:
    return _SubgroupView(G, S)


def as_group(S: Subgroup) -> FiniteGroup:
    """View a subgroup as a FiniteGroup generated by its stored generators."""
    return _SubgroupView(S.parent, S)


def lower_central_series(G: FiniteGroup, cap: int | None = None) -> list[Subgroup]:
    """G^1 = G, G^(i+1) = [G, G^i], until trivial or stationary."""
    terms = [whole_group(G, cap)]
    while not terms[-1].is_trivial():
        nxt = commutator_subgroup(G, G.gens, terms[-1].gens, cap)
        if nxt.elements == terms[-1].elements:
            break
        terms.append(nxt)
    return terms


def nilpotency_class(G: FiniteGroup, cap: int | None = None) -> int | None:
    """Smallest c with G^(c+1) = 1, or None when G is not nilpotent."""
    terms = lower_central_series(G, cap)
    if not terms[-1].is_trivial():
        return None
    return len(terms) - 1


def is_nilpotent(G: FiniteGroup, cap: int | None = None) -> bool:
    return nilpotency_class(G, cap) is not None


def center(G: FiniteGroup, cap: int | None = None) -> Subgroup:
    elems = [x for x in G.elements(cap) if all(G.mul(x, g) == G.mul(g, x) for g in G.gens)]
    return Subgroup(G, frozenset(elems), tuple(elems))


def centralizer(G: FiniteGroup, x, cap: int | None = None) -> Subgroup:
    elems = [g for g in G.elements(cap) if G.mul(x, g) == G.mul(g, x)]
    return Subgroup(G, frozenset(elems), tuple(elems))


def element_order(G: FiniteGroup, x) -> int:
    return G.element_order(x)


def is_normal(G: FiniteGroup, S: Subgroup) -> bool:
    gens = S.gens or tuple(S.elements)
    for g in G.gens:
        gi = G.inv(g)
        for s in gens:
            if G.mul(G.mul(g, s), gi) not in S.elements:
                return False
    return True


def is_abelian_subgroup(G: FiniteGroup, S: Subgroup) -> bool:
    gens = S.gens or tuple(S.elements)
    return all(G.mul(a, b) == G.mul(b, a) for a, b in combinations(gens, 2))


def is_abelian(G: FiniteGroup) -> bool:
    return all(G.mul(a, b) == G.mul(b, a) for a, b in combinations(G.gens, 2))


def conjugacy_class(G: FiniteGroup, x) -> frozenset:
    """Orbit of x under conjugation by the generators."""
    seen = {x}
    stack = [x]
    invs = [G.inv(g) for g in G.gens]
    while stack:
        y = stack.pop()
        for g, gi in zip(G.gens, invs):
            z = G.mul(G.mul(g, y), gi)
            if z not in seen:
                seen.add(z)
                stack.append(z)
    return frozenset(seen)


def conjugacy_classes(G: FiniteGroup, cap: int | None = None) -> list[frozenset]:
    done = set()
    out = []
    for x in G.elements(cap):
        if x in done:
            continue
        cls = conjugacy_class(G, x)
        done |= cls
        out.append(cls)
    return out


def _prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def invariants_from_orders(orders: Sequence[int]) -> AbelianInvariants:
    """Abelian invariants of a finite abelian group from its element orders.

    For each prime p, the number of elements killed by p^k is p^(sum min(k, a_i)),
    so successive ratios count the cyclic factors of order at least p^k.
    """
    n = len(orders)
    divisors = []
    for p in _prime_factors(n):
        killed = [1]
        k = 1
        while True:
            pk = p ** k
            killed.append(sum(1 for o in orders if pk % o == 0 and _is_p_power(o, p)))
            if killed[-1] == killed[-2]:
                break
            k += 1
        at_least = []
        for j in range(1, len(killed) - 1):
            ratio = killed[j] // killed[j - 1]
            e = 0
            while ratio > 1:
                ratio //= p
                e += 1
            at_least.append(e)
        for j, cnt in enumerate(at_least, start=1):
            nxt = at_least[j] if j < len(at_least) else 0
            divisors += [p ** j] * (cnt - nxt)
    return AbelianInvariants.from_elementary(divisors)


def _is_p_power(o: int, p: int) -> bool:
    while o % p == 0:
        o //= p
    return o == 1


def abelian_invariants(S: Subgroup | FiniteGroup) -> AbelianInvariants:
    if isinstance(S, FiniteGroup):
        if not is_abelian(S):
            raise NotAbelian("group is not abelian")
        G, elems = S, S.elements()
    else:
        G, elems = S.parent, S.elements
        if not is_abelian_subgroup(G, S):
            raise NotAbelian("subgroup is not abelian")
    return invariants_from_orders([G.element_order(x) for x in elems])


@dataclass
class AbelianQuotient:
    """G/N for a normal N containing [G, G], kept as coset representatives."""

    group: FiniteGroup
    normal: Subgroup
    reps: list
    table: list[list[int]]

    def order(self) -> int:
        return len(self.reps)

    def coset_index(self, g) -> int:
        G = self.group
        for i, r in enumerate(self.reps):
            if G.mul(G.inv(r), g) in self.normal.elements:
                return i
        raise ValueError("element outside the group")

    def element_order(self, i: int) -> int:
        k, cur = 1, i
        while cur != 0:
            cur = self.table[cur][i]
            k += 1
        return k

    def invariants(self) -> AbelianInvariants:
        return invariants_from_orders([self.element_order(i) for i in range(len(self.reps))])

    def closure(self, idxs: Sequence[int]) -> frozenset:
        return frozenset(bfs_closure(0, list(idxs), lambda a, b: self.table[a][b]))


def abelian_quotient(G: FiniteGroup, N: Subgroup, check: bool = True) -> AbelianQuotient:
    if check:
        if not is_normal(G, N):
            raise NotNormal("N is not normal in G")
        for a, b in combinations(G.gens, 2):
            if G.commutator(a, b) not in N.elements:
                raise DerivedNotContained("N does not contain the derived subgroup")
    reps = [G.identity]

    def locate(g):
        for i, r in enumerate(reps):
            if G.mul(G.inv(r), g) in N.elements:
                return i
        return None

    frontier = [0]
    while frontier:
        nxt = []
        for i in frontier:
            for s in G.gens:
                h = G.mul(reps[i], s)
                if locate(h) is None:
                    reps.append(h)
                    nxt.append(len(reps) - 1)
        frontier = nxt
    table = [[locate(G.mul(a, b)) for b in reps] for a in reps]
    return AbelianQuotient(G, N, reps, table)


def quotient_abelian(G: FiniteGroup, N: Subgroup) -> AbelianInvariants:
    return abelian_quotient(G, N).invariants()


def overgroups(G: FiniteGroup, N: Subgroup, relative_index: int,
               quotient: AbelianQuotient | None = None) -> list[Subgroup]:
    """All subgroups M with N <= M <= G and [M : N] = relative_index (N contains [G, G]).

    Subgroups of the abelian quotient are generated from subsets of size at most
    its rank, which reaches every subgroup.
    """
    Q = quotient or abelian_quotient(G, N)
    rank = len(Q.invariants().divisors)
    found: dict[frozenset, tuple] = {}
    candidates = [i for i in range(Q.order()) if relative_index % Q.element_order(i) == 0]
    for r in range(1, max(rank, 1) + 1):
        for combo in combinations(candidates, r):
            sub = Q.closure(combo)
            if len(sub) == relative_index and sub not in found:
                found[sub] = combo
    if relative_index == 1:
        found[frozenset([0])] = ()
    out = []
    for sub, combo in sorted(found.items(), key=lambda kv: sorted(kv[0])):
        extra = [Q.reps[i] for i in combo]
        out.append(subgroup_generated(G, list(N.gens) + extra))
    return out
