"""Subgroup enumeration for small groups held as multiplication tables."""

from __future__ import annotations

from typing import Callable, Sequence

from .automorphisms import generating_set
from .core import Automorphism, FiniteGroup, bfs_closure


class TableGroup(FiniteGroup):
    """A group on labels 0..k-1 (0 the identity) with a full product table.

    ``source`` keeps the original elements, so label i stands for source[i].
    """

    def __init__(self, source: Sequence, mul: Callable, identity):
        source = list(source)
        if source[0] != identity:
            source.remove(identity)
            source.insert(0, identity)
        pos = {x: i for i, x in enumerate(source)}
        self.source = source
        self.table = [[pos[mul(a, b)] for b in source] for a in source]
        self._inv = [row.index(0) for row in self.table]
        k = len(source)
        self.identity = 0
        self.__dict__["_elements"] = list(range(k))
        self.__dict__["_element_set"] = frozenset(range(k))
        self.gens = tuple(range(1, k))
        self.gens = tuple(generating_set(self)) if k > 1 else ()
        self.name = f"table group of order {k}"

    @classmethod
    def of(cls, G: FiniteGroup) -> "TableGroup":
        T = cls(G.elements(), G.mul, G.identity)
        T.name = G.name
        return T

    @classmethod
    def of_automorphisms(cls, auts: list[Automorphism]) -> "TableGroup":
        ident = next(a for a in auts if a.is_identity())
        T = cls(auts, lambda a, b: a.compose(b), ident)
        T.name = f"Aut of order {len(auts)}"
        return T

    def label(self, x) -> int:
        return self.source.index(x)

    def mul(self, a, b):
        return self.table[a][b]

    def inv(self, a):
        return self._inv[a]

    def order(self) -> int:
        return len(self.source)


class TableSubgroup(FiniteGroup):
    """A subgroup of a TableGroup, usable as a group in its own right."""

    def __init__(self, T: TableGroup, elems: frozenset):
        self.identity = 0
        self.mul = T.mul
        self.inv = T.inv
        self.gens = tuple(sorted(elems))
        self.__dict__["_elements"] = sorted(elems)
        self.__dict__["_element_set"] = frozenset(elems)
        self.gens = tuple(generating_set(self)) if len(elems) > 1 else ()


def subgroup_generators(T: TableGroup, S: frozenset) -> list[int]:
    return list(TableSubgroup(T, S).gens)


def all_subgroups(T: TableGroup) -> set[frozenset]:
    """Every subgroup of T.

    Starts from the subgroups generated by one or two elements and keeps
    adjoining single elements until nothing new appears; since any subgroup
    is reached by adjoining its generators one at a time, this is complete.
    """
    k = T.order()
    cyc = {a: frozenset(bfs_closure(0, [a], T.mul)) for a in range(k)}
    subs: set[frozenset] = set(cyc.values())
    for a in range(k):
        for b in range(a + 1, k):
            if b in cyc[a] or a in cyc[b]:
                continue
            subs.add(frozenset(bfs_closure(0, [a, b], T.mul)))
    frontier = set(subs)
    while frontier:
        nxt = set()
        for S in frontier:
            gens = subgroup_generators(T, S)
            for x in range(k):
                if x in S:
                    continue
                U = frozenset(bfs_closure(0, gens + [x], T.mul))
                if U not in subs:
                    subs.add(U)
                    nxt.add(U)
        frontier = nxt
    return subs


def subgroup_classes(T: TableGroup, subs: set[frozenset] | None = None) -> list[list[frozenset]]:
    """Conjugacy classes of subgroups, ordered by subgroup order."""
    if subs is None:
        subs = all_subgroups(T)
    seen: set[frozenset] = set()
    classes = []
    for S in sorted(subs, key=lambda s: (len(s), sorted(s))):
        if S in seen:
            continue
        orbit = {S}
        stack = [S]
        while stack:
            U = stack.pop()
            for g in T.gens:
                gi = T.inv(g)
                V = frozenset(T.mul(T.mul(g, u), gi) for u in U)
                if V not in orbit:
                    orbit.add(V)
                    stack.append(V)
        seen |= orbit
        classes.append(sorted(orbit, key=sorted))
    return classes
