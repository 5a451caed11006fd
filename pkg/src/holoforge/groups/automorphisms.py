"""Homomorphism search by backtracking over generator images.

Both the automorphism enumeration and the isomorphism oracle use the same
engine: fix a small generating set s_1..s_k of the source, try images
t_1..t_k in the target one generator at a time, and after each choice extend
the map over the subgroup generated so far.  An assignment survives only if
f(g s_j) = f(g) t_j holds along every edge of that Cayley graph and the map
stays injective.
"""

from __future__ import annotations

from collections import deque
from typing import Iterator, Sequence

from ..errors import BudgetExceeded, CapExceeded
from .core import Automorphism, FiniteGroup, bfs_closure
from .structure import conjugacy_classes, derived_subgroup

DEFAULT_BUDGET = 10**7


def element_profiles(G: FiniteGroup) -> dict:
    """(order, class size, order mod [G,G], class sizes of prime powers) for every element.

    Cached on the group object.
    """
    cached = G.__dict__.get("_profiles")
    if cached is not None:
        return cached
    elems = G.elements()
    classes = conjugacy_classes(G)
    size = {}
    for cls in classes:
        for x in cls:
            size[x] = len(cls)
    D = derived_subgroup(G).elements
    orders = {x: G.element_order(x) for x in elems}
    prof = {}
    for x in elems:
        o = orders[x]
        k, y = 1, x
        while y not in D:
            y = G.mul(y, x)
            k += 1
        powers = []
        for p in (2, 3, 5, 7):
            if o % p == 0:
                powers.append(size[G.power(x, p)])
        prof[x] = (o, size[x], k, tuple(powers))
    G.__dict__["_profiles"] = prof
    return prof


def generating_set(G: FiniteGroup, profiles: dict | None = None, probe: int = 16) -> list:
    """Small generating set chosen greedily by closure growth.

    Each round scores up to ``probe`` candidates (one per conjugacy-class
    profile, highest order first) and keeps the one whose addition enlarges
    the generated subgroup most.
    """
    elems = G.elements()
    total = len(elems)
    if profiles is None:
        profiles = {x: (G.element_order(x),) for x in elems}
    ordered = sorted(elems, key=lambda x: (-profiles[x][0], profiles[x]))
    gens: list = []
    current = frozenset([G.identity])
    while len(current) < total:
        seen_prof = set()
        pool = []
        for x in ordered:
            if x in current or profiles[x] in seen_prof:
                continue
            seen_prof.add(profiles[x])
            pool.append(x)
            if len(pool) >= probe:
                break
        best, best_set = None, None
        for x in pool:
            sub = frozenset(bfs_closure(G.identity, gens + [x], G.mul))
            if best_set is None or len(sub) > len(best_set):
                best, best_set = x, sub
        gens.append(best)
        current = best_set
    return gens


def _extend(G: FiniteGroup, H: FiniteGroup, gens: Sequence, imgs: Sequence, injective: bool):
    """Extend gens[i] -> imgs[i] over <gens>; None if inconsistent or not injective."""
    f = {G.identity: H.identity}
    used = {H.identity} if injective else None
    queue = deque([G.identity])
    while queue:
        g = queue.popleft()
        fg = f[g]
        for s, t in zip(gens, imgs):
            gs = G.mul(g, s)
            img = H.mul(fg, t)
            old = f.get(gs)
            if old is None:
                if injective:
                    if img in used:
                        return None
                    used.add(img)
                f[gs] = img
                queue.append(gs)
            elif old != img:
                return None
    return f


def homomorphism_search(G: FiniteGroup, H: FiniteGroup, gens: Sequence, candidates: Sequence[Sequence],
                        injective: bool = True, budget: int = DEFAULT_BUDGET) -> Iterator[dict]:
    """Yield every map extending gens -> chosen candidates to a (injective) homomorphism.

    ``budget`` bounds the number of partial assignments tried.
    """
    k = len(gens)
    imgs: list = []
    spent = 0

    def rec(j):
        nonlocal spent
        if j == k:
            f = _extend(G, H, gens, imgs, injective)
            if f is not None:
                yield f
            return
        for t in candidates[j]:
            spent += 1
            if spent > budget:
                raise BudgetExceeded(f"more than {budget} partial maps tried")
            imgs.append(t)
            if _extend(G, H, gens[:j + 1], imgs, injective) is not None:
                yield from rec(j + 1)
            imgs.pop()

    yield from rec(0)


def automorphism_group(G: FiniteGroup, cap: int = 128, budget: int = DEFAULT_BUDGET) -> list[Automorphism]:
    """All automorphisms of G (|G| <= cap), by generator-image backtracking."""
    if G.order() > cap:
        raise CapExceeded(f"|G| = {G.order()} exceeds the automorphism cap {cap}")
    prof = element_profiles(G)
    gens = generating_set(G, prof)
    by_prof: dict = {}
    for x in G.elements():
        by_prof.setdefault(prof[x], []).append(x)
    candidates = [by_prof[prof[s]] for s in gens]
    n = G.order()
    out = []
    for f in homomorphism_search(G, G, gens, candidates, injective=True, budget=budget):
        if len(f) == n:
            out.append(Automorphism(G, f))
    return out

