"""Brute-force isomorphism testing for small finite groups.

Nothing here relies on normal forms or the cyclic-conjugacy decision, so it
can be used to cross-check them: fingerprints of isomorphism invariants
filter out most non-isomorphic pairs, and generator-image backtracking
settles the rest exactly.
"""

from __future__ import annotations

import json
import random
import time
from collections import Counter
from dataclasses import asdict, dataclass, field
from itertools import combinations

from .conjugacy import holomorph_isomorphic
from .errors import CapExceeded
from .groups.automorphisms import (
    DEFAULT_BUDGET,
    automorphism_group,
    element_profiles,
    generating_set,
    homomorphism_search,
)
from .groups.core import FiniteGroup, SemidirectProduct, holomorph
from .groups.library import cyclic_subgroup, cyclic_subgroup_classes, general_linear
from .groups.subgroups import TableGroup, TableSubgroup, all_subgroups, subgroup_classes, subgroup_generators
from .groups.structure import (
    center,
    conjugacy_classes,
    derived_series,
    derived_subgroup,
    invariants_from_orders,
    lower_central_series,
)

FINGERPRINT_CAP = 2**17


@dataclass(frozen=True)
class Fingerprint:
    order: int
    order_histogram: tuple
    center_order: int
    derived_orders: tuple
    lcs_orders: tuple
    abelianization: tuple
    class_sizes: tuple

    def to_json(self) -> str:
        return json.dumps(asdict(self), sort_keys=True)

    def differences(self, other: "Fingerprint") -> list[str]:
        return [k for k in asdict(self) if getattr(self, k) != getattr(other, k)]


def fingerprint(G: FiniteGroup, cap: int = FINGERPRINT_CAP) -> Fingerprint:
    """Isomorphism invariants of G; independent of how elements are labelled.

    The result is cached on the group object.
    """
    cached = G.__dict__.get("_fingerprint")
    if cached is not None:
        return cached
    n = G.order()
    if n > cap:
        raise CapExceeded(f"|G| = {n} exceeds the fingerprint cap {cap}")
    elems = G.elements()
    orders = Counter(G.element_order(x) for x in elems)
    D = derived_subgroup(G)
    # order of gD in G/D, counted once per coset
    quotient_orders = []
    for x in elems:
        k, y = 1, x
        while y not in D.elements:
            y = G.mul(y, x)
            k += 1
        quotient_orders.append(k)
    d = len(D)
    hist = Counter(quotient_orders)
    per_coset = [o for o, c in sorted(hist.items()) for _ in range(c // d)]
    ab = invariants_from_orders(per_coset).as_list() if len(per_coset) > 1 else []
    classes = Counter(len(c) for c in conjugacy_classes(G))
    fp = Fingerprint(
        order=n,
        order_histogram=tuple(sorted(orders.items())),
        center_order=len(center(G)),
        derived_orders=tuple(len(S) for S in derived_series(G)),
        lcs_orders=tuple(len(S) for S in lower_central_series(G)),
        abelianization=tuple(ab),
        class_sizes=tuple(sorted(classes.items())),
    )
    G.__dict__["_fingerprint"] = fp
    return fp


def verify_isomorphism(G: FiniteGroup, H: FiniteGroup, f: dict, samples: int = 1000, seed: int = 0) -> bool:
    """Bijective, multiplicative on generator pairs and on random pairs."""
    if len(f) != G.order() or len(set(f.values())) != H.order() or G.order() != H.order():
        return False
    for a in G.gens:
        for b in G.gens:
            if f[G.mul(a, b)] != H.mul(f[a], f[b]):
                return False
    rng = random.Random(seed)
    elems = G.elements()
    for _ in range(samples):
        a, b = rng.choice(elems), rng.choice(elems)
        if f[G.mul(a, b)] != H.mul(f[a], f[b]):
            return False
    return True


def are_isomorphic(G: FiniteGroup, H: FiniteGroup, budget: int = DEFAULT_BUDGET,
                   seed: int = 0) -> tuple[bool, dict | None]:
    """Decide G = H exactly; returns (answer, isomorphism as a full dict or None).

    Raises BudgetExceeded when more than ``budget`` partial maps are tried.
    """
    if G.order() != H.order():
        return False, None
    if fingerprint(G) != fingerprint(H):
        return False, None
    pg, ph = element_profiles(G), element_profiles(H)
    if Counter(pg.values()) != Counter(ph.values()):
        return False, None
    gens = generating_set(G, pg)
    by_prof: dict = {}
    for y in H.elements():
        by_prof.setdefault(ph[y], []).append(y)
    candidates = [by_prof.get(pg[s], []) for s in gens]
    n = G.order()
    for f in homomorphism_search(G, H, gens, candidates, injective=True, budget=budget):
        if len(f) == n:
            if not verify_isomorphism(G, H, f, seed=seed):
                raise AssertionError("backtracking produced a map that fails verification")
            return True, f
    return False, None


def witness_summary(G: FiniteGroup, f: dict) -> dict:
    """Generator images of an isomorphism, as strings, for reports."""
    return {str(g): str(f[g]) for g in G.gens}


# ----------------------------------------------------------------------
# cross-check of the cyclic-conjugacy decision


@dataclass
class LindoReport:
    p: int
    n: int
    scope: str
    pairs: int = 0
    agreements: int = 0
    isomorphic_pairs: int = 0
    disagreements: list = field(default_factory=list)
    seconds: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.disagreements and self.pairs == self.agreements

    def to_dict(self) -> dict:
        d = asdict(self)
        d["passed"] = self.passed
        return d


def verify_lindo(p: int, n: int, scope: str | None = None, budget: int = DEFAULT_BUDGET) -> LindoReport:
    """Compare the linear-algebra decision with the oracle on pairs from GL_n(p).

    scope "all" takes every ordered pair of elements; "reps" takes ordered
    pairs of representatives of the conjugacy classes of cyclic subgroups.
    """
    start = time.perf_counter()
    elements = general_linear(p, n)
    if scope is None:
        scope = "all" if len(elements) <= 6 else "reps"
    if scope == "all":
        mats = elements
    elif scope == "reps":
        mats = [c[0] for c in cyclic_subgroup_classes(elements)]
    else:
        raise ValueError(f"unknown scope {scope!r}")
    hols = {a: holomorph((p, 1, n), [a]) for a in mats}
    report = LindoReport(p, n, scope)
    cache: dict = {}
    for a in mats:
        for b in mats:
            report.pairs += 1
            linear = holomorph_isomorphic(a, b)
            key = (cyclic_subgroup(a), cyclic_subgroup(b))
            if key not in cache:
                cache[key] = are_isomorphic(hols[a], hols[b], budget=budget)[0]
            oracle = cache[key]
            if linear == oracle:
                report.agreements += 1
            else:
                report.disagreements.append({"a": a.to_rows(), "b": b.to_rows(),
                                             "linear": linear, "oracle": oracle})
            report.isomorphic_pairs += int(oracle)
    report.seconds = time.perf_counter() - start
    return report


# ----------------------------------------------------------------------
# admitting groups


@dataclass
class AdmittingReport:
    group: str
    group_order: int
    aut_order: int
    subgroups: int
    classes: int
    compared_pairs: int
    isomorphic_pairs: list
    admitting: bool
    highly_admitting: bool
    method: str
    seconds: float

    def to_dict(self) -> dict:
        return asdict(self)


def admitting_report(G: FiniteGroup, group_cap: int = 64, aut_cap: int = 200,
                     budget: int = DEFAULT_BUDGET) -> AdmittingReport:
    """Search Aut(G) for non-conjugate H, K with isomorphic relative holomorphs."""
    start = time.perf_counter()
    if G.order() > group_cap:
        raise CapExceeded(f"|G| = {G.order()} exceeds the cap {group_cap}")
    auts = automorphism_group(G, cap=group_cap)
    if len(auts) > aut_cap:
        raise CapExceeded(f"|Aut(G)| = {len(auts)} exceeds the cap {aut_cap}")
    A = TableGroup.of_automorphisms(auts)
    subs = all_subgroups(A)
    classes = subgroup_classes(A, subs)
    reps = [c[0] for c in classes]
    hols = [SemidirectProduct(G, [A.source[i] for i in subgroup_generators(A, S)]) for S in reps]
    fps = [fingerprint(Hh) for Hh in hols]
    compared = 0
    iso_pairs = []
    highly = False
    for i, j in combinations(range(len(reps)), 2):
        if len(reps[i]) != len(reps[j]) or fps[i] != fps[j]:
            continue
        compared += 1
        same, _ = are_isomorphic(hols[i], hols[j], budget=budget)
        if same:
            Hi, Hj = TableSubgroup(A, reps[i]), TableSubgroup(A, reps[j])
            abstract, _ = are_isomorphic(Hi, Hj, budget=budget)
            iso_pairs.append({"orders": len(reps[i]), "subgroups_isomorphic": abstract})
            highly = highly or not abstract
    return AdmittingReport(
        group=G.name, group_order=G.order(), aut_order=len(auts), subgroups=len(subs),
        classes=len(classes), compared_pairs=compared, isomorphic_pairs=iso_pairs,
        admitting=bool(iso_pairs), highly_admitting=highly,
        method="all subgroups of Aut(G) up to conjugacy, by adjoining generators to 2-generated subgroups",
        seconds=time.perf_counter() - start)
