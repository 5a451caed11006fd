"""Property suites: exhaustive small cases plus seeded random cases.

Each suite returns a RunReport whose assertions are the counterexample
count (must be 0) and the number of random cases (must reach the minimum).
Group-theoretic sides of each statement are decided by brute force on the
actual groups, never by the linear-algebra shortcut being tested.
"""

from __future__ import annotations

import random
from functools import lru_cache
from math import gcd
from typing import Callable

from .config import Limits
from .conjugacy import cyclic_conjugate_field
from .errors import UnknownSuite
from .groups.core import Holomorph, MatrixGroup, holomorph
from .groups.library import cyclic_subgroup, cyclic_subgroup_classes, general_linear
from .groups.structure import abelian_invariants, derived_subgroup, lower_central_series, nilpotency_class
from .groups.subgroups import TableGroup, all_subgroups
from .howell import howell_span
from .matrix import Matrix, is_invertible, matrix_order
from .normal_forms import (
    UnipotentPartition,
    image_basis,
    invariant_factors,
    is_similar,
    jordan_from_partition,
    restriction,
    unipotent_partition,
)
from .oracle import are_isomorphic, fingerprint, verify_lindo
from .poly import factor, is_squarefree, minpoly
from .report import RunReport
from .reproductions import example_e7, example_e9
from .ring import RingSpec

MIN_RANDOM = 200


class _Tally:
    def __init__(self, name: str):
        self.report = RunReport(f"verify {name}")
        self.exhaustive = 0
        self.random = 0
        self.counterexamples: list = []

    def case(self, ok: bool, random_case: bool, info=None):
        if random_case:
            self.random += 1
        else:
            self.exhaustive += 1
        if not ok:
            self.counterexamples.append(info)

    def finish(self, min_random: int = MIN_RANDOM) -> RunReport:
        r = self.report
        r.results.update({"exhaustive_cases": self.exhaustive, "random_cases": self.random,
                          "counterexamples": self.counterexamples[:5]})
        r.check("counterexamples", 0, len(self.counterexamples))
        r.check(f"random cases (at least {min_random})", True, self.random >= min_random)
        return r.finish()


# ----------------------------------------------------------------------
# random matrices


def random_matrix(ring: RingSpec, n: int, rng: random.Random) -> Matrix:
    return Matrix(ring, n, n, [rng.randrange(ring.modulus) for _ in range(n * n)])


def random_invertible(ring: RingSpec, n: int, rng: random.Random) -> Matrix:
    while True:
        a = random_matrix(ring, n, rng)
        if is_invertible(a):
            return a


def random_conjugate(a: Matrix, rng: random.Random) -> Matrix:
    x = random_invertible(a.ring, a.rows, rng)
    return x @ a @ x ** -1


def random_partition(n: int, rng: random.Random) -> UnipotentPartition:
    sizes = []
    left = n
    while left:
        s = rng.randint(1, left)
        sizes.append(s)
        left -= s
    e = [0] * max(sizes)
    for s in sizes:
        e[s - 1] += 1
    return UnipotentPartition(tuple(e))


def random_unipotent(ring: RingSpec, n: int, rng: random.Random) -> Matrix:
    return random_conjugate(jordan_from_partition(random_partition(n, rng), ring), rng)


def _is_power_of(k: int, p: int) -> bool:
    while k % p == 0:
        k //= p
    return k == 1


@lru_cache(maxsize=None)
def _gl(p: int, n: int) -> tuple:
    return tuple(general_linear(p, n))


def _small_gl() -> list[tuple[int, int]]:
    return [(2, 2), (3, 2), (2, 3)]


# ----------------------------------------------------------------------


def suite_orden(limits: Limits) -> RunReport:
    """p does not divide o(a) exactly when the minimal polynomial is square-free."""
    t = _Tally("orden")
    rng = random.Random(limits.seed)

    def probe(a, rnd):
        t.case((matrix_order(a) % a.ring.p != 0) == is_squarefree(minpoly(a)), rnd, a.to_rows())

    for p, n in _small_gl():
        for a in _gl(p, n):
            probe(a, False)
    for _ in range(MIN_RANDOM):
        p, n = rng.choice([2, 3, 5]), rng.randint(1, 5)
        probe(random_invertible(RingSpec(p), n, rng), True)
    return t.finish()


def suite_psimilar(limits: Limits) -> RunReport:
    """a is similar to a^p exactly when p does not divide o(a)."""
    t = _Tally("psimilar")
    rng = random.Random(limits.seed)

    def probe(a, rnd):
        p = a.ring.p
        t.case(is_similar(a, a ** p) == (matrix_order(a) % p != 0), rnd, a.to_rows())

    for p, n in [(2, 2), (3, 2)]:
        for a in _gl(p, n):
            probe(a, False)
    for _ in range(MIN_RANDOM):
        p, n = rng.choice([2, 3, 5]), rng.randint(1, 5)
        probe(random_invertible(RingSpec(p), n, rng), True)
    return t.finish()


def _restricted(u: Matrix, q) -> Matrix | None:
    basis = image_basis(q.eval_matrix(u))
    return restriction(u, basis) if basis else None


def suite_pid(limits: Limits) -> RunReport:
    """Similar restrictions to q(u)V and q(v)V force u and v to be similar."""
    t = _Tally("pid")
    rng = random.Random(limits.seed)
    premise_hits = 0

    def probe(u, v, rnd):
        nonlocal premise_hits
        qs = {q for q, _ in factor(minpoly(u))} | {q for q, _ in factor(minpoly(v))}
        similar = invariant_factors(u) == invariant_factors(v)
        bad = []
        for q in sorted(qs):
            ru, rv = _restricted(u, q), _restricted(v, q)
            premise = (ru is None and rv is None) or (ru is not None and rv is not None and is_similar(ru, rv))
            premise_hits += premise
            if premise and not similar:
                bad.append(str(q))
        t.case(not bad, rnd, (u.to_rows(), v.to_rows(), bad))

    for p, n in [(2, 2), (3, 2)]:
        mats = _gl(p, n)
        for u in mats:
            for v in mats:
                probe(u, v, False)
    for _ in range(MIN_RANDOM):
        p, n = rng.choice([2, 3]), rng.randint(2, 5)
        F = RingSpec(p)
        u = random_matrix(F, n, rng)
        kind = rng.random()
        if kind < 0.4:
            v = random_conjugate(u, rng)
        elif kind < 0.7:
            # two unipotents: restrictions to (u-1)V often agree without u ~ v
            v = random_conjugate(jordan_from_partition(random_partition(n, rng), F), rng)
            u = random_conjugate(jordan_from_partition(random_partition(n, rng), F), rng)
        else:
            v = random_matrix(F, n, rng)
        probe(u, v, True)
    t.report.results["premise_hits"] = premise_hits
    return t.finish()


class _OracleCache:
    """Oracle answers for holomorphs of cyclic subgroups, keyed by the subgroups."""

    def __init__(self, limits: Limits):
        self.limits = limits
        self.hols: dict = {}
        self.answers: dict = {}

    def hol(self, a: Matrix) -> Holomorph:
        key = cyclic_subgroup(a)
        if key not in self.hols:
            self.hols[key] = holomorph((a.ring.p, a.ring.m, a.rows), [a])
        return self.hols[key]

    def isomorphic(self, a: Matrix, b: Matrix) -> bool:
        key = (cyclic_subgroup(a), cyclic_subgroup(b))
        if key not in self.answers:
            self.answers[key] = are_isomorphic(self.hol(a), self.hol(b), budget=self.limits.oracle_budget)[0]
        return self.answers[key]


def suite_lindo(limits: Limits) -> RunReport:
    """The cyclic-conjugacy decision agrees with the brute-force oracle."""
    t = _Tally("lindo")
    rng = random.Random(limits.seed)
    for p, n in _small_gl():
        rep = verify_lindo(p, n, budget=limits.oracle_budget)
        t.report.results[f"GL_{n}({p})"] = {"scope": rep.scope, "pairs": rep.pairs,
                                           "disagreements": len(rep.disagreements)}
        t.exhaustive += rep.pairs
        t.counterexamples += rep.disagreements
    cache = _OracleCache(limits)
    for _ in range(MIN_RANDOM):
        p, n = rng.choice([(2, 2), (3, 2), (2, 3)])
        mats = _gl(p, n)
        a = rng.choice(mats)
        if rng.random() < 0.5:
            order = matrix_order(a)
            i = rng.choice([k for k in range(1, order + 1) if gcd(k, order) == 1])
            b = random_conjugate(a ** i, rng)
        else:
            b = rng.choice(mats)
        dec = cyclic_conjugate_field(a, b)
        t.case(dec.is_conjugate == cache.isomorphic(a, b), True, (a.to_rows(), b.to_rows()))
    return t.finish()


def suite_lindo2(limits: Limits) -> RunReport:
    """Unipotent partitions: reconstruction, conjugation invariance, and isomorphic holomorphs force similarity."""
    t = _Tally("lindo2")
    rng = random.Random(limits.seed)

    def partition_ok(a) -> bool:
        part = unipotent_partition(a)
        return part.dimension == a.rows and is_similar(jordan_from_partition(part, a.ring), a)

    fps: dict = {}

    def fp(a):
        key = cyclic_subgroup(a)
        if key not in fps:
            fps[key] = fingerprint(holomorph((a.ring.p, 1, a.rows), [a]))
        return fps[key]

    for p, n in [(2, 2), (3, 2), (2, 3)]:
        unis = [a for a in _gl(p, n) if _is_power_of(matrix_order(a), p)]
        for a in unis:
            t.case(partition_ok(a), False, a.to_rows())
        cache = _OracleCache(limits)
        reps = [c[0] for c in cyclic_subgroup_classes(list(_gl(p, n))) if c[0] in unis]
        for a in reps:
            for b in unis:
                if fp(a) == fp(b) and cache.isomorphic(a, b):
                    t.case(is_similar(a, b), False, (a.to_rows(), b.to_rows()))
    for _ in range(MIN_RANDOM):
        p, n = rng.choice([(2, 3), (2, 4), (3, 2), (3, 3)])
        F = RingSpec(p)
        a = random_unipotent(F, n, rng)
        b = random_conjugate(a, rng) if rng.random() < 0.5 else random_unipotent(F, n, rng)
        ok = partition_ok(a) and unipotent_partition(random_conjugate(a, rng)) == unipotent_partition(a)
        if fp(a) == fp(b):
            ok = ok and is_similar(a, b)
        t.case(ok, True, (a.to_rows(), b.to_rows()))
    return t.finish()


def _span_subgroup(G: Holomorph, cols) -> frozenset:
    span = howell_span(cols, G.ring, G.n)
    return frozenset(G.vector(v) for v in span.elements())


def suite_unip(limits: Limits) -> RunReport:
    """Hol(A, a) nilpotent, a unipotent, and o(a) a power of p are equivalent."""
    t = _Tally("unip")
    rng = random.Random(limits.seed)

    def probe(a, rnd):
        R = a.ring
        n = a.rows
        nil = a - Matrix.identity(R, n)
        unipotent = (nil ** (n * R.m)).is_zero()
        p_power = _is_power_of(matrix_order(a), R.p)
        G = holomorph((R.p, R.m, n), [a])
        nilpotent = nilpotency_class(G) is not None
        t.case(unipotent == p_power == nilpotent, rnd, (str(R), a.to_rows()))

    for p, n in [(2, 2), (3, 2)]:
        for a in _gl(p, n):
            probe(a, False)
    for _ in range(MIN_RANDOM):
        p, m, n = rng.choice([(2, 1, 3), (3, 1, 2), (2, 2, 2), (3, 1, 3), (2, 1, 4)])
        R = RingSpec(p, m)
        a = random_unipotent(R, n, rng) if (m == 1 and rng.random() < 0.5) else random_invertible(R, n, rng)
        if R.modulus ** n * matrix_order(a) > 3000:
            a = random_unipotent(RingSpec(p), n, rng) if m == 1 else a ** matrix_order(a)
        probe(a, True)
    return t.finish()


def suite_derived_span(limits: Limits) -> RunReport:
    """[G, G] equals the span of the columns of a - 1, element for element."""
    t = _Tally("derived-span")
    rng = random.Random(limits.seed)

    def probe(a, rnd):
        R = a.ring
        G = holomorph((R.p, R.m, a.rows), [a])
        cols = (a - Matrix.identity(R, a.rows)).columns()
        t.case(derived_subgroup(G).elements == _span_subgroup(G, cols), rnd, (str(R), a.to_rows()))

    for p, n in [(2, 2), (3, 2)]:
        for a in _gl(p, n):
            probe(a, False)
    for _ in range(MIN_RANDOM):
        p, m, n = rng.choice([(2, 1, 3), (3, 1, 3), (2, 2, 2), (2, 3, 2), (3, 2, 2), (5, 1, 2)])
        probe(random_invertible(RingSpec(p, m), n, rng), True)
    return t.finish()


def suite_lcs_span(limits: Limits) -> RunReport:
    """For unipotent a the proper lower central terms are the spans of the columns of (a - 1)^i."""
    t = _Tally("lcs-span")
    rng = random.Random(limits.seed)

    def probe(a, rnd):
        R = a.ring
        n = a.rows
        G = holomorph((R.p, R.m, n), [a])
        terms = lower_central_series(G)
        nil = a - Matrix.identity(R, n)
        ok = True
        power = Matrix.identity(R, n)
        for i, term in enumerate(terms[1:], start=1):
            power = power @ nil
            ok = ok and term.elements == _span_subgroup(G, power.columns())
        ok = ok and terms[-1].is_trivial()
        t.case(ok, rnd, (str(R), a.to_rows()))

    for p, n in [(2, 2), (3, 2), (2, 3)]:
        for a in _gl(p, n):
            if _is_power_of(matrix_order(a), p):
                probe(a, False)
    for _ in range(MIN_RANDOM):
        p, n = rng.choice([(2, 3), (2, 4), (3, 2), (3, 3), (5, 2)])
        probe(random_unipotent(RingSpec(p), n, rng), True)
    return t.finish()


def _conjugate_subgroups(S: frozenset, T: frozenset, mats) -> bool:
    return any(frozenset(x @ s @ x ** -1 for s in S) == T for x in mats)


def suite_nicecase0(limits: Limits) -> RunReport:
    """Coprime case: isomorphic holomorphs force conjugate complements."""
    t = _Tally("nicecase0")
    rng = random.Random(limits.seed)
    cache = _OracleCache(limits)
    found = 0

    def probe(a, b, mats, rnd):
        nonlocal found
        if cache.isomorphic(a, b):
            found += 1
            t.case(_conjugate_subgroups(cyclic_subgroup(a), cyclic_subgroup(b), mats), rnd,
                   (a.to_rows(), b.to_rows()))
        else:
            t.case(True, rnd)

    pools = {}
    for p, n in _small_gl():
        mats = _gl(p, n)
        regular = [a for a in mats if matrix_order(a) % p != 0]
        pools[(p, n)] = (mats, regular)
        reps = [c[0] for c in cyclic_subgroup_classes(list(mats)) if matrix_order(c[0]) % p != 0]
        for a in reps:
            for b in reps:
                probe(a, b, mats, False)
    for _ in range(MIN_RANDOM):
        mats, regular = pools[rng.choice(_small_gl())]
        a = rng.choice(regular)
        b = random_conjugate(a, rng) if rng.random() < 0.5 else rng.choice(regular)
        probe(a, b, mats, True)
    t.report.results["isomorphic_pairs_checked"] = found
    return t.finish()


@lru_cache(maxsize=None)
def _abelian_subgroups(p: int, n: int) -> tuple:
    mats = _gl(p, n)
    T = TableGroup(list(mats), lambda a, b: a @ b, Matrix.identity(RingSpec(p), n))
    out = []
    for S in all_subgroups(T):
        elems = [T.source[i] for i in sorted(S)]
        if all(x @ y == y @ x for x in elems for y in elems):
            out.append(tuple(elems))
    out.sort(key=lambda s: (len(s), [m.entries for m in s]))
    return tuple(out)


class _SubgroupOracle:
    def __init__(self, limits: Limits):
        self.limits = limits
        self.hols: dict = {}
        self.fps: dict = {}
        self.answers: dict = {}

    def hol(self, S: tuple) -> Holomorph:
        if S not in self.hols:
            a = S[0]
            self.hols[S] = holomorph((a.ring.p, 1, a.rows), list(S))
            self.fps[S] = fingerprint(self.hols[S])
        return self.hols[S]

    def isomorphic(self, S: tuple, T: tuple) -> bool:
        if len(S) != len(T):
            return False
        key = (S, T)
        if key not in self.answers:
            G, H = self.hol(S), self.hol(T)
            self.answers[key] = self.fps[S] == self.fps[T] and \
                are_isomorphic(G, H, budget=self.limits.oracle_budget)[0]
        return self.answers[key]


def _sum_condition(S: tuple) -> bool:
    a = S[0]
    ident = Matrix.identity(a.ring, a.rows)
    cols = [c for h in S for c in (h - ident).columns()]
    return len(image_basis(Matrix.from_columns(a.ring, cols))) == a.rows if cols else False


def suite_suma(limits: Limits) -> RunReport:
    """Abelian H with sum of (h-1)V = V: isomorphic holomorphs force conjugate complements."""
    t = _Tally("suma")
    rng = random.Random(limits.seed)
    oracle = _SubgroupOracle(limits)
    checked = 0

    def probe(S, T, mats, rnd):
        nonlocal checked
        if oracle.isomorphic(S, T):
            checked += 1
            t.case(_conjugate_subgroups(frozenset(S), frozenset(T), mats), rnd, ([m.to_rows() for m in S],))
        else:
            t.case(True, rnd)

    pools = []
    for p, n in [(3, 2), (2, 2)]:
        mats = _gl(p, n)
        ab = _abelian_subgroups(p, n)
        good = [S for S in ab if _sum_condition(S)]
        pools.append((mats, good, ab))
        for S in good:
            for T in ab:
                probe(S, T, mats, False)
    for _ in range(MIN_RANDOM):
        mats, good, ab = rng.choice(pools)
        S = rng.choice(good)
        same = [T for T in ab if len(T) == len(S)]
        probe(S, rng.choice(same), mats, True)
    t.report.results["isomorphic_pairs_checked"] = checked
    return t.finish()


def _iso_type(S: tuple) -> list[int]:
    return abelian_invariants(MatrixGroup(list(S))).as_list()


def suite_abe(limits: Limits) -> RunReport:
    """Abelian H, K with isomorphic holomorphs are isomorphic; includes the re-based pairs of the examples."""

    t = _Tally("abe")
    rng = random.Random(limits.seed)
    oracle = _SubgroupOracle(limits)
    # pairs produced by re-basing
    for p in (2, 3):
        rep = example_e9(limits, p=p)
        t.case(rep.overall, False, f"e9 p={p}")
    rep = example_e7(limits)
    t.case(rep.overall, False, "e7 (H abelian, L not: the statement needs both abelian)")

    def probe(S, T, rnd):
        if oracle.isomorphic(S, T):
            t.case(_iso_type(S) == _iso_type(T), rnd, ([m.to_rows() for m in S], [m.to_rows() for m in T]))
        else:
            t.case(True, rnd)

    pools = []
    for p, n in [(3, 2), (2, 3)]:
        ab = _abelian_subgroups(p, n)
        pools.append(ab)
        by_order: dict = {}
        for S in ab:
            by_order.setdefault(len(S), []).append(S)
        # one representative per GL-class keeps the exhaustive part small
        for group in by_order.values():
            reps = _class_reps(group, _gl(p, n))
            for S in reps:
                for T in reps:
                    probe(S, T, False)
    for _ in range(MIN_RANDOM):
        ab = rng.choice(pools)
        S = rng.choice(ab)
        probe(S, rng.choice([T for T in ab if len(T) == len(S)]), True)
    return t.finish()


def _class_reps(subs: list, mats) -> list:
    reps: list = []
    seen: set = set()
    for S in subs:
        fs = frozenset(S)
        if fs in seen:
            continue
        reps.append(S)
        for x in mats:
            seen.add(frozenset(x @ s @ x ** -1 for s in S))
    return reps


SUITES: dict[str, Callable[[Limits], RunReport]] = {
    "orden": suite_orden,
    "psimilar": suite_psimilar,
    "pid": suite_pid,
    "lindo": suite_lindo,
    "lindo2": suite_lindo2,
    "unip": suite_unip,
    "derived-span": suite_derived_span,
    "lcs-span": suite_lcs_span,
    "nicecase0": suite_nicecase0,
    "suma": suite_suma,
    "abe": suite_abe,
}


def run_suite(name: str, limits: Limits | None = None) -> RunReport:
    if name not in SUITES:
        raise UnknownSuite(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    report = SUITES[name](limits or Limits.from_env())
    report.inputs = {"suite": name, "seed": (limits or Limits.from_env()).seed}
    return report
