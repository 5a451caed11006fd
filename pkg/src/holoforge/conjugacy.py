"""Conjugacy of cyclic subgroups <a>, <b> of GL_n, hence isomorphism of V x| <a> and V x| <b>.

<a> and <b> are conjugate exactly when a is similar to b^i for some i coprime
to the order of b.  Over F_p similarity is decidable, so the field procedure
always answers.  Over Z/p^mZ with m > 1 only refutations by invariants and
confirmations by an explicit, verified conjugator are attempted; anything
else is reported as Unknown.
"""

from __future__ import annotations

import enum
import random
from dataclasses import dataclass, field
from itertools import product
from math import gcd
from typing import Optional

from .errors import NotInvertible, RingMismatch, SizeMismatch
from .howell import kernel
from .linalg import rank
from .matrix import Matrix, det, is_invertible, mat_inv, matrix_order, reduce_mod_p
from .normal_forms import is_similar, similarity_witness

DEFAULT_RING_BUDGET = 10**5


class Verdict(str, enum.Enum):
    CONJUGATE = "Conjugate"
    NOT_CONJUGATE = "NotConjugate"
    UNKNOWN = "Unknown"


@dataclass(frozen=True)
class ConjugacyDecision:
    verdict: Verdict
    exponent: Optional[int] = None
    conjugator: Optional[Matrix] = None
    separating_invariant: Optional[str] = None
    budget_note: Optional[str] = None
    details: dict = field(default_factory=dict, compare=False)

    @property
    def is_conjugate(self) -> bool:
        return self.verdict is Verdict.CONJUGATE

    def to_json(self) -> dict:
        out = {"verdict": self.verdict.value}
        if self.exponent is not None:
            out["exponent"] = self.exponent
            out["witness"] = self.conjugator.to_rows()
        if self.separating_invariant is not None:
            out["separating_invariant"] = self.separating_invariant
        if self.budget_note is not None:
            out["budget_note"] = self.budget_note
        return out


def _prepare(a: Matrix, b: Matrix):
    if a.ring != b.ring:
        raise RingMismatch(f"{a.ring} vs {b.ring}")
    if a.shape != b.shape or not a.is_square:
        raise SizeMismatch(f"{a.shape} vs {b.shape}")
    if not (is_invertible(a) and is_invertible(b)):
        raise NotInvertible("both matrices must be invertible")


def coprime_exponents(order: int) -> list[int]:
    return [i for i in range(1, order + 1) if gcd(i, order) == 1] if order > 1 else [1]


def verify_witness(a: Matrix, b: Matrix, exponent: int, x: Matrix) -> bool:
    """Check x a x^-1 = b^exponent with the exponent coprime to o(b)."""
    if gcd(exponent, matrix_order(b)) != 1 or not is_invertible(x):
        return False
    return x @ a == (b ** exponent) @ x


def cyclic_conjugate_field(a: Matrix, b: Matrix) -> ConjugacyDecision:
    _prepare(a, b)
    oa, ob = matrix_order(a), matrix_order(b)
    if oa != ob:
        return ConjugacyDecision(Verdict.NOT_CONJUGATE,
                                 separating_invariant=f"orders differ: o(a) = {oa}, o(b) = {ob}")
    for i in coprime_exponents(ob):
        bi = b ** i
        if is_similar(a, bi):
            x = similarity_witness(a, bi)
            assert verify_witness(a, b, i, x)
            return ConjugacyDecision(Verdict.CONJUGATE, exponent=i, conjugator=x)
    return ConjugacyDecision(Verdict.NOT_CONJUGATE, separating_invariant="no coprime power similar")


def holomorph_isomorphic(a: Matrix, b: Matrix) -> bool:
    """Decide V x| <a> = V x| <b> over F_p through cyclic-subgroup conjugacy."""
    return cyclic_conjugate_field(a, b).is_conjugate


def _trace_sequence(a: Matrix, length: int) -> tuple[int, ...]:
    out = []
    cur = a
    for _ in range(length):
        out.append(cur.trace())
        cur = cur @ a
    return tuple(out)


def _refute_exponent(a: Matrix, b: Matrix, i: int, da: int, traces_a, abar: Matrix) -> Optional[str]:
    bi = b ** i
    if det(bi) != da:
        return "determinant"
    if _trace_sequence(bi, len(traces_a)) != traces_a:
        return "trace sequence"
    if not is_similar(abar, reduce_mod_p(bi)):
        return "reduction mod p"
    return None


def _search_conjugator(a: Matrix, c: Matrix, budget: int, rng: random.Random):
    """Look for invertible X with X a = c X.

    The solutions form a submodule S of M_n(Z/p^mZ), computed exactly as the
    kernel of X -> X a - c X.  An element of S is invertible iff its reduction
    mod p is, and the reductions of S form the F_p-span of the reduced kernel
    generators.  When that span has at most ``budget`` elements it is
    enumerated completely, so failure is a proof that no conjugator exists;
    otherwise random combinations are tried.

    Returns (conjugator or None, candidates tried, exhausted flag).
    """
    ring = a.ring
    p, q = ring.p, ring.modulus
    n = a.rows
    rows = []
    for r in range(n):
        for s in range(n):
            # entry (r, s) of X a - c X, as a linear form in the entries of X
            eq = [0] * (n * n)
            for k in range(n):
                eq[r * n + k] += a[k, s]
                eq[k * n + s] -= c[r, k]
            rows.append([x % q for x in eq])
    gens = kernel(rows, ring, n * n)
    # generators whose reductions are independent span every reduction class
    basis: list[tuple[int, ...]] = []
    for g in gens:
        if rank([tuple(x % p for x in b) for b in basis] + [tuple(x % p for x in g)], p) > len(basis):
            basis.append(g)
    mats = [Matrix(ring, n, n, g) for g in basis]
    if not mats:
        return None, 0, True
    tried = 0
    if p ** len(mats) <= budget:
        for coefs in product(range(p), repeat=len(mats)):
            if not any(coefs):
                continue
            tried += 1
            x = Matrix(ring, n, n, [sum(cf * g.entries[t] for cf, g in zip(coefs, mats))
                                   for t in range(n * n)])
            if is_invertible(x):
                return x, tried, False
        return None, tried, True
    while tried < budget:
        tried += 1
        coefs = [rng.randrange(q) for _ in mats]
        x = Matrix(ring, n, n, [sum(cf * g.entries[t] for cf, g in zip(coefs, mats))
                               for t in range(n * n)])
        if is_invertible(x):
            return x, tried, False
    return None, tried, False


def cyclic_conjugate_ring(a: Matrix, b: Matrix, budget: int = DEFAULT_RING_BUDGET,
                          witness: Optional[tuple[int, Matrix]] = None,
                          seed: int = 0) -> ConjugacyDecision:
    """Sound three-valued decision over Z/p^mZ.

    Every coprime exponent i is first tested against invariants of similarity
    (determinant, traces of powers, similarity after reduction mod p).  If all
    exponents are refuted the answer is NotConjugate with the refuting
    invariant.  Survivors are confirmed only by a verified conjugator, either
    the supplied ``witness`` or one found by search within ``budget``.
    """
    _prepare(a, b)
    oa, ob = matrix_order(a), matrix_order(b)
    if oa != ob:
        return ConjugacyDecision(Verdict.NOT_CONJUGATE,
                                 separating_invariant=f"orders differ: o(a) = {oa}, o(b) = {ob}")
    if witness is not None:
        i, x = witness
        if verify_witness(a, b, i, x):
            return ConjugacyDecision(Verdict.CONJUGATE, exponent=i, conjugator=x,
                                     budget_note="externally supplied witness verified")
    da = det(a)
    traces_a = _trace_sequence(a, ob)
    abar = reduce_mod_p(a)
    reasons = {}
    survivors = []
    for i in coprime_exponents(ob):
        why = _refute_exponent(a, b, i, da, traces_a, abar)
        if why is None:
            survivors.append(i)
        else:
            reasons[i] = why
    if not survivors:
        kinds = set(reasons.values())
        if kinds == {"determinant"}:
            dets = sorted({det(b ** i) for i in reasons})
            shown = dets[0] if len(dets) == 1 else dets
            cert = f"determinant: det A = {da}, det(B^i) = {shown} for all i coprime to {ob}"
        else:
            cert = "; ".join(f"i={i}: {why}" for i, why in sorted(reasons.items()))
        return ConjugacyDecision(Verdict.NOT_CONJUGATE, separating_invariant=cert,
                                 details={"refuted": reasons})
    rng = random.Random(seed)
    spent = 0
    unresolved = []
    for i in survivors:
        x, used, exhausted = _search_conjugator(a, b ** i, max(1, budget - spent), rng)
        spent += used
        if x is not None:
            assert verify_witness(a, b, i, x)
            return ConjugacyDecision(Verdict.CONJUGATE, exponent=i, conjugator=x,
                                     budget_note=f"conjugator found after {spent} candidates")
        if exhausted:
            reasons[i] = "no invertible intertwiner"
        else:
            unresolved.append(i)
    if not unresolved:
        cert = "; ".join(f"i={i}: {why}" for i, why in sorted(reasons.items()))
        return ConjugacyDecision(Verdict.NOT_CONJUGATE, separating_invariant=cert,
                                 details={"refuted": reasons})
    return ConjugacyDecision(Verdict.UNKNOWN,
                             budget_note=f"exponents {unresolved} not refuted; no conjugator within {budget} candidates",
                             details={"refuted": reasons, "survivors": unresolved})


def conjugate_by(x: Matrix, a: Matrix) -> Matrix:
    return x @ a @ mat_inv(x)
