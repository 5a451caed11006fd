"""Submodules of (Z/p^mZ)^n: Howell normal form, membership, kernels, invariants.

Over the local ring Z/p^mZ every element is a unit times a power of p, so the
Howell form is reached by echelonizing with pivots of minimal valuation,
normalizing each pivot to p^k, and feeding p^(m-k) times every pivot row back
into the pool.  That last step is what makes the form canonical: any vector of
the span whose first c entries vanish is generated by the rows whose pivots
lie beyond column c.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import prod
from typing import Iterable, Sequence

from .errors import DimensionMismatch
from .ring import RingSpec

Vector = tuple[int, ...]


@dataclass(frozen=True)
class AbelianInvariants:
    """Elementary divisors of a finite abelian group, largest first.

    For p-groups every entry is a power of the same prime.  Mixed-order groups
    such as C_2 x C_24 are stored by their invariant factors ([24, 2]); use
    ``elementary_divisors`` for the prime-power decomposition.
    """

    divisors: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "divisors", tuple(sorted((d for d in self.divisors if d > 1), reverse=True)))

    @property
    def order(self) -> int:
        return prod(self.divisors)

    @classmethod
    def from_elementary(cls, prime_powers: Iterable[int]) -> "AbelianInvariants":
        """Recombine prime-power divisors into the invariant-factor chain."""
        by_prime: dict[int, list[int]] = {}
        for q in prime_powers:
            if q <= 1:
                continue
            by_prime.setdefault(_prime_of(q), []).append(q)
        for lst in by_prime.values():
            lst.sort(reverse=True)
        depth = max((len(v) for v in by_prime.values()), default=0)
        factors = [prod(lst[i] for lst in by_prime.values() if i < len(lst)) for i in range(depth)]
        return cls(tuple(factors))

    def elementary_divisors(self) -> tuple[int, ...]:
        out = []
        for d in self.divisors:
            n = d
            q = 2
            while n > 1:
                if n % q == 0:
                    pp = 1
                    while n % q == 0:
                        n //= q
                        pp *= q
                    out.append(pp)
                q += 1
        return tuple(sorted(out, reverse=True))

    def as_list(self) -> list[int]:
        return list(self.divisors)

    def __str__(self):
        return " x ".join(f"C_{d}" for d in self.divisors) or "1"


def _prime_of(q: int) -> int:
    d = 2
    while q % d:
        d += 1
    return d


@dataclass(frozen=True)
class SpanResult:
    ring: RingSpec
    n: int
    basis: tuple[Vector, ...]
    invariants: AbelianInvariants
    pivots: tuple[int, ...] = field(default=())

    @property
    def order(self) -> int:
        return self.invariants.order

    def contains(self, v: Sequence[int]) -> bool:
        return reduce_vector(self, v) is not None

    def __contains__(self, v) -> bool:
        return self.contains(v)

    def elements(self) -> set[Vector]:
        """Enumerate the submodule (for small spans only)."""
        q = self.ring.modulus
        elems = {tuple([0] * self.n)}
        for b in self.basis:
            new = set()
            for e in elems:
                cur = e
                for _ in range(q):
                    new.add(cur)
                    cur = tuple((x + y) % q for x, y in zip(cur, b))
            elems = new
        return elems


def _normalize(vectors: Iterable[Sequence[int]], ring: RingSpec, n: int | None):
    q = ring.modulus
    rows = [tuple(int(x) % q for x in v) for v in vectors]
    if n is None:
        if not rows:
            raise DimensionMismatch("cannot infer the ambient dimension of an empty list")
        n = len(rows[0])
    if any(len(r) != n for r in rows):
        raise DimensionMismatch("vectors of different lengths")
    return rows, n


def howell_form(vectors: Iterable[Sequence[int]], ring: RingSpec, n: int | None = None
                ) -> tuple[list[Vector], list[int]]:
    rows, n = _normalize(vectors, ring, n)
    p, m, q = ring.p, ring.m, ring.modulus
    pool = [list(r) for r in rows if any(r)]
    done: list[list[int]] = []
    pivots: list[int] = []
    for c in range(n):
        live = [r for r in pool if r[c]]
        if not live:
            continue
        best = min(live, key=lambda r: ring.valuation(r[c]))
        k = ring.valuation(best[c])
        unit = ring.inverse(best[c] // p**k)
        piv = [x * unit % q for x in best]
        rest = []
        for r in pool:
            if r is best:
                continue
            if r[c]:
                t = r[c] // p**k
                r = [(x - t * y) % q for x, y in zip(r, piv)]
            if any(r):
                rest.append(r)
        extra = [x * p**(m - k) % q for x in piv]
        if any(extra):
            rest.append(extra)
        pool = rest
        done.append(piv)
        pivots.append(c)
    # reduce entries above each pivot into [0, p^k)
    for i, c in enumerate(pivots):
        pk = done[i][c]
        for j in range(i):
            t = done[j][c] // pk
            if t:
                done[j] = [(x - t * y) % q for x, y in zip(done[j], done[i])]
    return [tuple(r) for r in done], pivots


def smith_invariants(vectors: Iterable[Sequence[int]], ring: RingSpec, n: int | None = None) -> AbelianInvariants:
    """Abelian invariants of the submodule spanned by ``vectors``.

    Smith reduction over the local ring: the entry of least valuation divides
    everything, so it clears its row and column directly.
    """
    rows, n = _normalize(vectors, ring, n)
    p, m, q = ring.p, ring.m, ring.modulus
    work = [list(r) for r in rows if any(r)]
    divisors = []
    while work:
        best = None
        for i, r in enumerate(work):
            for j, x in enumerate(r):
                if x:
                    v = ring.valuation(x)
                    if best is None or v < best[0]:
                        best = (v, i, j)
        if best is None:
            break
        k, i, j = best
        piv = work.pop(i)
        unit = ring.inverse(piv[j] // p**k)
        piv = [x * unit % q for x in piv]
        rest = []
        for r in work:
            if r[j]:
                t = r[j] // p**k
                r = [(x - t * y) % q for x, y in zip(r, piv)]
            r = r[:j] + r[j + 1:]
            if any(r):
                rest.append(r)
        work = rest
        divisors.append(p**(m - k))
    return AbelianInvariants(tuple(divisors))


def howell_span(vectors: Iterable[Sequence[int]], ring: RingSpec, n: int | None = None) -> SpanResult:
    """Canonical generators and abelian invariants of a submodule of R^n.

    An empty generating list gives the zero module (``n`` must then be given).
    """
    rows, n = _normalize(vectors, ring, n)
    basis, pivots = howell_form(rows, ring, n)
    return SpanResult(ring, n, tuple(basis), smith_invariants(basis, ring, n), tuple(pivots))


def reduce_vector(span: SpanResult, v: Sequence[int]) -> Vector | None:
    """Coefficients expressing v in the Howell basis, or None if v is outside the span."""
    ring = span.ring
    q = ring.modulus
    cur = [int(x) % q for x in v]
    if len(cur) != span.n:
        raise DimensionMismatch("vector length differs from the ambient rank")
    coeffs = []
    for row, c in zip(span.basis, span.pivots):
        pk = row[c]
        if cur[c] % pk:
            return None
        t = cur[c] // pk
        coeffs.append(t)
        if t:
            cur = [(x - t * y) % q for x, y in zip(cur, row)]
    return tuple(coeffs) if not any(cur) else None


def kernel(rows: Sequence[Sequence[int]], ring: RingSpec, ncols: int) -> list[Vector]:
    """Generators of {x in R^ncols : rows . x = 0}.

    Computes the Howell form of [M^T | I]; by the Howell property the rows
    whose left block vanishes generate the kernel.
    """
    q = ring.modulus
    nrows = len(rows)
    aug = []
    for j in range(ncols):
        image = [rows[i][j] % q for i in range(nrows)]
        aug.append(image + [1 if t == j else 0 for t in range(ncols)])
    form, _ = howell_form(aug, ring, nrows + ncols)
    return [tuple(r[nrows:]) for r in form if not any(r[:nrows])]


def span_of_columns(columns: Sequence[Sequence[int]], ring: RingSpec) -> SpanResult:
    return howell_span(columns, ring)
