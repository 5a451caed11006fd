"""Concrete finite groups with hashable elements.

Every group exposes ``identity``, ``mul``, ``inv`` and a generator tuple;
enumeration is a breadth-first closure under right multiplication by the
generators.  Semidirect products keep their elements structurally as
(normal part, complement index) pairs, so a group such as (Z/8Z)^4 x| C_24
(order 98304) is handled without a multiplication table.
"""

from __future__ import annotations

from collections import deque
from math import gcd, prod
from typing import Callable, Hashable, Sequence

from ..config import enumeration_cap
from ..errors import CapExceeded, NotAutomorphism, NotInvertible, SizeMismatch
from ..matrix import Matrix, is_invertible, mat_inv
from ..ring import RingSpec

Element = Hashable

# memoised matrix-vector products per holomorph
ACT_CACHE_LIMIT = 2**18


def bfs_closure(identity, gens: Sequence, mul: Callable, cap: int | None = None) -> list:
    """Elements of the monoid generated by ``gens`` (a group when finite), in BFS order."""
    cap = enumeration_cap() if cap is None else cap
    seen = {identity}
    order = [identity]
    queue = deque([identity])
    while queue:
        x = queue.popleft()
        for g in gens:
            y = mul(x, g)
            if y not in seen:
                seen.add(y)
                order.append(y)
                if len(order) > cap:
                    raise CapExceeded(f"closure exceeds cap {cap}")
                queue.append(y)
    return order


class FiniteGroup:
    """Base class.  Subclasses define identity, mul, inv and gens."""

    name = "group"
    identity: Element
    gens: tuple

    def mul(self, a, b):
        raise NotImplementedError

    def inv(self, a):
        raise NotImplementedError

    def elements(self, cap: int | None = None) -> list:
        cached = self.__dict__.get("_elements")
        if cached is None:
            cached = bfs_closure(self.identity, self.gens, self.mul, cap)
            self.__dict__["_elements"] = cached
            self.__dict__["_element_set"] = frozenset(cached)
        return cached

    @property
    def element_set(self) -> frozenset:
        self.elements()
        return self.__dict__["_element_set"]

    def order(self) -> int:
        return len(self.elements())

    def __len__(self):
        return self.order()

    def __contains__(self, x) -> bool:
        return x in self.element_set

    def power(self, x, k: int):
        if k < 0:
            x, k = self.inv(x), -k
        result = self.identity
        while k:
            if k & 1:
                result = self.mul(result, x)
            x = self.mul(x, x)
            k >>= 1
        return result

    def conj(self, g, x):
        """g x g^-1."""
        return self.mul(self.mul(g, x), self.inv(g))

    def commutator(self, x, y):
        """x y x^-1 y^-1."""
        return self.mul(self.mul(x, y), self.mul(self.inv(x), self.inv(y)))

    def element_order(self, x, cap: int | None = None) -> int:
        cap = enumeration_cap() if cap is None else cap
        k = 1
        y = x
        while y != self.identity:
            y = self.mul(y, x)
            k += 1
            if k > cap:
                raise CapExceeded("element order exceeds cap")
        return k

    def __repr__(self):
        return f"<{self.name}>"


class VectorGroup(FiniteGroup):
    """The additive group (Z/p^mZ)^n, elements are tuples."""

    def __init__(self, p: int, m: int, n: int, cap: int | None = None):
        self.ring = RingSpec(p, m)
        self.n = n
        cap = enumeration_cap() if cap is None else cap
        if self.ring.modulus ** n > cap:
            raise CapExceeded(f"|(Z/{self.ring.modulus})^{n}| exceeds cap {cap}")
        self.identity = (0,) * n
        self.gens = tuple(tuple(1 if i == j else 0 for i in range(n)) for j in range(n))
        self.name = f"({self.ring})^{n}"

    def mul(self, a, b):
        q = self.ring.modulus
        return tuple((x + y) % q for x, y in zip(a, b))

    def inv(self, a):
        q = self.ring.modulus
        return tuple(-x % q for x in a)

    def order(self) -> int:
        return self.ring.modulus ** self.n


def vector_group(p: int, m: int, n: int, cap: int | None = None) -> VectorGroup:
    return VectorGroup(p, m, n, cap)


class MatrixGroup(FiniteGroup):
    """Subgroup of GL_n(Z/p^mZ) generated by matrices; elements are Matrix objects."""

    def __init__(self, gens: Sequence[Matrix], cap: int | None = None):
        gens = list(gens)
        if not gens:
            raise ValueError("a matrix group needs at least one generator (use the identity)")
        ring, n = gens[0].ring, gens[0].rows
        for g in gens:
            if g.ring != ring or g.shape != (n, n):
                raise SizeMismatch("generators must share ring and size")
            if not is_invertible(g):
                raise NotInvertible("generators must be invertible")
        self.ring = ring
        self.n = n
        self.identity = Matrix.identity(ring, n)
        self.gens = tuple(gens)
        self.name = f"<{len(gens)} matrices in GL_{n}({ring})>"
        self.elements(cap)
        self._index = {g: i for i, g in enumerate(self.elements())}

    def mul(self, a, b):
        return a @ b

    def inv(self, a):
        return mat_inv(a)

    def index(self, a: Matrix) -> int:
        return self._index[a]


def matrix_group_closure(gens: Sequence[Matrix], cap: int | None = None) -> MatrixGroup:
    return MatrixGroup(gens, cap)


class Holomorph(FiniteGroup):
    """U x| H for U = (Z/p^mZ)^n and H a group of matrices acting on column vectors.

    Elements are pairs (vector, index of the complement matrix) with
    (v, h)(w, k) = (v + h.w, hk).
    """

    def __init__(self, ring: RingSpec, n: int, H: Sequence[Matrix] | MatrixGroup, cap: int | None = None):
        comp = H if isinstance(H, MatrixGroup) else MatrixGroup(
            list(H) if H else [Matrix.identity(ring, n)], cap)
        if comp.ring != ring or comp.n != n:
            raise SizeMismatch("matrices do not act on the given module")
        self.ring = ring
        self.n = n
        self.complement_group = comp
        self.mats = comp.elements()
        self._rows = [tuple(m.row(i) for i in range(n)) for m in self.mats]
        self._mul_cache: dict[tuple[int, int], int] = {}
        self._act_cache: dict = {}
        self._inv_idx = [comp.index(mat_inv(m)) for m in self.mats]
        self.identity = ((0,) * n, 0)
        vec_gens = [(tuple(1 if i == j else 0 for i in range(n)), 0) for j in range(n)]
        mat_gens = [((0,) * n, comp.index(g)) for g in comp.gens if not g.is_identity()]
        self.gens = tuple(vec_gens + mat_gens)
        self._order = ring.modulus ** n * len(self.mats)
        self.name = f"Hol(({ring})^{n}, <{len(comp.gens)} gens, order {len(self.mats)}>)"

    def order(self) -> int:
        return self._order

    def _act(self, h: int, w):
        key = (h, w)
        r = self._act_cache.get(key)
        if r is None:
            q = self.ring.modulus
            r = tuple(sum(x * y for x, y in zip(row, w)) % q for row in self._rows[h])
            if len(self._act_cache) < ACT_CACHE_LIMIT:
                self._act_cache[key] = r
        return r

    def _hmul(self, h: int, k: int) -> int:
        key = (h, k)
        r = self._mul_cache.get(key)
        if r is None:
            comp = self.complement_group
            r = comp.index(self.mats[h] @ self.mats[k])
            self._mul_cache[key] = r
        return r

    def mul(self, a, b):
        v, h = a
        w, k = b
        q = self.ring.modulus
        hw = self._act(h, w) if h else w
        return tuple((x + y) % q for x, y in zip(v, hw)), (self._hmul(h, k) if h and k else h + k)

    def inv(self, a):
        v, h = a
        hi = self._inv_idx[h]
        q = self.ring.modulus
        return tuple(-x % q for x in self._act(hi, v)), hi

    # convenience constructors ------------------------------------------

    def element(self, vector: Sequence[int], matrix: Matrix | None = None):
        q = self.ring.modulus
        idx = 0 if matrix is None else self.complement_group.index(matrix)
        return tuple(int(x) % q for x in vector), idx

    def vector(self, vector: Sequence[int]):
        return self.element(vector)

    def complement(self, matrix: Matrix):
        return self.element((0,) * self.n, matrix)

    def parts(self, e) -> tuple[tuple[int, ...], Matrix]:
        return e[0], self.mats[e[1]]

    def is_vector(self, e) -> bool:
        return e[1] == 0

    def __contains__(self, x) -> bool:
        try:
            v, h = x
        except (TypeError, ValueError):
            return False
        return len(v) == self.n and 0 <= h < len(self.mats)


def holomorph(U: VectorGroup | tuple, H: Sequence[Matrix], cap: int | None = None) -> Holomorph:
    """Hol(U, H) for U given as a VectorGroup or a (p, m, n) triple."""
    if isinstance(U, VectorGroup):
        p, m, n = U.ring.p, U.ring.m, U.n
    else:
        p, m, n = U
    ring = RingSpec(p, m)
    for h in H:
        if h.ring != ring or h.shape != (n, n):
            raise SizeMismatch("matrix does not act on U")
    return Holomorph(ring, n, H, cap)


class Automorphism:
    """Automorphism of a finite group stored as a full image table."""

    __slots__ = ("group", "images", "_key")

    def __init__(self, group: FiniteGroup, images: dict):
        self.group = group
        self.images = images
        self._key = tuple(images[e] for e in group.elements())

    def __call__(self, x):
        return self.images[x]

    def __eq__(self, other):
        return isinstance(other, Automorphism) and self.group is other.group and self._key == other._key

    def __hash__(self):
        return hash(self._key)

    def compose(self, other: "Automorphism") -> "Automorphism":
        """self after other."""
        return Automorphism(self.group, {e: self.images[other.images[e]] for e in self.group.elements()})

    def inverse(self) -> "Automorphism":
        return Automorphism(self.group, {v: k for k, v in self.images.items()})

    def is_identity(self) -> bool:
        return all(k == v for k, v in self.images.items())

    def order(self) -> int:
        k, cur = 1, self
        while not cur.is_identity():
            cur = cur.compose(self)
            k += 1
        return k


def identity_automorphism(group: FiniteGroup) -> Automorphism:
    return Automorphism(group, {e: e for e in group.elements()})


def is_automorphism(group: FiniteGroup, images: dict) -> bool:
    elems = group.elements()
    if set(images) != set(elems) or len(set(images.values())) != len(elems):
        return False
    # f(g s) = f(g) f(s) for every g and generator s forces a homomorphism
    return all(images[group.mul(g, s)] == group.mul(images[g], images[s])
               for g in elems for s in group.gens)


def make_automorphism(group: FiniteGroup, f: Callable | dict) -> Automorphism:
    images = dict(f) if isinstance(f, dict) else {e: f(e) for e in group.elements()}
    if not is_automorphism(group, images):
        raise NotAutomorphism("map is not a bijective homomorphism")
    return Automorphism(group, images)


def inner_automorphism(group: FiniteGroup, x) -> Automorphism:
    """g -> x g x^-1."""
    xi = group.inv(x)
    return Automorphism(group, {g: group.mul(group.mul(x, g), xi) for g in group.elements()})


class SemidirectProduct(FiniteGroup):
    """base x| A where A is the group generated by the given automorphisms of base.

    Elements are (base element, index into A) with (x, h)(y, k) = (x h(y), hk).
    """

    def __init__(self, base: FiniteGroup, autos: Sequence[Automorphism | Callable | dict],
                 cap: int | None = None):
        self.base = base
        auts = [a if isinstance(a, Automorphism) else make_automorphism(base, a) for a in autos]
        for a in auts:
            if a.group is not base:
                raise NotAutomorphism("automorphism belongs to a different group")
        ident = identity_automorphism(base)
        self.auts = bfs_closure(ident, auts, lambda f, g: f.compose(g), cap)
        self._aidx = {a: i for i, a in enumerate(self.auts)}
        self._amul: dict[tuple[int, int], int] = {}
        self._ainv = [self._aidx[a.inverse()] for a in self.auts]
        self.identity = (base.identity, 0)
        self.gens = tuple([(g, 0) for g in base.gens]
                          + [(base.identity, self._aidx[a]) for a in auts if not a.is_identity()])
        self.name = f"{base.name} x| <{len(auts)} automorphisms, order {len(self.auts)}>"

    def order(self) -> int:
        return self.base.order() * len(self.auts)

    def _am(self, h: int, k: int) -> int:
        r = self._amul.get((h, k))
        if r is None:
            r = self._aidx[self.auts[h].compose(self.auts[k])]
            self._amul[(h, k)] = r
        return r

    def mul(self, a, b):
        x, h = a
        y, k = b
        return self.base.mul(x, self.auts[h].images[y]), self._am(h, k)

    def inv(self, a):
        x, h = a
        hi = self._ainv[h]
        return self.auts[hi].images[self.base.inv(x)], hi

    def automorphism(self, idx: int) -> Automorphism:
        return self.auts[idx]


def semidirect(base: FiniteGroup, autos: Sequence, cap: int | None = None) -> SemidirectProduct:
    return SemidirectProduct(base, autos, cap)


class DirectProduct(FiniteGroup):
    def __init__(self, *factors: FiniteGroup):
        self.factors = factors
        self.identity = tuple(f.identity for f in factors)
        gens = []
        for i, f in enumerate(factors):
            for g in f.gens:
                e = list(self.identity)
                e[i] = g
                gens.append(tuple(e))
        self.gens = tuple(gens)
        self.name = " x ".join(f.name for f in factors)

    def mul(self, a, b):
        return tuple(f.mul(x, y) for f, x, y in zip(self.factors, a, b))

    def inv(self, a):
        return tuple(f.inv(x) for f, x in zip(self.factors, a))

    def order(self) -> int:
        return prod(f.order() for f in self.factors)


class CyclicGroup(FiniteGroup):
    def __init__(self, n: int):
        self.n = n
        self.identity = 0
        self.gens = (1 % n,) if n > 1 else ()
        self.name = f"C_{n}"

    def mul(self, a, b):
        return (a + b) % self.n

    def inv(self, a):
        return -a % self.n

    def order(self) -> int:
        return self.n


class PermutationGroup(FiniteGroup):
    """Permutations of range(degree) as image tuples; (a*b)(i) = a(b(i))."""

    def __init__(self, gens: Sequence[Sequence[int]], degree: int | None = None):
        gens = [tuple(g) for g in gens]
        degree = degree if degree is not None else len(gens[0])
        self.degree = degree
        self.identity = tuple(range(degree))
        self.gens = tuple(gens)
        self.name = f"<{len(gens)} permutations of {degree} points>"

    def mul(self, a, b):
        return tuple(a[i] for i in b)

    def inv(self, a):
        out = [0] * len(a)
        for i, x in enumerate(a):
            out[x] = i
        return tuple(out)


class IndexedGroup(FiniteGroup):
    """A copy of a group with elements relabelled by integers.

    ``labels`` is a permutation of range(|G|) assigning labels to the elements
    of ``source`` in enumeration order; products are computed in ``source``.
    """

    def __init__(self, source: FiniteGroup, labels: Sequence[int] | None = None):
        elems = source.elements()
        labels = list(range(len(elems))) if labels is None else list(labels)
        self.source = source
        self._to = {e: labels[i] for i, e in enumerate(elems)}
        self._from = {labels[i]: e for i, e in enumerate(elems)}
        self.identity = self._to[source.identity]
        self.gens = tuple(self._to[g] for g in source.gens)
        self.name = f"relabelled {source.name}"

    def mul(self, a, b):
        return self._to[self.source.mul(self._from[a], self._from[b])]

    def inv(self, a):
        return self._to[self.source.inv(self._from[a])]


def lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)


def random_element(group: FiniteGroup, rng, length: int = 24):
    """Product of random generators; cheap and good enough for spot checks."""
    x = group.identity
    if not group.gens:
        return x
    for _ in range(length):
        x = group.mul(x, rng.choice(group.gens))
    return x
