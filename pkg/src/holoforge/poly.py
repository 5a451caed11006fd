"""Dense univariate polynomials over F_p and the polynomials attached to a matrix."""

from __future__ import annotations

from functools import lru_cache
from itertools import product
from typing import Sequence

from .errors import NotField, NotSquare, ParseError, ZeroPolynomial
from .linalg import nullspace
from .matrix import Matrix
from .ring import RingSpec


class Polynomial:
    """Polynomial over F_p with coefficients stored low degree first."""

    __slots__ = ("ring", "coeffs")

    def __init__(self, ring: RingSpec | int, coeffs: Sequence[int] = ()):
        if isinstance(ring, int):
            ring = RingSpec(ring)
        if not ring.is_field:
            raise NotField("polynomials are only supported over F_p")
        p = ring.p
        c = [x % p for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.ring = ring
        self.coeffs = tuple(c)

    @property
    def p(self) -> int:
        return self.ring.p

    @classmethod
    def x(cls, p: int) -> "Polynomial":
        return cls(p, (0, 1))

    @classmethod
    def const(cls, p: int, c: int) -> "Polynomial":
        return cls(p, (c,))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lead(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def monic(self) -> "Polynomial":
        if self.is_zero():
            raise ZeroPolynomial("the zero polynomial has no monic associate")
        inv = pow(self.lead, -1, self.p)
        return Polynomial(self.ring, [c * inv for c in self.coeffs])

    def is_monic(self) -> bool:
        return self.lead == 1

    def _check(self, other):
        if not isinstance(other, Polynomial):
            other = Polynomial(self.ring, (int(other),))
        if other.ring != self.ring:
            raise ValueError("polynomials over different fields")
        return other

    def __add__(self, other):
        other = self._check(other)
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (n - len(self.coeffs))
        b = other.coeffs + (0,) * (n - len(other.coeffs))
        return Polynomial(self.ring, [x + y for x, y in zip(a, b)])

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(self.ring, [-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-self._check(other))

    def __rsub__(self, other):
        return self._check(other) - self

    def __mul__(self, other):
        other = self._check(other)
        if self.is_zero() or other.is_zero():
            return Polynomial(self.ring)
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return Polynomial(self.ring, out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        result = Polynomial(self.ring, (1,))
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __divmod__(self, other):
        other = self._check(other)
        if other.is_zero():
            raise ZeroPolynomial("division by the zero polynomial")
        p = self.p
        rem = list(self.coeffs)
        dq = other.degree
        inv = pow(other.lead, -1, p)
        quot = [0] * max(0, len(rem) - dq)
        for k in range(len(rem) - 1, dq - 1, -1):
            c = rem[k] * inv % p
            if c:
                quot[k - dq] = c
                for j, b in enumerate(other.coeffs):
                    rem[k - dq + j] = (rem[k - dq + j] - c * b) % p
        return Polynomial(self.ring, quot), Polynomial(self.ring, rem[:dq] if dq > 0 else [])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def divides(self, other: "Polynomial") -> bool:
        return (other % self).is_zero()

    def derivative(self) -> "Polynomial":
        return Polynomial(self.ring, [i * c for i, c in enumerate(self.coeffs)][1:])

    def __call__(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = (acc * x + c) % self.p
        return acc

    def eval_matrix(self, a: Matrix) -> Matrix:
        """Horner evaluation f(a)."""
        if not a.is_square:
            raise NotSquare("polynomials act on square matrices")
        ident = Matrix.identity(a.ring, a.rows)
        acc = Matrix.zeros(a.ring, a.rows)
        for c in reversed(self.coeffs):
            acc = acc @ a + ident.scale(c)
        return acc

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.ring == other.ring and self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash((self.ring, self.coeffs))

    def __lt__(self, other: "Polynomial"):
        # degree first, then coefficients high to low: a total order for sorting
        return (self.degree, self.coeffs[::-1]) < (other.degree, other.coeffs[::-1])

    def __repr__(self):
        return f"Polynomial({self.p}, {list(self.coeffs)})"

    def __str__(self):
        if self.is_zero():
            return "0"
        terms = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            mono = "" if i == 0 else ("X" if i == 1 else f"X^{i}")
            if c == 1 and mono:
                terms.append(mono)
            else:
                terms.append(f"{c}{mono}" if mono else str(c))
        return " + ".join(terms)

    def serialize(self) -> str:
        return " ".join(str(c) for c in self.coeffs)

    @classmethod
    def parse(cls, p: int, text: str) -> "Polynomial":
        try:
            return cls(p, [int(x) for x in text.split()])
        except ValueError as exc:
            raise ParseError(f"bad polynomial {text!r}: {exc}") from None


def poly_gcd(f: Polynomial, g: Polynomial) -> Polynomial:
    """Monic gcd; gcd(0, 0) is the zero polynomial."""
    while not g.is_zero():
        f, g = g, f % g
    return f if f.is_zero() else f.monic()


def poly_lcm(f: Polynomial, g: Polynomial) -> Polynomial:
    return (f * g // poly_gcd(f, g)).monic()


def is_squarefree(f: Polynomial) -> bool:
    if f.is_zero():
        raise ZeroPolynomial("square-freeness of the zero polynomial")
    return poly_gcd(f, f.derivative()).degree == 0


@lru_cache(maxsize=None)
def monic_irreducibles(p: int, degree: int) -> tuple[Polynomial, ...]:
    """All monic irreducible polynomials of the given degree, by sieving."""
    out = []
    smaller = [q for d in range(1, degree // 2 + 1) for q in monic_irreducibles(p, d)]
    for tail in product(range(p), repeat=degree):
        f = Polynomial(p, list(tail[::-1]) + [1])
        if degree > 1 and f.coeffs[0] == 0:
            continue
        if all(not q.divides(f) for q in smaller):
            out.append(f)
    return tuple(out)


def factor(f: Polynomial) -> list[tuple[Polynomial, int]]:
    """Factor a monic polynomial into monic irreducibles by trial division.

    Inputs here are characteristic polynomials of degree <= 8, so searching
    irreducibles up to degree deg(f)/2 is cheap.
    """
    if f.is_zero():
        raise ZeroPolynomial("cannot factor zero")
    f = f.monic()
    out = []
    d = 1
    while f.degree >= 2 * d:
        for q in monic_irreducibles(f.p, d):
            e = 0
            while True:
                quo, rem = divmod(f, q)
                if not rem.is_zero():
                    break
                f = quo
                e += 1
            if e:
                out.append((q, e))
        d += 1
    if f.degree > 0:
        merged = False
        for i, (q, e) in enumerate(out):
            if q == f:
                out[i] = (q, e + 1)
                merged = True
        if not merged:
            out.append((f, 1))
    out.sort(key=lambda qe: qe[0])
    return out


def is_irreducible(f: Polynomial) -> bool:
    fac = factor(f)
    return len(fac) == 1 and fac[0][1] == 1


def _require_field_square(a: Matrix):
    if not a.is_square:
        raise NotSquare(f"{a.shape} matrix")
    if not a.ring.is_field:
        raise NotField(f"matrix over {a.ring}; reduce modulo p first")


def charpoly(a: Matrix) -> Polynomial:
    """Characteristic polynomial via reduction to upper Hessenberg form."""
    _require_field_square(a)
    p = a.ring.p
    n = a.rows
    h = a.to_rows()
    for j in range(n - 2):
        piv = next((i for i in range(j + 1, n) if h[i][j]), None)
        if piv is None:
            continue
        if piv != j + 1:
            h[piv], h[j + 1] = h[j + 1], h[piv]
            for row in h:
                row[piv], row[j + 1] = row[j + 1], row[piv]
        inv = pow(h[j + 1][j], -1, p)
        for i in range(j + 2, n):
            u = h[i][j] * inv % p
            if not u:
                continue
            h[i] = [(x - u * y) % p for x, y in zip(h[i], h[j + 1])]
            for row in h:
                row[j + 1] = (row[j + 1] + u * row[i]) % p
    x = Polynomial.x(p)
    polys = [Polynomial(p, (1,))]
    for m in range(1, n + 1):
        acc = (x - h[m - 1][m - 1]) * polys[m - 1]
        prod = 1
        for i in range(m - 1, 0, -1):
            prod = prod * h[i][i - 1] % p
            acc = acc - Polynomial(p, (h[i - 1][m - 1] * prod,)) * polys[i - 1]
        polys.append(acc)
    return polys[n]


def minpoly(a: Matrix) -> Polynomial:
    """Least-degree monic annihilator, found by the first linear dependency among I, a, a^2, ..."""
    _require_field_square(a)
    p = a.ring.p
    powers = [Matrix.identity(a.ring, a.rows).entries]
    cur = Matrix.identity(a.ring, a.rows)
    while True:
        cur = cur @ a
        powers.append(cur.entries)
        d = len(powers) - 1
        rows = [[powers[j][i] for j in range(d + 1)] for i in range(len(cur.entries))]
        kern = nullspace(rows, d + 1, p)
        if kern:
            # the kernel is one-dimensional at the first dependency
            return Polynomial(p, kern[0]).monic()


def local_minpoly(a: Matrix, v: Sequence[int]) -> Polynomial:
    """Monic generator of the annihilator of v in F_p[X] acting through a."""
    p = a.ring.p
    vecs = [tuple(x % p for x in v)]
    while True:
        vecs.append(a.apply(vecs[-1]))
        d = len(vecs) - 1
        rows = [[vecs[j][i] for j in range(d + 1)] for i in range(len(v))]
        kern = nullspace(rows, d + 1, p)
        if kern:
            return Polynomial(p, kern[0]).monic()


def companion(f: Polynomial) -> Matrix:
    """Companion matrix: ones on the subdiagonal, -coefficients in the last column.

    It is the matrix of multiplication by X on F_p[X]/(f) in the basis 1, X, ..., X^{d-1}.
    """
    f = f.monic()
    d = f.degree
    if d < 1:
        raise ValueError("companion matrix needs a polynomial of positive degree")
    rows = [[0] * d for _ in range(d)]
    for i in range(1, d):
        rows[i][i - 1] = 1
    for i in range(d):
        rows[i][d - 1] = -f.coeffs[i]
    return Matrix.from_rows(f.ring, rows)
