"""Similarity of matrices over F_p.

Two independent routes are kept on purpose: ``invariant_factors`` counts
kernel dimensions of q(a)^j for every irreducible factor q of the
characteristic polynomial, while ``rcf`` splits the space into cyclic
subspaces and produces the change of basis.  ``rcf`` refuses to return when
the two disagree.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import (
    HoloforgeError,
    NotField,
    NotIndependent,
    NotInvariant,
    NotInvertible,
    NotSimilar,
    NotSquare,
    NotUnipotent,
    RingMismatch,
)
from .linalg import column_space_basis, coordinates, is_independent, matrix_rank, nullspace, solve
from .matrix import Matrix, is_invertible, mat_inv
from .poly import Polynomial, charpoly, companion, factor, is_squarefree, local_minpoly, minpoly


@dataclass(frozen=True)
class InvariantFactorList:
    """Monic invariant factors f_1 | f_2 | ... | f_k."""

    factors: tuple[Polynomial, ...]

    def __post_init__(self):
        for f, g in zip(self.factors, self.factors[1:]):
            if not f.divides(g):
                raise ValueError(f"{f} does not divide {g}")

    @property
    def degrees(self) -> tuple[int, ...]:
        return tuple(f.degree for f in self.factors)

    @property
    def minimal_polynomial(self) -> Polynomial:
        return self.factors[-1]

    def product(self) -> Polynomial:
        out = Polynomial(self.factors[0].ring, (1,))
        for f in self.factors:
            out = out * f
        return out

    def to_json(self) -> list[list[int]]:
        return [list(f.coeffs) for f in self.factors]

    def __str__(self):
        return "[" + ", ".join(str(f) for f in self.factors) + "]"


@dataclass(frozen=True)
class UnipotentPartition:
    """Jordan-block multiplicities e_1, ..., e_m for eigenvalue 1 (e_i blocks of size i)."""

    multiplicities: tuple[int, ...]

    @property
    def dimension(self) -> int:
        return sum(i * e for i, e in enumerate(self.multiplicities, start=1))

    @property
    def block_sizes(self) -> list[int]:
        return [i for i, e in enumerate(self.multiplicities, start=1) for _ in range(e)]


def _check(a: Matrix):
    if not a.is_square:
        raise NotSquare(f"{a.shape} matrix")
    if not a.ring.is_field:
        raise NotField(f"similarity is only decided over F_p, got {a.ring}")


def _primary_partition(a: Matrix, q: Polynomial, multiplicity: int) -> list[int]:
    """Exponents of the q-primary elementary divisors, largest first."""
    n = a.rows
    d = q.degree
    qa = q.eval_matrix(a)
    power = Matrix.identity(a.ring, n)
    kernel_dims = [0]
    while kernel_dims[-1] < d * multiplicity:
        power = power @ qa
        kernel_dims.append(n - matrix_rank(power))
    # blocks of exponent >= j
    at_least = [(kernel_dims[j] - kernel_dims[j - 1]) // d for j in range(1, len(kernel_dims))]
    sizes = []
    for j, count in enumerate(at_least, start=1):
        bigger = at_least[j] if j < len(at_least) else 0
        sizes += [j] * (count - bigger)
    return sorted(sizes, reverse=True)


def invariant_factors(a: Matrix) -> InvariantFactorList:
    _check(a)
    p = a.ring.p
    parts = [(q, _primary_partition(a, q, e)) for q, e in factor(charpoly(a))]
    depth = max(len(sizes) for _, sizes in parts)
    factors = []
    for i in range(depth):
        f = Polynomial(p, (1,))
        for q, sizes in parts:
            if i < len(sizes):
                f = f * q ** sizes[i]
        factors.append(f)
    return InvariantFactorList(tuple(reversed(factors)))


def _max_vector(m: Matrix, mu: Polynomial) -> tuple[int, ...]:
    """A vector whose local minimal polynomial is the full minimal polynomial mu."""
    p = m.ring.p
    n = m.rows
    total = [0] * n
    std = [tuple(1 if i == j else 0 for i in range(n)) for j in range(n)]
    local = [local_minpoly(m, e) for e in std]
    for q, e in factor(mu):
        qe = q ** e
        j = next(j for j in range(n) if qe.divides(local[j]))
        u = (local[j] // qe).eval_matrix(m).apply(std[j])
        total = [(x + y) % p for x, y in zip(total, u)]
    return tuple(total)


def _cyclic_blocks(m: Matrix) -> list[tuple[Polynomial, list[tuple[int, ...]]]]:
    """Split F_p^n into cyclic m-invariant subspaces with descending invariant factors.

    Each block is (its minimal polynomial, Krylov basis v, mv, ..., m^{d-1}v) in
    the coordinates of ``m``.  The complement of a cyclic subspace of maximal
    dimension is cut out by a functional that is nonzero only on its last
    Krylov vector.
    """
    p = m.ring.p
    n = m.rows
    mu = minpoly(m)
    d = mu.degree
    v = _max_vector(m, mu)
    krylov = [v]
    for _ in range(d - 1):
        krylov.append(m.apply(krylov[-1]))
    if d == n:
        return [(mu, krylov)]
    phi = solve(krylov, [0] * (d - 1) + [1], p)
    functionals = [phi]
    mt = m.transpose()
    for _ in range(d - 1):
        functionals.append(mt.apply(functionals[-1]))
    comp = nullspace(functionals, n, p)
    images = [m.apply(c) for c in comp]
    restricted = Matrix.from_columns(m.ring, [coordinates(comp, img, p) for img in images])
    blocks = [(mu, krylov)]
    for f, basis in _cyclic_blocks(restricted):
        lifted = [tuple(sum(c * comp[j][i] for j, c in enumerate(vec)) % p for i in range(n))
                  for vec in basis]
        blocks.append((f, lifted))
    return blocks


def rcf(a: Matrix) -> tuple[Matrix, Matrix]:
    """Rational canonical form C and an invertible X with X a X^-1 = C.

    Companion blocks appear in the order f_1 | f_2 | ... | f_k.
    """
    _check(a)
    blocks = list(reversed(_cyclic_blocks(a)))
    found = InvariantFactorList(tuple(f for f, _ in blocks))
    expected = invariant_factors(a)
    if found != expected:
        raise HoloforgeError(f"cyclic decomposition {found} disagrees with kernel counts {expected}")
    canon = Matrix.block_diag([companion(f) for f, _ in blocks])
    change = Matrix.from_columns(a.ring, [v for _, basis in blocks for v in basis])
    x = mat_inv(change)
    if x @ a @ change != canon:
        raise HoloforgeError("rational canonical form witness failed verification")
    return canon, x


def rational_canonical_form(a: Matrix) -> Matrix:
    return Matrix.block_diag([companion(f) for f in invariant_factors(a).factors])


def is_similar(a: Matrix, b: Matrix) -> bool:
    if a.ring != b.ring:
        raise RingMismatch(f"{a.ring} vs {b.ring}")
    _check(a)
    _check(b)
    if a.rows != b.rows:
        return False
    return invariant_factors(a) == invariant_factors(b)


def similarity_witness(a: Matrix, b: Matrix) -> Matrix:
    """Invertible X with X a X^-1 = b, composed from both rational canonical forms."""
    if a.ring != b.ring:
        raise RingMismatch(f"{a.ring} vs {b.ring}")
    if a.rows != b.rows:
        raise NotSimilar("different sizes")
    ca, xa = rcf(a)
    cb, xb = rcf(b)
    if ca != cb:
        raise NotSimilar("rational canonical forms differ")
    x = mat_inv(xb) @ xa
    if x @ a != b @ x:
        raise HoloforgeError("similarity witness failed verification")
    return x


def is_p_regular(a: Matrix) -> bool:
    _check(a)
    if not is_invertible(a):
        raise NotInvertible("p-regularity is defined for invertible matrices")
    return is_squarefree(minpoly(a))


def frobenius_power_similar(a: Matrix) -> bool:
    """Whether a is similar to its p-th power."""
    _check(a)
    if not is_invertible(a):
        raise NotInvertible("expected an invertible matrix")
    return is_similar(a, a ** a.ring.p)


def restriction(a: Matrix, subspace_basis: Sequence[Sequence[int]]) -> Matrix:
    """Matrix of a on an invariant subspace, in the coordinates of the given basis."""
    _check(a)
    p = a.ring.p
    basis = [tuple(x % p for x in v) for v in subspace_basis]
    if not basis or not is_independent(basis, p):
        raise NotIndependent("subspace basis must be nonempty and linearly independent")
    cols = []
    for v in basis:
        c = coordinates(basis, a.apply(v), p)
        if c is None:
            raise NotInvariant("the subspace is not invariant under the matrix")
        cols.append(c)
    return Matrix.from_columns(a.ring, cols)


def image_basis(a: Matrix) -> list[tuple[int, ...]]:
    """Echelon basis of the column space a(F_p^n)."""

    return column_space_basis(a.columns(), a.ring.p)


def jordan_block(ring, size: int, eigenvalue: int = 1) -> Matrix:
    """Upper triangular Jordan block."""
    return Matrix.from_rows(ring, [[eigenvalue if i == j else (1 if j == i + 1 else 0)
                                    for j in range(size)] for i in range(size)])


def unipotent_partition(a: Matrix) -> UnipotentPartition:
    """Jordan multiplicities of a unipotent matrix from dim (a-1)^i V.

    With d_j = dim (a-1)^j V, one has d_j = sum_{i>j} (i-j) e_i.  That system
    is upper triangular with ones on the diagonal and i-j on the superdiagonals,
    so it is solved by back substitution from the largest block size.
    """
    _check(a)
    n = a.rows
    nil = a - Matrix.identity(a.ring, n)
    if not (nil ** n).is_zero():
        raise NotUnipotent("(a - 1)^n is not zero")
    dims = [n]
    power = Matrix.identity(a.ring, n)
    while dims[-1] > 0:
        power = power @ nil
        dims.append(matrix_rank(power))
    top = len(dims) - 1
    e = [0] * (top + 1)
    for j in range(top - 1, -1, -1):
        e[j + 1] = dims[j] - sum((i - j) * e[i] for i in range(j + 2, top + 1))
    return UnipotentPartition(tuple(e[1:]))


def jordan_from_partition(part: UnipotentPartition, ring) -> Matrix:
    return Matrix.block_diag([jordan_block(ring, s) for s in part.block_sizes])
