"""Gaussian elimination over the prime field F_p.

Vectors are tuples of residues, matrices are lists of rows.  These are the
workhorses behind minimal polynomials, restrictions and similarity witnesses.
"""

from __future__ import annotations

from typing import Sequence

from .errors import DimensionMismatch, NotInvertible
from .matrix import Matrix
from .ring import RingSpec


def rref(rows: Sequence[Sequence[int]], p: int) -> tuple[list[list[int]], list[int]]:
    """Reduced row echelon form and the pivot column of each nonzero row."""
    work = [[x % p for x in r] for r in rows]
    if not work:
        return [], []
    ncols = len(work[0])
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(work)) if work[i][c]), None)
        if piv is None:
            continue
        work[r], work[piv] = work[piv], work[r]
        inv = pow(work[r][c], -1, p)
        work[r] = [x * inv % p for x in work[r]]
        for i in range(len(work)):
            if i != r and work[i][c]:
                f = work[i][c]
                work[i] = [(x - f * y) % p for x, y in zip(work[i], work[r])]
        pivots.append(c)
        r += 1
        if r == len(work):
            break
    return work[:r], pivots


def rank(rows: Sequence[Sequence[int]], p: int) -> int:
    return len(rref(rows, p)[1])


def matrix_rank(a: Matrix) -> int:
    return rank(a.to_rows(), a.ring.p)


def nullspace(rows: Sequence[Sequence[int]], ncols: int, p: int) -> list[tuple[int, ...]]:
    """Basis of {x : rows . x = 0} (right kernel)."""
    red, pivots = rref(rows, p) if rows else ([], [])
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        x = [0] * ncols
        x[f] = 1
        for row, pc in zip(red, pivots):
            x[pc] = -row[f] % p
        basis.append(tuple(x))
    return basis


def column_space_basis(vectors: Sequence[Sequence[int]], p: int) -> list[tuple[int, ...]]:
    """Canonical (reduced echelon) basis of the span of ``vectors``."""
    red, _ = rref(vectors, p)
    return [tuple(r) for r in red]


def solve(rows: Sequence[Sequence[int]], rhs: Sequence[int], p: int) -> tuple[int, ...] | None:
    """One solution x of rows . x = rhs, or None when inconsistent."""
    if not rows:
        return None
    ncols = len(rows[0])
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    red, pivots = rref(aug, p)
    if ncols in pivots:
        return None
    x = [0] * ncols
    for row, pc in zip(red, pivots):
        x[pc] = row[ncols]
    return tuple(x)


def coordinates(basis: Sequence[Sequence[int]], v: Sequence[int], p: int) -> tuple[int, ...] | None:
    """Coefficients c with sum c_i basis_i = v, or None if v is outside the span."""
    if not basis:
        return () if not any(x % p for x in v) else None
    n = len(v)
    rows = [[basis[j][i] for j in range(len(basis))] for i in range(n)]
    return solve(rows, v, p)


def is_independent(vectors: Sequence[Sequence[int]], p: int) -> bool:
    return rank(vectors, p) == len(vectors)


def in_span(basis: Sequence[Sequence[int]], v: Sequence[int], p: int) -> bool:
    return coordinates(basis, v, p) is not None


def complete_basis(vectors: Sequence[Sequence[int]], n: int, p: int) -> list[tuple[int, ...]]:
    """Extend independent ``vectors`` by standard basis vectors to a basis of F_p^n."""
    out = [tuple(v) for v in vectors]
    for i in range(n):
        e = tuple(1 if j == i else 0 for j in range(n))
        if rank(out + [e], p) > len(out):
            out.append(e)
    return out


def field_inverse(rows: Sequence[Sequence[int]], p: int) -> list[list[int]]:
    n = len(rows)
    aug = [list(r) + [1 if i == j else 0 for j in range(n)] for i, r in enumerate(rows)]
    red, pivots = rref(aug, p)
    if pivots[:n] != list(range(n)) or len(pivots) < n:
        raise NotInvertible("singular matrix")
    return [r[n:] for r in red]


def matrix_from_columns(p: int, cols: Sequence[Sequence[int]]) -> Matrix:
    if not cols:
        raise DimensionMismatch("no columns")
    return Matrix.from_columns(RingSpec(p), cols)
