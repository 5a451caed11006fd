"""Dense matrices over Z/p^mZ.

Matrices are immutable and hashable so they can serve directly as group
elements.  Entries are stored row-major as a flat tuple of residues.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .errors import (
    CapExceeded,
    DimensionMismatch,
    NotInvertible,
    NotSquare,
    ParseError,
    RingMismatch,
)
from .ring import RingSpec

DEFAULT_ORDER_CAP = 10**6


class Matrix:
    __slots__ = ("ring", "rows", "cols", "entries", "_hash")

    def __init__(self, ring: RingSpec, rows: int, cols: int, entries: Iterable[int]):
        if rows < 1 or cols < 1:
            raise DimensionMismatch("matrices must have at least one row and column")
        q = ring.modulus
        entries = tuple(int(x) % q for x in entries)
        if len(entries) != rows * cols:
            raise DimensionMismatch(f"expected {rows * cols} entries, got {len(entries)}")
        self.ring = ring
        self.rows = rows
        self.cols = cols
        self.entries = entries
        self._hash = hash((ring, rows, cols, entries))

    # construction -----------------------------------------------------

    @classmethod
    def from_rows(cls, ring: RingSpec, rows: Sequence[Sequence[int]]) -> "Matrix":
        rows = [list(r) for r in rows]
        if not rows or not rows[0]:
            raise DimensionMismatch("empty matrix")
        width = len(rows[0])
        if any(len(r) != width for r in rows):
            raise DimensionMismatch("ragged rows")
        return cls(ring, len(rows), width, [x for r in rows for x in r])

    @classmethod
    def from_columns(cls, ring: RingSpec, columns: Sequence[Sequence[int]]) -> "Matrix":
        return cls.from_rows(ring, list(zip(*columns)))

    @classmethod
    def identity(cls, ring: RingSpec, n: int) -> "Matrix":
        return cls(ring, n, n, [1 if i == j else 0 for i in range(n) for j in range(n)])

    @classmethod
    def zeros(cls, ring: RingSpec, rows: int, cols: int | None = None) -> "Matrix":
        cols = rows if cols is None else cols
        return cls(ring, rows, cols, [0] * (rows * cols))

    @classmethod
    def diag(cls, ring: RingSpec, values: Sequence[int]) -> "Matrix":
        n = len(values)
        return cls(ring, n, n, [values[i] if i == j else 0 for i in range(n) for j in range(n)])

    @classmethod
    def block_diag(cls, blocks: Sequence["Matrix"]) -> "Matrix":
        ring = blocks[0].ring
        n = sum(b.rows for b in blocks)
        k = sum(b.cols for b in blocks)
        out = [[0] * k for _ in range(n)]
        r0 = c0 = 0
        for b in blocks:
            _same_ring(ring, b.ring)
            for i in range(b.rows):
                for j in range(b.cols):
                    out[r0 + i][c0 + j] = b[i, j]
            r0 += b.rows
            c0 += b.cols
        return cls.from_rows(ring, out)

    # access -----------------------------------------------------------

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple[int, ...]:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def col(self, j: int) -> tuple[int, ...]:
        return self.entries[j::self.cols]

    def to_rows(self) -> list[list[int]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def columns(self) -> list[tuple[int, ...]]:
        return [self.col(j) for j in range(self.cols)]

    def signed_rows(self) -> list[list[int]]:
        return [[self.ring.signed(x) for x in self.row(i)] for i in range(self.rows)]

    # arithmetic -------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return (self.ring == other.ring and self.rows == other.rows
                and self.cols == other.cols and self.entries == other.entries)

    def __hash__(self):
        return self._hash

    def __matmul__(self, other: "Matrix") -> "Matrix":
        return mat_mul(self, other)

    def __add__(self, other: "Matrix") -> "Matrix":
        _same_ring(self.ring, other.ring)
        if self.shape != other.shape:
            raise DimensionMismatch(f"{self.shape} + {other.shape}")
        return Matrix(self.ring, self.rows, self.cols,
                      [a + b for a, b in zip(self.entries, other.entries)])

    def __sub__(self, other: "Matrix") -> "Matrix":
        _same_ring(self.ring, other.ring)
        if self.shape != other.shape:
            raise DimensionMismatch(f"{self.shape} - {other.shape}")
        return Matrix(self.ring, self.rows, self.cols,
                      [a - b for a, b in zip(self.entries, other.entries)])

    def __neg__(self) -> "Matrix":
        return Matrix(self.ring, self.rows, self.cols, [-a for a in self.entries])

    def scale(self, c: int) -> "Matrix":
        return Matrix(self.ring, self.rows, self.cols, [c * a for a in self.entries])

    def __pow__(self, k: int) -> "Matrix":
        if not self.is_square:
            raise NotSquare("power of a non-square matrix")
        if k < 0:
            return mat_inv(self) ** (-k)
        result = Matrix.identity(self.ring, self.rows)
        base = self
        while k:
            if k & 1:
                result = result @ base
            base = base @ base
            k >>= 1
        return result

    def apply(self, v: Sequence[int]) -> tuple[int, ...]:
        """Matrix-vector product with a column vector."""
        if len(v) != self.cols:
            raise DimensionMismatch(f"vector of length {len(v)} for {self.shape} matrix")
        q = self.ring.modulus
        c = self.cols
        e = self.entries
        return tuple(sum(e[i * c + j] * v[j] for j in range(c)) % q for i in range(self.rows))

    def transpose(self) -> "Matrix":
        return Matrix.from_rows(self.ring, [list(self.col(j)) for j in range(self.cols)])

    def trace(self) -> int:
        if not self.is_square:
            raise NotSquare("trace of a non-square matrix")
        return sum(self[i, i] for i in range(self.rows)) % self.ring.modulus

    def is_identity(self) -> bool:
        return self.is_square and self == Matrix.identity(self.ring, self.rows)

    def is_zero(self) -> bool:
        return not any(self.entries)

    def __repr__(self):
        return f"Matrix({self.ring}, {self.to_rows()})"

    def __str__(self):
        width = max(len(str(x)) for x in self.entries)
        return "\n".join(" ".join(str(x).rjust(width) for x in self.row(i))
                         for i in range(self.rows))


def _same_ring(r1: RingSpec, r2: RingSpec):
    if r1 != r2:
        raise RingMismatch(f"{r1} vs {r2}")


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    _same_ring(a.ring, b.ring)
    if a.cols != b.rows:
        raise DimensionMismatch(f"cannot multiply {a.shape} by {b.shape}")
    n, k, m = a.rows, a.cols, b.cols
    ae, be = a.entries, b.entries
    bcols = [be[j::m] for j in range(m)]
    out = []
    for i in range(n):
        arow = ae[i * k:(i + 1) * k]
        for j in range(m):
            bc = bcols[j]
            out.append(sum(x * y for x, y in zip(arow, bc)))
    return Matrix(a.ring, n, m, out)


def mat_inv(a: Matrix) -> Matrix:
    """Inverse by Gauss-Jordan elimination with unit pivots.

    Over the local ring Z/p^mZ a square matrix is invertible exactly when
    every column still has a unit entry at its pivot step.
    """
    if not a.is_square:
        raise NotSquare(f"cannot invert a {a.shape} matrix")
    ring = a.ring
    q = ring.modulus
    n = a.rows
    work = [list(a.row(i)) + [1 if i == j else 0 for j in range(n)] for i in range(n)]
    for c in range(n):
        piv = next((r for r in range(c, n) if ring.is_unit(work[r][c])), None)
        if piv is None:
            raise NotInvertible("determinant is not a unit")
        work[c], work[piv] = work[piv], work[c]
        inv = ring.inverse(work[c][c])
        work[c] = [x * inv % q for x in work[c]]
        for r in range(n):
            if r != c and work[r][c]:
                f = work[r][c]
                work[r] = [(x - f * y) % q for x, y in zip(work[r], work[c])]
    return Matrix.from_rows(ring, [row[n:] for row in work])


def is_invertible(a: Matrix) -> bool:
    return a.is_square and a.ring.is_unit(det(a))


def _det_laplace(rows: list[list[int]]) -> int:
    n = len(rows)
    if n == 1:
        return rows[0][0]
    if n == 2:
        return rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]
    total = 0
    for j, x in enumerate(rows[0]):
        if x:
            minor = [r[:j] + r[j + 1:] for r in rows[1:]]
            total += (-1) ** j * x * _det_laplace(minor)
    return total


def _det_bareiss(rows: list[list[int]]) -> int:
    m = [list(r) for r in rows]
    n = len(m)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            swap = next((r for r in range(k + 1, n) if m[r][k] != 0), None)
            if swap is None:
                return 0
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def det(a: Matrix) -> int:
    """Exact determinant of the integer lift, reduced mod p^m."""
    if not a.is_square:
        raise NotSquare(f"determinant of a {a.shape} matrix")
    rows = a.to_rows()
    value = _det_laplace(rows) if a.rows <= 6 else _det_bareiss(rows)
    return value % a.ring.modulus


def matrix_order(a: Matrix, cap: int = DEFAULT_ORDER_CAP) -> int:
    if not is_invertible(a):
        raise NotInvertible("only invertible matrices have finite multiplicative order")
    ident = Matrix.identity(a.ring, a.rows)
    power = a
    k = 1
    while power != ident:
        k += 1
        if k > cap:
            raise CapExceeded(f"order exceeds cap {cap}")
        power = power @ a
    return k


def reduce_mod_p(a: Matrix) -> Matrix:
    if a.ring.is_field:
        return a
    return Matrix(a.ring.residue_field, a.rows, a.cols, a.entries)


def lift(a: Matrix, ring: RingSpec) -> Matrix:
    """Reinterpret residues in a larger ring with the same prime."""
    if ring.p != a.ring.p:
        raise RingMismatch(f"cannot lift {a.ring} to {ring}")
    return Matrix(ring, a.rows, a.cols, a.entries)


# text format ------------------------------------------------------------

def format_matrix(a: Matrix) -> str:
    lines = [f"{a.ring.p} {a.ring.m} {a.rows} {a.cols}"]
    lines += [" ".join(str(x) for x in a.row(i)) for i in range(a.rows)]
    return "\n".join(lines) + "\n"


def parse_matrix(text: str) -> Matrix:
    lines = [ln.split() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if not lines:
        raise ParseError("empty matrix file")
    try:
        p, m, rows, cols = (int(x) for x in lines[0])
        body = [[int(x) for x in ln] for ln in lines[1:]]
    except ValueError as exc:
        raise ParseError(f"malformed matrix file: {exc}") from None
    if len(body) != rows or any(len(r) != cols for r in body):
        raise ParseError(f"header says {rows}x{cols} but body has a different shape")
    try:
        ring = RingSpec(p, m)
    except ValueError as exc:
        raise ParseError(str(exc)) from None
    return Matrix.from_rows(ring, body)


def read_matrix(path) -> Matrix:
    with open(path) as fh:
        return parse_matrix(fh.read())


def write_matrix(a: Matrix, path) -> None:
    with open(path, "w") as fh:
        fh.write(format_matrix(a))
