"""
Exact rational linear algebra.

Everything here works over :class:`fractions.Fraction`, so rank, kernel and
containment decisions are certificates rather than approximations.
Matrices are immutable; subspaces are stored by a canonical reduced
column-echelon basis, which makes subspace equality plain tuple equality.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from sympsharp.errors import AmbientMismatch, ShapeMismatch

ZERO = Fraction(0)
ONE = Fraction(1)


def scalar(x) -> Fraction:
    """Coerce an int, Fraction or ``"p/q"`` string to a reduced Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(x, (int, str)):
        return Fraction(x)
    raise TypeError("unsupported scalar %r" % (x,))


def vector(xs: Iterable) -> tuple[Fraction, ...]:
    return tuple(scalar(x) for x in xs)


class Matrix:
    """An immutable ``rows x cols`` matrix of Fractions (row-major)."""

    __slots__ = ("rows", "cols", "entries", "_hash")

    def __init__(self, rows: int, cols: int, entries: Sequence[Sequence] = ()):
        entries = tuple(vector(row) for row in entries)
        if len(entries) != rows or any(len(row) != cols for row in entries):
            raise ShapeMismatch("entries do not form a %dx%d matrix" % (rows, cols))
        self.rows = rows
        self.cols = cols
        self.entries = entries
        self._hash = None

    @classmethod
    def _trusted(cls, rows: int, cols: int, entries) -> "Matrix":
        # entries are already tuples of Fractions of the right shape
        m = cls.__new__(cls)
        m.rows, m.cols, m.entries, m._hash = rows, cols, entries, None
        return m

    # construction ---------------------------------------------------------

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], cols: int | None = None) -> "Matrix":
        rows = [list(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        return cls(len(rows), cols, rows)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], rows: int) -> "Matrix":
        columns = [vector(c) for c in columns]
        for c in columns:
            if len(c) != rows:
                raise ShapeMismatch("column of length %d, expected %d" % (len(c), rows))
        return cls(rows, len(columns), [[c[i] for c in columns] for i in range(rows)])

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "Matrix":
        return cls(rows, cols, [[ZERO] * cols for _ in range(rows)])

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls(n, n, [[ONE if i == j else ZERO for j in range(n)] for i in range(n)])

    @classmethod
    def block_diag(cls, *blocks: "Matrix") -> "Matrix":
        rows = sum(b.rows for b in blocks)
        cols = sum(b.cols for b in blocks)
        out = [[ZERO] * cols for _ in range(rows)]
        r0 = c0 = 0
        for b in blocks:
            for i in range(b.rows):
                out[r0 + i][c0:c0 + b.cols] = b.entries[i]
            r0 += b.rows
            c0 += b.cols
        return cls(rows, cols, out)

    @classmethod
    def hstack(cls, *blocks: "Matrix") -> "Matrix":
        if not blocks:
            raise ShapeMismatch("hstack of nothing")
        rows = blocks[0].rows
        if any(b.rows != rows for b in blocks):
            raise ShapeMismatch("hstack: row counts differ")
        return cls(rows, sum(b.cols for b in blocks),
                   [sum((b.entries[i] for b in blocks), ()) for i in range(rows)])

    @classmethod
    def vstack(cls, *blocks: "Matrix") -> "Matrix":
        if not blocks:
            raise ShapeMismatch("vstack of nothing")
        cols = blocks[0].cols
        if any(b.cols != cols for b in blocks):
            raise ShapeMismatch("vstack: column counts differ")
        return cls(sum(b.rows for b in blocks), cols, [r for b in blocks for r in b.entries])

    # access ---------------------------------------------------------------

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def column(self, j: int) -> tuple[Fraction, ...]:
        return tuple(row[j] for row in self.entries)

    def columns(self) -> list[tuple[Fraction, ...]]:
        return [self.column(j) for j in range(self.cols)]

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def row_block(self, start: int, stop: int) -> "Matrix":
        return Matrix(stop - start, self.cols, self.entries[start:stop])

    def col_block(self, start: int, stop: int) -> "Matrix":
        return Matrix(self.rows, stop - start, [r[start:stop] for r in self.entries])

    # arithmetic -----------------------------------------------------------

    @property
    def T(self) -> "Matrix":
        return Matrix(self.cols, self.rows,
                      [[self.entries[i][j] for i in range(self.rows)] for j in range(self.cols)])

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise ShapeMismatch("cannot multiply %dx%d by %dx%d"
                                % (self.rows, self.cols, other.rows, other.cols))
        out = []
        n = other.cols
        for row in self.entries:
            acc = [ZERO] * n
            for a, orow in zip(row, other.entries):
                if a:
                    for j, b in enumerate(orow):
                        if b:
                            acc[j] += a * b
            out.append(tuple(acc))
        return Matrix._trusted(self.rows, n, tuple(out))

    def apply(self, v: Sequence) -> tuple[Fraction, ...]:
        v = vector(v)
        if len(v) != self.cols:
            raise ShapeMismatch("vector of length %d, expected %d" % (len(v), self.cols))
        return tuple(sum((a * b for a, b in zip(row, v)), ZERO) for row in self.entries)

    def __neg__(self) -> "Matrix":
        return Matrix(self.rows, self.cols, [[-x for x in r] for r in self.entries])

    def __add__(self, other: "Matrix") -> "Matrix":
        if self.shape != other.shape:
            raise ShapeMismatch("cannot add %r and %r" % (self.shape, other.shape))
        return Matrix(self.rows, self.cols,
                      [[a + b for a, b in zip(r, s)] for r, s in zip(self.entries, other.entries)])

    def __sub__(self, other: "Matrix") -> "Matrix":
        return self + (-other)

    def scale(self, c) -> "Matrix":
        c = scalar(c)
        return Matrix(self.rows, self.cols, [[c * x for x in r] for r in self.entries])

    def is_zero(self) -> bool:
        return all(x == 0 for r in self.entries for x in r)

    # protocol -------------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and self.entries == other.entries

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.rows, self.cols, self.entries))
        return self._hash

    def tolist(self) -> list[list[Fraction]]:
        return [list(r) for r in self.entries]

    def __repr__(self):
        return "Matrix(%d, %d, %s)" % (self.rows, self.cols, format_rows(self))


def format_scalar(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else "%d/%d" % (x.numerator, x.denominator)


def format_rows(m: Matrix) -> str:
    return "[" + ",".join("[" + ",".join(format_scalar(x) for x in r) + "]"
                          for r in m.entries) + "]"


# elimination ----------------------------------------------------------------

def _rref_rows(rows: list[list[Fraction]], ncols: int) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form of a list of rows (modified copy) and pivot columns."""
    rows = [list(r) for r in rows]
    pivots = []
    r = 0
    for c in range(ncols):
        if r == len(rows):
            break
        p = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        inv = ONE / rows[r][c]
        if inv != 1:
            rows[r] = [x * inv for x in rows[r]]
        pivot_row = rows[r]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], pivot_row)]
        pivots.append(c)
        r += 1
    return rows[:r], pivots


def column_echelon(m: Matrix) -> Matrix:
    """Unique reduced column-echelon form of ``m`` with zero columns dropped.

    The result spans the column space of ``m`` and has ``rank(m)`` columns.
    """
    rows, _ = _rref_rows([list(c) for c in m.columns()], m.rows)
    return Matrix.from_columns(rows, m.rows)


def rank(m: Matrix) -> int:
    return len(_rref_rows(list(m.entries), m.cols)[1])


def kernel(m: Matrix) -> "Subspace":
    """Null space ``{v : m v = 0}`` as a canonical subspace of dimension ``cols - rank``."""
    rows, pivots = _rref_rows(list(m.entries), m.cols)
    pivot_set = set(pivots)
    free = [c for c in range(m.cols) if c not in pivot_set]
    basis = []
    for f in free:
        v = [ZERO] * m.cols
        v[f] = ONE
        for row, p in zip(rows, pivots):
            v[p] = -row[f]
        basis.append(v)
    return Subspace.span(basis, m.cols)


@dataclass(frozen=True)
class Subspace:
    """A linear subspace of Q^ambient_dim, held by its canonical basis.

    ``basis`` is an ``ambient_dim x k`` matrix in reduced column-echelon
    form, so two Subspace values are equal exactly when the subspaces are.
    Build instances with :meth:`span` rather than the raw constructor.
    """

    ambient_dim: int
    basis: Matrix

    @classmethod
    def span(cls, vectors, ambient_dim: int) -> "Subspace":
        if isinstance(vectors, Matrix):
            m = vectors
        else:
            m = Matrix.from_columns(list(vectors), ambient_dim)
        if m.rows != ambient_dim:
            raise AmbientMismatch("vectors live in dimension %d, not %d" % (m.rows, ambient_dim))
        return cls(ambient_dim, column_echelon(m))

    @classmethod
    def zero(cls, ambient_dim: int) -> "Subspace":
        return cls(ambient_dim, Matrix.zeros(ambient_dim, 0))

    @classmethod
    def full(cls, ambient_dim: int) -> "Subspace":
        return cls(ambient_dim, Matrix.identity(ambient_dim))

    @property
    def dim(self) -> int:
        return self.basis.cols

    def vectors(self) -> list[tuple[Fraction, ...]]:
        return self.basis.columns()

    def __repr__(self):
        return "Subspace(%d, %s)" % (self.ambient_dim,
                                      "[" + ",".join("(" + ",".join(format_scalar(x) for x in v) + ")"
                                                     for v in self.vectors()) + "]")


def _check_ambient(a: Subspace, b: Subspace):
    if a.ambient_dim != b.ambient_dim:
        raise AmbientMismatch("ambient dimensions %d and %d differ" % (a.ambient_dim, b.ambient_dim))


def intersect(a: Subspace, b: Subspace) -> Subspace:
    _check_ambient(a, b)
    if a.dim == 0 or b.dim == 0:
        return Subspace.zero(a.ambient_dim)
    ker = kernel(Matrix.hstack(a.basis, -b.basis))
    coeffs = ker.basis.row_block(0, a.dim)
    return Subspace.span(a.basis @ coeffs, a.ambient_dim)


def subspace_sum(a: Subspace, b: Subspace) -> Subspace:
    _check_ambient(a, b)
    return Subspace.span(Matrix.hstack(a.basis, b.basis), a.ambient_dim)


def contains(s: Subspace, v: Sequence) -> bool:
    v = vector(v)
    if len(v) != s.ambient_dim:
        raise AmbientMismatch("vector of length %d in ambient dimension %d" % (len(v), s.ambient_dim))
    if all(x == 0 for x in v):
        return True
    return rank(Matrix.hstack(s.basis, Matrix.from_columns([v], s.ambient_dim))) == s.dim


def is_subspace_of(a: Subspace, b: Subspace) -> bool:
    _check_ambient(a, b)
    return all(contains(b, v) for v in a.vectors())


def image(m: Matrix, s: Subspace) -> Subspace:
    """``m(s)`` for a linear map ``m`` whose domain is the ambient of ``s``."""
    if m.cols != s.ambient_dim:
        raise AmbientMismatch("map domain %d vs ambient %d" % (m.cols, s.ambient_dim))
    return Subspace.span(m @ s.basis, m.rows)


def inverse(m: Matrix) -> Matrix:
    """Exact inverse of a square matrix; raises ValueError when singular."""
    if m.rows != m.cols:
        raise ShapeMismatch("only square matrices are invertible")
    n = m.rows
    rows, pivots = _rref_rows([list(r) + [ONE if i == j else ZERO for j in range(n)]
                               for i, r in enumerate(m.entries)], 2 * n)
    if pivots[:n] != list(range(n)) or len(rows) < n:
        raise ValueError("matrix is singular")
    return Matrix(n, n, [r[n:] for r in rows])
