"""Exact linear algebra over GF(p) and over the rationals.

Everything downstream (Hom spaces, syzygies, cohomology, homotopy systems)
reduces to the three primitives here: reduced row echelon form, linear
solve, and kernel bases.  No floating point anywhere; GF(p) elements are
ints in [0, p), rational entries are ``fractions.Fraction``.
"""

from __future__ import annotations

from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

_MAX_PRIME = 2**31


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


class Field:
    """GF(p) for a prime p < 2**31, or the rationals (p is None)."""

    def __init__(self, p: Optional[int] = None):
        if p is not None:
            if not (2 <= p < _MAX_PRIME):
                raise ValueError(f"characteristic out of range: {p}")
            if not _is_prime(p):
                raise ValueError(f"{p} is not prime")
        self.p = p

    @property
    def is_rational(self) -> bool:
        return self.p is None

    def zero(self):
        return Fraction(0) if self.p is None else 0

    def one(self):
        return Fraction(1) if self.p is None else 1

    def coerce(self, x):
        """Bring an int / Fraction / 'a/b' string into this field."""
        if self.p is None:
            if isinstance(x, str):
                return Fraction(x)
            return Fraction(x)
        if isinstance(x, Fraction):
            if x.denominator % self.p == 0:
                raise ValueError(f"denominator not invertible mod {self.p}")
            return (x.numerator * pow(x.denominator, -1, self.p)) % self.p
        if isinstance(x, str):
            return self.coerce(Fraction(x))
        return int(x) % self.p

    def add(self, a, b):
        return a + b if self.p is None else (a + b) % self.p

    def sub(self, a, b):
        return a - b if self.p is None else (a - b) % self.p

    def mul(self, a, b):
        return a * b if self.p is None else (a * b) % self.p

    def neg(self, a):
        return -a if self.p is None else (-a) % self.p

    def inv(self, a):
        if self.p is None:
            if a == 0:
                raise ZeroDivisionError("inverse of zero")
            return Fraction(1) / a
        return pow(a, -1, self.p)

    def __eq__(self, other):
        return isinstance(other, Field) and self.p == other.p

    def __hash__(self):
        return hash(("Field", self.p))

    def __repr__(self):
        return "QQ" if self.p is None else f"GF({self.p})"


QQ = Field(None)


def GF(p: int) -> Field:
    return Field(p)


class Matrix:
    """Dense exact matrix.  0xN and Nx0 shapes are legal (maps to/from 0)."""

    __slots__ = ("field", "rows", "cols", "data")

    def __init__(self, field: Field, rows: int, cols: int, data: Sequence[Sequence]):
        if rows < 0 or cols < 0:
            raise ValueError("negative matrix dimension")
        if len(data) != rows or any(len(r) != cols for r in data):
            raise ValueError("matrix data does not match shape")
        self.field = field
        self.rows = rows
        self.cols = cols
        self.data = [[field.coerce(x) for x in r] for r in data]

    # -- constructors ------------------------------------------------------

    @classmethod
    def zeros(cls, field: Field, rows: int, cols: int) -> "Matrix":
        z = field.zero()
        return cls(field, rows, cols, [[z] * cols for _ in range(rows)])

    @classmethod
    def identity(cls, field: Field, n: int) -> "Matrix":
        m = cls.zeros(field, n, n)
        one = field.one()
        for i in range(n):
            m.data[i][i] = one
        return m

    @classmethod
    def from_rows(cls, field: Field, rows: Sequence[Sequence]) -> "Matrix":
        nr = len(rows)
        nc = len(rows[0]) if nr else 0
        return cls(field, nr, nc, rows)

    @classmethod
    def column(cls, field: Field, entries: Sequence) -> "Matrix":
        return cls(field, len(entries), 1, [[e] for e in entries])

    def copy(self) -> "Matrix":
        return Matrix(self.field, self.rows, self.cols, [row[:] for row in self.data])

    # -- arithmetic --------------------------------------------------------

    def __eq__(self, other):
        return (
            isinstance(other, Matrix)
            and self.field == other.field
            and self.rows == other.rows
            and self.cols == other.cols
            and self.data == other.data
        )

    def __hash__(self):
        return hash((self.rows, self.cols, tuple(tuple(r) for r in self.data)))

    def __add__(self, other: "Matrix") -> "Matrix":
        self._check_same_shape(other)
        f = self.field
        return Matrix(
            f,
            self.rows,
            self.cols,
            [
                [f.add(a, b) for a, b in zip(ra, rb)]
                for ra, rb in zip(self.data, other.data)
            ],
        )

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._check_same_shape(other)
        f = self.field
        return Matrix(
            f,
            self.rows,
            self.cols,
            [
                [f.sub(a, b) for a, b in zip(ra, rb)]
                for ra, rb in zip(self.data, other.data)
            ],
        )

    def __neg__(self) -> "Matrix":
        f = self.field
        return Matrix(
            f, self.rows, self.cols, [[f.neg(a) for a in row] for row in self.data]
        )

    def scale(self, c) -> "Matrix":
        f = self.field
        c = f.coerce(c)
        return Matrix(
            f, self.rows, self.cols, [[f.mul(c, a) for a in row] for row in self.data]
        )

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise ValueError(
                f"shape mismatch for product: {self.rows}x{self.cols} @ {other.rows}x{other.cols}"
            )
        f = self.field
        out = Matrix.zeros(f, self.rows, other.cols)
        for i in range(self.rows):
            srow = self.data[i]
            orow = out.data[i]
            for k in range(self.cols):
                a = srow[k]
                if a == 0:
                    continue
                brow = other.data[k]
                for j in range(other.cols):
                    orow[j] = f.add(orow[j], f.mul(a, brow[j]))
        return out

    def transpose(self) -> "Matrix":
        return Matrix(
            self.field,
            self.cols,
            self.rows,
            [[self.data[i][j] for i in range(self.rows)] for j in range(self.cols)],
        )

    def is_zero(self) -> bool:
        return all(x == 0 for row in self.data for x in row)

    def apply(self, vec: Sequence) -> List:
        """Multiply onto a column vector given as a flat list."""
        if len(vec) != self.cols:
            raise ValueError("vector length mismatch")
        f = self.field
        out = []
        for row in self.data:
            s = f.zero()
            for a, x in zip(row, vec):
                if a != 0 and x != 0:
                    s = f.add(s, f.mul(a, x))
            out.append(s)
        return out

    def col(self, j: int) -> List:
        return [self.data[i][j] for i in range(self.rows)]

    def _check_same_shape(self, other: "Matrix"):
        if self.rows != other.rows or self.cols != other.cols:
            raise ValueError("shape mismatch")

    # -- stacking ----------------------------------------------------------

    @staticmethod
    def hstack(field: Field, mats: Sequence["Matrix"], rows: Optional[int] = None) -> "Matrix":
        mats = list(mats)
        if not mats:
            return Matrix.zeros(field, rows or 0, 0)
        nr = mats[0].rows
        if any(m.rows != nr for m in mats):
            raise ValueError("row count mismatch in hstack")
        data = [sum((m.data[i] for m in mats), []) for i in range(nr)]
        return Matrix(field, nr, sum(m.cols for m in mats), data)

    @staticmethod
    def vstack(field: Field, mats: Sequence["Matrix"], cols: Optional[int] = None) -> "Matrix":
        mats = list(mats)
        if not mats:
            return Matrix.zeros(field, 0, cols or 0)
        nc = mats[0].cols
        if any(m.cols != nc for m in mats):
            raise ValueError("column count mismatch in vstack")
        data = [row[:] for m in mats for row in m.data]
        return Matrix(field, sum(m.rows for m in mats), nc, data)

    @staticmethod
    def block_diag(field: Field, mats: Sequence["Matrix"]) -> "Matrix":
        rows = sum(m.rows for m in mats)
        cols = sum(m.cols for m in mats)
        out = Matrix.zeros(field, rows, cols)
        r0 = c0 = 0
        for m in mats:
            for i in range(m.rows):
                out.data[r0 + i][c0 : c0 + m.cols] = m.data[i][:]
            r0 += m.rows
            c0 += m.cols
        return out

    def __repr__(self):
        return f"Matrix({self.field}, {self.rows}x{self.cols})"


# -- row reduction and friends ---------------------------------------------


def rref(m: Matrix) -> Tuple[Matrix, List[int]]:
    """Reduced row echelon form with the strictly increasing pivot columns.

    Rows are processed in order and the first nonzero entry in a column is
    taken as pivot, so the result is deterministic for a given input.
    """
    f = m.field
    a = [row[:] for row in m.data]
    pivots: List[int] = []
    r = 0
    for c in range(m.cols):
        if r == m.rows:
            break
        pr = None
        for i in range(r, m.rows):
            if a[i][c] != 0:
                pr = i
                break
        if pr is None:
            continue
        a[r], a[pr] = a[pr], a[r]
        inv = f.inv(a[r][c])
        a[r] = [f.mul(inv, x) for x in a[r]]
        for i in range(m.rows):
            if i != r and a[i][c] != 0:
                factor = a[i][c]
                a[i] = [f.sub(x, f.mul(factor, y)) for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
    return Matrix(f, m.rows, m.cols, a), pivots


def rank(m: Matrix) -> int:
    return len(rref(m)[1])


def solve(a: Matrix, b: Sequence) -> Optional[List]:
    """Some x with a @ x = b, or None when the system is inconsistent.

    Free variables are pinned to zero, which makes every downstream
    construction (liftings, homotopies) reproducible.
    """
    b = list(b)
    if len(b) != a.rows:
        raise ValueError("right-hand side length mismatch")
    f = a.field
    aug = Matrix(f, a.rows, a.cols + 1, [row + [b[i]] for i, row in enumerate(a.data)])
    red, pivots = rref(aug)
    if a.cols in pivots:
        return None
    x = [f.zero()] * a.cols
    for r, c in enumerate(pivots):
        x[c] = red.data[r][a.cols]
    return x


def solve_matrix(a: Matrix, b: Matrix) -> Optional[Matrix]:
    """Some X with a @ X = b, solved column by column; None if any fails."""
    if b.rows != a.rows:
        raise ValueError("shape mismatch")
    f = a.field
    aug = Matrix.hstack(f, [a, b])
    red, pivots = rref(aug)
    if any(c >= a.cols for c in pivots):
        return None
    x = Matrix.zeros(f, a.cols, b.cols)
    for r, c in enumerate(pivots):
        x.data[c] = red.data[r][a.cols :]
    return x


def kernel_basis(a: Matrix) -> Matrix:
    """Matrix whose columns form a basis of the null space of ``a``."""
    f = a.field
    red, pivots = rref(a)
    free = [c for c in range(a.cols) if c not in pivots]
    cols = []
    for fc in free:
        v = [f.zero()] * a.cols
        v[fc] = f.one()
        for r, pc in enumerate(pivots):
            v[pc] = f.neg(red.data[r][fc])
        cols.append(v)
    return Matrix(f, a.cols, len(cols), [[c[i] for c in cols] for i in range(a.cols)])


def column_space_basis(a: Matrix) -> Matrix:
    """Columns of ``a`` indexed by the pivot columns of its rref."""
    _, pivots = rref(a)
    return Matrix(
        a.field,
        a.rows,
        len(pivots),
        [[a.data[i][c] for c in pivots] for i in range(a.rows)],
    )


def in_span(basis: Matrix, vec: Sequence) -> bool:
    """Whether a column vector lies in the span of the columns of ``basis``."""
    return solve(basis, vec) is not None
