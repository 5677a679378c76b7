"""Exact rational matrices and the dense linear algebra the library runs on.

Entries are `fractions.Fraction`; nothing here ever rounds.  Sizes stay at
desk scale (<= ~25 x 25), so plain Gaussian elimination is the right tool.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial
from typing import Iterable, Sequence

from .errors import InputError, PreconditionError

Q = Fraction


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise InputError(f"cannot interpret {x!r} as an exact rational")


class Matrix:
    """Immutable-by-convention dense matrix over the rationals."""

    __slots__ = ("rows", "cols", "data")

    def __init__(self, data: Sequence[Sequence]):
        rows = [[_frac(x) for x in row] for row in data]
        if not rows or not rows[0]:
            raise InputError("matrix needs at least one row and one column")
        w = len(rows[0])
        if any(len(r) != w for r in rows):
            raise InputError("ragged matrix rows")
        self.data = rows
        self.rows = len(rows)
        self.cols = w

    # -- constructors -----------------------------------------------------

    @staticmethod
    def identity(n: int) -> "Matrix":
        return Matrix([[Q(1) if i == j else Q(0) for j in range(n)] for i in range(n)])

    @staticmethod
    def zero(rows: int, cols: int) -> "Matrix":
        return Matrix([[Q(0)] * cols for _ in range(rows)])

    @staticmethod
    def from_columns(cols: Sequence[Sequence]) -> "Matrix":
        return Matrix(cols).transpose()

    # -- basics ------------------------------------------------------------

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        i, j = ij
        return self.data[i][j]

    def __eq__(self, other) -> bool:
        return isinstance(other, Matrix) and self.data == other.data

    def __hash__(self):
        return hash(tuple(tuple(r) for r in self.data))

    def __repr__(self) -> str:
        body = "; ".join(" ".join(str(x) for x in row) for row in self.data)
        return f"Matrix[{body}]"

    def copy_data(self) -> list[list[Fraction]]:
        return [row[:] for row in self.data]

    def row(self, i: int) -> list[Fraction]:
        return self.data[i][:]

    def column(self, j: int) -> list[Fraction]:
        return [self.data[i][j] for i in range(self.rows)]

    def transpose(self) -> "Matrix":
        return Matrix([[self.data[i][j] for i in range(self.rows)] for j in range(self.cols)])

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    @property
    def is_integral(self) -> bool:
        return all(x.denominator == 1 for row in self.data for x in row)

    def to_int_rows(self) -> list[list[int]]:
        if not self.is_integral:
            raise PreconditionError("matrix has non-integer entries")
        return [[int(x) for x in row] for row in self.data]

    # -- arithmetic ----------------------------------------------------------

    def __add__(self, other: "Matrix") -> "Matrix":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise InputError("matrix shapes differ")
        return Matrix([[a + b for a, b in zip(r1, r2)] for r1, r2 in zip(self.data, other.data)])

    def __sub__(self, other: "Matrix") -> "Matrix":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise InputError("matrix shapes differ")
        return Matrix([[a - b for a, b in zip(r1, r2)] for r1, r2 in zip(self.data, other.data)])

    def __neg__(self) -> "Matrix":
        return Matrix([[-a for a in row] for row in self.data])

    def scale(self, c) -> "Matrix":
        c = _frac(c)
        return Matrix([[c * a for a in row] for row in self.data])

    def __mul__(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise InputError("matrix shapes incompatible for product")
        bt = other.transpose().data
        return Matrix(
            [[sum(a * b for a, b in zip(row, col)) for col in bt] for row in self.data]
        )

    def apply(self, vec: Sequence) -> list[Fraction]:
        v = [_frac(x) for x in vec]
        if len(v) != self.cols:
            raise InputError("vector length does not match column count")
        return [sum(a * x for a, x in zip(row, v)) for row in self.data]

    def power(self, p: int) -> "Matrix":
        if not self.is_square:
            raise PreconditionError("power of a non-square matrix")
        if p < 0:
            return self.inverse().power(-p)
        out = Matrix.identity(self.rows)
        base = self
        while p:
            if p & 1:
                out = out * base
            base = base * base
            p >>= 1
        return out

    # -- elimination ---------------------------------------------------------

    def rref(self) -> tuple["Matrix", list[int]]:
        """Reduced row-echelon form and the pivot column list."""
        m = self.copy_data()
        pivots: list[int] = []
        r = 0
        for c in range(self.cols):
            pr = next((i for i in range(r, self.rows) if m[i][c] != 0), None)
            if pr is None:
                continue
            m[r], m[pr] = m[pr], m[r]
            pv = m[r][c]
            m[r] = [x / pv for x in m[r]]
            for i in range(self.rows):
                if i != r and m[i][c] != 0:
                    f = m[i][c]
                    m[i] = [a - f * b for a, b in zip(m[i], m[r])]
            pivots.append(c)
            r += 1
            if r == self.rows:
                break
        return Matrix(m), pivots

    def rank(self) -> int:
        return len(self.rref()[1])

    def kernel_basis(self) -> list[list[Fraction]]:
        """Basis of the right kernel {x : M x = 0}."""
        R, pivots = self.rref()
        free = [c for c in range(self.cols) if c not in pivots]
        basis = []
        for fc in free:
            v = [Q(0)] * self.cols
            v[fc] = Q(1)
            for r, pc in enumerate(pivots):
                v[pc] = -R.data[r][fc]
            basis.append(v)
        return basis

    def det(self) -> Fraction:
        if not self.is_square:
            raise PreconditionError("determinant of a non-square matrix")
        m = self.copy_data()
        n = self.rows
        det = Q(1)
        for c in range(n):
            pr = next((i for i in range(c, n) if m[i][c] != 0), None)
            if pr is None:
                return Q(0)
            if pr != c:
                m[c], m[pr] = m[pr], m[c]
                det = -det
            det *= m[c][c]
            inv = 1 / m[c][c]
            for i in range(c + 1, n):
                if m[i][c] != 0:
                    f = m[i][c] * inv
                    m[i] = [a - f * b for a, b in zip(m[i], m[c])]
        return det

    def inverse(self) -> "Matrix":
        if not self.is_square:
            raise PreconditionError("inverse of a non-square matrix")
        n = self.rows
        aug = [row[:] + [Q(1) if i == j else Q(0) for j in range(n)]
               for i, row in enumerate(self.data)]
        M = Matrix(aug)
        R, pivots = M.rref()
        if pivots != list(range(n)):
            raise PreconditionError("matrix is singular")
        return Matrix([row[n:] for row in R.data])

    def solve(self, rhs: Sequence) -> list[Fraction]:
        """One exact solution of M x = rhs; raises if the system is inconsistent."""
        b = [_frac(x) for x in rhs]
        if len(b) != self.rows:
            raise InputError("right-hand side has wrong length")
        aug = Matrix([row[:] + [b[i]] for i, row in enumerate(self.data)])
        R, pivots = aug.rref()
        if self.cols in pivots:
            raise PreconditionError("linear system is inconsistent")
        x = [Q(0)] * self.cols
        for r, pc in enumerate(pivots):
            x[pc] = R.data[r][self.cols]
        return x

    def charpoly(self) -> list[Fraction]:
        """Characteristic polynomial det(XI - M), dense, low-to-high."""
        if not self.is_square:
            raise PreconditionError("characteristic polynomial of a non-square matrix")
        n = self.rows
        # Faddeev-LeVerrier: exact over Q.
        coeffs = [Q(0)] * (n + 1)
        coeffs[n] = Q(1)
        Mk = Matrix.identity(n)
        for k in range(1, n + 1):
            Mk = self * Mk
            ck = -sum(Mk.data[i][i] for i in range(n)) / k
            coeffs[n - k] = ck
            Mk = Mk + Matrix.identity(n).scale(ck)
        return coeffs


# -- subspaces ----------------------------------------------------------------


def rref_basis(vectors: Iterable[Sequence]) -> list[list[Fraction]]:
    """Canonical (RREF) basis of the span of the given vectors."""
    vecs = [[_frac(x) for x in v] for v in vectors]
    vecs = [v for v in vecs if any(x != 0 for x in v)]
    if not vecs:
        return []
    R, pivots = Matrix(vecs).rref()
    return [R.data[i] for i in range(len(pivots))]


def span_dim(vectors: Iterable[Sequence]) -> int:
    return len(rref_basis(vectors))


def in_span(vector: Sequence, basis: Sequence[Sequence]) -> bool:
    v = [_frac(x) for x in vector]
    if all(x == 0 for x in v):
        return True
    if not basis:
        return False
    return span_dim(list(basis) + [v]) == span_dim(basis)


def span_equal(basis_a: Sequence[Sequence], basis_b: Sequence[Sequence]) -> bool:
    return rref_basis(basis_a) == rref_basis(basis_b)


def intersect_spans(basis_a: Sequence[Sequence], basis_b: Sequence[Sequence]) -> list[list[Fraction]]:
    """RREF basis of the intersection of two spans inside the same ambient space."""
    if not basis_a or not basis_b:
        return []
    a = [[_frac(x) for x in v] for v in basis_a]
    b = [[_frac(x) for x in v] for v in basis_b]
    # Zassenhaus: rows (v | v) for v in A, (w | 0) for w in B.
    n = len(a[0])
    rows = [v + v for v in a] + [w + [Q(0)] * n for w in b]
    R, pivots = Matrix(rows).rref()
    out = []
    for i, row in enumerate(R.data):
        if i < len(pivots) and all(x == 0 for x in row[:n]) and any(x != 0 for x in row[n:]):
            out.append(row[n:])
        elif all(x == 0 for x in row[:n]):
            tail = row[n:]
            if any(x != 0 for x in tail):
                out.append(tail)
    return rref_basis(out)


def complement_basis(basis: Sequence[Sequence], dim: int) -> list[list[Fraction]]:
    """Standard basis vectors completing `basis` to a basis of Q^dim."""
    cur = [list(map(_frac, v)) for v in basis]
    out = []
    for j in range(dim):
        e = [Q(0)] * dim
        e[j] = Q(1)
        if not in_span(e, cur):
            cur.append(e)
            out.append(e)
    return out


# -- nilpotent exponentials -----------------------------------------------------


def nilpotency_index(m: Matrix) -> int:
    """Least k with m^k = 0; raises if m is not nilpotent."""
    if not m.is_square:
        raise PreconditionError("nilpotency index of a non-square matrix")
    n = m.rows
    p = Matrix.identity(n)
    for k in range(n + 1):
        if all(x == 0 for row in p.data for x in row):
            return k
        p = p * m
    raise PreconditionError("matrix is not nilpotent")


def nilpotent_exp(d: Matrix, t=1) -> Matrix:
    """exp(t d) = sum t^k d^k / k! for nilpotent d; exact and finite."""
    k_max = nilpotency_index(d)
    t = _frac(t)
    out = Matrix.identity(d.rows)
    term = Matrix.identity(d.rows)
    for k in range(1, k_max):
        term = term * d
        out = out + term.scale(t ** k / factorial(k))
    return out


def nilpotent_log(u: Matrix) -> Matrix:
    """log(u) = sum (-1)^(k+1) (u - I)^k / k for unipotent u; exact and finite."""
    n = u.rows
    nmat = u - Matrix.identity(n)
    k_max = nilpotency_index(nmat)
    out = Matrix.zero(n, n)
    term = Matrix.identity(n)
    for k in range(1, k_max):
        term = term * nmat
        out = out + term.scale(Q((-1) ** (k + 1), k))
    return out
