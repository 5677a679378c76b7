"""Scalar 2-cocycles on Lie algebras and the products symplectic ones induce.

Convention used throughout the library:

    (delta w)(x, y, z) = w([x,y], z) + w([y,z], x) + w([z,x], y)

A form is a cocycle when this vanishes on all basis triples, symplectic when
it is additionally nondegenerate.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .errors import InputError, PreconditionError
from .liealg import LieAlgebra, _unit
from .matrix import Matrix, Q, rref_basis, _frac


class AlternatingForm:
    """Alternating bilinear form on a LieAlgebra, stored as a skew matrix."""

    __slots__ = ("algebra", "matrix")

    def __init__(self, algebra: LieAlgebra, matrix: Matrix):
        if matrix.rows != algebra.dim or matrix.cols != algebra.dim:
            raise InputError("form matrix size does not match algebra dimension")
        if matrix.transpose() != matrix.scale(-1):
            raise InputError("form matrix is not skew-symmetric")
        self.algebra = algebra
        self.matrix = matrix

    @staticmethod
    def from_upper_entries(algebra: LieAlgebra, entries: dict[tuple[int, int], object]) -> "AlternatingForm":
        n = algebra.dim
        m = [[Q(0)] * n for _ in range(n)]
        for (i, j), c in entries.items():
            if not (0 <= i < n and 0 <= j < n) or i == j:
                raise InputError(f"bad form index pair ({i},{j})")
            c = _frac(c)
            m[i][j] += c
            m[j][i] -= c
        return AlternatingForm(algebra, Matrix(m))

    def __call__(self, x: Sequence, y: Sequence) -> Fraction:
        xv = [_frac(a) for a in x]
        yv = [_frac(a) for a in y]
        my = self.matrix.apply(yv)
        return sum(a * b for a, b in zip(xv, my))

    def flat(self, x: Sequence) -> list[Fraction]:
        """The covector w(x, .) as a coordinate list."""
        return self.matrix.transpose().apply(x)

    def coboundary_value(self, x: Sequence, y: Sequence, z: Sequence) -> Fraction:
        L = self.algebra
        return self(L.bracket(x, y), z) + self(L.bracket(y, z), x) + self(L.bracket(z, x), y)

    def is_cocycle(self) -> bool:
        n = self.algebra.dim
        for i in range(n):
            for j in range(i + 1, n):
                for k in range(j + 1, n):
                    if self.coboundary_value(_unit(n, i), _unit(n, j), _unit(n, k)) != 0:
                        return False
        return True

    def is_nondegenerate(self) -> bool:
        return self.matrix.det() != 0

    def add(self, other: "AlternatingForm") -> "AlternatingForm":
        return AlternatingForm(self.algebra, self.matrix + other.matrix)

    def scale(self, c) -> "AlternatingForm":
        return AlternatingForm(self.algebra, self.matrix.scale(c))


def is_nondegenerate(form: AlternatingForm) -> bool:
    return form.is_nondegenerate()


def _pair_index(n: int) -> list[tuple[int, int]]:
    return [(i, j) for i in range(n) for j in range(i + 1, n)]


def cocycle_space(algebra: LieAlgebra) -> tuple[list[AlternatingForm], list[AlternatingForm]]:
    """(basis of Z^2, basis of B^2) as AlternatingForms.

    Z^2 is the kernel of the linear system (delta w) = 0 over the upper
    entries w_{ij}, i < j; B^2 is spanned by the forms lam([. , .]).
    """
    algebra.validate()
    n = algebra.dim
    pairs = _pair_index(n)
    index = {p: t for t, p in enumerate(pairs)}

    def entry_coeffs(x_idx: int, vec: list[Fraction]) -> dict[int, Fraction]:
        """Coefficients of w(e_x, vec) in the w_{ij} unknowns."""
        out: dict[int, Fraction] = {}
        for j, c in enumerate(vec):
            if c == 0 or j == x_idx:
                continue
            if x_idx < j:
                t = index[(x_idx, j)]
                out[t] = out.get(t, Q(0)) + c
            else:
                t = index[(j, x_idx)]
                out[t] = out.get(t, Q(0)) - c
        return out

    rows = []
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                row = [Q(0)] * len(pairs)
                for (a, bvec) in ((k, algebra.basis_bracket(i, j)),
                                  (i, algebra.basis_bracket(j, k)),
                                  (j, algebra.basis_bracket(k, i))):
                    # term w([x,y], z) = -w(z, [x,y])
                    for t, c in entry_coeffs(a, bvec).items():
                        row[t] -= c
                if any(c != 0 for c in row):
                    rows.append(row)

    if rows:
        kernel = Matrix(rows).kernel_basis()
    else:
        kernel = [[Q(1) if t == s else Q(0) for s in range(len(pairs))] for t in range(len(pairs))]

    def to_form(coords: Sequence[Fraction]) -> AlternatingForm:
        return AlternatingForm.from_upper_entries(
            algebra, {pairs[t]: c for t, c in enumerate(coords) if c != 0}
        )

    z2 = [to_form(v) for v in kernel]

    cob_vecs = []
    for lam in range(n):
        v = [Q(0)] * len(pairs)
        for t, (i, j) in enumerate(pairs):
            v[t] = algebra.basis_bracket(i, j)[lam]
        if any(c != 0 for c in v):
            cob_vecs.append(v)
    b2 = [to_form(v) for v in rref_basis(cob_vecs)] if cob_vecs else []
    return z2, b2


def left_symmetric_product(algebra: LieAlgebra, form: AlternatingForm) -> list[list[list[Fraction]]]:
    """Product table from w(ab, c) = -w(b, [a, c]) for a symplectic cocycle w.

    Returns table[i][j] = coordinates of e_i * e_j.  The compatibility
    (ab - ba = [a,b]) and left-symmetry of the associator are verified
    exactly before returning.
    """
    if form.algebra is not algebra and form.algebra.dim != algebra.dim:
        raise InputError("form does not live on the given algebra")
    if not form.is_cocycle():
        raise PreconditionError("form is not a 2-cocycle")
    if not form.is_nondegenerate():
        raise PreconditionError("form is degenerate")
    n = algebra.dim
    wt = form.matrix.transpose()
    table: list[list[list[Fraction]]] = []
    for i in range(n):
        row = []
        ei = _unit(n, i)
        for j in range(n):
            ej = _unit(n, j)
            rhs = []
            for k in range(n):
                rhs.append(-form(ej, algebra.bracket(ei, _unit(n, k))))
            # solve w(x, e_k) = rhs_k, i.e. W^T x = rhs
            row.append(wt.solve(rhs))
        table.append(row)

    def prod(x: Sequence[Fraction], y: Sequence[Fraction]) -> list[Fraction]:
        out = [Q(0)] * n
        for i, xi in enumerate(x):
            if xi == 0:
                continue
            for j, yj in enumerate(y):
                if yj == 0:
                    continue
                for k, c in enumerate(table[i][j]):
                    out[k] += xi * yj * c
        return out

    for i in range(n):
        for j in range(n):
            lhs = [a - b for a, b in zip(table[i][j], table[j][i])]
            if lhs != algebra.basis_bracket(i, j):
                raise PreconditionError("product does not reproduce the bracket")
    for i in range(n):
        for j in range(n):
            for k in range(n):
                ei, ej, ek = _unit(n, i), _unit(n, j), _unit(n, k)
                a1 = [p - q for p, q in zip(prod(table[i][j], ek), prod(ei, table[j][k]))]
                a2 = [p - q for p, q in zip(prod(table[j][i], ek), prod(ej, table[i][k]))]
                if a1 != a2:
                    raise PreconditionError("associator is not left-symmetric")
    return table


def product_from_table(table: list[list[list[Fraction]]], x: Sequence, y: Sequence) -> list[Fraction]:
    """Bilinear extension of a basis product table."""
    n = len(table)
    xv = [_frac(a) for a in x]
    yv = [_frac(b) for b in y]
    out = [Q(0)] * n
    for i, xi in enumerate(xv):
        if xi == 0:
            continue
        for j, yj in enumerate(yv):
            if yj == 0:
                continue
            for k, c in enumerate(table[i][j]):
                if c != 0:
                    out[k] += xi * yj * c
    return out
