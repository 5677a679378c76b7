"""Integer-matrix normal forms and sublattice arithmetic.

Everything works on plain ``list[list[int]]`` rows.  Smith normal form keeps
both unimodular transforms so callers can certify ``left @ M @ right == D``;
Hermite form gives canonical bases for row lattices, which makes sublattice
equality and quotient invariants exact set computations.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import InputError, PreconditionError

IntRows = list[list[int]]


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """(g, x, y) with g = gcd(a, b) >= 0 and x*a + y*b = g."""
    x, nx, y, ny, g, ng = 1, 0, 0, 1, a, b
    while ng:
        q = g // ng
        x, nx = nx, x - q * nx
        y, ny = ny, y - q * ny
        g, ng = ng, g - q * ng
    if g < 0:
        x, y, g = -x, -y, -g
    return g, x, y


def _check_int_rows(m: Sequence[Sequence[int]]) -> IntRows:
    rows = [[int(x) for x in row] for row in m]
    if not rows or not rows[0]:
        raise InputError("matrix needs at least one row and one column")
    w = len(rows[0])
    if any(len(r) != w for r in rows):
        raise InputError("ragged matrix rows")
    return rows


def mat_mul(a: Sequence[Sequence[int]], b: Sequence[Sequence[int]]) -> IntRows:
    bt = list(zip(*b))
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def mat_identity(n: int) -> IntRows:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def det_int(m: Sequence[Sequence[int]]) -> int:
    """Determinant by fraction-free (Bareiss) elimination."""
    a = _check_int_rows(m)
    n = len(a)
    if n != len(a[0]):
        raise PreconditionError("determinant of a non-square matrix")
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            piv = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if piv is None:
                return 0
            a[k], a[piv] = a[piv], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


@dataclass
class SnfResult:
    """Smith decomposition left @ input @ right = diag(divisors)."""

    divisors: list[int]
    left: IntRows
    right: IntRows


def smith_normal_form(m: Sequence[Sequence[int]]) -> SnfResult:
    """Smith normal form with unimodular transforms.

    Pivot choice is the minimal nonzero absolute value of the working block;
    divisors come out nonnegative with d1 | d2 | ... .
    """
    a = _check_int_rows(m)
    rows, cols = len(a), len(a[0])
    left = mat_identity(rows)
    right = mat_identity(cols)

    def row_op(i, j, q):  # row_i -= q * row_j
        a[i] = [x - q * y for x, y in zip(a[i], a[j])]
        left[i] = [x - q * y for x, y in zip(left[i], left[j])]

    def col_op(i, j, q):  # col_i -= q * col_j
        for r in range(rows):
            a[r][i] -= q * a[r][j]
        for r in range(cols):
            right[r][i] -= q * right[r][j]

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        left[i], left[j] = left[j], left[i]

    def swap_cols(i, j):
        for r in range(rows):
            a[r][i], a[r][j] = a[r][j], a[r][i]
        for r in range(cols):
            right[r][i], right[r][j] = right[r][j], right[r][i]

    t = 0
    while t < min(rows, cols):
        # locate minimal |pivot| in the trailing block
        piv = None
        for i in range(t, rows):
            for j in range(t, cols):
                if a[i][j] != 0 and (piv is None or abs(a[i][j]) < abs(a[piv[0]][piv[1]])):
                    piv = (i, j)
        if piv is None:
            break
        swap_rows(t, piv[0])
        swap_cols(t, piv[1])
        dirty = False
        for i in range(t + 1, rows):
            if a[i][t]:
                q = a[i][t] // a[t][t]
                row_op(i, t, q)
                if a[i][t]:
                    dirty = True
        for j in range(t + 1, cols):
            if a[t][j]:
                q = a[t][j] // a[t][t]
                col_op(j, t, q)
                if a[t][j]:
                    dirty = True
        if dirty:
            continue  # smaller pivot appeared; redo this step
        # divisibility of the rest of the block by the pivot
        bad = None
        for i in range(t + 1, rows):
            for j in range(t + 1, cols):
                if a[i][j] % a[t][t] != 0:
                    bad = i
                    break
            if bad is not None:
                break
        if bad is not None:
            row_op(t, bad, -1)  # fold the offending row in and loop
            continue
        t += 1

    for i in range(min(rows, cols)):
        if a[i][i] < 0:
            a[i] = [-x for x in a[i]]
            left[i] = [-x for x in left[i]]
    divisors = [a[i][i] for i in range(min(rows, cols))]
    return SnfResult(divisors, left, right)


def hermite_row_basis(vectors: Sequence[Sequence[int]]) -> IntRows:
    """Canonical (row-style Hermite) basis of the lattice spanned by the rows.

    Pivots are positive, entries above a pivot are reduced into [0, pivot).
    Zero input spans the zero lattice and yields [].
    """
    if not vectors:
        return []
    work = [list(map(int, v)) for v in vectors if any(x != 0 for x in v)]
    if not work:
        return []
    cols = len(work[0])
    if any(len(v) != cols for v in work):
        raise InputError("ragged vectors")
    basis: IntRows = []  # kept sorted by pivot column, fully reduced
    for vec in work:
        v = vec[:]
        while True:
            j = next((c for c in range(cols) if v[c] != 0), None)
            if j is None:
                break
            hit = next((b for b in basis if next(c for c in range(cols) if b[c] != 0) == j), None)
            if hit is None:
                if v[j] < 0:
                    v = [-x for x in v]
                basis.append(v)
                basis.sort(key=lambda b: next(c for c in range(cols) if b[c] != 0))
                break
            a, b = hit[j], v[j]
            if b % a == 0:
                q = b // a
                v = [x - q * y for x, y in zip(v, hit)]
            else:
                g, x, y = xgcd(a, b)
                new_hit = [x * p + y * q_ for p, q_ in zip(hit, v)]
                new_v = [(-b // g) * p + (a // g) * q_ for p, q_ in zip(hit, v)]
                hit[:] = new_hit
                v = new_v
    # reduction pass above the pivots gives the canonical form
    basis.sort(key=lambda b: next(c for c in range(cols) if b[c] != 0))
    for i in range(len(basis) - 1, -1, -1):
        pj = next(c for c in range(cols) if basis[i][c] != 0)
        for k in range(i):
            q = basis[k][pj] // basis[i][pj]
            if q:
                basis[k] = [x - q * y for x, y in zip(basis[k], basis[i])]
    return basis


def lattice_contains(basis: Sequence[Sequence[int]], vec: Sequence[int]) -> bool:
    """Membership of an integer vector in the row lattice given by `basis`."""
    if not basis:
        return all(x == 0 for x in vec)
    cols = len(basis[0])
    v = list(map(int, vec))
    for b in basis:
        j = next(c for c in range(cols) if b[c] != 0)
        if v[j] % b[j] != 0:
            return False
        q = v[j] // b[j]
        v = [x - q * y for x, y in zip(v, b)]
    return all(x == 0 for x in v)


def integer_kernel_basis(m: Sequence[Sequence[int]]) -> IntRows:
    """Saturated basis of {x in Z^cols : M x = 0} (unimodular columns of V)."""
    a = _check_int_rows(m)
    res = smith_normal_form(a)
    cols = len(a[0])
    vt = list(map(list, zip(*res.right)))  # rows of V^T = columns of V
    out = []
    for j in range(cols):
        d = res.divisors[j] if j < len(res.divisors) else 0
        if d == 0:
            out.append(vt[j])
    return hermite_row_basis(out) if out else []


def column_lattice_basis(m: Sequence[Sequence[int]]) -> IntRows:
    """Hermite basis of the lattice spanned by the columns of M."""
    a = _check_int_rows(m)
    return hermite_row_basis(list(map(list, zip(*a))))


def solve_diophantine(m: Sequence[Sequence[int]], rhs: Sequence[int]) -> tuple[list[int], IntRows] | None:
    """All integer solutions of M x = rhs as (particular, kernel basis); None if unsolvable."""
    a = _check_int_rows(m)
    b = list(map(int, rhs))
    if len(b) != len(a):
        raise InputError("right-hand side has wrong length")
    res = smith_normal_form(a)
    ub = [sum(res.left[i][k] * b[k] for k in range(len(b))) for i in range(len(b))]
    cols = len(a[0])
    y = [0] * cols
    for i in range(len(b)):
        d = res.divisors[i] if i < len(res.divisors) else 0
        if d == 0:
            if ub[i] != 0:
                return None
        else:
            if ub[i] % d != 0:
                return None
            if i < cols:
                y[i] = ub[i] // d
    x = [sum(res.right[r][j] * y[j] for j in range(cols)) for r in range(cols)]
    return x, integer_kernel_basis(a)


def quotient_invariants(ambient: Sequence[Sequence[int]], sub: Sequence[Sequence[int]]) -> list[int]:
    """Divisor chain of (lattice spanned by `ambient` rows) / (lattice by `sub` rows).

    A zero divisor encodes an infinite cyclic factor.  Requires sub <= ambient.
    """
    amb = hermite_row_basis(ambient)
    s = hermite_row_basis(sub)
    if not amb:
        if s:
            raise InputError("sub-lattice is not contained in the ambient lattice")
        return []
    for v in s:
        if not lattice_contains(amb, v):
            raise InputError("sub-lattice is not contained in the ambient lattice")
    # coordinates of sub generators in the ambient basis (exact integer solve)
    from .matrix import Matrix

    amb_t = Matrix([[Fraction(x) for x in row] for row in amb]).transpose()
    coords = []
    for v in s:
        sol = amb_t.solve(v)
        if any(c.denominator != 1 for c in sol):
            raise InputError("sub-lattice is not contained in the ambient lattice")
        coords.append([int(c) for c in sol])
    r = len(amb)
    if not coords:
        return [0] * r
    divisors = smith_normal_form(coords).divisors
    out = [d for d in divisors if d != 0]
    out += [0] * (r - len(out))
    # keep the full chain here; presentation layers may drop the 1s
    return out
