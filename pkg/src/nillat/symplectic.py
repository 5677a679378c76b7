"""Symplectic structures: the canonical filiform cocycle, moment maps, the
flat symplectic connection on algebras with an abelian codimension-one
ideal, orthogonals, the Yang-Baxter layer and the double construction.

Moment maps are exact polynomials in exponential coordinates; their group
cocycle identity is verified as a polynomial identity with the group product
expanded through the degree-4 Baker-Campbell-Hausdorff truncation.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Sequence

from .cocycles import AlternatingForm
from .errors import InputError, PreconditionError, StructuralError
from .liealg import LieAlgebra, _unit, filiform_algebra, semidirect_coadjoint
from .matrix import Matrix, Q, in_span, rref_basis, span_dim, _frac
from .multipoly import Poly, poly_vector, vec_is_zero

# -- the canonical filiform cocycle ---------------------------------------------------


def filiform_cocycle(n: int) -> AlternatingForm:
    """Omega = sum_{i<n} (-1)^i e_i* ^ e_{2n-i-1}* on the 2n-dim filiform algebra."""
    if n < 2:
        raise InputError("need n >= 2")
    L = filiform_algebra(2 * n - 1)
    entries = {}
    for i in range(n):
        entries[(i, 2 * n - i - 1)] = Q((-1) ** i)
    form = AlternatingForm.from_upper_entries(L, entries)
    if not form.is_cocycle() or not form.is_nondegenerate():
        raise StructuralError("canonical filiform form failed verification")  # pragma: no cover
    return form


# -- moment maps ------------------------------------------------------------------------


@dataclass
class MomentMapPoly:
    """Components of Q(exp x) in the dual basis; polynomials in the coordinates of x."""

    algebra: LieAlgebra
    components: list[Poly]

    def evaluate(self, x: Sequence) -> list[Fraction]:
        vals = [_frac(c) for c in x]
        return [p.substitute(vals) for p in self.components]


def _ad_matrix_poly(algebra: LieAlgebra, x: list[Poly]) -> list[list[Poly]]:
    n = algebra.dim
    zero = Poly(x[0].arity, {})
    m = [[zero for _ in range(n)] for _ in range(n)]
    for (i, j), comp in algebra.brackets.items():
        for k, c in comp.items():
            m[k][j] = m[k][j] + c * x[i]
            m[k][i] = m[k][i] - c * x[j]
    return m


def _adstar_apply(ad: list[list[Poly]], mu: list[Poly]) -> list[Poly]:
    """(ad*_x mu)(e_j) = -mu([x, e_j]) = -(ad^T mu)_j."""
    n = len(ad)
    return [-sum((ad[i][j] * mu[i] for i in range(n)), Poly(mu[0].arity, {})) for j in range(n)]


def _bracket_poly(algebra: LieAlgebra, x: list[Poly], y: list[Poly]) -> list[Poly]:
    n = algebra.dim
    zero = Poly(x[0].arity, {})
    out = [zero for _ in range(n)]
    for (i, j), comp in algebra.brackets.items():
        coef = x[i] * y[j] - x[j] * y[i]
        for k, c in comp.items():
            out[k] = out[k] + c * coef
    return out


def moment_map(algebra: LieAlgebra, form: AlternatingForm) -> MomentMapPoly:
    """Q(exp x) = sum_{k>=1} (1/k!) (ad*_x)^{k-1} w(x, .), a finite exact sum."""
    if not algebra.is_nilpotent():
        raise PreconditionError("moment map needs a nilpotent algebra")
    if not form.is_cocycle() or not form.is_nondegenerate():
        raise PreconditionError("form must be a symplectic cocycle")
    n = algebra.dim
    x = poly_vector(n, 0, n)
    return MomentMapPoly(algebra, _moment_components(algebra, form, x))


def _moment_components(algebra: LieAlgebra, form: AlternatingForm, x: list[Poly]) -> list[Poly]:
    n = algebra.dim
    arity = x[0].arity
    zero = Poly(arity, {})
    w = form.matrix
    # w(x, e_j) = sum_i x_i w[i][j]
    term = [sum((w.data[i][j] * x[i] for i in range(n)), zero) for j in range(n)]
    ad = _ad_matrix_poly(algebra, x)
    out = list(term)
    k = 1
    while True:
        term = _adstar_apply(ad, term)
        if vec_is_zero(term):
            break
        k += 1
        out = [o + Q(1, factorial(k)) * t for o, t in zip(out, term)]
        if k > n + 2:
            raise PreconditionError("ad* series did not terminate")  # pragma: no cover
    return out


def _coadjoint_exp(algebra: LieAlgebra, x: list[Poly], mu: list[Poly]) -> list[Poly]:
    """Ad*_{exp x} mu = e^{ad*_x} mu."""
    ad = _ad_matrix_poly(algebra, x)
    out = list(mu)
    term = list(mu)
    k = 0
    while True:
        term = _adstar_apply(ad, term)
        if vec_is_zero(term):
            break
        k += 1
        out = [o + Q(1, factorial(k)) * t for o, t in zip(out, term)]
        if k > algebra.dim + 2:
            raise PreconditionError("Ad* series did not terminate")  # pragma: no cover
    return out


def bch(algebra: LieAlgebra, x: list[Poly], y: list[Poly]) -> list[Poly]:
    """Baker-Campbell-Hausdorff through degree 4 (exact for class <= 4)."""
    if not algebra.is_nilpotent() or algebra.nilpotency_class() > 4:
        raise PreconditionError("BCH truncation covers nilpotency class <= 4 only")
    br = lambda a, b: _bracket_poly(algebra, a, b)
    xy = br(x, y)
    xxy = br(x, xy)
    yxy = br(y, xy)
    yxxy = br(y, xxy)
    return [
        xi + yi + Q(1, 2) * ci + Q(1, 12) * di - Q(1, 12) * ei - Q(1, 24) * fi
        for xi, yi, ci, di, ei, fi in zip(x, y, xy, xxy, yxy, yxxy)
    ]


def moment_cocycle_identity_holds(algebra: LieAlgebra, form: AlternatingForm) -> bool:
    """Q(st) == Q(s) + Ad*_s Q(t) as an exact polynomial identity.

    Coordinates of log s occupy variables 0..n-1, of log t variables n..2n-1.
    """
    n = algebra.dim
    arity = 2 * n
    x = poly_vector(arity, 0, n)
    y = poly_vector(arity, n, n)
    z = bch(algebra, x, y)
    lhs = _moment_components(algebra, form, z)
    qx = _moment_components(algebra, form, x)
    qy = _moment_components(algebra, form, y)
    rhs_shift = _coadjoint_exp(algebra, x, qy)
    rhs = [a + b for a, b in zip(qx, rhs_shift)]
    return all((l - r).is_zero() for l, r in zip(lhs, rhs))


# -- flat symplectic structure from an abelian codimension-one ideal -------------------


def flat_symplectic_structure(
    algebra: LieAlgebra,
    ideal_basis: Sequence[Sequence],
    complement_vector: Sequence,
    form: AlternatingForm,
) -> list[list[list[Fraction]]]:
    """Left-symmetric product with parallel symplectic form, for an algebra
    with an abelian codim-1 ideal I and complement vector e.

    The product is L_x = 0 on I and L_e = ad_e corrected on e itself:
    L_e e = v where w(v, c) = w([e, c], e) on I and w(v, e) = 0.  All three
    identities (torsion, left-symmetry, w-parallelism) are verified exactly.
    """
    n = algebra.dim
    ideal = rref_basis(ideal_basis)
    if span_dim(ideal) != n - 1:
        raise PreconditionError("ideal must have codimension one")
    if not algebra.is_ideal(ideal):
        raise PreconditionError("subspace is not an ideal")
    if not algebra.is_abelian_subspace(ideal):
        raise PreconditionError("ideal is not abelian")
    e = [_frac(c) for c in complement_vector]
    if in_span(e, ideal):
        raise PreconditionError("complement vector lies in the ideal")
    if not form.is_cocycle() or not form.is_nondegenerate():
        raise PreconditionError("form must be a symplectic cocycle")

    # decomposition x = iota(x) + lam(x) e against the basis (ideal, e)
    basis_cols = Matrix.from_columns(list(ideal) + [e])
    binv = basis_cols.inverse()

    def lam(x: Sequence[Fraction]) -> Fraction:
        return binv.apply(x)[n - 1]

    # v: w(v, c) = w([e, c], e) for c in ideal; w(v, e) = 0
    rows = []
    rhs = []
    wt = form.matrix.transpose()
    for c in ideal:
        rows.append(form.flat(c))          # w(v, c) = sum_i v_i w[i][c-dir]
        rhs.append(form(algebra.bracket(e, c), e))
    rows.append(form.flat(e))
    rhs.append(Q(0))
    # w(v, c) = -w(c, v): rows above give w(c, v); flip sign of rhs
    v = Matrix(rows).solve([-r for r in rhs])

    table: list[list[list[Fraction]]] = []
    for i in range(n):
        ei = _unit(n, i)
        li = lam(ei)
        row = []
        for j in range(n):
            ej = _unit(n, j)
            ad_e = algebra.bracket(e, ej)
            lj = lam(ej)
            row.append([li * (a + lj * b) for a, b in zip(ad_e, v)])
        table.append(row)

    _verify_flat_symplectic(algebra, form, table)
    return table


def _verify_flat_symplectic(algebra: LieAlgebra, form: AlternatingForm, table) -> None:
    from .cocycles import product_from_table

    n = algebra.dim
    prod = lambda a, b: product_from_table(table, a, b)
    for i in range(n):
        for j in range(n):
            ei, ej = _unit(n, i), _unit(n, j)
            t = [a - b for a, b in zip(prod(ei, ej), prod(ej, ei))]
            if t != algebra.basis_bracket(i, j):
                raise StructuralError("product has torsion")
    for i in range(n):
        for j in range(n):
            for k in range(n):
                ei, ej, ek = _unit(n, i), _unit(n, j), _unit(n, k)
                a1 = [p - q for p, q in zip(prod(prod(ei, ej), ek), prod(ei, prod(ej, ek)))]
                a2 = [p - q for p, q in zip(prod(prod(ej, ei), ek), prod(ej, prod(ei, ek)))]
                if a1 != a2:
                    raise StructuralError("associator is not left-symmetric")
                if form(prod(ei, ej), ek) + form(ej, prod(ei, ek)) != 0:
                    raise StructuralError("symplectic form is not parallel")


def curvature_vanishes(algebra: LieAlgebra, table) -> bool:
    """L_{[a,b]} = [L_a, L_b] on all basis pairs."""
    from .cocycles import product_from_table

    n = algebra.dim

    def lmat(vec):
        cols = [product_from_table(table, vec, _unit(n, j)) for j in range(n)]
        return Matrix.from_columns(cols)

    for i in range(n):
        for j in range(n):
            lhs = lmat(algebra.basis_bracket(i, j))
            la, lb = lmat(_unit(n, i)), lmat(_unit(n, j))
            if lhs != la * lb - lb * la:
                return False
    return True


# -- orthogonals -------------------------------------------------------------------------


def orthogonal_subalgebra(
    algebra: LieAlgebra, form: AlternatingForm, subspace: Sequence[Sequence]
) -> list[list[Fraction]]:
    """H-perp = {x : w(x, h) = 0 for all h in H} as an RREF basis."""
    if not form.is_nondegenerate():
        raise PreconditionError("form must be symplectic")
    rows = [form.flat(h) for h in subspace]
    rows = [r for r in rows if any(c != 0 for c in r)]
    if not rows:
        return rref_basis([_unit(algebra.dim, j) for j in range(algebra.dim)])
    # w(x, h) = -w(h, x): kernel of the matrix with rows w(h, .)
    return rref_basis(Matrix(rows).kernel_basis())


# -- the Example-5 intersection analysis ---------------------------------------------------


@dataclass
class GammaPrimeReport:
    w_dim: int
    gamma_prime_rank: int
    is_lattice: bool
    integer_form: list[int] | None  # primitive form cutting Gamma' when w_dim = 1


def example5_gamma_prime(rows: Sequence[Sequence]) -> GammaPrimeReport:
    """Intersection pattern of the integer lattice with exp(I-perp).

    `rows` are the three bottom-row coefficients of the cocycle block, each
    given by rational coordinates over a shared finite Q-basis of the reals.
    The Q-span dimension decides: 3 -> center only (rank 3), 2 -> rank 4,
    1 -> rank 5 cut out by a primitive integer linear form (a lattice).
    """
    vecs = [[_frac(x) for x in r] for r in rows]
    if len(vecs) != 3:
        raise InputError("need exactly three coefficient vectors")
    if all(all(x == 0 for x in v) for v in vecs):
        raise InputError("coefficient rows must not all vanish")
    w_dim = span_dim(vecs)
    rank = 6 - w_dim
    if w_dim > 1:
        return GammaPrimeReport(w_dim, rank, False, None)
    # all rows are rational multiples of one vector: extract the ratios
    base = next(v for v in vecs if any(x != 0 for x in v))
    piv = next(i for i, c in enumerate(base) if c != 0)
    coeffs = [v[piv] / base[piv] for v in vecs]
    den = 1
    for c in coeffs:
        den = den * c.denominator // _gcd(den, c.denominator)
    ints = [int(c * den) for c in coeffs]
    g = 0
    for c in ints:
        g = _gcd(g, abs(c))
    ints = [c // g for c in ints]
    return GammaPrimeReport(1, 5, True, ints)


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return abs(a)


# -- classical Yang-Baxter ------------------------------------------------------------------


def cybe_bracket_value(algebra: LieAlgebra, r: Matrix, i: int, j: int, k: int) -> Fraction:
    """[[r, r]](eps_i, eps_j, eps_k) with r viewed as a map G* -> G via column action."""
    n = algebra.dim
    out = Q(0)
    for (a, b, c) in ((i, j, k), (j, k, i), (k, i, j)):
        rb = r.column(b)
        rc = r.column(c)
        out += algebra.bracket(rb, rc)[a]
    return out


def cybe_check(algebra: LieAlgebra, r: Matrix) -> bool:
    """True iff the alternating bivector r solves the classical Yang-Baxter equation."""
    if r.rows != algebra.dim or r.cols != algebra.dim:
        raise InputError("bivector size mismatch")
    if r.transpose() != r.scale(-1):
        raise InputError("bivector matrix must be skew-symmetric")
    n = algebra.dim
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                if cybe_bracket_value(algebra, r, i, j, k) != 0:
                    return False
    return True


def inverse_bivector(form: AlternatingForm) -> Matrix:
    """r with <beta, r alpha> matching the inverse of the form's flat map."""
    return form.matrix.transpose().inverse()


@dataclass
class DoubleStructures:
    double: LieAlgebra       # D(G, r) on basis (dual copy, algebra copy)
    semidirect: LieAlgebra   # t*G = G* x| G on the same index convention
    theta_matrix: Matrix     # the isomorphism (alpha, x) -> (alpha, r alpha + x)


def double_theta_check(algebra: LieAlgebra, r: Matrix) -> DoubleStructures:
    """Build D(G, r) and t*G and verify theta(alpha, x) = (alpha, r alpha + x).

    The dual-copy bracket is [a, b]* = ad*_{ra} b - ad*_{rb} a; mixed brackets
    follow the Manin double; theta is checked as a Lie isomorphism on every
    basis pair, and both tables are re-validated for Jacobi.
    """
    if not cybe_check(algebra, r):
        raise PreconditionError("bivector does not solve the Yang-Baxter equation")
    n = algebra.dim

    def adstar(x: Sequence[Fraction], mu: Sequence[Fraction]) -> list[Fraction]:
        ad = algebra.ad(x)
        return [-sum(mu[i] * ad.data[i][j] for i in range(n)) for j in range(n)]

    def dual_bracket(alpha, beta):
        return [
            a - b
            for a, b in zip(adstar(r.apply(alpha), beta), adstar(r.apply(beta), alpha))
        ]

    def coad_dual(alpha, y):
        # <ad*_alpha y, gamma> = -<y, [alpha, gamma]*>
        out = []
        for g_idx in range(n):
            gamma = _unit(n, g_idx)
            out.append(-sum(a * b for a, b in zip(y, dual_bracket(alpha, gamma))))
        return out

    table: dict[tuple[int, int], dict[int, Fraction]] = {}

    def put(i, j, vec):
        comp = {k: c for k, c in enumerate(vec) if c != 0}
        if comp:
            table[(i, j)] = comp

    for i in range(n):
        for j in range(i + 1, n):
            put(i, j, dual_bracket(_unit(n, i), _unit(n, j)) + [Q(0)] * n)
    for i in range(n):
        for j in range(i + 1, n):
            put(n + i, n + j, [Q(0)] * n + algebra.basis_bracket(i, j))
    for a_idx in range(n):
        for x_idx in range(n):
            alpha = _unit(n, a_idx)
            x = _unit(n, x_idx)
            # [alpha, x]_D = -[x, alpha]_D = (-ad*_x alpha, +ad*_alpha x)
            vec = [-c for c in adstar(x, alpha)] + coad_dual(alpha, x)
            put(a_idx, n + x_idx, vec)

    double = LieAlgebra(2 * n, table)
    double.validate()
    semi = semidirect_coadjoint(algebra)
    semi.validate()

    theta_cols = []
    for a_idx in range(n):
        col = _unit(2 * n, a_idx)
        ra = r.column(a_idx)
        for t in range(n):
            col[n + t] += ra[t]
        theta_cols.append(col)
    for x_idx in range(n):
        theta_cols.append(_unit(2 * n, n + x_idx))
    theta = Matrix.from_columns(theta_cols)
    for i in range(2 * n):
        for j in range(i + 1, 2 * n):
            lhs = theta.apply(double.basis_bracket(i, j))
            rhs = semi.bracket(theta.column(i), theta.column(j))
            if lhs != rhs:
                raise StructuralError("theta is not a Lie algebra isomorphism")
    return DoubleStructures(double, semi, theta)


def rational_structure_for_double(
    algebra: LieAlgebra, r: Matrix, lattice_log: Sequence[Sequence]
) -> tuple[Matrix, LieAlgebra]:
    """Structure constants of t*G in the basis (dual of B, B) for a Q-spanning B.

    Returns (basis change on t*G, the algebra in that basis); all constants
    are rational and Jacobi is re-validated.
    """
    n = algebra.dim
    cols = [[_frac(x) for x in v] for v in lattice_log]
    if len(cols) != n or span_dim(cols) != n:
        raise InputError("lattice basis must span the algebra over Q")
    if not cybe_check(algebra, r):
        raise PreconditionError("bivector does not solve the Yang-Baxter equation")
    B = Matrix.from_columns(cols)
    Bstar = B.inverse().transpose()  # dual basis columns
    semi = semidirect_coadjoint(algebra)
    big_cols = []
    for j in range(n):
        big_cols.append(Bstar.column(j) + [Q(0)] * n)
    for j in range(n):
        big_cols.append([Q(0)] * n + B.column(j))
    P = Matrix.from_columns(big_cols)
    Pinv = P.inverse()
    table = {}
    for i in range(2 * n):
        for j in range(i + 1, 2 * n):
            br = semi.bracket(P.column(i), P.column(j))
            comp = {k: c for k, c in enumerate(Pinv.apply(br)) if c != 0}
            if comp:
                table[(i, j)] = comp
    out = LieAlgebra(2 * n, table)
    out.validate()
    return P, out
