"""Lie algebras over Q given by sparse structure constants.

Brackets are stored for i < j only, so antisymmetry is structural.  The
Jacobi identity is a checkable property (`validate`), not an assumption.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Mapping, Sequence

from .errors import InputError, StructuralError
from .matrix import Matrix, Q, rref_basis, span_dim, in_span, _frac


class LieAlgebra:
    """Finite-dimensional Lie algebra over Q, basis-indexed from 0."""

    __slots__ = ("dim", "brackets")

    def __init__(self, dim: int, brackets: Mapping[tuple[int, int], Mapping[int, object]]):
        if dim <= 0:
            raise InputError("dimension must be positive")
        self.dim = dim
        table: dict[tuple[int, int], dict[int, Fraction]] = {}
        for (i, j), comp in brackets.items():
            if not (0 <= i < dim and 0 <= j < dim):
                raise InputError(f"bracket index ({i},{j}) out of range for dim {dim}")
            if i >= j:
                raise InputError("structure constants must be stored with i < j")
            entry = {}
            for k, c in comp.items():
                if not 0 <= k < dim:
                    raise InputError(f"bracket target index {k} out of range")
                c = _frac(c)
                if c != 0:
                    entry[k] = c
            if entry:
                table[(i, j)] = entry
        self.brackets = table

    # -- bracket -----------------------------------------------------------

    def basis_bracket(self, i: int, j: int) -> list[Fraction]:
        out = [Q(0)] * self.dim
        if i == j:
            return out
        sign = 1
        if i > j:
            i, j, sign = j, i, -1
        for k, c in self.brackets.get((i, j), {}).items():
            out[k] = sign * c
        return out

    def bracket(self, x: Sequence, y: Sequence) -> list[Fraction]:
        xv = [_frac(a) for a in x]
        yv = [_frac(a) for a in y]
        if len(xv) != self.dim or len(yv) != self.dim:
            raise InputError("vector length does not match algebra dimension")
        out = [Q(0)] * self.dim
        for (i, j), comp in self.brackets.items():
            coef = xv[i] * yv[j] - xv[j] * yv[i]
            if coef:
                for k, c in comp.items():
                    out[k] += coef * c
        return out

    def ad(self, x: Sequence) -> Matrix:
        cols = [self.bracket(x, _unit(self.dim, j)) for j in range(self.dim)]
        return Matrix.from_columns(cols)

    # -- validation ----------------------------------------------------------

    def jacobi_violations(self) -> list[tuple[tuple[int, int, int], list[Fraction]]]:
        bad = []
        for i in range(self.dim):
            for j in range(i + 1, self.dim):
                for k in range(j + 1, self.dim):
                    ei, ej, ek = (_unit(self.dim, t) for t in (i, j, k))
                    s = _vadd(
                        self.bracket(self.bracket(ei, ej), ek),
                        self.bracket(self.bracket(ej, ek), ei),
                        self.bracket(self.bracket(ek, ei), ej),
                    )
                    if any(c != 0 for c in s):
                        bad.append(((i, j, k), s))
        return bad

    def validate(self) -> None:
        bad = self.jacobi_violations()
        if bad:
            (i, j, k), defect = bad[0]
            raise StructuralError(
                f"Jacobi identity fails at basis triple ({i},{j},{k}); defect {defect}"
            )

    # -- distinguished subspaces ------------------------------------------------

    def derived_basis(self) -> list[list[Fraction]]:
        vecs = []
        for (i, j) in self.brackets:
            vecs.append(self.basis_bracket(i, j))
        return rref_basis(vecs)

    def center_basis(self) -> list[list[Fraction]]:
        # x central iff ad(e_j)^T-stacked system kills x
        rows = []
        for j in range(self.dim):
            ad_j = self.ad(_unit(self.dim, j))
            rows.extend(ad_j.scale(-1).data)  # [x, e_j] = -[e_j, x]
        return Matrix(rows).kernel_basis()

    def centralizer_basis(self, subspace: Sequence[Sequence]) -> list[list[Fraction]]:
        """{x : [x, s] = 0 for all s in subspace}."""
        rows = []
        for s in subspace:
            ad_s = self.ad(s)
            rows.extend(ad_s.scale(-1).data)
        if not rows:
            return rref_basis(_unit_basis(self.dim))
        return rref_basis(Matrix(rows).kernel_basis())

    def bracket_span(self, basis_a: Sequence[Sequence], basis_b: Sequence[Sequence]) -> list[list[Fraction]]:
        vecs = [self.bracket(a, b) for a in basis_a for b in basis_b]
        return rref_basis(vecs)

    def is_ideal(self, subspace: Sequence[Sequence]) -> bool:
        br = self.bracket_span(_unit_basis(self.dim), subspace)
        return all(in_span(v, subspace) for v in br)

    def is_abelian_subspace(self, subspace: Sequence[Sequence]) -> bool:
        return not self.bracket_span(subspace, subspace)

    # -- central series -----------------------------------------------------------

    def descending_central_series(self) -> list[list[list[Fraction]]]:
        """C^1 = [L, L], C^{r+1} = [L, C^r]; stops when stable (ends with [] iff nilpotent)."""
        full = _unit_basis(self.dim)
        series = [self.bracket_span(full, full)]
        while True:
            nxt = self.bracket_span(full, series[-1])
            if span_dim(nxt) == span_dim(series[-1]):
                break
            series.append(nxt)
        return series

    def ascending_central_series(self) -> list[list[list[Fraction]]]:
        """C_1 = Z(L), C_{r+1}/C_r = Z(L/C_r); stops when stable."""
        series = [rref_basis(self.center_basis())]
        while True:
            cur = series[-1]
            nxt = self._next_center(cur)
            if span_dim(nxt) == span_dim(cur):
                break
            series.append(nxt)
        return series

    def _next_center(self, cur: Sequence[Sequence]) -> list[list[Fraction]]:
        # {x : [x, e_j] in span(cur) for all j}: linear conditions modulo cur
        if not cur:
            return rref_basis(self.center_basis())
        R, pivots = Matrix(list(cur)).rref()
        # T v = v reduced modulo span(cur); v in span iff T v = 0
        T = Matrix.identity(self.dim).copy_data()
        for r, pc in enumerate(pivots):
            for i in range(self.dim):
                T[i][pc] = Q(0)
            for i in range(self.dim):
                if i != pc:
                    # subtracting v[pc] * R_r moves mass off the pivot coordinate
                    T[i][pc] = -R.data[r][i]
        Tm = Matrix(T)
        rows = []
        for j in range(self.dim):
            cond = Tm * self.ad(_unit(self.dim, j)).scale(-1)  # x -> [x, e_j] mod cur
            rows.extend(cond.data)
        rows = [r for r in rows if any(c != 0 for c in r)]
        if not rows:
            return rref_basis(_unit_basis(self.dim))
        return rref_basis(Matrix(rows).kernel_basis())

    def nilpotency_class(self) -> int:
        series = self.descending_central_series()
        if series and span_dim(series[-1]) != 0:
            raise StructuralError("algebra is not nilpotent")
        return len(series)

    def is_nilpotent(self) -> bool:
        series = self.descending_central_series()
        return not series or span_dim(series[-1]) == 0


def _vadd(*vecs: Sequence[Fraction]) -> list[Fraction]:
    out = [Q(0)] * len(vecs[0])
    for v in vecs:
        for i, c in enumerate(v):
            out[i] += c
    return out


def _unit(dim: int, j: int) -> list[Fraction]:
    v = [Q(0)] * dim
    v[j] = Q(1)
    return v


def _unit_basis(dim: int) -> list[list[Fraction]]:
    return [_unit(dim, j) for j in range(dim)]


# -- reports and the public operations -------------------------------------------


def validate_lie(algebra: LieAlgebra) -> dict:
    """Jacobi report: {"ok": bool, "violations": [((i,j,k), defect), ...]}."""
    bad = algebra.jacobi_violations()
    return {"ok": not bad, "violations": bad}


def central_series(algebra: LieAlgebra) -> dict:
    """Ascending and descending central series with dimensions."""
    algebra.validate()
    asc = algebra.ascending_central_series()
    desc = algebra.descending_central_series()
    return {
        "ascending": asc,
        "descending": desc,
        "ascending_dims": [span_dim(b) for b in asc],
        "descending_dims": [span_dim(b) for b in desc],
    }


# -- standard constructions -------------------------------------------------------


def abelian_algebra(dim: int) -> LieAlgebra:
    return LieAlgebra(dim, {})


def heisenberg_algebra(k: int = 1) -> LieAlgebra:
    """H_k over Q: basis e_1..e_k, f_1..f_k, g with [e_i, f_i] = g."""
    dim = 2 * k + 1
    table = {}
    for i in range(k):
        table[(i, k + i)] = {2 * k: 1}
    return LieAlgebra(dim, table)


def filiform_algebra(n: int) -> LieAlgebra:
    """L_n over Q: dim n+1, basis e_0..e_n, [e_0, e_i] = e_{i+1} for 1 <= i <= n-1."""
    if n < 2:
        raise InputError("filiform type needs n >= 2")
    table = {(0, i): {i + 1: 1} for i in range(1, n)}
    return LieAlgebra(n + 1, table)


def six_dim_quadratic_structure(d: int, variant: int = 1) -> LieAlgebra:
    """The dim-6 rational structures with parameter d (squarefree, nonzero).

    variant 1: [e1,e4]=[e2,e3]=e5, [e1,e3]=e6, [e2,e4]=-d e6
    variant 2: [e1,e2]=[e3,e4]=e5, [e1,e3]=e6, [e2,e4]=-d e6
    (0-based internally: e1..e6 -> indices 0..5)
    """
    if variant == 1:
        table = {(0, 3): {4: 1}, (1, 2): {4: 1}, (0, 2): {5: 1}, (1, 3): {5: -d}}
    elif variant == 2:
        table = {(0, 1): {4: 1}, (2, 3): {4: 1}, (0, 2): {5: 1}, (1, 3): {5: -d}}
    else:
        raise InputError("variant must be 1 or 2")
    return LieAlgebra(6, table)


def h1_dual_structure() -> LieAlgebra:
    """Rank-one normal form: [e1,e3]=[e2,e4]=e5, [e1,e2]=e6 (0-based indices)."""
    return LieAlgebra(6, {(0, 2): {4: 1}, (1, 3): {4: 1}, (0, 1): {5: 1}})


def free_two_step_algebra() -> LieAlgebra:
    """Q^3 + wedge^2 Q^3 with [(x,u),(y,v)] = (0, x wedge y); basis f1,f2,f3,u23,u31,u12.

    Wedge components follow the cyclic convention: [f2,f3]=u23, [f3,f1]=u31,
    [f1,f2]=u12.
    """
    return LieAlgebra(6, {(1, 2): {3: 1}, (0, 2): {4: -1}, (0, 1): {5: 1}})


def semidirect_coadjoint(algebra: LieAlgebra) -> LieAlgebra:
    """t*G = G* x| G via the coadjoint action, basis (dual basis, basis).

    Indices 0..n-1 carry the dual copy, n..2n-1 the algebra itself;
    [x, alpha] = ad*_x alpha with (ad*_x a)(y) = -a([x, y]).
    """
    n = algebra.dim
    table: dict[tuple[int, int], dict[int, Fraction]] = {}
    for (i, j), comp in algebra.brackets.items():
        table[(n + i, n + j)] = {n + k: c for k, c in comp.items()}
    # [e_{n+i}, eps_j]: ad*_{e_i} eps_j = -sum_k eps_j([e_i, e_k]) eps_k
    for i in range(n):
        for j in range(n):
            comp = {}
            for k in range(n):
                br = algebra.basis_bracket(i, k)
                if br[j] != 0:
                    comp[k] = comp.get(k, Q(0)) - br[j]
            comp = {k: c for k, c in comp.items() if c != 0}
            if comp:
                # stored with smaller index first: (j, n+i) with sign flip
                table[(j, n + i)] = {k: -c for k, c in comp.items()}
    return LieAlgebra(2 * n, table)
