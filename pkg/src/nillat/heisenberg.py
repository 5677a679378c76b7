"""Heisenberg algebras over commutative algebras and their symplectic cocycles.

H_k(A) lives on basis e_i (x) a, f_i (x) a, g (x) a with the single bracket
family [e_i (x) a, f_i (x) b] = g (x) ab.  For k = 1 and local A the
existence of a symplectic (nondegenerate) scalar 2-cocycle is decided by
parity and the socle dimension, with a fully verified constructive witness
on the positive side; for k >= 2 every cocycle is degenerate, with the
common kernel direction returned as a certificate.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .cocycles import AlternatingForm, cocycle_space
from .commalg import CommAlgebra, SocleReport, radical_and_socle, _basis
from .errors import InputError, PreconditionError
from .liealg import LieAlgebra
from .matrix import Matrix, Q, rref_basis, span_dim


@dataclass
class HeisenbergOverA:
    """H_k(A) with its index bookkeeping: e-block, f-block, then g-block."""

    base: CommAlgebra
    k: int
    algebra: LieAlgebra

    def e_index(self, i: int, t: int) -> int:
        return i * self.base.dim + t

    def f_index(self, i: int, t: int) -> int:
        return (self.k + i) * self.base.dim + t

    def g_index(self, t: int) -> int:
        return 2 * self.k * self.base.dim + t


def heisenberg_over(base: CommAlgebra, k: int = 1) -> HeisenbergOverA:
    if k < 1:
        raise InputError("need k >= 1")
    l = base.dim
    dim = (2 * k + 1) * l
    table: dict[tuple[int, int], dict[int, Fraction]] = {}
    for i in range(k):
        for s in range(l):
            for t in range(l):
                prod = base.basis_product(s, t)
                comp = {2 * k * l + m: c for m, c in enumerate(prod) if c != 0}
                if comp:
                    table[(i * l + s, (k + i) * l + t)] = comp
    return HeisenbergOverA(base, k, LieAlgebra(dim, table))


@dataclass
class SymplecticDecision:
    symplectic: bool
    reason: str          # "local-criterion" | "parity" | "socle-dim" | "generic-search"
    report: SocleReport


def h1_symplectic_decision(base: CommAlgebra) -> SymplecticDecision:
    """Existence of a symplectic cocycle on H_1(A).

    For local A: yes iff dim A is even and dim socle <= 2.  Non-local input
    falls back to an explicit search over the cocycle space and is labeled
    "generic-search".
    """
    report = radical_and_socle(base)
    if report.is_local:
        if base.dim % 2 != 0:
            return SymplecticDecision(False, "parity", report)
        if len(report.socle) > 2:
            return SymplecticDecision(False, "socle-dim", report)
        return SymplecticDecision(True, "local-criterion", report)
    cert = generic_degeneracy_search(heisenberg_over(base, 1).algebra)
    return SymplecticDecision(not cert.degenerate, "generic-search", report)


def h1_cocycle_construct(base: CommAlgebra) -> AlternatingForm:
    """Constructive symplectic cocycle on H_1(A), verified exactly.

    Socle dimension 1: w(e a, g c) = mu(ac), mu dual to a socle generator,
    plus a standard symplectic pairing on the f-copy.  Socle dimension 2:
    two functionals with independent socle restrictions feed the e-g and
    f-g pairings; a complement F of a duality partner E of the g-copy
    carries a standard symplectic form.
    """
    decision = h1_symplectic_decision(base)
    if not decision.symplectic:
        raise PreconditionError("no symplectic cocycle exists")
    if decision.reason == "generic-search":
        # non-local input: the search witness is the certificate
        cert = generic_degeneracy_search(heisenberg_over(base, 1).algebra)
        if cert.degenerate or cert.witness is None:
            raise PreconditionError("no symplectic cocycle exists")  # pragma: no cover
        return cert.witness
    H = heisenberg_over(base, 1)
    l = base.dim
    socle = decision.report.socle
    dim = H.algebra.dim
    entries: dict[tuple[int, int], Fraction] = {}

    functionals = [_dual_functional(base, s) for s in socle]

    def put(i: int, j: int, c: Fraction) -> None:
        if c == 0 or i == j:
            return
        if i < j:
            entries[(i, j)] = entries.get((i, j), Q(0)) + c
        else:
            entries[(j, i)] = entries.get((j, i), Q(0)) - c

    if len(socle) == 1:
        mu = functionals[0]
        for s in range(l):
            for t in range(l):
                val = _apply(mu, base.basis_product(s, t))
                put(H.e_index(0, s), H.g_index(t), val)
        for s in range(0, l, 2):
            put(H.f_index(0, s), H.f_index(0, s + 1), Q(1))
    else:
        f1, f2 = functionals
        pair_rows = []
        for s in range(l):
            row1 = [_apply(f1, base.basis_product(s, t)) for t in range(l)]
            row2 = [_apply(f2, base.basis_product(s, t)) for t in range(l)]
            pair_rows.append((H.e_index(0, s), row1))
            pair_rows.append((H.f_index(0, s), row2))
        for idx, row in pair_rows:
            for t, val in enumerate(row):
                put(idx, H.g_index(t), val)
        # choose E: l rows of the 2l x l pairing matrix forming an invertible block
        pairing = Matrix([row for _, row in pair_rows])
        chosen: list[int] = []
        for r in range(2 * l):
            if len(chosen) == l:
                break
            trial = chosen + [r]
            if Matrix([pair_rows[t][1] for t in trial]).rank() == len(trial):
                chosen.append(r)
        if len(chosen) != l:
            raise PreconditionError("duality block not found")  # pragma: no cover
        rest = [r for r in range(2 * l) if r not in chosen]
        for a in range(0, l, 2):
            put(pair_rows[rest[a]][0], pair_rows[rest[a + 1]][0], Q(1))

    form = AlternatingForm.from_upper_entries(H.algebra, entries)
    if not form.is_cocycle():
        raise PreconditionError("constructed form is not a cocycle")  # pragma: no cover
    if not form.is_nondegenerate():
        raise PreconditionError("constructed form is degenerate")  # pragma: no cover
    return form


def _dual_functional(base: CommAlgebra, socle_vec: Sequence[Fraction]) -> list[Fraction]:
    """A functional equal to 1 on the given socle vector, 0 on complementary coords."""
    piv = next(i for i, c in enumerate(socle_vec) if c != 0)
    out = [Q(0)] * base.dim
    out[piv] = 1 / socle_vec[piv]
    return out


def _apply(functional: Sequence[Fraction], vec: Sequence[Fraction]) -> Fraction:
    return sum(a * b for a, b in zip(functional, vec))


@dataclass
class DegeneracyCertificate:
    degenerate: bool
    kind: str                      # "parity" | "common-kernel" | "orthogonality" | "witness"
    kernel_basis: list[list[Fraction]] | None = None
    witness: AlternatingForm | None = None


def hk_degeneracy_check(base: CommAlgebra, k: int) -> DegeneracyCertificate:
    """Certificate that every scalar 2-cocycle of H_k(A), k >= 2, is degenerate.

    Computes the cocycle space and checks that the g-copy of A pairs to zero
    with everything, for every basis cocycle; that common kernel kills every
    linear combination at once.
    """
    if k < 2:
        raise PreconditionError("degeneracy statement needs k >= 2")
    H = heisenberg_over(base, k)
    z2, _ = cocycle_space(H.algebra)
    l = base.dim
    g_block = [_unit_vec(H.algebra.dim, H.g_index(t)) for t in range(l)]
    for form in z2:
        for gv in g_block:
            if any(c != 0 for c in form.flat(gv)):
                return DegeneracyCertificate(False, "witness")  # pragma: no cover
    return DegeneracyCertificate(True, "common-kernel", kernel_basis=rref_basis(g_block))


def generic_degeneracy_search(
    algebra: LieAlgebra,
    blocks: tuple[list[list[Fraction]], list[list[Fraction]]] | None = None,
    budget: int = 200000,
) -> DegeneracyCertificate:
    """Deterministic certificate that no cocycle on `algebra` is nondegenerate.

    Tiers: odd dimension; a common kernel vector of all basis cocycles; a
    subspace pair (U, W) with dim U > codim W and w(U, W) = 0 for every basis
    cocycle (then any combination kills part of U); finally a budgeted exact
    grid evaluation of the determinant polynomial.
    """
    n = algebra.dim
    if n % 2 == 1:
        return DegeneracyCertificate(True, "parity")
    z2, _ = cocycle_space(algebra)
    if not z2:
        return DegeneracyCertificate(True, "common-kernel",
                                     kernel_basis=rref_basis([_unit_vec(n, 0)]))
    # common kernel of all basis cocycles
    rows = []
    for form in z2:
        rows.extend(form.matrix.data)
    common = Matrix(rows).kernel_basis()
    if common:
        return DegeneracyCertificate(True, "common-kernel", kernel_basis=rref_basis(common))
    if blocks is not None:
        u_basis, w_basis = blocks
        if span_dim(u_basis) > n - span_dim(w_basis):
            if all(
                form(u, w) == 0
                for form in z2
                for u in u_basis
                for w in w_basis
            ):
                return DegeneracyCertificate(True, "orthogonality", kernel_basis=rref_basis(u_basis))
    # witness search: simple combinations first
    for form in z2:
        if form.is_nondegenerate():
            return DegeneracyCertificate(False, "witness", witness=form)
    acc = z2[0]
    for form in z2[1:]:
        acc = acc.add(form)
    if acc.is_nondegenerate():
        return DegeneracyCertificate(False, "witness", witness=acc)
    # exact grid evaluation of det(sum t_i w_i): identically zero iff zero on
    # a grid exceeding the per-variable degree
    grid = range(n + 1)
    count = 0
    from itertools import product as iproduct

    for point in iproduct(grid, repeat=len(z2)):
        count += 1
        if count > budget:
            raise PreconditionError("evaluation budget exhausted; no certificate found")
        m = Matrix.zero(n, n)
        for c, form in zip(point, z2):
            if c:
                m = m + form.matrix.scale(c)
        if m.det() != 0:
            return DegeneracyCertificate(
                False, "witness",
                witness=AlternatingForm(algebra, m),
            )
    return DegeneracyCertificate(True, "grid")


def h1_blocks_for_search(base: CommAlgebra) -> tuple[list[list[Fraction]], list[list[Fraction]]]:
    """(U, W) = (S g, N e + N f + A g) used by the orthogonality certificate."""
    H = heisenberg_over(base, 1)
    rep = radical_and_socle(base)
    l = base.dim
    n = H.algebra.dim
    u_basis = []
    for s in rep.socle:
        v = [Q(0)] * n
        for t, c in enumerate(s):
            v[H.g_index(t)] = c
        u_basis.append(v)
    w_basis = []
    for r in rep.radical:
        ve = [Q(0)] * n
        vf = [Q(0)] * n
        for t, c in enumerate(r):
            ve[H.e_index(0, t)] = c
            vf[H.f_index(0, t)] = c
        w_basis.extend([ve, vf])
    for t in range(l):
        w_basis.append(_unit_vec(n, H.g_index(t)))
    return rref_basis(u_basis), rref_basis(w_basis)


def _unit_vec(n: int, j: int) -> list[Fraction]:
    v = [Q(0)] * n
    v[j] = Q(1)
    return v
