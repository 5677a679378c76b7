"""Dense univariate polynomial arithmetic over Q (coefficients low-to-high).

Supports the exact root-location toolkit: Euclidean gcd, squarefree part,
Sturm chains, the reversal p*(x) = x^deg p(1/x), and the substitution
y = z + 1/z that sends palindromic polynomials to half-degree ones.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd as int_gcd
from typing import Sequence

from .errors import InputError

Q = Fraction


def trim(p: Sequence) -> list[Fraction]:
    out = [Q(c) for c in p]
    while out and out[-1] == 0:
        out.pop()
    return out


def degree(p: Sequence) -> int:
    t = trim(p)
    return len(t) - 1 if t else -1


def evaluate(p: Sequence, x) -> Fraction:
    x = Q(x)
    out = Q(0)
    for c in reversed(trim(p)):
        out = out * x + c
    return out


def add(p, q) -> list[Fraction]:
    n = max(len(p), len(q))
    return trim([(Q(p[i]) if i < len(p) else Q(0)) + (Q(q[i]) if i < len(q) else Q(0)) for i in range(n)])


def sub(p, q) -> list[Fraction]:
    return add(p, [-Q(c) for c in q])


def mul(p, q) -> list[Fraction]:
    p, q = trim(p), trim(q)
    if not p or not q:
        return []
    out = [Q(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a == 0:
            continue
        for j, b in enumerate(q):
            out[i + j] += a * b
    return trim(out)


def scale(c, p) -> list[Fraction]:
    c = Q(c)
    return trim([c * Q(x) for x in p])


def divmod_poly(p, q) -> tuple[list[Fraction], list[Fraction]]:
    p, q = trim(p), trim(q)
    if not q:
        raise InputError("division by the zero polynomial")
    r = p[:]
    quo = [Q(0)] * max(len(p) - len(q) + 1, 1)
    while len(r) >= len(q):
        c = r[-1] / q[-1]
        d = len(r) - len(q)
        quo[d] = c
        for i, b in enumerate(q):
            r[d + i] -= c * b
        r = trim(r)
        if not r:
            break
    return trim(quo), r


def poly_gcd(p, q) -> list[Fraction]:
    """Monic gcd over Q."""
    a, b = trim(p), trim(q)
    while b:
        a, b = b, divmod_poly(a, b)[1]
    if not a:
        return []
    lc = a[-1]
    return [c / lc for c in a]


def derivative(p) -> list[Fraction]:
    t = trim(p)
    return trim([Q(i) * t[i] for i in range(1, len(t))])


def squarefree_part(p) -> list[Fraction]:
    t = trim(p)
    if degree(t) <= 0:
        return t
    g = poly_gcd(t, derivative(t))
    if degree(g) <= 0:
        return t
    return divmod_poly(t, g)[0]


def reverse(p) -> list[Fraction]:
    """p*(x) = x^deg(p) p(1/x); assumes p trimmed."""
    return trim(list(reversed(trim(p))))


def primitive_int(p) -> list[int]:
    """Clear denominators and content; sign normalized to positive leading."""
    t = trim(p)
    if not t:
        return []
    den = 1
    for c in t:
        den = den * c.denominator // int_gcd(den, c.denominator)
    ints = [int(c * den) for c in t]
    g = 0
    for c in ints:
        g = int_gcd(g, abs(c))
    ints = [c // g for c in ints]
    if ints[-1] < 0:
        ints = [-c for c in ints]
    return ints


def sturm_chain(p) -> list[list[Fraction]]:
    p0 = squarefree_part(p)
    chain = [p0, derivative(p0)]
    while degree(chain[-1]) > 0:
        rem = divmod_poly(chain[-2], chain[-1])[1]
        if not rem:
            break
        chain.append([-c for c in rem])
    return [c for c in chain if c]


def _sign_changes(chain, x) -> int:
    signs = []
    for p in chain:
        v = evaluate(p, x)
        if v != 0:
            signs.append(1 if v > 0 else -1)
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def count_real_roots(p, lo, hi) -> int:
    """Number of distinct real roots in (lo, hi], plus lo if it is a root.

    Equivalently: distinct roots in the closed interval [lo, hi].
    """
    t = squarefree_part(p)
    if degree(t) <= 0:
        return 0
    chain = sturm_chain(t)
    n = _sign_changes(chain, lo) - _sign_changes(chain, hi)
    if evaluate(t, lo) == 0:
        n += 1
    return n


def palindromic_to_half(p) -> list[Fraction]:
    """For palindromic p of even degree 2s, the q with p(z) = z^s q(z + 1/z).

    Uses V_0 = 2, V_1 = y, V_{k+1} = y V_k - V_{k-1} representing z^k + z^-k.
    """
    t = trim(p)
    d = degree(t)
    if d < 0:
        return []
    if d % 2 != 0 or t != reverse(t):
        raise InputError("polynomial is not palindromic of even degree")
    s = d // 2
    out = [t[s]]
    v_prev = [Q(2)]         # V_0
    v_cur = [Q(0), Q(1)]    # V_1
    for k in range(1, s + 1):
        out = add(out, scale(t[s + k], v_cur))
        v_prev, v_cur = v_cur, sub(mul([Q(0), Q(1)], v_cur), v_prev)
    return trim(out)
