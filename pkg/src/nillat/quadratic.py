"""Rings of integers of quadratic fields Q(sqrt(m)) and their unit groups.

Elements are integer pairs (a, b) meaning a + b*omega with omega = sqrt(m)
for m = 2, 3 (mod 4) and omega = (1 + sqrt(m))/2 for m = 1 (mod 4).
Fundamental units of real fields come from the continued fraction of a
reduced shift of omega; all embedding comparisons are exact (sign analysis
plus squaring, no floating point).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt
from typing import Iterator

from .errors import InputError, PreconditionError

SQRT = "SQRT"
HALF = "HALF"


def _is_squarefree(m: int) -> bool:
    from .classify import squarefree_part

    return m != 0 and squarefree_part(m) == m


@dataclass(frozen=True)
class QuadraticRing:
    m: int
    basis_kind: str

    @property
    def half(self) -> bool:
        return self.basis_kind == HALF


def ring_of_integers(m: int) -> QuadraticRing:
    """The maximal order of Q(sqrt(m)): HALF basis iff m = 1 (mod 4)."""
    if m in (0, 1):
        raise InputError("m must differ from 0 and 1")
    if not _is_squarefree(m):
        raise InputError("m must be squarefree")
    return QuadraticRing(m, HALF if m % 4 == 1 else SQRT)


@dataclass(frozen=True)
class RingElement:
    ring: QuadraticRing
    a: int
    b: int

    def __add__(self, o: "RingElement") -> "RingElement":
        self._same(o)
        return RingElement(self.ring, self.a + o.a, self.b + o.b)

    def __sub__(self, o: "RingElement") -> "RingElement":
        self._same(o)
        return RingElement(self.ring, self.a - o.a, self.b - o.b)

    def __neg__(self) -> "RingElement":
        return RingElement(self.ring, -self.a, -self.b)

    def __mul__(self, o: "RingElement") -> "RingElement":
        self._same(o)
        m = self.ring.m
        a, b, c, d = self.a, self.b, o.a, o.b
        if self.ring.half:
            # omega^2 = omega + (m - 1)/4
            return RingElement(self.ring, a * c + b * d * (m - 1) // 4, a * d + b * c + b * d)
        return RingElement(self.ring, a * c + m * b * d, a * d + b * c)

    def _same(self, o: "RingElement") -> None:
        if o.ring != self.ring:
            raise InputError("elements of different rings")

    def conjugate(self) -> "RingElement":
        if self.ring.half:
            return RingElement(self.ring, self.a + self.b, -self.b)
        return RingElement(self.ring, self.a, -self.b)

    def norm(self) -> int:
        m = self.ring.m
        if self.ring.half:
            return self.a * self.a + self.a * self.b - (m - 1) // 4 * self.b * self.b
        return self.a * self.a - m * self.b * self.b

    def trace(self) -> int:
        return 2 * self.a + (self.b if self.ring.half else 0)

    def is_unit(self) -> bool:
        return abs(self.norm()) == 1

    def inverse(self) -> "RingElement":
        n = self.norm()
        if abs(n) != 1:
            raise PreconditionError("element is not a unit")
        conj = self.conjugate()
        return conj if n == 1 else -conj

    def sqrt_coords(self) -> tuple[Fraction, Fraction]:
        """(p, q) with the element equal to p + q sqrt(m)."""
        if self.ring.half:
            return Fraction(2 * self.a + self.b, 2), Fraction(self.b, 2)
        return Fraction(self.a), Fraction(self.b)

    def __repr__(self) -> str:
        return format_element(self)


def element(ring: QuadraticRing, a: int, b: int) -> RingElement:
    return RingElement(ring, int(a), int(b))


def one(ring: QuadraticRing) -> RingElement:
    return RingElement(ring, 1, 0)


def format_element(x: RingElement) -> str:
    """Human form: "1+sqrt2", "2+sqrt3", "(1+sqrt5)/2", "-1", "i"-free."""
    m = x.ring.m
    p, q = x.sqrt_coords()
    tag = f"sqrt{m}" if m > 0 else f"sqrt(-{-m})"
    if q == 0:
        return str(p.numerator) if p.denominator == 1 else str(p)
    if p.denominator == 1 and q.denominator == 1:
        pa, qa = p.numerator, q.numerator
        qs = tag if abs(qa) == 1 else f"{abs(qa)}{tag}"
        sign = "-" if qa < 0 else "+"
        if pa == 0:
            return f"-{qs}" if qa < 0 else qs
        return f"{pa}{sign}{qs}"
    # halves: (p' + q' sqrt m)/2 with odd integers p', q'
    pa, qa = 2 * p, 2 * q
    qs = tag if abs(qa) == 1 else f"{abs(int(qa))}{tag}"
    sign = "-" if qa < 0 else "+"
    return f"({int(pa)}{sign}{qs})/2"


# -- exact embedding comparisons ------------------------------------------------------


def _cmp_sqrt_combination(p: Fraction, q: Fraction, m: int) -> int:
    """Sign of p + q sqrt(m) for m > 0 (exact)."""
    if q == 0:
        return (p > 0) - (p < 0)
    if p == 0:
        return 1 if q > 0 else -1
    if p > 0 and q > 0:
        return 1
    if p < 0 and q < 0:
        return -1
    # opposite signs: compare p^2 vs q^2 m
    lhs = p * p
    rhs = q * q * m
    if lhs == rhs:
        return 0  # impossible for squarefree m > 1, defensive
    bigger_abs_p = lhs > rhs
    if p > 0:
        return 1 if bigger_abs_p else -1
    return -1 if bigger_abs_p else 1


def embedding_sign(x: RingElement, positive_root: bool = True) -> int:
    """Sign of the image of x under sqrt(m) -> +sqrt(m) (or its conjugate)."""
    if x.ring.m < 0:
        raise PreconditionError("real embedding needs m > 0")
    p, q = x.sqrt_coords()
    if not positive_root:
        q = -q
    return _cmp_sqrt_combination(p, q, x.ring.m)


def embedding_greater_than(x: RingElement, bound: Fraction, positive_root: bool = True) -> bool:
    p, q = x.sqrt_coords()
    if not positive_root:
        q = -q
    return _cmp_sqrt_combination(p - Fraction(bound), q, x.ring.m) > 0


def abs_embedding_vs_one(x: RingElement, positive_root: bool = True) -> int:
    """-1, 0, 1 as |embedding of x| is <, =, > 1; exact."""
    m = x.ring.m
    if m < 0:
        # modulus^2 equals the norm
        n = x.norm()
        return (n > 1) - (n < 1)
    p, q = x.sqrt_coords()
    if not positive_root:
        q = -q
    # |p + q sqrt m|^2 - 1 = p^2 + q^2 m - 1 + 2pq sqrt m
    return _cmp_sqrt_combination(p * p + q * q * m - 1, 2 * p * q, m)


# -- fundamental units -----------------------------------------------------------------


def _reduced_start(m: int, half: bool) -> tuple[int, int]:
    """(P, Q) for a reduced quadratic irrational (P + sqrt m)/Q equivalent to omega."""
    a0 = isqrt(m)
    if half:
        t = (a0 - 1) // 2  # shift making (1 + sqrt m)/2 + t reduced
        return 2 * t + 1, 2
    return a0, 1


def _cf_cycle(m: int, p0: int, q0: int) -> Iterator[int]:
    """Partial quotients of the purely periodic expansion of (p0 + sqrt m)/q0."""
    a0 = isqrt(m)
    p, q = p0, q0
    while True:
        a = (p + a0) // q
        yield a
        p = a * q - p
        q = (m - p * p) // q
        if (p, q) == (p0, q0):
            return


def fundamental_unit(m: int) -> RingElement:
    """The fundamental unit (> 1, norm +-1) of the real quadratic ring, m > 1."""
    if m <= 1:
        raise InputError("need m > 1")
    ring = ring_of_integers(m)
    p0, q0 = _reduced_start(m, ring.half)
    # continuants over one full period: eps = q_{l-1} alpha + q_{l-2}
    q_prev, q_cur = 1, 0  # q_{-2}, q_{-1}
    for a in _cf_cycle(m, p0, q0):
        q_prev, q_cur = q_cur, a * q_cur + q_prev
    # alpha = (p0 + sqrt m)/q0 in ring coordinates
    if ring.half:
        t = (p0 - 1) // 2
        alpha = RingElement(ring, t, 1)
    else:
        alpha = RingElement(ring, p0, 1)
    eps = RingElement(ring, q_cur, 0) * alpha + RingElement(ring, q_prev, 0)
    if not eps.is_unit():
        raise PreconditionError("continued-fraction unit failed norm check")  # pragma: no cover
    if not embedding_greater_than(eps, Fraction(1)):
        raise PreconditionError("continued-fraction unit is not > 1")  # pragma: no cover
    return eps


def fundamental_unit_box_search(m: int, coord_bound: int = 10 ** 7) -> RingElement:
    """Minimal unit > 1 by increasing second coordinate (test oracle)."""
    ring = ring_of_integers(m)
    # minimal unit > 1 has minimal y, then minimal x: try the smaller target first
    if ring.half:
        # x^2 - m y^2 = +-4 with x = y (mod 2)
        for y in range(1, coord_bound):
            for target in (-4, 4):
                x2 = m * y * y + target
                if x2 > 0:
                    x = isqrt(x2)
                    if x * x == x2 and (x - y) % 2 == 0:
                        return RingElement(ring, (x - y) // 2, y)
    else:
        for y in range(1, coord_bound):
            for target in (-1, 1):
                x2 = m * y * y + target
                if x2 > 0:
                    x = isqrt(x2)
                    if x * x == x2:
                        return RingElement(ring, x, y)
    raise PreconditionError("no unit found within the box")


@dataclass
class UnitGroupDesc:
    torsion: str                      # "C2" | "C4" | "C6"
    fundamental: RingElement | None   # present iff m > 1


def unit_torsion(m: int) -> UnitGroupDesc:
    """Torsion subgroup of the unit group for imaginary m (bounded enumeration)."""
    if m >= 0:
        raise InputError("torsion classification is for m < 0")
    ring = ring_of_integers(m)
    units = []
    for a in range(-2, 3):
        for b in range(-2, 3):
            x = RingElement(ring, a, b)
            if x.norm() == 1:
                units.append(x)
    count = len(units)
    if count == 4:
        return UnitGroupDesc("C4", None)
    if count == 6:
        return UnitGroupDesc("C6", None)
    if count == 2:
        return UnitGroupDesc("C2", None)
    raise PreconditionError(f"unexpected unit count {count}")  # pragma: no cover


def unit_group(m: int) -> UnitGroupDesc:
    """Full description: torsion always C2 for real m with the fundamental unit attached."""
    if m > 1:
        return UnitGroupDesc("C2", fundamental_unit(m))
    return unit_torsion(m)


def unit_exponent(ring: QuadraticRing, x: RingElement) -> int | None:
    """n with x = +- eps^n for a real ring; None when x is not a unit."""
    if ring.m <= 1:
        raise PreconditionError("exponent decomposition needs a real ring")
    if not x.is_unit():
        return None
    u = x if embedding_sign(x) > 0 else -x
    eps = fundamental_unit(ring.m)
    n = 0
    cmp = abs_embedding_vs_one(u)
    while cmp != 0 and not (u.a == 1 and u.b == 0):
        if cmp > 0:
            u = u * eps.inverse()
            n += 1
        else:
            u = u * eps
            n -= 1
        cmp = abs_embedding_vs_one(u)
        if abs(n) > 10 ** 6:
            raise PreconditionError("unit exponent runaway")  # pragma: no cover
    return n
