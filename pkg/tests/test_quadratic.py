from fractions import Fraction as F

import pytest

from nillat.classify import squarefree_part
from nillat.errors import InputError
from nillat.quadratic import (
    HALF,
    SQRT,
    abs_embedding_vs_one,
    element,
    embedding_greater_than,
    embedding_sign,
    format_element,
    fundamental_unit,
    fundamental_unit_box_search,
    one,
    ring_of_integers,
    unit_exponent,
    unit_group,
    unit_torsion,
)


def test_ring_kinds():
    assert ring_of_integers(5).basis_kind == HALF
    assert ring_of_integers(2).basis_kind == SQRT
    assert ring_of_integers(-1).basis_kind == SQRT
    assert ring_of_integers(-3).basis_kind == HALF
    with pytest.raises(InputError):
        ring_of_integers(12)
    with pytest.raises(InputError):
        ring_of_integers(1)


def test_ring_arithmetic_half():
    r5 = ring_of_integers(5)
    w = element(r5, 0, 1)  # (1+sqrt5)/2
    assert (w * w).a == 1 and (w * w).b == 1  # w^2 = w + 1
    assert w.norm() == -1
    assert w.conjugate().a == 1 and w.conjugate().b == -1
    assert (w * w.inverse()) == one(r5)


def test_fundamental_units_small():
    assert str(fundamental_unit(2)) == "1+sqrt2"
    assert str(fundamental_unit(3)) == "2+sqrt3"
    assert str(fundamental_unit(5)) == "(1+sqrt5)/2"


def test_fundamental_unit_norm_and_size():
    for m in (2, 3, 5, 7, 11, 13, 94):
        eps = fundamental_unit(m)
        assert abs(eps.norm()) == 1
        assert embedding_greater_than(eps, F(1))


def test_fundamental_unit_minimality_box():
    for m in range(2, 51):
        if squarefree_part(m) != m:
            continue
        cf = fundamental_unit(m)
        box = fundamental_unit_box_search(m)
        assert (cf.a, cf.b) == (box.a, box.b), m


def test_torsion_groups():
    assert unit_torsion(-1).torsion == "C4"
    assert unit_torsion(-3).torsion == "C6"
    assert unit_torsion(-2).torsion == "C2"
    assert unit_torsion(-7).torsion == "C2"
    with pytest.raises(InputError):
        unit_torsion(3)


def test_unit_group_description():
    real = unit_group(5)
    assert real.torsion == "C2" and real.fundamental is not None
    imag = unit_group(-1)
    assert imag.torsion == "C4" and imag.fundamental is None


def test_unit_exponent_roundtrip():
    r = ring_of_integers(3)
    eps = fundamental_unit(3)
    x = one(r)
    for n in range(6):
        assert unit_exponent(r, x) == n
        assert unit_exponent(r, -x) == n
        x = x * eps
    inv = eps.inverse()
    assert unit_exponent(r, inv * inv) == -2
    assert unit_exponent(r, element(r, 5, 0)) is None  # not a unit


def test_embedding_comparisons():
    r2 = ring_of_integers(2)
    eps = element(r2, 1, 1)
    assert embedding_sign(eps) == 1
    assert embedding_sign(eps, positive_root=False) < 0  # 1 - sqrt2 < 0
    assert abs_embedding_vs_one(eps) == 1
    assert abs_embedding_vs_one(eps, positive_root=False) == -1
    assert abs_embedding_vs_one(one(r2)) == 0
    rg = ring_of_integers(-1)
    assert abs_embedding_vs_one(element(rg, 0, 1)) == 0  # |i| = 1


def test_format_element():
    r2 = ring_of_integers(2)
    assert format_element(element(r2, 0, 1)) == "sqrt2"
    assert format_element(element(r2, 3, -2)) == "3-2sqrt2"
    assert format_element(element(r2, -4, 0)) == "-4"
    r5 = ring_of_integers(5)
    assert format_element(element(r5, 0, 1)) == "(1+sqrt5)/2"
    assert format_element(element(r5, 1, 2)) == "2+sqrt5"
    rm = ring_of_integers(-1)
    assert format_element(element(rm, 2, 3)) == "2+3sqrt(-1)"
