from fractions import Fraction

import pytest
from hypothesis import given

from conftest import laurent_polys
from qzeta.errors import NotDivisible
from qzeta.poly import LaurentPoly, _kronecker_mul, _long_div, det_bareiss, poly_add, poly_divexact, poly_mul

q, Z = LaurentPoly.q(), LaurentPoly.Z()
one = LaurentPoly.one()


def P(terms):
    return LaurentPoly(terms)


def test_add_examples():
    assert poly_add(one + Z * q, P({(0, 0): -1})) == Z * q
    p = one + q + q**2
    assert poly_add(p, LaurentPoly.zero()) == p
    assert poly_add(p, q**2) == P({(0, 0): 1, (1, 0): 1, (2, 0): 2})


def test_mul_examples():
    assert poly_mul(one - q, one + q) == one - q**2
    assert poly_mul(LaurentPoly.q(-1), q) == one
    assert poly_mul(one + Z * q, one - Z) == one + Z * q - Z - Z**2 * q


def test_zero_coefficients_are_dropped():
    p = P({(1, 0): 2, (2, 1): 0})
    assert p.terms == {(1, 0): 2}
    assert (p - p).is_zero()
    assert P({(0, 0): Fraction(4, 2)}).terms[(0, 0)] == 2


def test_canonical_order_is_Z_then_q():
    p = Z + q**3 + one + Z * LaurentPoly.q(-1)
    assert [k for k, _ in p.items()] == [(0, 0), (3, 0), (-1, 1), (0, 1)]
    assert str(p) == "1 + q^3 + Z*q^(-1) + Z"


def test_evaluate():
    p = one + Z * q
    assert p.evaluate(2, 3) == 7
    assert LaurentPoly.q(-2).evaluate(Fraction(1, 2)) == 4


@given(laurent_polys(), laurent_polys(), laurent_polys())
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == LaurentPoly.zero()


@given(laurent_polys(max_terms=12, qlo=-20, qhi=40, zmax=6), laurent_polys(max_terms=12, qlo=-5, qhi=30, zmax=4))
def test_kronecker_product_matches_schoolbook(a, b):
    if a.is_zero() or b.is_zero():
        return
    school = {}
    for (e1, z1), c1 in a.items():
        for (e2, z2), c2 in b.items():
            k = (e1 + e2, z1 + z2)
            school[k] = school.get(k, 0) + c1 * c2
    assert _kronecker_mul(a, b) == P(school)


@given(laurent_polys(max_terms=6), laurent_polys(max_terms=4))
def test_divexact_inverts_mul(a, b):
    if b.is_zero():
        return
    assert poly_divexact(a * b, b) == a


@given(laurent_polys(max_terms=6), laurent_polys(max_terms=4).filter(lambda p: not p.is_zero()))
def test_long_division_agrees(a, b):
    assert _long_div(a * b, b) == a


def test_divexact_rejects_remainder():
    with pytest.raises(NotDivisible):
        poly_divexact(one + q + Z, one - Z)
    with pytest.raises(NotDivisible):
        (one + q).div_binomial(1, 0)


@pytest.mark.parametrize("a,b,m", [(1, 0, 1), (2, 1, 2), (0, 1, 3), (-3, 2, 1), (-1, 0, 2)])
def test_binomial_mul_div_roundtrip(a, b, m):
    p = one + 3 * Z * q - LaurentPoly.q(-2) * Z**2
    factor = (one - LaurentPoly.monomial(1, a, b)) ** m
    assert p.mul_binomial(a, b, m) == p * factor
    assert p.mul_binomial(a, b, m).div_binomial(a, b, m) == p


def test_large_product_uses_kronecker_and_stays_exact():
    a = sum((LaurentPoly.monomial(i * i - 7 * j, i, j) for i in range(30) for j in range(4)), LaurentPoly.zero())
    b = sum((LaurentPoly.monomial(3 - i, 2 * i, j) for i in range(40) for j in range(3)), LaurentPoly.zero())
    prod = a * b
    assert prod.evaluate(Fraction(1, 3), Fraction(2, 5)) == a.evaluate(Fraction(1, 3), Fraction(2, 5)) * b.evaluate(
        Fraction(1, 3), Fraction(2, 5)
    )
    assert poly_divexact(prod, b) == a


def test_det_bareiss():
    assert det_bareiss([]) == one
    assert det_bareiss([[q]]) == q
    m = [[one, Z], [q, one]]
    assert det_bareiss(m) == one - Z * q
    # Vandermonde in q, Z, 1 + q
    xs = [q, Z, one + q]
    V = [[x**k for k in range(3)] for x in xs]
    assert det_bareiss(V) == (Z - q) * (one + q - q) * (one + q - Z)


def test_det_bareiss_pivot_swap():
    m = [[LaurentPoly.zero(), one], [one, q]]
    assert det_bareiss(m) == -one


def test_substitutions():
    p = one + Z * q
    assert p.subst_Z_power(3) == one + Z**3 * q
    assert p.subst_qZ() == one + Z * q**2
    assert p.subst_q_power(2) == one + Z * q**2
    assert p.truncate_Z(0) == one
