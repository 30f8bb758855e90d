from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from qzeta.errors import DegenerateParameters
from qzeta.fraction import FactoredFraction as FF, ff_equal
from qzeta.poly import LaurentPoly
from qzeta.qseries import (
    QMonomial,
    little_jacobi_explicit,
    poch_poly,
    poch_reciprocal,
    q_binomial_theorem_check,
    q_chu_vandermonde,
    q_integer,
    q_pochhammer,
)

q, Z = LaurentPoly.q(), LaurentPoly.Z()
one = LaurentPoly.one()
M = QMonomial


def test_q_integer():
    assert q_integer(3) == one + q + q**2
    assert q_integer(0).is_zero()
    assert q_integer(2, 3) == one + q**3


@pytest.mark.parametrize("m", range(21))
def test_q_integer_times_one_minus_q(m):
    assert q_integer(m) * (one - q) == one - q**m


def test_pochhammer_examples():
    assert q_pochhammer(M(1, 0, 1), 2, 1).to_poly() == one - Z
    assert q_pochhammer(M(1, 5, 1), 1, 0).to_poly() == one
    r = 3
    a = M(1, -r, 1).times_q(r)
    assert q_pochhammer(a, r, 2).to_poly() == (one - Z) * (one - Z * q**r)


@given(st.integers(-3, 3), st.integers(-3, 3), st.integers(0, 2), st.integers(1, 3), st.integers(0, 5))
def test_pochhammer_step(c, e, ez, s, n):
    if c == 0:
        return
    a = M(c, e, ez)
    lhs = q_pochhammer(a, s, n + 1).to_poly()
    rhs = q_pochhammer(a, s, n).to_poly() * (one - a.times_q(s * n).to_poly())
    assert lhs == rhs


def test_reciprocal_of_minus_sign_factor():
    # 1/(1 + q) stored as (1 - q)/(1 - q^2)
    r = poch_reciprocal(M(-1, 1, 0), 1, 1)
    assert r.den == ((2, 0, 1),)
    assert ff_equal(r * FF(one + q), FF.one())
    with pytest.raises(DegenerateParameters):
        poch_reciprocal(M(1, -1, 0), 1, 2)


@pytest.mark.parametrize("a", [M.zero(), M.q(1), M.q(2), M.q(3)])
def test_q_binomial_theorem(a):
    assert q_binomial_theorem_check(a, 10)


def test_q_binomial_examples():
    assert q_binomial_theorem_check(M.zero(), 5)
    assert q_binomial_theorem_check(M.q(1), 8)
    assert q_binomial_theorem_check(M.q(3), 8)


def chu_by_evaluation(n, b, c, qv, Zv):
    """Both sides of the terminating 2phi1 sum at a rational point, in plain Fractions."""

    def val(m):
        return Fraction(m.coeff) * qv**m.e_q * Zv**m.e_Z

    def poch(x, k):
        out = Fraction(1)
        for j in range(k):
            out *= 1 - x * qv**j
        return out

    bv, cv = val(b), val(c)
    lhs = sum(poch(qv**-n, k) * poch(bv, k) / (poch(cv, k) * poch(qv, k)) * qv**k for k in range(n + 1))
    rhs = poch(cv / bv, n) / poch(cv, n) * bv**n
    return lhs, rhs


PARAMS = [M.q(i) for i in range(1, 5)] + [M(1, i, 1) for i in range(4)]


@pytest.mark.parametrize("n", range(9))
def test_q_chu_vandermonde_grid(n):
    for b in PARAMS:
        for c in PARAMS:
            assert q_chu_vandermonde(n, b, c), (n, b, c)


def test_q_chu_examples_against_evaluation():
    for n, b, c in [(0, M.q(1), M.q(2)), (3, M.q(1), M.q(5)), (5, M.q(2), M(1, 3, 1))]:
        assert q_chu_vandermonde(n, b, c)
        lhs, rhs = chu_by_evaluation(n, b, c, Fraction(3, 7), Fraction(5, 11))
        assert lhs == rhs


def test_q_chu_degenerate():
    with pytest.raises(DegenerateParameters):
        q_chu_vandermonde(3, M.q(1), M.q(-1))


def test_little_jacobi_low_degree():
    a, b = M(1, 2, 0), M(1, 1, 1)
    assert [c.to_poly() for c in little_jacobi_explicit(0, a, b)] == [one]
    p1 = little_jacobi_explicit(1, a, b)
    assert p1[0] == FF.one()
    # coefficient of x: (1 - q^-1)(1 - ab q^2) q / ((1 - aq)(1 - q))
    ab2 = (a * b).times_q(2).to_poly()
    expected = FF((one - LaurentPoly.q(-1)) * (one - ab2) * q, [(3, 0, 1), (1, 0, 1)])
    assert ff_equal(p1[1], expected)


def test_little_jacobi_degree():
    a, b = M(1, 2, 0), M(1, 1, 1)
    for n in range(5):
        coeffs = little_jacobi_explicit(n, a, b, qstep=2)
        assert len(coeffs) == n + 1 and not coeffs[n].is_zero()


def test_poch_poly_hits_zero():
    assert poch_poly(M.q(-2), 1, 3).is_zero()
    assert not poch_poly(M.q(-2), 1, 2).is_zero()
