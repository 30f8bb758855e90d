from fractions import Fraction

import pytest
from hypothesis import given

from conftest import fractions_
from qzeta.errors import NotDivisible
from qzeta.fraction import FactoredFraction as FF, ff_equal
from qzeta.poly import LaurentPoly
from qzeta.qseries import q_integer
from qzeta.zeta import (
    L_value,
    canonical_residue,
    delta_z,
    denominator_check,
    denominator_numerator,
    series_check,
    verify_connexion_AB,
    verify_connexion_AC,
)

q, z = LaurentPoly.q(), LaurentPoly.Z()
one = LaurentPoly.one()


@pytest.mark.parametrize("m", range(21))
def test_eigen_action(m):
    assert ff_equal(delta_z(FF(z**m)), FF(q_integer(m) * z**m))


def test_delta_examples():
    assert delta_z(FF.lift(Fraction(7, 3))).is_zero()
    assert ff_equal(delta_z(FF(z, [(0, 1, 1)])), FF(z, [(0, 1, 1), (1, 1, 1)]))


@given(fractions_(), fractions_())
def test_delta_is_linear(f, g):
    assert ff_equal(delta_z(f + g), delta_z(f) + delta_z(g))


def test_L_value_examples():
    assert ff_equal(L_value(0, 1, 1), FF(z, [(0, 1, 1)]))
    assert ff_equal(L_value(1, 1, 1), FF(z, [(0, 1, 1), (1, 1, 1)]))
    assert ff_equal(L_value(0, 2, 3), FF(z**2, [(0, 3, 1)]))


def test_residue_canonicalization():
    assert [canonical_residue(c, 3) for c in (0, 1, 3, 4, -1)] == [3, 1, 3, 1, 2]
    assert ff_equal(L_value(2, 4, 3), L_value(2, 1, 3))
    # raw c = 4 drops the z^1 term
    raw = L_value(0, 4, 3, canonical=False).expand_in_Z(4)
    assert raw[1].is_zero() and raw[4].to_poly() == one


def test_series_examples():
    assert series_check(1, 1, 1, 10)
    assert series_check(0, 2, 3, 9)
    s = L_value(2, 1, 2).expand_in_Z(9)
    assert ff_equal(s[3], FF((one + q + q**2) ** 2))


@pytest.mark.parametrize("r", [1, 2, 3])
def test_series_grid(r):
    for n in range(6):
        for c in range(1, r + 1):
            assert series_check(n, c, r, 24)


@pytest.mark.parametrize("r", [1, 2, 3])
def test_denominator_grid(r):
    for n in range(7):
        for c in range(1, r + 1):
            assert denominator_check(n, c, r)


def test_denominator_examples():
    assert denominator_numerator(0, 2, 3) == z**2
    assert denominator_numerator(1, 1, 1) == z
    p = denominator_numerator(3, 1, 2)
    # the numerator times 1/(z^2; q^2)_4 must give back the L-value
    assert ff_equal(FF(p, [(2 * k, 2, 1) for k in range(4)]), L_value(3, 1, 2))


def test_denominator_check_rejects_a_smaller_denominator():
    # (z; q)_2 cannot clear L_q(-2, 1, 1), whose denominator is (z; q)_3
    f = L_value(2, 1, 1)
    p = f.full_numerator().mul_binomial(0, 1).mul_binomial(1, 1)
    with pytest.raises(NotDivisible):
        for a, b, m in f.den:
            p = p.div_binomial(a, b, m)


@pytest.mark.parametrize("r", [1, 2, 3])
def test_connexion_AB(r):
    for n in range(7):
        for c in range(1, r + 1):
            assert verify_connexion_AB(n, c, r)


@pytest.mark.parametrize("n,r", [(n, r) for r in (1, 2) for n in range(7)] + [(n, 3) for n in range(5)])
def test_connexion_AC(n, r):
    assert verify_connexion_AC(n, r)


def test_connexion_AC_examples():
    assert ff_equal(FF(z * (one + z * q), [(0, 1, 1), (1, 1, 1), (2, 1, 1)]), L_value(2, 1, 1))
    assert ff_equal(FF(z * (one + z**2 * q), [(0, 2, 1), (2, 2, 1)]), L_value(1, 1, 2))


def test_connexion_AC_detects_wrong_polynomial():
    assert not verify_connexion_AC(2, 2, poly=LaurentPoly.one() + z * q**2)
