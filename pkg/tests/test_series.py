from fractions import Fraction

import pytest

from qzeta.errors import NonInvertibleLeadingTerm, OrderMismatch
from qzeta.fraction import FactoredFraction as FF
from qzeta.series import TruncatedSeries


def ts(*coeffs, order=None):
    order = len(coeffs) - 1 if order is None else order
    return TruncatedSeries.from_coeffs("t", order, [Fraction(c) for c in coeffs])


def test_product_truncates():
    assert ts(1, 1, 0) * ts(1, -1, 0) == ts(1, 0, -1)


def test_geometric_inverse():
    assert ts(1, -1, 0, 0).inverse() == ts(1, 1, 1, 1)


def test_division_and_scalars():
    a = ts(2, 4, 6)
    assert a / 2 == ts(1, 2, 3)
    assert (a / ts(1, 1, 0)) * ts(1, 1, 0) == a


def test_shift_drops_overflow():
    assert ts(1, 2, 3).shift(1) == ts(0, 1, 2)
    assert ts(1, 2, 3).shift(3) == ts(0, 0, 0)


def test_order_mismatch():
    with pytest.raises(OrderMismatch):
        ts(1, 2) + ts(1, 2, 3)
    with pytest.raises(OrderMismatch):
        ts(1, 2) * TruncatedSeries.from_coeffs("z", 1, [1, 2])


def test_non_invertible():
    with pytest.raises(NonInvertibleLeadingTerm):
        ts(0, 1, 1).inverse()


def test_fraction_coefficients():
    c = FF.lift(Fraction(1, 3))
    s = TruncatedSeries.constant("t", 3, FF.one()) - TruncatedSeries.constant("t", 3, c).shift(1)
    inv = s.inverse()
    assert [x == FF.lift(Fraction(1, 3) ** k) for k, x in enumerate(inv)] == [True] * 4
