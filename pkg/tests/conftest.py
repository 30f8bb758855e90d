from fractions import Fraction

from hypothesis import settings, strategies as st

from qzeta.fraction import FactoredFraction
from qzeta.poly import LaurentPoly

settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")

# rational evaluation points away from every pole 1 - q^a Z^b = 0
POINTS = [(Fraction(2, 7), Fraction(3, 11)), (Fraction(-5, 3), Fraction(1, 13)), (Fraction(7, 2), Fraction(-2, 9))]

coeffs = st.integers(-5, 5).filter(bool) | st.fractions(-3, 3, max_denominator=4).filter(bool)


@st.composite
def laurent_polys(draw, max_terms=5, qlo=-3, qhi=4, zmax=3):
    n = draw(st.integers(0, max_terms))
    terms = {}
    for _ in range(n):
        key = (draw(st.integers(qlo, qhi)), draw(st.integers(0, zmax)))
        terms[key] = draw(coeffs)
    return LaurentPoly(terms)


binfactors = st.tuples(st.integers(-2, 3), st.integers(0, 2), st.integers(1, 2)).filter(lambda f: f[:2] != (0, 0))


@st.composite
def fractions_(draw, nonzero=False):
    num = draw(laurent_polys(max_terms=4))
    if nonzero and num.is_zero():
        num = LaurentPoly.one()
    den = draw(st.lists(binfactors, max_size=3))
    scalar = draw(coeffs)
    mono = (draw(st.integers(-2, 2)), draw(st.integers(0, 2)))
    return FactoredFraction(num, den, scalar, mono)


def value(x, q, Z):
    """Exact value of a polynomial or fraction at a rational point."""
    if isinstance(x, (int, Fraction)):
        return Fraction(x)
    return x.evaluate(q, Z)


def agree(x, y):
    return all(value(x, q, Z) == value(y, q, Z) for q, Z in POINTS)
