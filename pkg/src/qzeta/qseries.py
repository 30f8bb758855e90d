"""q-integers, q-Pochhammer symbols and the terminating basic hypergeometric sums.

Hypergeometric parameters are monomials ``c * q^e_q * Z^e_Z`` (:class:`QMonomial`).
"""
from dataclasses import dataclass
from fractions import Fraction

from .errors import DegenerateParameters
from .fraction import FactoredFraction, ff_equal
from .poly import LaurentPoly

__all__ = [
    "QMonomial",
    "q_integer",
    "q_pochhammer",
    "poch_poly",
    "poch_reciprocal",
    "q_binomial_theorem_check",
    "q_chu_vandermonde",
    "little_jacobi_explicit",
]


@dataclass(frozen=True)
class QMonomial:
    """The value ``coeff * q^e_q * Z^e_Z`` of a hypergeometric parameter."""

    coeff: Fraction = Fraction(1)
    e_q: int = 0
    e_Z: int = 0

    def __post_init__(self):
        object.__setattr__(self, "coeff", Fraction(self.coeff))
        if self.e_Z < 0:
            raise ValueError("Z-exponent must be non-negative")

    @classmethod
    def q(cls, e=1):
        return cls(1, e, 0)

    @classmethod
    def zero(cls):
        return cls(0, 0, 0)

    def __mul__(self, other):
        if isinstance(other, QMonomial):
            return QMonomial(self.coeff * other.coeff, self.e_q + other.e_q, self.e_Z + other.e_Z)
        return QMonomial(self.coeff * other, self.e_q, self.e_Z)

    __rmul__ = __mul__

    def times_q(self, k):
        return QMonomial(self.coeff, self.e_q + k, self.e_Z)

    def is_zero(self):
        return not self.coeff

    def is_one(self):
        return self.coeff == 1 and not self.e_q and not self.e_Z

    def to_poly(self):
        return LaurentPoly.monomial(self.coeff, self.e_q, self.e_Z)


def _mono(x):
    if isinstance(x, QMonomial):
        return x
    if isinstance(x, (int, Fraction)):
        return QMonomial(x, 0, 0)
    raise TypeError(f"expected a QMonomial, got {type(x).__name__}")


def q_integer(m, step=1):
    """[m] in base q^step: 1 + q^step + ... + q^(step*(m-1))."""
    if m < 0:
        raise ValueError("q_integer needs m >= 0")
    return LaurentPoly._raw({(step * i, 0): 1 for i in range(m)})


def poch_poly(a, qstep, n):
    """(a; q^qstep)_n expanded as a Laurent polynomial."""
    a = _mono(a)
    out = LaurentPoly.one()
    if a.is_zero():
        return out
    for k in range(n):
        f = a.times_q(qstep * k)
        if f.coeff == 1:
            if not f.e_q and not f.e_Z:
                return LaurentPoly.zero()
            out = out.mul_binomial(f.e_q, f.e_Z)
        else:
            out = out * (LaurentPoly.one() - f.to_poly())
    return out


def q_pochhammer(a, qstep, n):
    """(a; q^qstep)_n as a FactoredFraction with the product in the numerator."""
    return FactoredFraction(poch_poly(a, qstep, n))


def poch_reciprocal(a, qstep, n):
    """1 / (a; q^qstep)_n with every factor kept in the denominator.

    A factor 1 + x (coefficient -1) is stored as (1 - x) / (1 - x^2).
    """
    a = _mono(a)
    if a.is_zero() or n == 0:
        return FactoredFraction.one()
    num = LaurentPoly.one()
    den = []
    for k in range(n):
        f = a.times_q(qstep * k)
        if f.coeff == 1:
            if not f.e_q and not f.e_Z:
                raise DegenerateParameters(f"factor 1 - q^0 in (a; q^{qstep})_{n}")
            den.append((f.e_q, f.e_Z, 1))
        elif f.coeff == -1:
            num = num.mul_binomial(f.e_q, f.e_Z)
            den.append((2 * f.e_q, 2 * f.e_Z, 1))
        else:
            raise ValueError("denominator parameters must have coefficient +1 or -1")
    return FactoredFraction(num, den)


def _truncated_geometric_product(exps, order):
    """prod_i 1/(1 - q^e_i) as a power series in q modulo q^order (e_i > 0)."""
    coeffs = [0] * order
    if order:
        coeffs[0] = 1
    for e in exps:
        for i in range(e, order):
            coeffs[i] += coeffs[i - e]
    return LaurentPoly.from_q_coeffs(coeffs)


def q_binomial_theorem_check(a, order, qorder=None):
    """Check sum_k (a;q)_k/(q;q)_k Z^k = (aZ;q)_inf/(Z;q)_inf through Z^order.

    Both sides are compared as power series in q modulo q^qorder: the infinite
    products are cut after ``qorder`` factors, since every later factor only
    touches q-degrees >= qorder. A second product with one more factor must agree
    with the first modulo q^qorder (truncation-stability guard).
    """
    a = _mono(a)
    if a.e_Z or a.e_q < 0:
        raise ValueError("the parameter must be c * q^e with e >= 0")
    if qorder is None:
        qorder = order + 1
    lhs = []
    for k in range(order + 1):
        num = poch_poly(a, 1, k)
        geo = _truncated_geometric_product(range(1, k + 1), qorder)
        lhs.append((num * geo).truncate_q(qorder))

    def rhs(nfactors):
        num = LaurentPoly.one()
        for i in range(nfactors):
            num = num * (LaurentPoly.one() - a.times_q(i).to_poly() * LaurentPoly.Z())
        frac = FactoredFraction(num, [(i, 1, 1) for i in range(nfactors)])
        return [c.full_numerator().truncate_q(qorder) for c in frac.expand_in_Z(order)]

    first, second = rhs(qorder), rhs(qorder + 1)
    if first != second:
        raise AssertionError("truncated product is not stable modulo q^qorder")
    return lhs == first


def q_chu_vandermonde(n, b, c):
    """Exact check of the terminating 2phi1 sum at argument q."""
    b, c = _mono(b), _mono(c)
    recip_c = poch_reciprocal(c, 1, n)  # raises DegenerateParameters on a vanishing factor
    lhs = FactoredFraction.zero()
    minus_n = QMonomial.q(-n)
    for k in range(n + 1):
        num = poch_poly(minus_n, 1, k) * poch_poly(b, 1, k)
        if num.is_zero():
            continue
        term = FactoredFraction(num.shift(k), [(i, 0, 1) for i in range(1, k + 1)]) * poch_reciprocal(c, 1, k)
        lhs = lhs + term
    # (c/b; q)_n b^n = prod_j (b - c q^j) stays polynomial even when c/b is not
    rhs_num = LaurentPoly.one()
    for j in range(n):
        rhs_num = rhs_num * (b.to_poly() - c.times_q(j).to_poly())
    rhs = FactoredFraction(rhs_num) * recip_c
    return ff_equal(lhs, rhs)


def little_jacobi_explicit(n, a, b, qstep=1):
    """Coefficients of x^0..x^n of p_n(x; a, b | q^qstep) from the terminating 2phi1."""
    a, b = _mono(a), _mono(b)
    s = qstep
    ab_shift = (a * b).times_q(s * (n + 1))
    aq = a.times_q(s)
    coeffs = []
    for k in range(n + 1):
        num = poch_poly(QMonomial.q(-s * n), s, k) * poch_poly(ab_shift, s, k)
        if num.is_zero():
            coeffs.append(FactoredFraction.zero())
            continue
        den = poch_reciprocal(aq, s, k) * FactoredFraction(LaurentPoly.one(), [(s * i, 0, 1) for i in range(1, k + 1)])
        coeffs.append(FactoredFraction(num.shift(s * k)) * den)
    return coeffs
