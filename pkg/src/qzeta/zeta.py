"""q-analogues of L(s, c, r) at s = -n as rational functions of (q, z).

The variable z lives in the Z slot of :class:`~qzeta.fraction.FactoredFraction`.
"""
from .errors import NotDivisible
from .fraction import FactoredFraction, equal, ff_subst_Z_to_zr
from .moments import specialized_moment
from .poly import LaurentPoly
from .qseries import q_integer

__all__ = [
    "delta_z",
    "canonical_residue",
    "L_value",
    "series_check",
    "denominator_numerator",
    "denominator_check",
    "verify_connexion_AB",
    "verify_connexion_AC",
]

_INV_Q_MINUS_ONE = FactoredFraction(LaurentPoly.one(), [(1, 0, 1)], -1)


def delta_z(f):
    """(f(qz) - f(z)) / (q - 1); unreduced, so (1 - q) factors pile up in the denominator."""
    f = FactoredFraction.lift(f)
    return (f.subst_qZ() - f) * _INV_Q_MINUS_ONE


def canonical_residue(c, r):
    """Representative of c mod r in 1..r."""
    return (c - 1) % r + 1


def L_value(n, c, r, canonical=True):
    """L_q(-n, c, r)(z): n applications of delta_z to z^c / (1 - z^r)."""
    if canonical:
        c = canonical_residue(c, r)
    f = FactoredFraction(LaurentPoly.Z(c), [(0, r, 1)])
    for _ in range(n):
        f = delta_z(f)
    return f


def series_check(n, c, r, order, canonical=True):
    """z^m coefficient is [m]_q^n when m = c mod r (m >= 1) and 0 otherwise, for m <= order."""
    series = L_value(n, c, r, canonical).expand_in_Z(order)
    for m in range(order + 1):
        expected = q_integer(m) ** n if m >= 1 and (m - c) % r == 0 else LaurentPoly.zero()
        if not equal(series[m], expected):
            return False
    return True


def denominator_numerator(n, c, r):
    """L_q(-n, c, r)(z) * (z^r; q^r)_{n+1} as a polynomial; raises NotDivisible otherwise."""
    f = L_value(n, c, r)
    p = f.full_numerator()
    for k in range(n + 1):
        p = p.mul_binomial(r * k, r)
    for a, b, m in f.den:
        p = p.div_binomial(a, b, m)
    return p


def denominator_check(n, c, r):
    """Certify that (z^r; q^r)_{n+1} clears every denominator of L_q(-n, c, r)."""
    try:
        denominator_numerator(n, c, r)
    except NotDivisible:
        return False
    return True


def verify_connexion_AB(n, c, r):
    """L_q(-n, c, r) == L_q(0, c, r) * mu_n(Z = z^r)."""
    mu = ff_subst_Z_to_zr(specialized_moment(n, r, canonical_residue(c, r)), r)
    return equal(L_value(n, c, r), L_value(0, c, r) * mu)


def verify_connexion_AC(n, r, poly=None, workers=1, budget=None):
    """L_q(-n, 1, r) == z G_{r,n}(z^r, q) / (z^r; q^r)_{n+1}."""
    from .wreath import gen_poly

    if poly is None:
        poly = gen_poly(r, n, workers=workers, budget=budget)
    g = ff_subst_Z_to_zr(FactoredFraction(poly), r)
    rhs = g * FactoredFraction(LaurentPoly.Z(), [(r * k, r, 1) for k in range(n + 1)])
    return equal(L_value(n, 1, r), rhs)
