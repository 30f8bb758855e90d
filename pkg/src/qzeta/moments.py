"""Moments of (shifted) little q-Jacobi polynomials.

The specialization used throughout is a = Z q^-r, b = 1 in base q^r, followed
by the affine change x -> q^-c (1 + (q - 1) x). Its moments are

    mu_n = (1 - Z) sum_{k >= 0} [rk + c]_q^n Z^k.
"""
from dataclasses import dataclass, field
from math import comb

from .errors import DegenerateParameters, NotDivisible, ZeroAlpha
from .fraction import FactoredFraction, equal
from .poly import LaurentPoly, det_bareiss
from .qseries import QMonomial, poch_reciprocal

__all__ = [
    "JacobiData",
    "MomentSequence",
    "monic_coeffs",
    "classical_moment",
    "classical_moments",
    "shifted_moment",
    "specialized_moment",
    "specialized_moments",
    "shift_parameters",
    "verify_moment_wreath",
    "apply_functional",
    "monic_polynomials",
    "orthogonality_check",
    "hankel_det",
    "hankel_numerator_dets",
    "hankel_product_check",
]


@dataclass
class JacobiData:
    """Recurrence p_{n+1} = (x - b_n) p_n - lambda_n p_{n-1}; ``lam[0]`` is mu_0."""

    b: list
    lam: list
    provenance: str = "closed-form"

    def __post_init__(self):
        for k, v in enumerate(self.lam):
            if v.is_zero() if hasattr(v, "is_zero") else not v:
                raise ValueError(f"lambda_{k} vanishes")

    @property
    def depth(self):
        return min(len(self.b), len(self.lam)) - 1

    def to_json(self):
        from .render import to_json

        return {"provenance": self.provenance, "b": to_json(self.b), "lambda": to_json(self.lam)}


@dataclass
class MomentSequence:
    mu: list
    context: dict = field(default_factory=dict)

    def __getitem__(self, n):
        return self.mu[n]

    def __len__(self):
        return len(self.mu)


def _binomial_factor(x):
    """FactoredFraction of 1 - x for a QMonomial x."""
    return FactoredFraction(LaurentPoly.one() - x.to_poly())


def _recip_factor(x):
    """FactoredFraction of 1 / (1 - x)."""
    return poch_reciprocal(x, 1, 1)


def _vanishes(x):
    return x.coeff == 1 and not x.e_q and not x.e_Z


def monic_coeffs(n, a, b, qstep=1):
    """(A_n, C_n) of the monic little q-Jacobi recurrence in base q^qstep."""
    s = qstep
    ab = a * b
    A_num = [a.times_q(s * (n + 1)), ab.times_q(s * (n + 1))]
    A_den = [ab.times_q(s * (2 * n + 1)), ab.times_q(s * (2 * n + 2))]
    if any(_vanishes(x) for x in A_den):
        raise DegenerateParameters(f"A_{n} has a vanishing denominator")
    A = FactoredFraction(LaurentPoly.q(s * n))
    for x in A_den:
        A = A * _recip_factor(x)
    for x in A_num:
        A = A * _binomial_factor(x)

    C_num = [QMonomial.q(s * n), b.times_q(s * n)]
    if any(_vanishes(x) for x in C_num):
        return A, FactoredFraction.zero()
    C_den = [ab.times_q(2 * s * n), ab.times_q(s * (2 * n + 1))]
    if any(_vanishes(x) for x in C_den):
        raise DegenerateParameters(f"C_{n} has a vanishing denominator")
    C = FactoredFraction(a.times_q(s * n).to_poly())
    for x in C_den:
        C = C * _recip_factor(x)
    for x in C_num:
        C = C * _binomial_factor(x)
    return A, C


def classical_moment(n, a, b, qstep=1):
    """(a q; q)_n / (a b q^2; q)_n in base q^qstep, built factor by factor."""
    s = qstep
    mu = FactoredFraction.one()
    for k in range(n):
        den = (a * b).times_q(s * (k + 2))
        if _vanishes(den):
            raise DegenerateParameters("(abq^2; q)_n vanishes")
        mu = mu * _recip_factor(den)
        mu = mu * _binomial_factor(a.times_q(s * (k + 1)))
    return mu


def classical_moments(count, a, b, qstep=1):
    return MomentSequence(
        [classical_moment(n, a, b, qstep) for n in range(count)],
        {"a": a, "b": b, "qstep": qstep},
    )


def shifted_moment(n, base, alpha, beta):
    """nu_n = alpha^-n sum_j C(n, j) (-beta)^(n-j) mu_j for the variable (x - beta)/alpha."""
    alpha = FactoredFraction.lift(alpha)
    beta = FactoredFraction.lift(beta)
    if alpha.is_zero():
        raise ZeroAlpha("alpha must be non-zero")
    mu = base.mu if isinstance(base, MomentSequence) else base
    total = FactoredFraction.zero()
    neg_beta = -beta
    for j in range(n + 1):
        term = mu[j] * comb(n, j) * neg_beta ** (n - j)
        total = total + term
    return total * alpha.inverse() ** n


def shift_parameters(c):
    """(alpha, beta) = ((q - 1)/q^c, q^-c) mapping x to q^-c (1 + (q - 1) x)."""
    alpha = FactoredFraction(LaurentPoly({(1, 0): 1, (0, 0): -1}), mono=(-c, 0))
    beta = FactoredFraction(LaurentPoly.one(), mono=(-c, 0))
    return alpha, beta


def specialized_moment(n, r, c=1, reduce=True):
    """mu_n = (1 - Z) sum_k [rk + c]^n Z^k as an exact fraction.

    Swapping the sums and summing the geometric series in k gives the finite form
    (1 - Z)(q - 1)^-n sum_j C(n, j) (-1)^(n-j) q^(cj) / (1 - Z q^(rj)); the j = 0
    term is (-1)^n since its factor 1/(1 - Z) cancels the prefactor. The result
    has no pole at q = 1, so with ``reduce`` the (1 - q)^n is divided out exactly.
    """
    if n == 0:
        return FactoredFraction.one()
    den = LaurentPoly.one()
    for j in range(1, n + 1):
        den = den.mul_binomial(r * j, 1)
    num = den.scale((-1) ** n)
    one_minus_Z = LaurentPoly({(0, 0): 1, (0, 1): -1})
    for j in range(1, n + 1):
        cofactor = den.div_binomial(r * j, 1)
        num = num + (cofactor * one_minus_Z).shift(c * j).scale(comb(n, j) * (-1) ** (n - j))
    factors = [(r * j, 1, 1) for j in range(1, n + 1)]
    # (q - 1)^-n = (-1)^n (1 - q)^-n
    sign = (-1) ** n
    if reduce:
        try:
            return FactoredFraction(num.div_binomial(1, 0, n), factors, sign)
        except NotDivisible:
            pass
    return FactoredFraction(num, factors + [(1, 0, n)], sign)


def specialized_moments(count, r, c=1):
    return MomentSequence([specialized_moment(n, r, c) for n in range(count)], {"r": r, "c": c})


def verify_moment_wreath(n, r, poly=None, workers=1, budget=None):
    """specialized_moment(n, r, 1) == G_{r,n}(Z, q) / (Z q^r; q^r)_n."""
    from .wreath import gen_poly

    if poly is None:
        poly = gen_poly(r, n, workers=workers, budget=budget)
    rhs = FactoredFraction(poly, [(r * (k + 1), 1, 1) for k in range(n)])
    return equal(specialized_moment(n, r, 1), rhs)


# -- the moment functional ------------------------------------------------------

def apply_functional(coeffs, mu):
    """phi(sum_k a_k x^k) = sum_k a_k mu_k."""
    total = FactoredFraction.zero()
    for k, a in enumerate(coeffs):
        if not a.is_zero():
            total = total + a * mu[k]
    return total


def _poly_x_mul(p, b):
    """Coefficient list of (x - b) p(x)."""
    out = [FactoredFraction.zero()] + list(p)
    for k, a in enumerate(p):
        out[k] = out[k] - b * a
    return out


def monic_polynomials(J, count):
    """p_0..p_{count-1} from p_{n+1} = (x - b_n) p_n - lambda_n p_{n-1}."""
    polys = [[FactoredFraction.one()]]
    if count > 1:
        polys.append(_poly_x_mul(polys[0], J.b[0]))
    for n in range(1, count - 1):
        nxt = _poly_x_mul(polys[n], J.b[n])
        for k, a in enumerate(polys[n - 1]):
            nxt[k] = nxt[k] - J.lam[n] * a
        polys.append(nxt)
    return polys


def orthogonality_check(N, r, c, J=None, mu=None):
    """phi(p_i p_j) = 0 for i < j <= N and phi(p_i^2) = lambda_0 ... lambda_i != 0.

    phi is the linear extension of x^k -> specialized_moment(k, r, c); the p_n come
    from the closed-form recurrence coefficients.
    """
    if J is None:
        from .cfrac import closed_form_coeffs

        J = closed_form_coeffs(r, c, N)
    if mu is None:
        mu = specialized_moments(2 * N + 1, r, c).mu
    polys = monic_polynomials(J, N + 1)
    # phi(x^k p_j) for k <= N, then phi(p_i p_j) by bilinearity
    moments_of = [[apply_functional(p, mu[k:]) for k in range(N + 1)] for p in polys]
    norm = FactoredFraction.lift(J.lam[0])
    for j in range(N + 1):
        if j:
            norm = norm * J.lam[j]
        for i in range(j + 1):
            val = apply_functional(polys[i], moments_of[j])
            if i < j and not val.is_zero():
                return False
            if i == j and (val.is_zero() or not equal(val, norm)):
                return False
    return True


# -- Hankel determinants -----------------------------------------------------------

def _common_numerators(entries):
    """Rewrite fractions over their least common denominator: (numerators, factors)."""
    entries = [FactoredFraction.lift(e) for e in entries]
    den = {}
    for e in entries:
        for k, m in e.den_factors().items():
            den[k] = max(den.get(k, 0), m)
    nums = []
    for e in entries:
        p = e.full_numerator()
        own = e.den_factors()
        for k, m in den.items():
            if m - own.get(k, 0):
                p = p.mul_binomial(*k, m - own.get(k, 0))
        nums.append(p)
    return nums, [(a, b, m) for (a, b), m in den.items()]


def hankel_numerator_dets(mu, sizes, shifted=False, moments=None):
    """det of the polynomial Hankel matrices over a common denominator D.

    Returns ({m: det N_m}, D-factors) with det(mu_{i+j})_{m x m} = det N_m / D^m.
    With ``shifted`` the last column uses mu_{i+m} instead of mu_{i+m-1}.
    D is the lcm of the denominators of mu_0..mu_moments (default: just the
    moments the matrices touch); pass the same ``moments`` to share D across calls.
    """
    top = max(sizes)
    need = 2 * top - 2 + (1 if shifted else 0)
    if moments is None:
        moments = need
    nums, den = _common_numerators(mu[: max(moments, need) + 1])
    out = {}
    for m in sizes:
        if m == 0:
            out[m] = LaurentPoly.one()
            continue
        cols = list(range(m - 1)) + [m if shifted else m - 1]
        out[m] = det_bareiss([[nums[i + j] for j in cols] for i in range(m)])
    return out, den


def hankel_det(mu, m):
    """det(mu_{i+j})_{0 <= i, j < m} as a FactoredFraction."""
    if m == 0:
        return FactoredFraction.one()
    dets, den = hankel_numerator_dets(mu, [m])
    return FactoredFraction(dets[m], [(a, b, k * m) for a, b, k in den])


def hankel_product_check(m, r, c, J=None, mu=None):
    """det(mu_{i+j})_{m x m} == prod_{i=1}^{m-1} lambda_i^(m-i) with lambda_0 = mu_0 = 1."""
    if J is None:
        from .cfrac import closed_form_coeffs

        J = closed_form_coeffs(r, c, m)
    if mu is None:
        mu = specialized_moments(2 * m - 1, r, c).mu
    rhs = FactoredFraction.one()
    for i in range(1, m):
        rhs = rhs * J.lam[i] ** (m - i)
    return equal(hankel_det(mu, m), rhs)

