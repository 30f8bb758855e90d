"""J-fractions for the moment generating function sum_n mu_n t^n."""
from .errors import NonInvertibleLeadingTerm, SingularHankel
from .fraction import FactoredFraction, RationalFunction, equal
from .moments import JacobiData, hankel_numerator_dets
from .poly import LaurentPoly
from .qseries import q_integer
from .series import TruncatedSeries

__all__ = [
    "closed_form_lambda",
    "closed_form_b",
    "closed_form_coeffs",
    "jfraction_expand",
    "moments_to_jfraction",
    "jacobi_equal",
]


def _binom(a, b):
    """1 - q^a Z^b as a polynomial."""
    return LaurentPoly.one().mul_binomial(a, b)


def closed_form_lambda(n, r, c):
    """lambda_n for n >= 1; lambda_0 = 1."""
    if n == 0:
        return FactoredFraction.one()
    qint = q_integer(r * n)
    num = (qint * qint).mul_binomial(r * (n - 1), 1, 2)
    den = [(2 * r * n, 1, 1), (r * (2 * n - 1), 1, 2), (r * (2 * n - 2), 1, 1)]
    return FactoredFraction(num, den, 1, (2 * r * (n - 1) + 2 * c, 1))


def closed_form_b(n, r, c):
    """b_n, with the two summands combined over
    (1 - Z q^(r(2n-1))) (1 - Z q^(2rn)) (1 - Z q^(r(2n+1))) before subtracting q^-c."""
    first = _binom(r * n, 1) ** 2 * _binom(r * (2 * n - 1), 1)
    inner = first.shift(r * n)
    if n:  # (1 - q^0)^2 kills the second summand at n = 0
        second = _binom(r * n, 0) ** 2 * _binom(r * (2 * n + 1), 1)
        inner = inner + second.shift(r * (n - 1), 1)
    common = [(r * (2 * n - 1), 1, 1), (2 * r * n, 1, 1), (r * (2 * n + 1), 1, 1)]
    prod = LaurentPoly.one()
    for a, b, m in common:
        prod = prod.mul_binomial(a, b, m)
    inner = inner - prod.shift(-c)
    # q^c / (q - 1) = -q^c / (1 - q)
    return FactoredFraction(inner, common + [(1, 0, 1)], -1, (c, 0))


def closed_form_coeffs(r, c, upto):
    """b_0..b_upto and lambda_0..lambda_upto of the moment J-fraction."""
    return JacobiData(
        [closed_form_b(n, r, c) for n in range(upto + 1)],
        [closed_form_lambda(n, r, c) for n in range(upto + 1)],
        "closed-form",
    )


class _Coefficients:
    def __init__(self, b, lam):
        self.b, self.lam = list(b), list(lam)
        self.depth = min(len(self.b), len(self.lam)) - 1


def _expand_levels(J, order, levels):
    """Series of lam_0 / (1 - b_0 t - lam_1 t^2 / (1 - ... - b_levels t)) through t^order."""
    one = TruncatedSeries.constant("t", order, FactoredFraction.one())
    t = one.shift(1)
    tail = None
    for k in range(levels, -1, -1):
        denom = one - t * FactoredFraction.lift(J.b[k])
        if tail is not None:
            denom = denom - tail.shift(2) * FactoredFraction.lift(J.lam[k + 1])
        if not denom[0] == FactoredFraction.one():
            raise NonInvertibleLeadingTerm("continued fraction level has constant term != 1")
        tail = denom.inverse()
    return tail * FactoredFraction.lift(J.lam[0])


def jfraction_expand(J, order, guard=True):
    """Taylor coefficients s_0..s_order of the J-fraction, computed bottom-up.

    ``J`` is a :class:`JacobiData` or a plain ``(b, lam)`` pair of sequences.
    Levels 0..ceil(order/2) determine s_0..s_order. With ``guard`` and one more
    level available, the expansion is recomputed one level deeper and must agree.
    """
    if isinstance(J, tuple):
        # a bare (b, lam) pair skips the non-vanishing check on lambda
        J = _Coefficients(*J)
    levels = -(-order // 2)
    if J.depth < levels:
        raise ValueError(f"need recurrence coefficients up to index {levels}")
    series = _expand_levels(J, order, levels)
    if guard and J.depth > levels:
        deeper = _expand_levels(J, order, levels + 1)
        if not all(equal(a, b) for a, b in zip(series, deeper)):
            raise AssertionError("J-fraction truncation changed the low-order coefficients")
    return series


def moments_to_jfraction(M, upto):
    """Recover b_0..b_upto, lambda_0..lambda_upto from moments mu_0..mu_{2 upto + 1}.

    With H_k = det(mu_{i+j})_{k x k} and H~_k the same matrix with the last column
    shifted by one, the monic orthogonal polynomial p_k has norm
    phi(p_k^2) = H_{k+1} / H_k and x^(k-1)-coefficient -H~_k / H_k, hence

        lambda_k = H_{k+1} H_{k-1} / H_k^2,   b_k = H~_{k+1}/H_{k+1} - H~_k/H_k.

    All determinants share the denominator D^k, which cancels in these ratios, so
    the coefficients come out as quotients of polynomial determinants.
    """
    mu = M.mu if hasattr(M, "mu") else list(M)
    if len(mu) < 2 * upto + 2:
        raise ValueError(f"need moments mu_0..mu_{2 * upto + 1}")
    sizes = list(range(upto + 2))
    H, _ = hankel_numerator_dets(mu, sizes, moments=2 * upto + 1)
    Ht, _ = hankel_numerator_dets(mu, sizes[1:], shifted=True, moments=2 * upto + 1)
    Ht[0] = LaurentPoly.zero()
    for k in range(upto + 1):
        if H[k + 1].is_zero():
            raise SingularHankel(k)
    lam = [FactoredFraction.lift(mu[0])]
    b = []
    for k in range(upto + 1):
        if k:
            lam.append(RationalFunction(FactoredFraction(H[k + 1] * H[k - 1]), FactoredFraction(H[k] * H[k])))
        cur = RationalFunction(FactoredFraction(Ht[k + 1]), FactoredFraction(H[k + 1]))
        prev = RationalFunction(FactoredFraction(Ht[k]), FactoredFraction(H[k]))
        b.append(cur - prev)
    return JacobiData(b, lam, "from-moments")


def jacobi_equal(J1, J2, upto):
    """Coefficient-wise exact equality of two recurrences through index upto."""
    return all(equal(J1.b[k], J2.b[k]) for k in range(upto + 1)) and all(
        equal(J1.lam[k], J2.lam[k]) for k in range(upto + 1)
    )
