"""Rational functions whose denominators are products of (1 - q^a Z^b).

A :class:`FactoredFraction` is ``scalar * q^mono[0] Z^mono[1] * num / prod (1 - q^a Z^b)^m``.
Denominators are never reduced by a polynomial gcd: equality is decided by
cross-multiplication, and cancellation only happens on exact factor matches.
"""
from fractions import Fraction

from .errors import DegenerateParameters, NonExpandable, NotDivisible, NotRepresentable
from .poly import LaurentPoly, _norm, poly_divexact

__all__ = [
    "FactoredFraction",
    "RationalFunction",
    "ff_add",
    "ff_mul",
    "ff_equal",
    "ff_expand_in_Z",
    "ff_subst_Z_to_zr",
    "factor_binomials",
    "equal",
]


def _canonical_factor(a, b, mult, scalar, mono):
    """Return (a, b) with 1 - q^a Z^b lexicographically positive, fixing scalar/mono."""
    if b == 0 and a == 0:
        raise DegenerateParameters("denominator factor 1 - q^0 vanishes")
    if b == 0 and a < 0:
        # 1/(1 - q^a) = -q^-a / (1 - q^-a)
        return (-a, 0), scalar * (-1) ** mult, (mono[0] - a * mult, mono[1])
    return (a, b), scalar, mono


def _merge_den(factors):
    acc = {}
    for a, b, m in factors:
        if m:
            acc[(a, b)] = acc.get((a, b), 0) + m
    return tuple(sorted(((a, b, m) for (a, b), m in acc.items() if m), key=lambda f: (f[1], f[0])))


def _expand(poly, factors):
    for a, b, m in factors:
        poly = poly.mul_binomial(a, b, m)
    return poly


class FactoredFraction:
    """Immutable ``scalar * mono * num / den`` with a factored binomial denominator."""

    __slots__ = ("scalar", "mono", "num", "den")

    def __init__(self, num=None, den=(), scalar=1, mono=(0, 0)):
        if num is None:
            num = LaurentPoly.one()
        elif not isinstance(num, LaurentPoly):
            num = LaurentPoly.const(num)
        scalar = Fraction(scalar)
        if not scalar or num.is_zero():
            self._set_zero()
            return
        mono = (int(mono[0]), int(mono[1]))
        merged = []
        for a, b, m in den:
            if m < 0:
                raise ValueError("negative denominator multiplicity")
            if not m:
                continue
            (a, b), scalar, mono = _canonical_factor(a, b, m, scalar, mono)
            merged.append((a, b, m))
        self.scalar = scalar
        self.mono = mono
        self.num = num
        self.den = _merge_den(merged)

    def _set_zero(self):
        self.scalar = Fraction(0)
        self.mono = (0, 0)
        self.num = LaurentPoly.one()
        self.den = ()

    @classmethod
    def _raw(cls, scalar, mono, num, den):
        obj = cls.__new__(cls)
        if not scalar or num.is_zero():
            obj._set_zero()
        else:
            obj.scalar, obj.mono, obj.num, obj.den = scalar, mono, num, den
        return obj

    @classmethod
    def zero(cls):
        return cls._raw(Fraction(0), (0, 0), LaurentPoly.one(), ())

    @classmethod
    def one(cls):
        return cls._raw(Fraction(1), (0, 0), LaurentPoly.one(), ())

    @classmethod
    def from_poly(cls, p):
        return cls(p)

    @classmethod
    def lift(cls, x):
        if isinstance(x, FactoredFraction):
            return x
        if isinstance(x, LaurentPoly):
            return cls(x)
        if isinstance(x, (int, Fraction)):
            return cls(LaurentPoly.one(), scalar=x)
        raise TypeError(f"cannot lift {type(x).__name__} to FactoredFraction")

    # -- inspection -------------------------------------------------------
    def is_zero(self):
        return not self.scalar

    def is_polynomial(self):
        return not self.den

    def full_numerator(self):
        """scalar * mono * num as one Laurent polynomial."""
        return self.num.shift(*self.mono).scale(self.scalar)

    def den_poly(self):
        return _expand(LaurentPoly.one(), self.den)

    def den_factors(self):
        return {(a, b): m for a, b, m in self.den}

    def to_poly(self):
        """The fraction as a polynomial; raises NotDivisible if it is not one."""
        p = self.full_numerator()
        for a, b, m in self.den:
            p = p.div_binomial(a, b, m)
        return p

    def __repr__(self):
        from .render import ff_text

        return f"FactoredFraction({ff_text(self)!r})"

    def __str__(self):
        from .render import ff_text

        return ff_text(self)

    # -- arithmetic -------------------------------------------------------
    def __add__(self, other):
        try:
            other = FactoredFraction.lift(other)
        except TypeError:
            return NotImplemented
        return ff_add(self, other)

    __radd__ = __add__

    def __neg__(self):
        return FactoredFraction._raw(-self.scalar, self.mono, self.num, self.den)

    def __sub__(self, other):
        try:
            other = FactoredFraction.lift(other)
        except TypeError:
            return NotImplemented
        return ff_add(self, -other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return FactoredFraction._raw(self.scalar * other, self.mono, self.num, self.den)
        try:
            other = FactoredFraction.lift(other)
        except TypeError:
            return NotImplemented
        return ff_mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        result = FactoredFraction.one()
        for _ in range(n):
            result = result * self
        return result

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return FactoredFraction._raw(self.scalar / other, self.mono, self.num, self.den)
        return self * FactoredFraction.lift(other).inverse()

    def __eq__(self, other):
        if isinstance(other, RationalFunction):
            return other == self
        try:
            other = FactoredFraction.lift(other)
        except TypeError:
            return NotImplemented
        return ff_equal(self, other)

    __hash__ = None

    def inverse(self):
        """Reciprocal; the numerator must be a monomial times (1 - q^a Z^b) factors."""
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero fraction")
        split = factor_binomials(self.num)
        if split is None:
            raise NotRepresentable("numerator is not a product of binomials")
        c, (eq, ez), factors = split
        mono = (-self.mono[0] - eq, -self.mono[1] - ez)
        if mono[1] < 0:
            raise NotRepresentable("inverse would need a negative power of Z")
        return FactoredFraction(self.den_poly(), factors, 1 / (self.scalar * c), mono)

    def reduce(self):
        """Cancel denominator factors that divide the numerator exactly."""
        num, den = self.num, []
        for a, b, m in self.den:
            left = m
            while left:
                try:
                    num = num.div_binomial(a, b)
                except NotDivisible:
                    break
                left -= 1
            if left:
                den.append((a, b, left))
        return FactoredFraction._raw(self.scalar, self.mono, num, tuple(den))

    def evaluate(self, q, Z=1):
        """Exact value at rational q, Z; ZeroDivisionError at a pole."""
        q, Z = Fraction(q), Fraction(Z)
        den = Fraction(1)
        for a, b, m in self.den:
            den *= (1 - q**a * Z**b) ** m
        return self.full_numerator().evaluate(q, Z) / den

    def normalized(self):
        """Fold scalar and monomial into the numerator."""
        return FactoredFraction._raw(Fraction(1), (0, 0), self.full_numerator(), self.den)

    # -- substitutions ----------------------------------------------------
    def subst_Z_power(self, r):
        return ff_subst_Z_to_zr(self, r)

    def subst_qZ(self):
        """f(q, Z) -> f(q, qZ)."""
        eq, ez = self.mono
        den = [(a + b, b, m) for a, b, m in self.den]
        return FactoredFraction(self.num.subst_qZ(), den, self.scalar, (eq + ez, ez))

    def expand_in_Z(self, order):
        return ff_expand_in_Z(self, order)


def ff_add(x, y):
    if x.is_zero():
        return y
    if y.is_zero():
        return x
    dx, dy = x.den_factors(), y.den_factors()
    keys = set(dx) | set(dy)
    den = {k: max(dx.get(k, 0), dy.get(k, 0)) for k in keys}
    px = x.full_numerator()
    for (a, b), m in den.items():
        extra = m - dx.get((a, b), 0)
        if extra:
            px = px.mul_binomial(a, b, extra)
    py = y.full_numerator()
    for (a, b), m in den.items():
        extra = m - dy.get((a, b), 0)
        if extra:
            py = py.mul_binomial(a, b, extra)
    total = px + py
    if total.is_zero():
        return FactoredFraction.zero()
    return FactoredFraction._raw(Fraction(1), (0, 0), total, _merge_den((a, b, m) for (a, b), m in den.items()))


def _as_binomial(p):
    """(c, (eq, ez), (a, b)) with p = c q^eq Z^ez (1 - q^a Z^b), else None."""
    if len(p.terms) != 2:
        return None
    (k0, c0), (k1, c1) = p.items()
    if c1 != -c0:
        return None
    return c0, k0, (k1[0] - k0[0], k1[1] - k0[1])


def _cancel(num, mono, scalar, den):
    """Cancel a two-term numerator against an exactly matching denominator factor."""
    hit = _as_binomial(num)
    if hit is None:
        return num, mono, scalar, den
    c, (eq, ez), key = hit
    if den.get(key, 0) <= 0:
        return num, mono, scalar, den
    den[key] -= 1
    return LaurentPoly.one(), (mono[0] + eq, mono[1] + ez), scalar * c, den


def ff_mul(x, y):
    if x.is_zero() or y.is_zero():
        return FactoredFraction.zero()
    scalar = x.scalar * y.scalar
    mono = (x.mono[0] + y.mono[0], x.mono[1] + y.mono[1])
    den = x.den_factors()
    for a, b, m in y.den:
        den[(a, b)] = den.get((a, b), 0) + m
    nx, mono, scalar, den = _cancel(x.num, mono, scalar, den)
    ny, mono, scalar, den = _cancel(y.num, mono, scalar, den)
    num = nx * ny
    return FactoredFraction._raw(scalar, mono, num, _merge_den((a, b, m) for (a, b), m in den.items()))


def ff_equal(x, y):
    """Literal equality by cross-multiplication over the non-shared factors."""
    if x.is_zero() or y.is_zero():
        return x.is_zero() and y.is_zero()
    dx, dy = x.den_factors(), y.den_factors()
    lhs = x.full_numerator()
    rhs = y.full_numerator()
    for k, m in dy.items():
        extra = m - dx.get(k, 0)
        if extra > 0:
            lhs = lhs.mul_binomial(*k, extra)
    for k, m in dx.items():
        extra = m - dy.get(k, 0)
        if extra > 0:
            rhs = rhs.mul_binomial(*k, extra)
    return lhs == rhs


def ff_subst_Z_to_zr(x, r):
    """Substitute Z = z^r (the result keeps using the Z slot for z)."""
    if r == 1 or x.is_zero():
        return x
    return FactoredFraction._raw(
        x.scalar,
        (x.mono[0], x.mono[1] * r),
        x.num.subst_Z_power(r),
        _merge_den((a, b * r, m) for a, b, m in x.den),
    )


def ff_expand_in_Z(x, order):
    """Power-series coefficients c_0..c_order of x in Z, as a TruncatedSeries."""
    from .series import TruncatedSeries

    if order < 0:
        raise ValueError("order must be non-negative")
    if x.is_zero():
        return TruncatedSeries.zeros("Z", order, FactoredFraction.zero())
    pure_q = []
    slices = x.full_numerator().truncate_Z(order).z_slices()
    for a, b, m in x.den:
        if b == 0:
            if a == 0:
                raise NonExpandable("denominator vanishes at Z = 0")
            pure_q.append((a, b, m))
            continue
        for _ in range(m):
            slices = _series_div_binomial(slices, a, b, order)
    pure_q = tuple(pure_q)
    coeffs = []
    for k in range(order + 1):
        sl = slices.get(k)
        if not sl:
            coeffs.append(FactoredFraction.zero())
        else:
            coeffs.append(FactoredFraction._raw(Fraction(1), (0, 0), LaurentPoly._raw({(e, 0): c for e, c in sl.items()}), pure_q))
    return TruncatedSeries("Z", order, coeffs)


def _series_div_binomial(slices, a, b, order):
    """Truncated power series of slices / (1 - q^a Z^b)."""
    out = {}
    for k in range(order + 1):
        prev = out.get(k - b)
        cur = _shift_add(slices.get(k, {}), prev, a) if prev else dict(slices.get(k, {}))
        if cur:
            out[k] = cur
    return out


def _shift_add(base, prev, a):
    cur = dict(base)
    for e, c in prev.items():
        e2 = e + a
        v = _norm(cur.get(e2, 0) + c)
        if v:
            cur[e2] = v
        else:
            cur.pop(e2, None)
    return cur


def factor_binomials(p):
    """Write p as c * q^eq Z^ez * prod (1 - q^a Z^b)^m, or return None.

    Repeatedly divides by 1 - x where x is the lowest non-constant monomial of
    the normalized polynomial; in a product of such factors that monomial can
    only come from single factors, so its coefficient must be a negative integer.
    """
    if p.is_zero():
        return None
    (eq, ez), c = p.lowest()
    cur = p.shift(-eq, -ez).scale(Fraction(1) / Fraction(c))
    factors = {}
    while not cur.is_one():
        rest = [(k, v) for k, v in cur.items() if k != (0, 0)]
        (a, b), v = rest[0]
        if cur.coeff(0, 0) != 1 or not (v < 0 and v == int(v)):
            return None
        try:
            cur = cur.div_binomial(a, b)
        except NotDivisible:
            return None
        factors[(a, b)] = factors.get((a, b), 0) + 1
    return Fraction(c), (eq, ez), tuple((a, b, m) for (a, b), m in factors.items())


class RationalFunction:
    """Quotient ``num / den`` of two FactoredFractions, kept unreduced.

    Used where a division by a general polynomial cannot be avoided; equality
    is again by cross-multiplication.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        self.num = FactoredFraction.lift(num)
        self.den = FactoredFraction.one() if den is None else FactoredFraction.lift(den)
        if self.den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")

    @classmethod
    def lift(cls, x):
        return x if isinstance(x, RationalFunction) else cls(x)

    def is_zero(self):
        return self.num.is_zero()

    def __add__(self, other):
        o = RationalFunction.lift(other)
        if o.den == self.den:
            return RationalFunction(self.num + o.num, self.den)
        return RationalFunction(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(-self.num, self.den)

    def __sub__(self, other):
        return self + (-RationalFunction.lift(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = RationalFunction.lift(other)
        return RationalFunction(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = RationalFunction.lift(other)
        if o.is_zero():
            raise ZeroDivisionError("division by zero rational function")
        return RationalFunction(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other):
        return RationalFunction.lift(other) / self

    def __eq__(self, other):
        if isinstance(other, (FactoredFraction, LaurentPoly, int, Fraction)):
            other = RationalFunction(other)
        if not isinstance(other, RationalFunction):
            return NotImplemented
        return ff_equal(self.num * other.den, other.num * self.den)

    __hash__ = None

    def evaluate(self, q, Z=1):
        return self.num.evaluate(q, Z) / self.den.evaluate(q, Z)

    def to_factored(self):
        """Convert to a FactoredFraction when the division can be carried out exactly."""
        try:
            return self.num * self.den.reduce().inverse()
        except NotRepresentable:
            pass
        d = self.den.reduce()
        n = self.num
        try:
            quo = poly_divexact(n.num, d.num)
        except NotDivisible as exc:
            raise NotRepresentable("denominator does not divide the numerator") from exc
        out = FactoredFraction(quo, n.den, n.scalar / d.scalar, (n.mono[0] - d.mono[0], n.mono[1] - d.mono[1]))
        return out * FactoredFraction(d.den_poly())

    def __repr__(self):
        return f"RationalFunction(({self.num}) / ({self.den}))"


def equal(x, y):
    """Exact equality between any mix of polynomials, fractions and quotients."""
    if isinstance(x, RationalFunction) or isinstance(y, RationalFunction):
        return RationalFunction.lift(x if not isinstance(x, LaurentPoly) else FactoredFraction(x)) == y
    return ff_equal(FactoredFraction.lift(x), FactoredFraction.lift(y))
