"""Sparse Laurent polynomials in q (any integer exponent) and Z (exponent >= 0).

Coefficients are exact rationals. Integral coefficients are stored as ``int``
and the rest as :class:`fractions.Fraction`; the term map never holds a zero.
Two polynomials are equal exactly when their term maps are equal.

Large products and exact quotients go through Kronecker substitution: the
bivariate polynomial is packed into one Python integer (q -> 2^B, Z -> 2^(B*W)),
so the heavy lifting is a single big-integer multiply or divide.
"""
from fractions import Fraction
from math import gcd, lcm

from .errors import NotDivisible

try:  # GMP big-int division is subquadratic; CPython's is not
    from gmpy2 import mpz as _mpz
except ImportError:  # pragma: no cover
    _mpz = int

__all__ = ["LaurentPoly", "poly_add", "poly_mul", "poly_divexact", "det_bareiss"]

# below this many pairwise term products the schoolbook loop wins
_KRONECKER_THRESHOLD = 4000


def _norm(c):
    if type(c) is Fraction and c.denominator == 1:
        return c.numerator
    return c


def _sort_key(item):
    (eq, ez), _ = item
    return (ez, eq)


class LaurentPoly:
    """Immutable sparse polynomial; keys of :attr:`terms` are ``(e_q, e_Z)``."""

    __slots__ = ("terms", "_hash")

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for key, c in dict(terms).items():
                if c:
                    eq, ez = key
                    if ez < 0:
                        raise ValueError("Z-exponents must be non-negative")
                    clean[(int(eq), int(ez))] = _norm(Fraction(c) if not isinstance(c, int) else c)
        self.terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms):
        # trusted constructor: no zeros, normalized coefficients
        obj = cls.__new__(cls)
        obj.terms = terms
        obj._hash = None
        return obj

    @classmethod
    def monomial(cls, coeff=1, eq=0, ez=0):
        return cls({(eq, ez): coeff})

    @classmethod
    def const(cls, c):
        return cls({(0, 0): c})

    @classmethod
    def zero(cls):
        return cls._raw({})

    @classmethod
    def one(cls):
        return cls._raw({(0, 0): 1})

    @classmethod
    def q(cls, e=1):
        return cls._raw({(e, 0): 1})

    @classmethod
    def Z(cls, e=1):
        return cls._raw({(0, e): 1})

    @classmethod
    def from_q_coeffs(cls, coeffs, shift=0):
        """Univariate polynomial sum_i coeffs[i] q^(i+shift)."""
        return cls({(i + shift, 0): c for i, c in enumerate(coeffs) if c})

    # -- inspection -------------------------------------------------------
    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def is_zero(self):
        return not self.terms

    def is_one(self):
        return self.terms == {(0, 0): 1}

    def is_monomial(self):
        return len(self.terms) == 1

    def items(self):
        """Terms in canonical order: lexicographic on (e_Z, e_q)."""
        return sorted(self.terms.items(), key=_sort_key)

    def coeff(self, eq, ez=0):
        return self.terms.get((eq, ez), 0)

    def z_degree(self):
        return max((ez for _, ez in self.terms), default=-1)

    def q_range(self):
        eqs = [eq for eq, _ in self.terms]
        return (min(eqs), max(eqs)) if eqs else (0, -1)

    def lowest(self):
        """Lowest term in (e_Z, e_q) lexicographic order."""
        return min(self.terms.items(), key=_sort_key)

    def evaluate(self, q, Z=1):
        return sum(c * Fraction(q) ** eq * Fraction(Z) ** ez for (eq, ez), c in self.terms.items())

    def __eq__(self, other):
        if isinstance(other, LaurentPoly):
            return self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self.terms == ({(0, 0): other} if other else {})
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def __repr__(self):
        from .render import poly_text

        return f"LaurentPoly({poly_text(self)!r})"

    def __str__(self):
        from .render import poly_text

        return poly_text(self)

    # -- ring operations --------------------------------------------------
    def __neg__(self):
        return LaurentPoly._raw({k: -c for k, c in self.terms.items()})

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        if len(other.terms) > len(self.terms):
            self, other = other, self
        out = dict(self.terms)
        for k, c in other.terms.items():
            v = out.get(k)
            if v is None:
                out[k] = c
            else:
                v = _norm(v + c)
                if v:
                    out[k] = v
                else:
                    del out[k]
        return LaurentPoly._raw(out)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return poly_mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative powers are not polynomials")
        result, base = LaurentPoly.one(), self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def scale(self, c):
        if not c:
            return LaurentPoly.zero()
        if c == 1:
            return self
        return LaurentPoly._raw({k: _norm(v * c) for k, v in self.terms.items()})

    def shift(self, eq=0, ez=0):
        """Multiply by the monomial q^eq Z^ez."""
        if not eq and not ez:
            return self
        return LaurentPoly._raw({(a + eq, b + ez): c for (a, b), c in self.terms.items()})

    def mul_binomial(self, a, b, mult=1):
        """Multiply by (1 - q^a Z^b)^mult."""
        terms = self.terms
        for _ in range(mult):
            out = dict(terms)
            for (eq, ez), c in terms.items():
                k = (eq + a, ez + b)
                v = out.get(k)
                if v is None:
                    out[k] = -c
                else:
                    v = _norm(v - c)
                    if v:
                        out[k] = v
                    else:
                        del out[k]
            terms = out
        return LaurentPoly._raw(terms)

    def div_binomial(self, a, b, mult=1):
        """Exact quotient by (1 - q^a Z^b)^mult; raises NotDivisible."""
        p = self
        for _ in range(mult):
            p = _div_binomial_once(p, a, b)
        return p

    def divides_binomial(self, a, b):
        try:
            _div_binomial_once(self, a, b)
        except NotDivisible:
            return False
        return True

    def subst_Z_power(self, r):
        """Replace Z by Z^r."""
        if r == 1:
            return self
        return LaurentPoly._raw({(eq, ez * r): c for (eq, ez), c in self.terms.items()})

    def subst_qZ(self):
        """Replace Z by q*Z."""
        return LaurentPoly._raw({(eq + ez, ez): c for (eq, ez), c in self.terms.items()})

    def subst_q_power(self, s):
        """Replace q by q^s."""
        if s == 1:
            return self
        return LaurentPoly._raw({(eq * s, ez): c for (eq, ez), c in self.terms.items()})

    def truncate_Z(self, order):
        return LaurentPoly._raw({k: c for k, c in self.terms.items() if k[1] <= order})

    def truncate_q(self, order):
        """Drop every term with q-exponent >= order."""
        return LaurentPoly._raw({k: c for k, c in self.terms.items() if k[0] < order})

    def z_slices(self):
        """Map e_Z -> {e_q: coeff}."""
        out = {}
        for (eq, ez), c in self.terms.items():
            out.setdefault(ez, {})[eq] = c
        return out

    @classmethod
    def from_z_slices(cls, slices):
        return cls._raw({(eq, ez): c for ez, sl in slices.items() for eq, c in sl.items()})

    def z_coeff(self, ez):
        """Coefficient of Z^ez as a polynomial in q."""
        return LaurentPoly._raw({(eq, 0): c for (eq, e), c in self.terms.items() if e == ez})

    def denominators_lcm(self):
        return lcm(*(c.denominator for c in self.terms.values() if type(c) is Fraction)) if self.terms else 1


def _coerce(x):
    if isinstance(x, LaurentPoly):
        return x
    if isinstance(x, (int, Fraction)):
        return LaurentPoly.const(x)
    return NotImplemented


def poly_add(p, r):
    return p + r


def poly_mul(p, r):
    """Product of two Laurent polynomials."""
    tp, tr = p.terms, r.terms
    if not tp or not tr:
        return LaurentPoly.zero()
    if len(tp) < len(tr):
        tp, tr = tr, tp
    if len(tr) == 1:
        ((eq, ez), c), = tr.items()
        return LaurentPoly._raw({(a + eq, b + ez): _norm(v * c) for (a, b), v in tp.items()})
    if len(tp) * len(tr) > _KRONECKER_THRESHOLD:
        return _kronecker_mul(p, r)
    out = {}
    get = out.get
    for (a1, b1), c1 in tr.items():
        for (a2, b2), c2 in tp.items():
            k = (a1 + a2, b1 + b2)
            out[k] = get(k, 0) + c1 * c2
    return LaurentPoly._raw({k: _norm(v) for k, v in out.items() if v})


# -- Kronecker substitution --------------------------------------------------

def _integer_part(p):
    """(d, terms) with d * p integral."""
    d = p.denominators_lcm()
    if d == 1:
        return 1, p.terms
    return d, {k: int(c * d) for k, c in p.terms.items()}


def _bounds(terms):
    eqs = [k[0] for k in terms]
    ezs = [k[1] for k in terms]
    return min(eqs), max(eqs), min(ezs), max(ezs)


def _pack(terms, qmin, zmin, width, nbytes, ndigits):
    pos = bytearray(ndigits * nbytes)
    neg = bytearray(ndigits * nbytes)
    for (eq, ez), c in terms.items():
        i = ((ez - zmin) * width + eq - qmin) * nbytes
        if c > 0:
            pos[i:i + nbytes] = c.to_bytes(nbytes, "little")
        else:
            neg[i:i + nbytes] = (-c).to_bytes(nbytes, "little")
    return int.from_bytes(pos, "little") - int.from_bytes(neg, "little")


def _unpack(value, qmin, zmin, width, nbytes, ndigits):
    """Decode balanced base-2^(8*nbytes) digits; None when the value overflows."""
    half = 1 << (8 * nbytes - 1)
    offset = int.from_bytes(half.to_bytes(nbytes, "little") * ndigits, "little")
    shifted = value + offset
    if shifted < 0 or shifted.bit_length() > 8 * nbytes * ndigits:
        return None
    data = shifted.to_bytes(ndigits * nbytes, "little")
    if nbytes == 8:
        digits = memoryview(data).cast("Q").tolist()
    else:
        digits = [int.from_bytes(data[i:i + nbytes], "little") for i in range(0, len(data), nbytes)]
    out = {}
    for idx, d in enumerate(digits):
        if d != half:
            z, e = divmod(idx, width)
            out[(e + qmin, z + zmin)] = d - half
    return out


def _kronecker_mul(p, r):
    dp, tp = _integer_part(p)
    dr, tr = _integer_part(r)
    pq0, pq1, pz0, pz1 = _bounds(tp)
    rq0, rq1, rz0, rz1 = _bounds(tr)
    width = (pq1 - pq0) + (rq1 - rq0) + 1
    bound = max(abs(c) for c in tp.values()) * max(abs(c) for c in tr.values()) * min(len(tp), len(tr))
    nbytes = 8 * ((bound.bit_length() + 2 + 63) // 64)
    nd_p = (pz1 - pz0 + 1) * width
    nd_r = (rz1 - rz0 + 1) * width
    nd_out = (pz1 - pz0 + rz1 - rz0 + 1) * width
    prod = _mpz(_pack(tp, pq0, pz0, width, nbytes, nd_p)) * _mpz(_pack(tr, rq0, rz0, width, nbytes, nd_r))
    out = _unpack(int(prod), pq0 + rq0, pz0 + rz0, width, nbytes, nd_out)
    if dp * dr != 1:
        d = dp * dr
        out = {k: _norm(Fraction(c, d)) for k, c in out.items()}
    return LaurentPoly._raw(out)


# -- exact division -------------------------------------------------------------

def _div_binomial_once(p, a, b):
    if b == 0 and a == 0:
        raise ZeroDivisionError("division by 1 - 1")
    if not p.terms:
        return p
    if b == 0 and a < 0:
        # 1 - q^a = -q^a (1 - q^-a)
        return _div_binomial_once(p, -a, 0).shift(-a, 0).scale(-1)
    slices = p.z_slices()
    out = {}
    if b == 0:
        for ez, sl in slices.items():
            for eq, c in _div_univariate(sl, a).items():
                out[(eq, ez)] = c
        return LaurentPoly._raw(out)
    zmin, zmax = min(slices), max(slices)
    quot = {}
    for k in range(zmin, zmax + 1):
        cur = dict(slices.get(k, {}))
        prev = quot.get(k - b)
        if prev:
            for eq, c in prev.items():
                e = eq + a
                v = _norm(cur.get(e, 0) + c)
                if v:
                    cur[e] = v
                else:
                    cur.pop(e, None)
        if k > zmax - b:
            if cur:
                raise NotDivisible(f"not divisible by 1 - q^{a} Z^{b}")
        elif cur:
            quot[k] = cur
    return LaurentPoly.from_z_slices(quot)


def _div_univariate(sl, a):
    """Exact quotient of {e: c} by 1 - q^a with a > 0."""
    lo, hi = min(sl), max(sl)
    quot = {}
    for e in range(lo, hi + 1):
        v = sl.get(e, 0) + quot.get(e - a, 0)
        if v:
            if e > hi - a:
                raise NotDivisible(f"not divisible by 1 - q^{a}")
            quot[e] = _norm(v)
    return quot


def poly_divexact(p, r):
    """Exact quotient ``p / r``; raises :class:`NotDivisible` on a remainder."""
    if not r.terms:
        raise ZeroDivisionError("polynomial division by zero")
    if not p.terms:
        return p
    if len(r.terms) == 1:
        ((eq, ez), c), = r.terms.items()
        if any(k[1] < ez for k in p.terms):
            raise NotDivisible("Z-degree too small")
        return p.shift(-eq, -ez).scale(Fraction(1) / c)
    if len(r.terms) == 2:
        (k0, c0), (k1, c1) = r.items()
        if c1 == -c0:
            # c0 q^k0 (1 - q^(k1-k0))
            return poly_divexact(p.div_binomial(k1[0] - k0[0], k1[1] - k0[1]), LaurentPoly({k0: c0}))
    q = _kronecker_div(p, r)
    if q is None:
        q = _long_div(p, r)
    return q


def _kronecker_div(p, r):
    dp, tp = _integer_part(p)
    dr, tr = _integer_part(r)
    # with r primitive the quotient is integral (Gauss), so integer division is exact
    g = gcd(*tr.values())
    if g != 1:
        tr = {k: c // g for k, c in tr.items()}
        dp *= g
    pq0, pq1, pz0, pz1 = _bounds(tp)
    rq0, rq1, rz0, rz1 = _bounds(tr)
    if pz0 < rz0 or pz1 - pz0 < rz1 - rz0 or pq1 - pq0 < rq1 - rq0:
        raise NotDivisible("support too small")
    width = pq1 - pq0 + 1
    cbits = max(max(abs(c) for c in tp.values()).bit_length(), max(abs(c) for c in tr.values()).bit_length())
    nbytes = 8 * ((cbits + 64 + 63) // 64)
    for _ in range(3):
        A = _pack(tp, pq0, pz0, width, nbytes, (pz1 - pz0 + 1) * width)
        B = _pack(tr, rq0, rz0, width, nbytes, (rz1 - rz0 + 1) * width)
        quo, rem = divmod(_mpz(A), _mpz(B))
        if rem:
            raise NotDivisible("remainder after division")
        terms = _unpack(int(quo), pq0 - rq0, pz0 - rz0, width, nbytes, (pz1 - pz0 - (rz1 - rz0) + 1) * width)
        if terms is not None:
            cand = LaurentPoly._raw(terms)
            if poly_mul(cand, LaurentPoly._raw(tr)).terms == tp:
                if dp == dr:
                    return cand
                return cand.scale(Fraction(dr, dp))
        nbytes *= 2
    return None


def _long_div(p, r):
    """Schoolbook division with leading terms in (e_Z, e_q) lexicographic order."""
    if not p.terms:
        return p
    lead_r = max(r.terms.items(), key=_sort_key)
    (rq, rz), rc = lead_r
    (lq, lz), _ = p.lowest()
    (mq, mz), _ = r.lowest()
    floor = (lz - mz, lq - mq)
    rem = dict(p.terms)
    quot = {}
    while rem:
        (eq, ez), c = max(rem.items(), key=_sort_key)
        tq, tz = eq - rq, ez - rz
        if tz < 0 or (tz, tq) < floor:
            raise NotDivisible("remainder after division")
        t = _norm(Fraction(c) / rc)
        quot[(tq, tz)] = t
        for (a, b), v in r.terms.items():
            k = (a + tq, b + tz)
            w = _norm(rem.get(k, 0) - v * t)
            if w:
                rem[k] = w
            else:
                rem.pop(k, None)
    return LaurentPoly._raw(quot)


def det_bareiss(matrix):
    """Determinant of a square matrix of LaurentPoly by fraction-free elimination."""
    m = [list(row) for row in matrix]
    n = len(m)
    if n == 0:
        return LaurentPoly.one()
    sign = 1
    prev = LaurentPoly.one()
    for k in range(n - 1):
        if m[k][k].is_zero():
            swap = next((i for i in range(k + 1, n) if not m[i][k].is_zero()), None)
            if swap is None:
                return LaurentPoly.zero()
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        pivot = m[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = pivot * m[i][j] - m[i][k] * m[k][j]
                m[i][j] = poly_divexact(num, prev)
        prev = pivot
    return m[n - 1][n - 1] if sign == 1 else -m[n - 1][n - 1]
