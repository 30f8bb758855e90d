"""Truncated formal power series in one variable (t or z) with exact coefficients."""
from fractions import Fraction

from .errors import NonInvertibleLeadingTerm, NotRepresentable, OrderMismatch
from .fraction import FactoredFraction

__all__ = ["TruncatedSeries"]


def _is_zero(c):
    return c.is_zero() if hasattr(c, "is_zero") else not c


class TruncatedSeries:
    """``sum_{k <= order} coeffs[k] var^k``; nothing beyond ``order`` is ever consulted."""

    __slots__ = ("var", "order", "coeffs")

    def __init__(self, var, order, coeffs):
        coeffs = tuple(coeffs)
        if len(coeffs) != order + 1:
            raise ValueError(f"expected {order + 1} coefficients, got {len(coeffs)}")
        self.var = var
        self.order = order
        self.coeffs = coeffs

    @classmethod
    def zeros(cls, var, order, zero=None):
        zero = FactoredFraction.zero() if zero is None else zero
        return cls(var, order, [zero] * (order + 1))

    @classmethod
    def constant(cls, var, order, c, zero=None):
        zero = FactoredFraction.zero() if zero is None else zero
        return cls(var, order, [c] + [zero] * order)

    @classmethod
    def from_coeffs(cls, var, order, coeffs, zero=None):
        """Pad or truncate ``coeffs`` to the requested order."""
        zero = FactoredFraction.zero() if zero is None else zero
        coeffs = list(coeffs)[: order + 1]
        return cls(var, order, coeffs + [zero] * (order + 1 - len(coeffs)))

    def __getitem__(self, k):
        return self.coeffs[k]

    def __len__(self):
        return self.order + 1

    def __iter__(self):
        return iter(self.coeffs)

    def _check(self, other):
        if not isinstance(other, TruncatedSeries):
            raise TypeError("expected a TruncatedSeries")
        if other.var != self.var or other.order != self.order:
            raise OrderMismatch(f"{self.var}^{self.order} vs {other.var}^{other.order}")

    def __add__(self, other):
        self._check(other)
        return TruncatedSeries(self.var, self.order, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __neg__(self):
        return TruncatedSeries(self.var, self.order, [-a for a in self.coeffs])

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, TruncatedSeries):
            return TruncatedSeries(self.var, self.order, [a * other for a in self.coeffs])
        self._check(other)
        out = []
        for n in range(self.order + 1):
            acc = None
            for k in range(n + 1):
                a, b = self.coeffs[k], other.coeffs[n - k]
                if _is_zero(a) or _is_zero(b):
                    continue
                acc = a * b if acc is None else acc + a * b
            out.append(self.coeffs[0] * 0 if acc is None else acc)
        return TruncatedSeries(self.var, self.order, out)

    __rmul__ = __mul__

    def shift(self, k):
        """Multiply by var^k, dropping what falls beyond the order."""
        zero = self.coeffs[0] * 0
        return TruncatedSeries(self.var, self.order, ([zero] * k + list(self.coeffs))[: self.order + 1])

    def inverse(self):
        """Multiplicative inverse; the constant term must be a unit."""
        c0 = self.coeffs[0]
        if _is_zero(c0):
            raise NonInvertibleLeadingTerm("constant term is zero")
        if isinstance(c0, (int, Fraction)):
            inv0 = Fraction(1) / c0
        else:
            try:
                inv0 = c0.inverse()
            except (NotRepresentable, ZeroDivisionError) as exc:
                raise NonInvertibleLeadingTerm(str(exc)) from exc
        out = [inv0]
        for n in range(1, self.order + 1):
            acc = None
            for k in range(1, n + 1):
                a = self.coeffs[k]
                if _is_zero(a):
                    continue
                term = a * out[n - k]
                acc = term if acc is None else acc + term
            out.append(c0 * 0 if acc is None else -(acc * inv0))
        return TruncatedSeries(self.var, self.order, out)

    def __truediv__(self, other):
        if isinstance(other, TruncatedSeries):
            return self * other.inverse()
        if not other:
            raise ZeroDivisionError("division of a series by zero")
        inv = Fraction(1) / Fraction(other)
        return TruncatedSeries(self.var, self.order, [a * inv for a in self.coeffs])

    def truncate(self, order):
        if order > self.order:
            raise OrderMismatch("cannot raise the order of a truncated series")
        return TruncatedSeries(self.var, order, self.coeffs[: order + 1])

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return (
            self.var == other.var
            and self.order == other.order
            and all(a == b for a, b in zip(self.coeffs, other.coeffs))
        )

    __hash__ = None

    def __repr__(self):
        return f"TruncatedSeries({self.var}, order={self.order}, {list(map(str, self.coeffs))})"
