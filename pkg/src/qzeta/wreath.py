"""Coloured permutations G(r, n) and the (des, fmaj) generating polynomial.

Letters are ordered

    n^(r-1) < ... < n^1 < ... < 1^(r-1) < ... < 1^1 < 0 < 1^0 < ... < n^0

so a coloured letter sits below the sentinel 0, with larger values lower and,
for equal values, larger colours lower.
"""
import itertools
import os
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from math import factorial
from typing import NamedTuple

from .errors import BudgetExceeded
from .fraction import FactoredFraction
from .poly import LaurentPoly
from .qseries import q_integer

__all__ = [
    "ColoredLetter",
    "ColoredPermutation",
    "Statistics",
    "letter_key",
    "letter_less",
    "descent_set",
    "statistics",
    "elements",
    "enumerate_elements",
    "gen_poly",
    "verify_carlitz",
    "default_budget",
]

DEFAULT_BUDGET = 10**8


def default_budget():
    """Element budget; the QZETA_BUDGET environment variable overrides 10^8."""
    env = os.environ.get("QZETA_BUDGET")
    return int(env) if env else DEFAULT_BUDGET


@dataclass(frozen=True)
class ColoredLetter:
    value: int
    color: int = 0

    def __post_init__(self):
        if self.value < 0 or self.color < 0:
            raise ValueError("value and colour must be non-negative")
        if self.value == 0 and self.color:
            raise ValueError("the sentinel 0 carries no colour")

    def __str__(self):
        return f"{self.value}^{self.color}"


def letter_key(value, color):
    """Integer key realizing the total order on coloured letters."""
    if color == 0:
        return value
    # (value, color) lexicographic, reversed, below zero
    return -(value * 1_000_003 + color)


def letter_less(x, y):
    return letter_key(x.value, x.color) < letter_key(y.value, y.color)


@dataclass(frozen=True)
class ColoredPermutation:
    """Window notation [sigma(1)^c_1, ..., sigma(n)^c_n]; ``colors[i]`` belongs to position i+1."""

    r: int
    sigma: tuple
    colors: tuple

    def __post_init__(self):
        object.__setattr__(self, "sigma", tuple(self.sigma))
        object.__setattr__(self, "colors", tuple(self.colors))
        n = len(self.sigma)
        if self.r < 1 or n < 1:
            raise ValueError("need r >= 1 and n >= 1")
        if sorted(self.sigma) != list(range(1, n + 1)):
            raise ValueError(f"{self.sigma} is not a permutation of 1..{n}")
        if len(self.colors) != n or any(not 0 <= c < self.r for c in self.colors):
            raise ValueError(f"colours must be {n} values in 0..{self.r - 1}")

    @property
    def n(self):
        return len(self.sigma)

    @classmethod
    def from_window(cls, r, window):
        """Build from [(value, colour), ...]."""
        return cls(r, [v for v, _ in window], [c for _, c in window])

    def letters(self):
        return [ColoredLetter(v, c) for v, c in zip(self.sigma, self.colors)]

    def __str__(self):
        return "[" + ", ".join(f"{v}^{c}" for v, c in zip(self.sigma, self.colors)) + "]"


class Statistics(NamedTuple):
    des: int
    maj: int
    col: int
    fmaj: int


def descent_set(g):
    """Positions i in 0..n-1 with gamma(i) > gamma(i+1), where gamma(0) = 0."""
    prev = 0
    out = set()
    for i, (v, c) in enumerate(zip(g.sigma, g.colors)):
        k = letter_key(v, c)
        if prev > k:
            out.add(i)
        prev = k
    return out


def statistics(g):
    des = descent_set(g)
    maj = sum(des)
    col = sum(g.colors)
    return Statistics(len(des), maj, col, g.r * maj + col)


def _check_budget(r, n, budget):
    budget = default_budget() if budget is None else budget
    size = r**n * factorial(n)
    if size > budget:
        raise BudgetExceeded(f"G({r},{n}) has {size} elements, budget is {budget}")
    return size


def elements(r, n, budget=None):
    """All of G(r, n), lexicographic in (sigma, colours)."""
    _check_budget(r, n, budget)
    for sigma in itertools.permutations(range(1, n + 1)):
        for colors in itertools.product(range(r), repeat=n):
            yield ColoredPermutation(r, sigma, colors)


def enumerate_elements(r, n, visitor, budget=None):
    """Call ``visitor`` once per element of G(r, n) in deterministic order."""
    for g in elements(r, n, budget):
        visitor(g)


def _chunk_counts(r, n, lo, hi):
    """Counter {(fmaj, des): count} over permutations of rank lo..hi-1."""
    keys = [[letter_key(v, c) for c in range(r)] for v in range(n + 1)]
    colorings = [(cols, sum(cols)) for cols in itertools.product(range(r), repeat=n)]
    counts = Counter()
    for sigma in itertools.islice(itertools.permutations(range(1, n + 1)), lo, hi):
        rows = [keys[v] for v in sigma]
        for cols, col in colorings:
            prev = 0
            des = maj = 0
            for i in range(n):
                k = rows[i][cols[i]]
                if prev > k:
                    des += 1
                    maj += i
                prev = k
            counts[(r * maj + col, des)] += 1
    return counts


def _chunks(total, pieces):
    step = -(-total // pieces)
    return [(lo, min(lo + step, total)) for lo in range(0, total, step)]


def gen_poly(r, n, workers=1, budget=None):
    """G_{r,n}(Z, q) = sum over G(r, n) of Z^des q^fmaj, as a LaurentPoly.

    The permutation ranks are split into contiguous chunks; partial counts are
    merged by addition, so the result does not depend on ``workers``.
    """
    if n == 0:
        return LaurentPoly.one()
    _check_budget(r, n, budget)
    nperm = factorial(n)
    workers = max(1, workers or 1)
    if workers == 1:
        parts = [_chunk_counts(r, n, 0, nperm)]
    else:
        chunks = _chunks(nperm, 4 * workers)
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_chunk_counts, *zip(*[(r, n, lo, hi) for lo, hi in chunks])))
    total = Counter()
    for part in parts:
        total.update(part)
    return LaurentPoly(dict(total))


def carlitz_series(r, n, order, poly=None):
    """Z-expansion of G_{r,n}(Z, q) / (Z; q^r)_{n+1} through Z^order."""
    g = gen_poly(r, n) if poly is None else poly
    frac = FactoredFraction(g, [(r * k, 1, 1) for k in range(n + 1)])
    return frac.expand_in_Z(order)


def verify_carlitz(r, n, order, poly=None, workers=1, budget=None):
    """Check that the Z^k coefficient of G_{r,n}/(Z; q^r)_{n+1} is [rk+1]_q^n for k <= order."""
    if poly is None:
        poly = gen_poly(r, n, workers=workers, budget=budget)
    series = carlitz_series(r, n, order, poly)
    return all(series[k] == q_integer(r * k + 1) ** n for k in range(order + 1))
