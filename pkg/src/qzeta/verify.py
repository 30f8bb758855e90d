"""Grid verification harness behind ``qzeta verify``.

A suite is a list of cells ``(check, params)``. Cells are independent; they run on
a process pool and come back in the order they were generated, so the report is
the same for any worker count.
"""
import time
from concurrent.futures import ProcessPoolExecutor
from math import factorial

from .errors import BudgetExceeded
from .wreath import default_budget

SUITES = ("carlitz", "moments", "cfrac", "zeta", "all")

# bounds used when the command line leaves them unset
DEFAULTS = {
    "order": 8,
    "cfrac_order": 6,
    "upto": 3,
    "series_order": 24,
    "hankel_m": 4,
    "orth_n": 5,
    "chu_n": 8,
    "qbinomial_order": 10,
}


def _wreath_grid(rmax, nmax):
    if rmax is None and nmax is None:
        cells = {(r, n) for r in range(1, 4) for n in range(1, 7)}
        cells |= {(r, n) for r in range(1, 6) for n in range(1, 5)}
        return sorted(cells)
    rmax = 3 if rmax is None else rmax
    nmax = 6 if nmax is None else nmax
    return [(r, n) for r in range(1, rmax + 1) for n in range(1, nmax + 1)]


def _check_budget(grid, budget):
    for r, n in grid:
        if r**n * factorial(n) > budget:
            raise BudgetExceeded(f"G({r},{n}) has {r**n * factorial(n)} elements, budget is {budget}")


def _chu_params():
    # every c here keeps (c; q)_n free of the factor 1 - q^0
    return [("q", i) for i in range(1, 5)] + [("Zq", i) for i in range(4)]


def _monomial(param):
    from .qseries import QMonomial

    kind, i = param
    return QMonomial(1, i, 1 if kind == "Zq" else 0)


def build_cells(suite, rmax=None, nmax=None, order=None, upto=None, budget=None):
    """Cells of one suite in deterministic order."""
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}")
    budget = default_budget() if budget is None else budget
    suites = SUITES[:-1] if suite == "all" else (suite,)
    cells = []
    for s in suites:
        if s == "carlitz":
            grid = _wreath_grid(rmax, nmax)
            _check_budget(grid, budget)
            o = DEFAULTS["order"] if order is None else order
            cells += [("carlitz", {"r": r, "n": n, "order": o}) for r, n in grid]
        elif s == "moments":
            grid = _wreath_grid(rmax, nmax)
            _check_budget(grid, budget)
            cells += [("moment_wreath", {"r": r, "n": n}) for r, n in grid]
            rc = [(r, c) for r in range(1, min(rmax or 2, 2) + 1) for c in (1, 2)]
            cells += [("hankel_product", {"m": m, "r": r, "c": c}) for r, c in rc for m in range(1, DEFAULTS["hankel_m"] + 1)]
            cells += [("orthogonality", {"N": DEFAULTS["orth_n"], "r": r, "c": c}) for r, c in rc]
            params = _chu_params()
            for n in range(DEFAULTS["chu_n"] + 1):
                for b in params:
                    for c in params:
                        cells.append(("q_chu_vandermonde", {"n": n, "b": list(b), "c": list(c)}))
            for e in (None, 1, 2, 3):
                cells.append(("q_binomial", {"a": "0" if e is None else f"q^{e}", "order": DEFAULTS["qbinomial_order"]}))
        elif s == "cfrac":
            rs = range(1, (rmax or 3) + 1)
            o = DEFAULTS["cfrac_order"] if order is None else order
            u = DEFAULTS["upto"] if upto is None else upto
            cells += [("jfraction_expand", {"r": r, "c": c, "order": o}) for r in rs for c in (1, 2)]
            cells += [("moments_to_jfraction", {"r": r, "c": c, "upto": u}) for r in rs for c in (1, 2)]
        elif s == "zeta":
            rs = range(1, (rmax or 3) + 1)
            ns = range(0, (5 if nmax is None else nmax) + 1)
            o = DEFAULTS["series_order"] if order is None else order
            for n in ns:
                for r in rs:
                    for c in range(1, r + 1):
                        cells.append(("series", {"n": n, "c": c, "r": r, "order": o}))
                        cells.append(("denominator", {"n": n, "c": c, "r": r}))
                        cells.append(("connexion_AB", {"n": n, "c": c, "r": r}))
            if rmax is None and nmax is None:
                ac = [(n, r) for r in (1, 2) for n in range(7)] + [(n, 3) for n in range(5)]
            else:
                ac = [(n, r) for r in rs for n in ns]
            _check_budget([(r, n) for n, r in ac if n], budget)
            cells += [("connexion_AC", {"n": n, "r": r}) for n, r in ac]
    return cells


def _evaluate(check, p):
    from . import cfrac, moments, qseries, wreath, zeta

    if check == "carlitz":
        return wreath.verify_carlitz(p["r"], p["n"], p["order"])
    if check == "moment_wreath":
        return moments.verify_moment_wreath(p["n"], p["r"])
    if check == "hankel_product":
        return moments.hankel_product_check(p["m"], p["r"], p["c"])
    if check == "orthogonality":
        return moments.orthogonality_check(p["N"], p["r"], p["c"])
    if check == "q_chu_vandermonde":
        return qseries.q_chu_vandermonde(p["n"], _monomial(p["b"]), _monomial(p["c"]))
    if check == "q_binomial":
        a = qseries.QMonomial.zero() if p["a"] == "0" else qseries.QMonomial.q(int(p["a"][2:]))
        return qseries.q_binomial_theorem_check(a, p["order"])
    if check == "jfraction_expand":
        from .fraction import equal

        o = p["order"]
        J = cfrac.closed_form_coeffs(p["r"], p["c"], -(-o // 2) + 1)
        series = cfrac.jfraction_expand(J, o)
        return all(equal(series[k], moments.specialized_moment(k, p["r"], p["c"])) for k in range(o + 1))
    if check == "moments_to_jfraction":
        u = p["upto"]
        mu = moments.specialized_moments(2 * u + 2, p["r"], p["c"])
        J = cfrac.moments_to_jfraction(mu, u)
        return cfrac.jacobi_equal(J, cfrac.closed_form_coeffs(p["r"], p["c"], u), u)
    if check == "series":
        return zeta.series_check(p["n"], p["c"], p["r"], p["order"])
    if check == "denominator":
        return zeta.denominator_check(p["n"], p["c"], p["r"])
    if check == "connexion_AB":
        return zeta.verify_connexion_AB(p["n"], p["c"], p["r"])
    if check == "connexion_AC":
        return zeta.verify_connexion_AC(p["n"], p["r"])
    raise ValueError(f"unknown check {check!r}")


def run_cell(cell):
    check, params = cell
    start = time.perf_counter()
    ok = bool(_evaluate(check, params))
    millis = round((time.perf_counter() - start) * 1000, 3)
    return {"check": check, "params": params, "pass": ok, "millis": millis}


def run_cells(cells, workers=1):
    """Evaluate cells; ``pool.map`` keeps the input order regardless of ``workers``."""
    if workers <= 1:
        return [run_cell(c) for c in cells]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(run_cell, cells, chunksize=max(1, len(cells) // (4 * workers))))


def run_suite(suite, workers=1, **bounds):
    return run_cells(build_cells(suite, **bounds), workers)
