"""Acceptance criteria 1-10, one test each; every test prints a PASS/FAIL line."""
import os
import time

import pytest

from qzeta.cfrac import closed_form_coeffs, jacobi_equal, jfraction_expand, moments_to_jfraction
from qzeta.fraction import ff_equal
from qzeta.moments import hankel_product_check, orthogonality_check, specialized_moment, specialized_moments
from qzeta.moments import verify_moment_wreath
from qzeta.qseries import QMonomial, q_binomial_theorem_check, q_chu_vandermonde
from qzeta.verify import run_suite
from qzeta.wreath import ColoredPermutation, descent_set, gen_poly, statistics, verify_carlitz
from qzeta.zeta import denominator_check, series_check, verify_connexion_AB, verify_connexion_AC

WREATH_GRID = sorted({(r, n) for r in range(1, 4) for n in range(1, 7)} | {(r, n) for r in range(1, 6) for n in range(1, 5)})
WORKERS = os.cpu_count() or 1


@pytest.fixture
def report(capsys):
    def emit(number, ok, detail):
        with capsys.disabled():
            print(f"\n[{'PASS' if ok else 'FAIL'}] criterion {number}: {detail}")
        return ok

    return emit


@pytest.fixture(scope="module")
def wreath_polys():
    start = time.perf_counter()
    polys = {(r, n): gen_poly(r, n, workers=WORKERS) for r, n in WREATH_GRID}
    return polys, time.perf_counter() - start


def test_1_worked_example(report):
    g = ColoredPermutation.from_window(5, [(4, 1), (3, 0), (2, 4), (1, 2)])
    best = min(_timed(lambda: (descent_set(g), statistics(g)))[1] for _ in range(50))
    des, stats = descent_set(g), statistics(g)
    ok = des == {0, 2} and tuple(stats) == (2, 2, 7, 17) and best < 1e-3
    assert report(1, ok, f"Des={sorted(des)} (des, maj, col, fmaj)={tuple(stats)} in {best * 1e6:.0f} us")


def test_2_carlitz_macmahon(report, wreath_polys):
    polys, enum_seconds = wreath_polys
    results, seconds = _timed(lambda: [verify_carlitz(r, n, 8, poly=polys[r, n]) for r, n in WREATH_GRID])
    total = enum_seconds + seconds
    ok = all(results) and total < 60
    assert report(2, ok, f"{sum(results)}/{len(results)} (r, n) cells exact through Z^8, {total:.2f} s")


def test_3_moment_wreath(report, wreath_polys):
    polys, _ = wreath_polys
    results = [verify_moment_wreath(n, r, poly=polys[r, n]) for r, n in WREATH_GRID]
    ok = all(results)
    assert report(3, ok, f"{sum(results)}/{len(results)} cells equal by cross-multiplication")


def test_4_jfraction_expansion(report):
    def run():
        out = []
        for r in (1, 2, 3):
            for c in (1, 2):
                s = jfraction_expand(closed_form_coeffs(r, c, 4), 6)
                out.append(all(ff_equal(s[n], specialized_moment(n, r, c)) for n in range(7)))
        return out

    results, seconds = _timed(run)
    ok = all(results) and seconds < 10
    assert report(4, ok, f"{sum(results)}/6 (r, c) pairs match mu_0..mu_6, {seconds:.2f} s")


def test_5_roundtrip(report):
    results = []
    for r in (1, 2, 3):
        for c in (1, 2):
            J = moments_to_jfraction(specialized_moments(8, r, c), 3)
            results.append(jacobi_equal(J, closed_form_coeffs(r, c, 3), 3))
    assert report(5, all(results), f"{sum(results)}/6 (r, c) pairs recover b_0..b_3, lambda_0..lambda_3")


def test_6_q_zeta_values(report):
    def run():
        cells = [(n, c, r) for n in range(6) for r in (1, 2, 3) for c in range(1, r + 1)]
        first = [series_check(n, c, r, 24) and denominator_check(n, c, r) and verify_connexion_AB(n, c, r) for n, c, r in cells]
        second = [verify_connexion_AC(n, r) for r in (1, 2) for n in range(7)]
        return first + second

    results, seconds = _timed(run)
    ok = all(results) and seconds < 30
    assert report(6, ok, f"{sum(results)}/{len(results)} cells, {seconds:.2f} s")


def test_7_classical_identities(report):
    params = [QMonomial.q(i) for i in range(1, 5)] + [QMonomial(1, i, 1) for i in range(4)]
    chu = [q_chu_vandermonde(n, b, c) for n in range(9) for b in params for c in params]
    binom = [q_binomial_theorem_check(a, 10) for a in (QMonomial.zero(), QMonomial.q(1), QMonomial.q(2), QMonomial.q(3))]
    ok = all(chu) and all(binom)
    assert report(7, ok, f"q-Chu-Vandermonde {sum(chu)}/{len(chu)}, q-binomial {sum(binom)}/4 with stability guard")


def test_8_hankel(report):
    results = [hankel_product_check(m, r, c) for r in (1, 2) for c in (1, 2) for m in range(1, 5)]
    assert report(8, all(results), f"{sum(results)}/{len(results)} determinants equal the lambda products")


def test_9_orthogonality(report):
    results = [orthogonality_check(5, r, c) for r in (1, 2) for c in (1, 2)]
    assert report(9, all(results), f"{sum(results)}/4 (r, c) pairs orthogonal through p_5 with norms prod lambda_k")


def test_10_determinism(report):
    def strip(rows):
        return [{k: v for k, v in row.items() if k != "millis"} for row in rows]

    one = strip(run_suite("all", workers=1))
    eight = strip(run_suite("all", workers=8))
    ok = one == eight and all(row["pass"] for row in one)
    assert report(10, ok, f"{len(one)} cells, identical reports for 1 and 8 workers")


def _timed(fn):
    start = time.perf_counter()
    out = fn()
    return out, time.perf_counter() - start
