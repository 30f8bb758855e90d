"""
Moments, orthogonal polynomials and J-fractions
===============================================

The shifted little q-Jacobi weight has moments
mu_n = (1 - Z) sum_k [rk + c]_q^n Z^k. This script computes them exactly,
expands the closed-form J-fraction back into moments, recovers the
recurrence from the moments alone, and checks the Hankel determinants.
"""
from qzeta import (
    closed_form_coeffs,
    hankel_det,
    jfraction_expand,
    moments_to_jfraction,
    specialized_moments,
)
from qzeta.cfrac import jacobi_equal
from qzeta.fraction import equal
from qzeta.render import ff_text

r, c = 2, 1
mu = specialized_moments(7, r, c)
for n in range(3):
    print(f"mu_{n} =", ff_text(mu[n].reduce()))

# closed-form recurrence coefficients
J = closed_form_coeffs(r, c, 4)
print("b_0      =", ff_text(J.b[0].reduce()))
print("lambda_1 =", ff_text(J.lam[1].reduce()))

# lambda_0 / (1 - b_0 t - lambda_1 t^2 / (1 - b_1 t - ...)) generates the moments
s = jfraction_expand(J, 6)
print("J-fraction reproduces mu_0..mu_6:", all(equal(s[n], mu[n]) for n in range(7)))

# the inverse direction goes through Hankel determinants of the moments
recovered = moments_to_jfraction(specialized_moments(8, r, c), 3)
print("recurrence recovered from moments:", jacobi_equal(recovered, closed_form_coeffs(r, c, 3), 3))

# det(mu_{i+j}) factors as prod lambda_i^(m-i)
for m in range(1, 5):
    rhs = 1
    for i in range(1, m):
        rhs = J.lam[i] ** (m - i) * rhs
    print(f"H_{m} = prod lambda:", equal(hankel_det(mu.mu, m), rhs))
