"""
q-analogues of L-values at negative integers
============================================

Applying the q-difference operator Delta_z n times to z^c / (1 - z^r)
gives sum over m = c mod r of [m]_q^n z^m as an exact rational function.
We look at its denominator and tie it back to the moments and to the
colored-permutation polynomial.
"""
from qzeta import L_value, gen_poly, specialized_moment
from qzeta.fraction import equal, ff_subst_Z_to_zr
from qzeta.render import ff_latex, ff_text, poly_text
from qzeta.zeta import denominator_numerator, verify_connexion_AB, verify_connexion_AC

n, c, r = 2, 1, 2
f = L_value(n, c, r)
print("L_q(-2, 1, 2) unreduced:", ff_text(f, "z"))
print("reduced, as LaTeX:      ", ff_latex(f.reduce(), "z"))

# the first coefficients are [m]_q^2 for odd m
series = f.expand_in_Z(5)
for m in range(6):
    print(f"  z^{m}:", ff_text(series[m].reduce(), "z"))

# (z^r; q^r)_{n+1} clears the denominator, the (1 - q) powers cancel exactly
print("numerator over (z^2; q^2)_3:", poly_text(denominator_numerator(n, c, r), "z"))

# L_q(-n, c, r) / L_q(0, c, r) is the moment mu_n at Z = z^r
print("ratio is mu_2(Z = z^2):", verify_connexion_AB(n, c, r))
mu = ff_subst_Z_to_zr(specialized_moment(n, r, c), r)
print("  mu_2(z^2) =", ff_text(mu.reduce(), "z"))

# and for c = 1 it is z G_{r,n}(z^r, q) / (z^r; q^r)_{n+1}
print("combinatorial form holds:", verify_connexion_AC(n, r), " with G =", poly_text(gen_poly(r, n)))
print("same object either way:", equal(f, L_value(n, c + r, r)))
