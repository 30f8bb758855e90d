"""
Flag statistics on colored permutations
=======================================

Walks through the descent set and flag-major index of one colored
permutation, then builds the generating polynomial of (des, fmaj) over a
whole group G(r, n) and checks its Carlitz-MacMahon expansion.
"""
from qzeta import ColoredPermutation, descent_set, gen_poly, statistics
from qzeta.render import poly_text
from qzeta.wreath import carlitz_series
from qzeta.qseries import q_integer

# a colored permutation in window notation: value^color at each position
g = ColoredPermutation.from_window(5, [(4, 1), (3, 0), (2, 4), (1, 2)])
print("gamma       =", g)

# colored letters sit below the sentinel 0, so 0 > 4^1 gives a descent at 0;
# 3^0 > 2^4 gives one at 2, while 2^4 < 1^2 (higher color is lower)
print("Des(gamma)  =", sorted(descent_set(g)))
print("statistics  =", statistics(g))  # fmaj = r * maj + col = 5 * 2 + 7

# the generating polynomial sums Z^des q^fmaj over all r^n n! elements
for r, n in [(1, 3), (2, 2), (3, 2)]:
    print(f"G_{{{r},{n}}}(Z, q) =", poly_text(gen_poly(r, n)))

# dividing by (Z; q^r)_{n+1} and expanding in Z gives powers of q-integers
r, n = 2, 3
series = carlitz_series(r, n, 4)
for k in range(5):
    ok = series[k] == q_integer(r * k + 1) ** n
    print(f"Z^{k}: [{r * k + 1}]_q^{n}  {'ok' if ok else 'MISMATCH'}")
