"""Exact q-series computations around colored permutations, little q-Jacobi
moments, their J-fractions and q-analogues of L-values at negative integers."""
from .errors import (
    BudgetExceeded,
    DegenerateParameters,
    NonExpandable,
    NonInvertibleLeadingTerm,
    NotDivisible,
    NotRepresentable,
    OrderMismatch,
    QZetaError,
    SingularHankel,
    ZeroAlpha,
)
from .poly import LaurentPoly, det_bareiss, poly_add, poly_divexact, poly_mul
from .fraction import (
    FactoredFraction,
    RationalFunction,
    equal,
    ff_add,
    ff_equal,
    ff_expand_in_Z,
    ff_mul,
    ff_subst_Z_to_zr,
)
from .series import TruncatedSeries
from .qseries import (
    QMonomial,
    little_jacobi_explicit,
    poch_reciprocal,
    q_binomial_theorem_check,
    q_chu_vandermonde,
    q_integer,
    q_pochhammer,
)
from .wreath import ColoredPermutation, Statistics, descent_set, gen_poly, statistics, verify_carlitz
from .moments import (
    JacobiData,
    MomentSequence,
    classical_moment,
    hankel_det,
    hankel_product_check,
    monic_polynomials,
    orthogonality_check,
    shifted_moment,
    specialized_moment,
    specialized_moments,
    verify_moment_wreath,
)
from .cfrac import closed_form_b, closed_form_coeffs, closed_form_lambda, jfraction_expand, moments_to_jfraction
from .zeta import (
    L_value,
    delta_z,
    denominator_check,
    series_check,
    verify_connexion_AB,
    verify_connexion_AC,
)
from .render import ff_from_json, render, to_json

__version__ = "0.1.0"
