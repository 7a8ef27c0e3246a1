"""
Exact arithmetic and the spin module
====================================

Everything in this package is computed over the field Q(i, sqrt 2): no
floats, no rounding, every equality is a theorem about the printed
objects.  This script builds a few scalars, then the spin module in
dimension 7 and its Clifford multiplication.
"""

# scalars are four rational coordinates over {1, i, sqrt2, i sqrt2};
# construction accepts ints, fraction strings, and the r2/ir2 slots
from sasakispin.scalars import HALF_SQRT2, I, ONE, SQRT2, Scalar

x = Scalar("3/4") + SQRT2 * Scalar("1/2")
print("x          =", x)
print("x * x      =", x * x)
print("1/x        =", ONE / x)
print("i^2        =", I * I)
print("(r2/2)^2   =", HALF_SQRT2 * HALF_SQRT2)

# the spin module for a (4n-1)-manifold is the exterior algebra on n-1
# anticommuting generators tensored with a 4-dimensional core; spinors
# print as combinations of monomials y_S
from sasakispin.spin import clifford_vector, spinor_str, spinor_unit

n = 2                       # dim 7 = 4 n - 1
one = spinor_unit(n)
print("\nvacuum spinor:", spinor_str(one))

# Clifford multiplication by the first frame vector acts as i
e1 = clifford_vector(n, 1)
print("e_1 . 1      =", spinor_str(e1.apply(one)))

# frame vectors anticommute and square to -1: e_s e_t + e_t e_s = -2 d_st
from sasakispin.spin import SpinOperator

e4, e5 = clifford_vector(n, 4), clifford_vector(n, 5)
anti = e4 @ e5 + e5 @ e4
print("e_4 e_5 + e_5 e_4 is zero:", anti == SpinOperator.zero(n))
sq = e4 @ e4
print("e_4 e_4 = -id:", sq == SpinOperator.identity(n).scale(Scalar(-1)))
