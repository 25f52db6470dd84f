"""
Complete Bell polynomials, exactly
==================================

Y_n(x_1, ..., x_n) encodes the n-th derivative of exp(f) through the
derivatives of f.  The package carries two independent computation paths --
symbolic partition enumeration with integer coefficients, and the binomial
recurrence -- and everything downstream (Gamma derivatives, the moment
coefficients of the Stieltjes expansions) rests on their agreement.
"""

from fractions import Fraction

from stieltjes import (
    bell_number,
    complete_bell,
    eval_bell,
    gamma_derivative_at_one,
    inv_gamma_derivative_at_zero,
    partitions,
)

# %% Partition enumeration: the multiplicity vectors of n = 4
#
# Each vector (k_1, k_2, k_3, k_4) says how many parts of each size occur;
# sum_j j*k_j = 4 always.

for mult in partitions(4):
    print(mult)

# %% The symbolic expansion of Y_4
#
# Y_4 = x1^4 + 6 x1^2 x2 + 4 x1 x3 + 3 x2^2 + x4

poly = complete_bell(4)
for expo, coef in poly.terms:
    monomial = " ".join(f"x{j + 1}^{e}" if e > 1 else f"x{j + 1}" for j, e in enumerate(expo) if e)
    print(f"  {coef:2d} * {monomial}")

# %% Exact agreement of the two paths on rational input

xs = [Fraction(1, j + 1) for j in range(6)]
print("expansion :", complete_bell(6).evaluate(xs))
print("recurrence:", eval_bell(6, xs))

# %% All-ones arguments give the Bell numbers

print([bell_number(n) for n in range(8)])

# %% Polygamma arguments give Gamma^{(m)}(1) and the 1/Gamma derivatives
#
# Gamma'(1) = -gamma, Gamma''(1) = gamma^2 + zeta(2), and the convolution
# sum_k C(n,k) [1/Gamma]^{(k)} Gamma^{(n-k)}(1) collapses to delta_{n0}.

import math

for m in range(5):
    print(f"Gamma^({m})(1) = {gamma_derivative_at_one(m): .15g}")

for n in (1, 3, 5):
    conv = math.fsum(
        math.comb(n, k) * inv_gamma_derivative_at_zero(k) * gamma_derivative_at_one(n - k)
        for k in range(n + 1)
    )
    print(f"convolution n={n}: {conv:.2e}  (should vanish)")
