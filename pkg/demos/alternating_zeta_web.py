"""
The alternating Hurwitz zeta function and its closed-form web
=============================================================

zeta_a(s, x) = sum_k (-1)^k (x+k)^{-s} has no pole at s = 1, and its
s-derivatives there are geometrically convergent damped binomial sums.
Expanding the parity split 2^{-s}[zeta(s, x/2) - zeta(s, (1+x)/2)] about
s = 1 turns those sums into closed forms for Euler's constant, gamma_1,
gamma_p(1/2), and sums of gamma_p over rational arguments.
"""

import math

from stieltjes import (
    alt_deriv_at_1,
    alt_zeta,
    alt_zeta_hasse,
    euler_constant_59,
    gamma1_via_alt,
    gamma_half_closed,
    gamma_value,
    half_shift_check,
    stieltjes_sum_over_fractions,
)

# %% x = 1 is the Dirichlet eta function: eta(1) = log 2, eta(2) = pi^2/12

print("eta(1) =", f"{alt_zeta(1.0, 1.0):.15g}", "  log 2    =", f"{math.log(2):.15g}")
print("eta(2) =", f"{alt_zeta(2.0, 1.0):.15g}", "  pi^2/12  =", f"{math.pi**2 / 12:.15g}")

# %% The damped binomial sum agrees with the parity split for every s

print()
for s in (0.5, 1.5, 3.0):
    a = alt_zeta_hasse(s, 1.0)
    b = alt_zeta(s, 1.0)
    print(f"s={s}: damped sum {a:.15g}   parity split {b:.15g}   diff {abs(a - b):.1e}")

# %% Derivatives at s = 1, two independent ways
#
# The Stieltjes form expands the parity split: (1/2) sum_k C(n,k)
# log^{n-k}(2) [gamma_k(x/2) - gamma_k((1+x)/2)]; the damped sum needs no
# gamma values at all.  n = 1, x = 1 is -eta'(1) = log^2(2)/2 - gamma log 2.

print()
for n in range(4):
    s_form, h_form = alt_deriv_at_1(n, 1.0)
    print(f"n={n}: stieltjes {s_form: .15g}   damped {h_form: .15g}")

# %% Euler's constant and gamma_1 from the damped sums alone

g = euler_constant_59()
print()
print("gamma   from damped sums:", f"{g:.15g}")
print("gamma_1 from damped sums:", f"{gamma1_via_alt():.15g}")
print("gamma_1 from series     :", f"{gamma_value(1, 1.0):.15g}")

# %% gamma_p(1/2) in closed form vs the direct series route

print()
for p in range(4):
    closed = gamma_half_closed(p)
    direct = gamma_value(p, 0.5)
    print(f"gamma_{p}(1/2): closed {closed: .15g}   direct {direct: .15g}")

# %% Sums over rational arguments r/q collapse to logs and gamma values

print()
for p, q in [(0, 3), (1, 4), (2, 2)]:
    closed, direct = stieltjes_sum_over_fractions(p, q)
    print(f"sum_r gamma_{p}(r/{q}): closed {closed: .15g}   direct {direct: .15g}")

# %% The half-shift relation gamma_k(3/2) - gamma_k(1/2) = (-1)^{k+1} 2 log^k 2

print()
for k in range(4):
    print(f"half-shift residual k={k}: {half_shift_check(k):.1e}")
