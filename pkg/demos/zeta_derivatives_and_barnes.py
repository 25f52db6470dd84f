"""
Zeta derivatives at s = 0 and the Barnes G-function
===================================================

The s-derivatives of the Hurwitz zeta function at s = 0 tie the zeta world
to the classical Gamma-function landscape: zeta'(0, u) = log Gamma(u) -
(1/2) log 2pi (Lerch), and zeta''(0, u) feeds the Barnes G-function.  Both
are computed here from Binet-kernel integrals, not from the identities, so
the identities act as end-to-end checks.
"""

import math

from stieltjes import barnes_g_log, delta_n, log_gamma, zeta_prime0, zeta_second0

LOG_2PI = math.log(2.0 * math.pi)

# %% Lerch's identity, computed vs closed form

print("u      zeta'(0,u)            logGamma(u) - log(2pi)/2   residual")
for u in (0.25, 0.5, 1.0, 2.0, 5.0):
    lhs = zeta_prime0(u)
    rhs = log_gamma(u) - 0.5 * LOG_2PI
    print(f"{u:<5g}  {lhs: .15g}   {rhs: .15g}   {abs(lhs - rhs):.1e}")

# %% Special values: zeta'(0) = -log(2pi)/2 and zeta'(0, 1/2) = -log(2)/2

print()
print("zeta'(0)      =", f"{zeta_prime0(1.0):.15g}", "  -log(2pi)/2 =", f"{-0.5 * LOG_2PI:.15g}")
print("zeta'(0,1/2)  =", f"{zeta_prime0(0.5):.15g}", "  -log(2)/2   =", f"{-0.5 * math.log(2):.15g}")

# %% The second derivative and its shift invariance at the unit step
#
# zeta''(0, u) - zeta''(0, u+1) = log^2 u, so u = 1 and u = 2 agree exactly.

print()
for u in (0.5, 1.0, 2.0):
    print(f"zeta''(0,{u}) = {zeta_second0(u):.15g}")

# %% Barnes G: log G(1+t), its recursion G(1+t) = Gamma(t) G(t), and the
# literal values G(2) = G(3) = 1, G(4) = 2

print()
for t in (1.0, 2.0, 3.0):
    print(f"log G(1+{t:g}) = {barnes_g_log(t): .15g}")
for t in (1.5, 2.5):
    residual = barnes_g_log(t) - barnes_g_log(t - 1.0) - log_gamma(t)
    print(f"recursion residual at t={t}: {residual:.1e}")

# %% The Maclaurin constants delta_0 = 1/2 (exactly, at any truncation) and
# delta_1 = log(2pi)/2 - 1 (as a limit)

print()
for m in (10, 10**4, 10**6):
    limit_form, closed_form = delta_n(0, m)
    print(f"delta_0 at m={m:>8d}: {limit_form}  (closed {closed_form})")
limit_form, closed_form = delta_n(1, 10**6)
print(f"delta_1 at m=10^6  : {limit_form:.10f}  (closed {closed_form:.10f})")
