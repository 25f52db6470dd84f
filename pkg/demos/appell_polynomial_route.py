"""
The Appell polynomial route to gamma_n
======================================

There is a family of monic degree-n polynomials p_n, built from the
reciprocal-Gamma derivatives, with two striking properties: they form an
Appell sequence (p_n' = n p_{n-1}), and a single exponential moment of p_n
against the shifted Binet kernel produces gamma_n directly.
"""

import numpy as np

from stieltjes import brede_poly, gamma_brede, gamma_hasse, integrate_semiaxis

# %% The first few polynomials (ascending coefficients)
#
# p_0 = 1
# p_1 = z - gamma
# p_2 = z^2 - 2 gamma z + gamma^2 - zeta(2)

for n in range(4):
    coeffs = brede_poly(n).coefficients
    print(f"p_{n}:", "  ".join(f"{c:.15g}" for c in coeffs))

# %% The Appell property p_n' = n p_{n-1}

for n in (3, 7, 10):
    deriv = brede_poly(n).derivative().coefficients
    scaled = tuple(n * c for c in brede_poly(n - 1).coefficients)
    gap = max(abs(d - s) for d, s in zip(deriv, scaled))
    print(f"p_{n}' vs {n} p_{n - 1}: max coefficient gap {gap:.2g}")

# %% The unit moment: int_0^inf p_n(x - log z) e^{-z} dz = x^n
#
# This is the binomial convolution identity in integral clothing -- the
# Gamma-derivative moments of p_n collapse to a pure power.

for n in range(4):
    poly = brede_poly(n)
    for x in (0.0, 2.0):

        def f(z, poly=poly, x=x):
            zc = np.minimum(z, 700.0)
            return np.where(z > 700.0, 0.0, poly(x - np.log(zc)) * np.exp(-zc))

        moment = integrate_semiaxis(f).value
        print(f"n={n} x={x}: moment = {moment: .12f}   x^n = {x**n:.0f}")

# %% And the gamma-producing moment itself

for n in range(5):
    b = gamma_brede(n).value
    h = gamma_hasse(n, 1.0).value
    print(f"gamma_{n}: appell {b: .15g}   series {h: .15g}   diff {abs(b - h):.2g}")
