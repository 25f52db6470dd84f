"""Base special functions: log-gamma, digamma, polygamma, Hurwitz zeta (s > 1).

log Gamma, psi, and psi^{(p)} are thin, domain-checked wrappers over
``scipy.special`` (well-conditioned minimax implementations; re-deriving them
would add risk, not value).  The Hurwitz zeta function for s > 1 is an
explicit truncated series with an Euler-Maclaurin tail,

    zeta(s, x) = sum_{k=0}^{N-1} (x+k)^{-s} + M^{1-s}/(s-1) + M^{-s}/2
                 + sum_{j=1}^{6} B_{2j}/(2j)! * s(s+1)...(s+2j-2) * M^{-s-2j+1},

with M = x + N and Bernoulli numbers through B_12.  The split point is
chosen as M >= max(10, 1.7 s) so the first neglected term stays below 1e-13
relative over s in (1, 50]; analytic continuation to s < 1 lives in the
integral representations of :mod:`stieltjes.core`, not here.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Tuple

import numpy as np
from scipy import special as _sp

__all__ = [
    "ConstantTable",
    "constant_table",
    "log_gamma",
    "digamma",
    "polygamma",
    "hurwitz_zeta_series",
]

_MAX_POLYGAMMA = 12

# B_{2j}/(2j)! for j = 1..6: the Euler-Maclaurin / Binet-kernel coefficient
# family 1/12, -1/720, 1/30240, -1/1209600, 1/47900160, -691/1307674368000.
_BERN_OVER_FACT = (
    1.0 / 12.0,
    -1.0 / 720.0,
    1.0 / 30240.0,
    -1.0 / 1209600.0,
    1.0 / 47900160.0,
    -691.0 / 1307674368000.0,
)


@dataclass(frozen=True)
class ConstantTable:
    """High-accuracy scalar constants shared across the package.

    ``zeta_values[k-2]`` holds zeta(k) for k = 2..k_max; every entry is
    accurate to within one unit in the last binary64 place.
    """

    euler_gamma: float
    log_2: float
    log_2pi: float
    zeta_values: Tuple[float, ...]

    @property
    def k_max(self) -> int:
        return len(self.zeta_values) + 1

    def zeta(self, k: int) -> float:
        """zeta(k) for integer k in [2, k_max]."""
        if not 2 <= k <= self.k_max:
            raise ValueError(f"zeta({k}) is outside the table range [2, {self.k_max}]")
        return self.zeta_values[k - 2]


@lru_cache(maxsize=None)
def constant_table(k_max: int = 20) -> ConstantTable:
    """Immutable constant table with zeta(2)..zeta(k_max); cached per k_max."""
    if k_max < 2:
        raise ValueError("k_max must be at least 2")
    zetas = tuple(float(_sp.zeta(k, 1.0)) for k in range(2, k_max + 1))
    return ConstantTable(
        euler_gamma=float(np.euler_gamma),
        log_2=math.log(2.0),
        log_2pi=math.log(2.0 * math.pi),
        zeta_values=zetas,
    )


def _require_positive(x: float, name: str = "x") -> float:
    x = float(x)
    if not x > 0.0 or not math.isfinite(x):
        raise ValueError(f"{name} must be positive and finite, got {x!r}")
    return x


def log_gamma(x: float) -> float:
    """log Gamma(x) for x > 0; relative error <= 1e-13 on [1e-3, 1e6]."""
    return float(_sp.gammaln(_require_positive(x)))


def digamma(x: float) -> float:
    """psi(x) = d/dx log Gamma(x) for x > 0; psi(1) = -gamma."""
    return float(_sp.digamma(_require_positive(x)))


def polygamma(p: int, x: float) -> float:
    """psi^{(p)}(x) = (-1)^{p+1} p! zeta(p+1, x) for 1 <= p <= 12, x > 0."""
    if not 1 <= p <= _MAX_POLYGAMMA:
        raise ValueError(f"polygamma order must be in [1, {_MAX_POLYGAMMA}]")
    return float(_sp.polygamma(p, _require_positive(x)))


def hurwitz_zeta_series(s: float, x: float) -> float:
    """zeta(s, x) = sum_{n>=0} (n+x)^{-s} for s > 1, x > 0.

    Truncated series plus Euler-Maclaurin tail; relative error <= 1e-12 for
    s in (1, 50].  s <= 1 raises a domain error -- analytic continuation is
    deliberately the business of the integral representations.
    """
    s = float(s)
    x = _require_positive(x)
    if not s > 1.0:
        raise ValueError(f"series evaluation needs s > 1, got s = {s!r}")
    # Shift until M = x + N is comfortably inside the asymptotic regime.
    split = max(10.0, 1.7 * s)
    n_terms = max(0, int(math.ceil(split - x)))
    head = math.fsum((x + k) ** (-s) for k in range(n_terms))
    m = x + n_terms
    tail = m ** (1.0 - s) / (s - 1.0) + 0.5 * m ** (-s)
    rising = s  # s(s+1)...(s+2j-2), built incrementally
    power = m ** (-s - 1.0)
    m2 = m * m
    correction = 0.0
    for j, coef in enumerate(_BERN_OVER_FACT, start=1):
        correction += coef * rising * power
        rising *= (s + 2 * j - 1) * (s + 2 * j)
        power /= m2
    return head + tail + correction
