"""Tests for the base special functions and the shared constant table."""

import math

import pytest

from stieltjes import (
    constant_table,
    digamma,
    hurwitz_zeta_series,
    log_gamma,
    polygamma,
)

import refs


# ---------------------------------------------------------------------------
# constant table


def test_constant_table_scalars():
    table = constant_table()
    assert abs(table.euler_gamma - refs.CONST["euler_gamma"]) < 5e-16
    assert abs(table.log_2 - refs.CONST["log_2"]) < 5e-16
    assert abs(table.log_2pi - refs.CONST["log_2pi"]) < 5e-16


@pytest.mark.parametrize("k", range(2, 14))
def test_constant_table_zeta(k):
    assert abs(constant_table().zeta(k) - refs.ZETA_INT[k]) < 5e-16 * max(1.0, refs.ZETA_INT[k])


def test_constant_table_bounds():
    table = constant_table()
    with pytest.raises(ValueError):
        table.zeta(1)
    with pytest.raises(ValueError):
        table.zeta(table.k_max + 1)
    with pytest.raises(ValueError):
        constant_table(1)


def test_constant_table_is_cached():
    assert constant_table() is constant_table()


# ---------------------------------------------------------------------------
# gamma-family wrappers


def test_log_gamma_values():
    assert abs(log_gamma(1.0)) < 1e-15
    assert abs(log_gamma(2.0)) < 1e-15
    assert abs(log_gamma(0.5) - 0.5 * math.log(math.pi)) < 1e-15
    assert abs(log_gamma(5.0) - math.log(24.0)) < 1e-14


def test_digamma_values():
    g = refs.CONST["euler_gamma"]
    assert abs(digamma(1.0) + g) < 1e-15
    assert abs(digamma(2.0) - (1.0 - g)) < 1e-15
    # psi(1/2) = -gamma - 2 log 2
    assert abs(digamma(0.5) + g + 2.0 * refs.CONST["log_2"]) < 1e-14


def test_polygamma_values():
    # psi'(1) = zeta(2), psi''(1) = -2 zeta(3)
    assert abs(polygamma(1, 1.0) - refs.ZETA_INT[2]) < 1e-14
    assert abs(polygamma(2, 1.0) + 2.0 * refs.ZETA_INT[3]) < 1e-13


@pytest.mark.parametrize("fn", [log_gamma, digamma])
def test_positive_domain(fn):
    for bad in (0.0, -1.0, math.inf, math.nan):
        with pytest.raises(ValueError):
            fn(bad)


def test_polygamma_domain():
    with pytest.raises(ValueError):
        polygamma(0, 1.0)
    with pytest.raises(ValueError):
        polygamma(13, 1.0)
    with pytest.raises(ValueError):
        polygamma(1, -2.0)


# ---------------------------------------------------------------------------
# Hurwitz zeta series (s > 1)


@pytest.mark.parametrize("s,u", sorted(refs.HURWITZ_SERIES))
def test_hurwitz_series_against_references(s, u):
    ref = refs.HURWITZ_SERIES[(s, u)]
    assert abs(hurwitz_zeta_series(s, u) - ref) < 1e-12 * max(1.0, abs(ref))


def test_hurwitz_series_riemann_specials():
    assert abs(hurwitz_zeta_series(2.0, 1.0) - math.pi**2 / 6.0) < 1e-14
    # zeta(s, 1/2) = (2^s - 1) zeta(s)
    assert abs(hurwitz_zeta_series(2.0, 0.5) - 3.0 * refs.ZETA_INT[2]) < 1e-13


def test_hurwitz_series_shift_relation():
    """zeta(s, x) - zeta(s, x+1) = x^{-s}, the defining ladder step."""
    for s in (1.5, 3.0, 12.0):
        for x in (0.5, 1.0, 2.5):
            lhs = hurwitz_zeta_series(s, x) - hurwitz_zeta_series(s, x + 1.0)
            assert abs(lhs - x ** (-s)) < 1e-12


def test_hurwitz_series_domain():
    with pytest.raises(ValueError):
        hurwitz_zeta_series(1.0, 1.0)
    with pytest.raises(ValueError):
        hurwitz_zeta_series(0.5, 1.0)
    with pytest.raises(ValueError):
        hurwitz_zeta_series(2.0, 0.0)
