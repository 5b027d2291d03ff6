"""Error-function contract tests against independent oracles.

The oracles here are deliberately different constructions from the library's
series/continued-fraction implementation: the alternating Maclaurin series
summed to machine convergence, midpoint quadrature of the defining integral,
and the stdlib's erf as a third opinion.
"""
import math

import pytest
from hypothesis import given, strategies as st

from braggpair.special import erf, erfc


def erf_taylor(x: float) -> float:
    """Alternating series 2/sqrt(pi) * sum (-1)^n x^(2n+1) / (n! (2n+1)).

    Accurate to ~1e-13 for |x| <= 3; beyond that the alternating terms grow
    large before decaying and the cancellation destroys the oracle itself,
    so larger arguments are checked against quadrature instead.
    """
    total = 0.0
    power = x  # x^(2n+1) / n!
    n = 0
    while True:
        term = power / (2 * n + 1)
        new_total = total + term
        if new_total == total and n > 2:
            break
        total = new_total
        n += 1
        power *= -x * x / n
    return 2.0 / math.sqrt(math.pi) * total


def erf_midpoint(x: float, panels: int = 200_000) -> float:
    """Midpoint quadrature of 2/sqrt(pi) * integral_0^x exp(-u^2) du."""
    h = x / panels
    total = math.fsum(math.exp(-((i + 0.5) * h) ** 2) for i in range(panels))
    return 2.0 / math.sqrt(math.pi) * h * total


def test_erf_at_zero():
    assert erf(0.0) == 0.0


def test_erf_one_frozen_value():
    # Frozen from the Taylor oracle: erf(1) = 0.8427007929497149
    assert erf(1.0) == pytest.approx(0.842700792949715, abs=1e-12)
    assert erf(1.0) == pytest.approx(erf_taylor(1.0), abs=1e-13)


def test_erf_saturates():
    assert abs(erf(6.0) - 1.0) <= 1e-12
    assert abs(erf(-6.0) + 1.0) <= 1e-12


def test_erf_range_open_interval():
    for x in (0.5, 1.0, 3.0, 5.9):
        assert -1.0 < erf(x) < 1.0
        assert -1.0 < erf(-x) < 1.0


def test_erfc_at_zero():
    assert erfc(0.0) == 1.0


def test_erfc_two_frozen_value():
    # Frozen from the Taylor oracle + complement: erfc(2) = 0.0046777349810472...
    assert erfc(2.0) == pytest.approx(0.004677734981063, abs=1e-12)
    assert erfc(2.0) == pytest.approx(1.0 - erf_taylor(2.0), abs=1e-12)


@pytest.mark.parametrize("x", [0.1, 1.0, 3.0])
def test_erf_erfc_complement_identity(x):
    assert erf(x) + erfc(x) == pytest.approx(1.0, abs=1e-12)


def test_erfc_large_argument_no_cancellation():
    # 1 - erf(10) would be exactly 0 in floating point; the direct path is not.
    value = erfc(10.0)
    assert 0.0 < value < 1e-44
    assert value == pytest.approx(math.erfc(10.0), rel=1e-12)


@pytest.mark.parametrize("x", [-3.0, -2.0, -0.3, 0.4, 1.7, 2.9])
def test_erf_matches_taylor_oracle(x):
    assert erf(x) == pytest.approx(erf_taylor(x), abs=1e-12)


def test_erf_matches_stdlib_densely():
    worst = max(abs(erf(i * 0.01 - 7.0) - math.erf(i * 0.01 - 7.0)) for i in range(1401))
    assert worst <= 1e-13


@pytest.mark.parametrize("x", [0.5, 1.0, 2.0, 3.0, 4.0])
def test_erf_matches_midpoint_quadrature(x):
    assert erf(x) == pytest.approx(erf_midpoint(x), abs=1e-10)


@given(st.floats(min_value=-6.0, max_value=6.0, allow_nan=False))
def test_erf_odd_symmetry(x):
    assert abs(erf(-x) + erf(x)) <= 1e-15


@given(st.floats(min_value=-5.0, max_value=5.0, allow_nan=False))
def test_erfc_reflection(x):
    assert erfc(-x) == pytest.approx(2.0 - erfc(x), abs=1e-12)


def test_erf_strictly_increasing_on_grid():
    values = [erf(-4.0 + i * 0.02) for i in range(401)]
    assert all(a < b for a, b in zip(values, values[1:]))


@pytest.mark.parametrize("bad", [math.inf, -math.inf, math.nan])
def test_non_finite_inputs_rejected(bad):
    with pytest.raises(ValueError):
        erf(bad)
    with pytest.raises(ValueError):
        erfc(bad)
