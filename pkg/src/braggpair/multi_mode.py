"""Gaussian multi-mode beams at the grating.

A realistic beam is a Gaussian distribution of wavenumber modes.  Only modes
within a window of width sigma_k around the resonant order can scatter, so the
beam splits into a scatterable fraction n_r = erf(sigma_k / (sqrt(2) sigma))
and a frozen fraction n_t = 1 - n_r.  Tracing the unresolved mode structure
out of the detection leaves effective two-port amplitudes

    d_plus  = exp(-i*epsilon*tau) * sqrt(n_t + n_r |c_plus|^2)
    d_minus = sqrt(n_r) * c_minus

which replace (c_plus, c_minus) in every channel formula.  For identical
particles the exchange term is weighted by the overlap of the two
perpendicular mode distributions,

    I = exp(-(K0 - K0')^2 / mu^2)   in (0, 1],

interpolating continuously between full exchange interference (I = 1) and
effectively distinguishable behavior (I -> 0).
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .errors import DegenerateStateError, PauliForbiddenError, UnsupportedConfigurationError
from .single_mode import (
    ChannelTable,
    ScatterCoefficients,
    Scenario,
    Statistics,
    coefficients,
    exchange_sign,
    probs_distinguishable,
)
from .special import erf, erfc

_FRACTION_TOL = 1e-12
_DEGENERATE_TOL = 1e-12


@dataclass(frozen=True)
class GaussianMode:
    """A 1-D Gaussian wavenumber amplitude g(k) ~ exp(-(k - center)^2 / spread^2).

    The normalization makes the mode density |g|^2 integrate to 1, so the same
    type serves for the parallel distribution (center near +-k_L, spread sigma)
    and the perpendicular one (center K0, spread mu).
    """

    center: float
    spread: float

    def __post_init__(self) -> None:
        if not self.spread > 0:
            raise ValueError("mode spread must be positive")

    @property
    def norm_factor(self) -> float:
        return (2.0 / (math.pi * self.spread ** 2)) ** 0.25

    def amplitude(self, k: float) -> float:
        return self.norm_factor * math.exp(-((k - self.center) ** 2) / self.spread ** 2)


@dataclass(frozen=True)
class ScatterFractions:
    """Fractions of a beam inside (n_r) and outside (n_t) the scatterable window."""

    n_r: float
    n_t: float

    def __post_init__(self) -> None:
        if not (0.0 <= self.n_r <= 1.0 and 0.0 <= self.n_t <= 1.0):
            raise ValueError("fractions must lie in [0, 1]")
        if abs(self.n_r + self.n_t - 1.0) > _FRACTION_TOL:
            raise ValueError("fractions must sum to 1")


def scatter_fractions(parallel: GaussianMode, sigma_k: float) -> ScatterFractions:
    """Split a parallel Gaussian beam by the scatterable window of width sigma_k.

    An unbounded window (tau = 0 limit) makes the whole beam scatterable.
    """
    if math.isinf(sigma_k):
        return ScatterFractions(n_r=1.0, n_t=0.0)
    if not sigma_k > 0:
        raise ValueError("sigma_k must be positive or unbounded")
    xi = sigma_k / (math.sqrt(2.0) * parallel.spread)
    return ScatterFractions(n_r=erf(xi), n_t=erfc(xi))


def multimode_coefficients(
    c: ScatterCoefficients,
    fractions: ScatterFractions,
    epsilon_tau: float = 0.0,
) -> ScatterCoefficients:
    """Effective two-port amplitudes of a multi-mode beam.

    The relative phase between the transmitted and scattered components is the
    single-mode one (it is the same for every mode in the window), so d_minus
    inherits the full complex c_minus while d_plus carries the global phase
    explicitly.
    """
    d_plus = cmath.exp(-1j * epsilon_tau) * math.sqrt(
        fractions.n_t + fractions.n_r * abs(c.c_plus) ** 2
    )
    d_minus = math.sqrt(fractions.n_r) * c.c_minus
    return ScatterCoefficients(c_plus=d_plus, c_minus=d_minus)


def effective_coefficients(w: float, n_t: float, epsilon_tau: float = 0.0) -> ScatterCoefficients:
    """Figure-mode entry point: build d_plus/d_minus from (w, n_t) directly.

    Sweeps hold the frozen fraction n_t constant while w varies; the physical
    route instead derives the fractions from (spread, sigma_k) via
    :func:`scatter_fractions`.
    """
    if not 0.0 <= n_t <= 1.0:
        raise ValueError("n_t must lie in [0, 1]")
    fractions = ScatterFractions(n_r=1.0 - n_t, n_t=n_t)
    return multimode_coefficients(coefficients(w, epsilon_tau), fractions, epsilon_tau)


def overlap(perp_a: GaussianMode, perp_b: GaussianMode) -> float:
    """Exchange overlap of two equal-spread perpendicular distributions.

    Closed form exp(-(K0 - K0')^2 / mu^2); the model assumes both spreads
    equal mu, so unequal spreads are rejected rather than approximated.
    """
    if perp_a.spread != perp_b.spread:
        raise UnsupportedConfigurationError(
            "perpendicular overlap requires equal spreads "
            f"(got {perp_a.spread!r} and {perp_b.spread!r})"
        )
    delta = perp_a.center - perp_b.center
    return math.exp(-(delta ** 2) / perp_a.spread ** 2)


def probs_distinguishable_mm(
    d: ScatterCoefficients,
    dd: ScatterCoefficients,
    scenario: Scenario,
) -> ChannelTable:
    """Distinguishable multi-mode table: the single-mode algebra with c -> d."""
    return probs_distinguishable(d, dd, scenario)


def probs_identical_mm(
    d: ScatterCoefficients,
    dd: ScatterCoefficients,
    overlap_i: float,
    statistics: Statistics,
    scenario: Scenario,
) -> ChannelTable:
    """Identical-particle multi-mode table with exchange overlap overlap_i.

    All cross terms are evaluated from the complex amplitudes; the squared
    normalization comes from requiring the four probabilities to sum to 1 on
    the postselected set.  A vanishing normalization denominator means the
    preparation has no allowed outcomes (two fermions in identical states, or
    a fully Pauli-blocked channel assignment) and raises instead of returning
    a table.
    """
    if not 0.0 <= overlap_i <= 1.0:
        raise ValueError("overlap must lie in [0, 1]")
    sign = exchange_sign(statistics)

    a_p, a_m = d.c_plus, d.c_minus
    b_p, b_m = dd.c_plus, dd.c_minus

    if scenario is Scenario.SAME_ARM:
        cross = (a_p.conjugate() * a_m * b_p * b_m.conjugate()).real
        same_f = (1.0 + sign * overlap_i) * abs(a_p) ** 2 * abs(b_p) ** 2
        same_b = (1.0 + sign * overlap_i) * abs(a_m) ** 2 * abs(b_m) ** 2
        mixed = (
            abs(a_p) ** 2 * abs(b_m) ** 2
            + abs(b_p) ** 2 * abs(a_m) ** 2
            + sign * 2.0 * overlap_i * cross
        )
    else:
        cross = (a_p.conjugate() * b_m * b_p.conjugate() * a_m).real
        same_f = (1.0 + sign * overlap_i) * abs(a_p) ** 2 * abs(b_m) ** 2
        same_b = (1.0 + sign * overlap_i) * abs(a_m) ** 2 * abs(b_p) ** 2
        mixed = (
            abs(a_p) ** 2 * abs(b_p) ** 2
            + abs(a_m) ** 2 * abs(b_m) ** 2
            + sign * 2.0 * overlap_i * cross
        )

    # Every unnormalized entry is a (sum or difference of moduli)^2 form, so
    # negatives can only be rounding residue of an exact zero.
    same_f, same_b, mixed = max(same_f, 0.0), max(same_b, 0.0), max(mixed, 0.0)

    # Dividing by the explicit sum implements the normalization condition
    # directly; the sum equals the closed-form denominator 1 +- I(...)^2, so
    # its vanishing is the degeneracy test.
    total = same_f + same_b + mixed
    if total < _DEGENERATE_TOL:
        if scenario is Scenario.SAME_ARM:
            raise PauliForbiddenError(
                "two fermions with fully overlapping states in the same arm: "
                "the antisymmetrized state has zero norm"
            )
        raise DegenerateStateError(
            "normalization denominator vanished: every exit channel is "
            "exchange-blocked for this preparation"
        )
    return ChannelTable(
        p_ff=same_f / total,
        p_fb=0.5 * mixed / total,
        p_bf=0.5 * mixed / total,
        p_bb=same_b / total,
    )
