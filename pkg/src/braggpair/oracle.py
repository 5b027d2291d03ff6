"""Independent verification paths for the channel tables and the overlap.

Nothing here reuses the closed-form channel algebra: identical-particle
tables are rebuilt from explicit two-particle tensor states, the overlap and
scatter fractions are recomputed by Simpson quadrature of their defining
integrals, and the distinguishable multi-mode tables are resampled by a
seeded Monte Carlo over the physical mode picture (modes inside the
scatterable window scatter with probability sin^2 w, modes outside never do).
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import PauliForbiddenError
from .multi_mode import GaussianMode
from .single_mode import ChannelTable, ScatterCoefficients, Scenario, Statistics, exchange_sign

_MIN_GRID_POINTS = 1000
_ZERO_NORM_TOL = 1e-12

# Ordered two-particle basis used throughout: (f,f), (f,b), (b,f), (b,b),
# where f/b are the physical +k_L / -k_L exit beams.


def _exit_amplitudes(c: ScatterCoefficients, incident_forward: bool) -> tuple[complex, complex]:
    # Amplitudes on the physical (f, b) beams: transmission keeps the
    # incident beam, scattering swaps it.
    if incident_forward:
        return (c.c_plus, c.c_minus)
    return (c.c_minus, c.c_plus)


@dataclass(frozen=True)
class TwoParticleState:
    """Product two-particle amplitudes plus the perpendicular exchange overlap.

    ``amplitudes[i, j]`` (flattened over the ordered basis above) is the
    amplitude for particle 1 exiting in beam i and particle 2 in beam j of the
    *unsymmetrized* product state; the exchanged amplitudes are its index
    transpose.  The perpendicular degrees of freedom enter only through the
    overlap scalar weighting the exchange cross terms.
    """

    amplitudes: tuple[complex, complex, complex, complex]
    overlap: float = 1.0

    @classmethod
    def from_single_particle(
        cls,
        first: tuple[complex, complex],
        second: tuple[complex, complex],
        overlap: float = 1.0,
    ) -> "TwoParticleState":
        a_f, a_b = first
        b_f, b_b = second
        return cls(
            amplitudes=(a_f * b_f, a_f * b_b, a_b * b_f, a_b * b_b),
            overlap=overlap,
        )

    def symmetrized_probabilities(self, statistics: Statistics) -> ChannelTable:
        """(Anti)symmetrize, normalize, and read |amplitude|^2 off per channel.

        With exchange overlap I, the unnormalized weight of channel (i, j) is
        |a_ij|^2 + |a_ji|^2 +- 2 I Re(conj(a_ij) a_ji); a vanishing total norm
        is the Pauli-excluded preparation.
        """
        sign = exchange_sign(statistics)
        direct = self.amplitudes
        swapped = (direct[0], direct[2], direct[1], direct[3])
        weights = [
            abs(a) ** 2 + abs(e) ** 2 + sign * 2.0 * self.overlap * (a.conjugate() * e).real
            for a, e in zip(direct, swapped)
        ]
        weights = [max(v, 0.0) for v in weights]
        norm = math.fsum(weights)
        if norm < _ZERO_NORM_TOL:
            raise PauliForbiddenError("(anti)symmetrized state has zero norm")
        p = [v / norm for v in weights]
        return ChannelTable(p_ff=p[0], p_fb=p[1], p_bf=p[2], p_bb=p[3])


def brute_force_identical(
    d: ScatterCoefficients,
    dd: ScatterCoefficients,
    overlap_i: float,
    statistics: Statistics,
    scenario: Scenario,
) -> ChannelTable:
    """Tensor-product reconstruction of an identical-particle channel table."""
    first = _exit_amplitudes(d, incident_forward=True)
    second = _exit_amplitudes(dd, incident_forward=scenario is Scenario.SAME_ARM)
    state = TwoParticleState.from_single_particle(first, second, overlap=overlap_i)
    return state.symmetrized_probabilities(statistics)


def brute_force_single_mode(
    c: ScatterCoefficients,
    statistics: Statistics,
    scenario: Scenario,
) -> ChannelTable:
    """Single-mode oracle: both particles share the coefficients c, full overlap."""
    return brute_force_identical(c, c, 1.0, statistics, scenario)


def _simpson_weights(n_points: int, h: float) -> np.ndarray:
    weights = np.ones(n_points)
    weights[1:-1:2] = 4.0
    weights[2:-1:2] = 2.0
    return weights * (h / 3.0)


def _simpson_nodes(lo: float, hi: float, grid_points: int) -> tuple[np.ndarray, np.ndarray]:
    if grid_points < _MIN_GRID_POINTS:
        raise ValueError(f"grid_points must be at least {_MIN_GRID_POINTS}")
    n = grid_points if grid_points % 2 == 1 else grid_points + 1  # even interval count
    nodes = np.linspace(lo, hi, n)
    return nodes, _simpson_weights(n, (hi - lo) / (n - 1))


def _gaussian_amplitude(mode: GaussianMode, k: np.ndarray) -> np.ndarray:
    return mode.norm_factor * np.exp(-((k - mode.center) ** 2) / mode.spread ** 2)


def fraction_quadrature(parallel: GaussianMode, sigma_k: float, grid_points: int = 2001) -> float:
    """Simpson quadrature of the mode density |g|^2 over the scatterable window.

    Cross-checks the erf closed form of the scatterable fraction.  An
    unbounded window integrates the whole beam (8 spreads is plenty for a
    Gaussian).
    """
    if math.isinf(sigma_k):
        lo = parallel.center - 8.0 * parallel.spread
        hi = parallel.center + 8.0 * parallel.spread
    else:
        if not sigma_k > 0:
            raise ValueError("sigma_k must be positive or unbounded")
        lo = parallel.center - 0.5 * sigma_k
        hi = parallel.center + 0.5 * sigma_k
    nodes, weights = _simpson_nodes(lo, hi, grid_points)
    density = _gaussian_amplitude(parallel, nodes) ** 2
    return float(weights @ density)


def _overlap_window(perp_a: GaussianMode, perp_b: GaussianMode) -> tuple[float, float]:
    mid = 0.5 * (perp_a.center + perp_b.center)
    half = 8.0 * max(perp_a.spread, perp_b.spread)
    return mid - half, mid + half


def overlap_quadrature(perp_a: GaussianMode, perp_b: GaussianMode, grid_points: int = 2001) -> float:
    """Exchange overlap via the factored square [integral G_a(K) G_b(K) dK]^2."""
    lo, hi = _overlap_window(perp_a, perp_b)
    nodes, weights = _simpson_nodes(lo, hi, grid_points)
    inner = float(weights @ (_gaussian_amplitude(perp_a, nodes) * _gaussian_amplitude(perp_b, nodes)))
    return inner * inner


def overlap_quadrature_2d(
    perp_a: GaussianMode, perp_b: GaussianMode, grid_points: int = 1001
) -> float:
    """Exchange overlap via genuine 2-D Simpson quadrature of the double integral."""
    lo, hi = _overlap_window(perp_a, perp_b)
    nodes, weights = _simpson_nodes(lo, hi, grid_points)
    ga = _gaussian_amplitude(perp_a, nodes)
    gb = _gaussian_amplitude(perp_b, nodes)
    # Integrand G_a(K) G_b(K') G_a(K') G_b(K) assembled on the full mesh.
    mesh = np.outer(ga * gb, ga * gb)
    return float(weights @ mesh @ weights)


@dataclass(frozen=True)
class MonteCarloResult:
    """Sampled channel table with per-entry binomial standard errors."""

    table: ChannelTable
    std_errors: tuple[float, float, float, float]
    samples: int
    seed: int
    metadata: dict = field(
        default_factory=lambda: {
            "generator": "numpy.random.Generator(PCG64)",
            "stream": "k_a, u_a, k_b, u_b (standard_normal then uniform per particle)",
        }
    )


def monte_carlo_distinguishable(
    parallel_a: GaussianMode,
    parallel_b: GaussianMode,
    sigma_k: float,
    w: float,
    scenario: Scenario,
    samples: int,
    seed: int,
) -> MonteCarloResult:
    """Sample two distinguishable multi-mode particles through the grating.

    Each particle draws a wavenumber from its mode density (std = spread/2);
    draws inside the window of width sigma_k around the mode center scatter
    with probability sin^2 w, the rest always transmit.  Deterministic for a
    given 64-bit seed; identical-particle interference is *not* samplable by
    independent draws, so this oracle covers distinguishable pairs only.
    """
    if samples <= 0:
        raise ValueError("samples must be positive")
    rng = np.random.default_rng(seed)
    p_scatter = math.sin(w) ** 2

    def reflected(mode: GaussianMode) -> np.ndarray:
        k = mode.center + 0.5 * mode.spread * rng.standard_normal(samples)
        u = rng.uniform(size=samples)
        if math.isinf(sigma_k):
            in_window = np.ones(samples, dtype=bool)
        else:
            in_window = np.abs(k - mode.center) <= 0.5 * sigma_k
        return in_window & (u < p_scatter)

    r_a = reflected(parallel_a)
    r_b = reflected(parallel_b)

    n_tt = int(np.count_nonzero(~r_a & ~r_b))
    n_tr = int(np.count_nonzero(~r_a & r_b))
    n_rt = int(np.count_nonzero(r_a & ~r_b))
    n_rr = samples - n_tt - n_tr - n_rt

    if scenario is Scenario.SAME_ARM:
        counts = {"ff": n_tt, "fb": n_tr, "bf": n_rt, "bb": n_rr}
    else:
        counts = {"fb": n_tt, "ff": n_tr, "bb": n_rt, "bf": n_rr}

    probs = {key: value / samples for key, value in counts.items()}
    errors = tuple(
        math.sqrt(probs[key] * (1.0 - probs[key]) / samples) for key in ("ff", "fb", "bf", "bb")
    )
    table = ChannelTable(
        p_ff=probs["ff"], p_fb=probs["fb"], p_bf=probs["bf"], p_bb=probs["bb"]
    )
    return MonteCarloResult(table=table, std_errors=errors, samples=samples, seed=seed)
