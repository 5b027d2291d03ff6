"""Parameter sweeps over the pulse area, figure presets, and the overlap estimator.

A sweep evaluates the exit-channel tables on an inclusive grid of pulse areas
and renders them as CSV: one row per w, and per requested statistics the three
observable columns ``<stat>_ff``, ``<stat>_mix``, ``<stat>_bb`` (both forward,
different beams, both backward).  Values are written with 15 significant
digits and line-feed newlines, so identical specs produce byte-identical
documents.

The named presets reproduce the standard curve families: same-arm and
opposite-arm single-mode sweeps, the multi-mode variants with their published
parameter sets, and the scattering-probability-versus-spread curve (a sweep
over sigma/sigma_k at fixed w = pi/4 instead of over w).
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import (
    DegenerateStateError,
    IllConditionedError,
    InconsistentMeasurementError,
    PauliForbiddenError,
)
from .multi_mode import GaussianMode, effective_coefficients, overlap, probs_distinguishable_mm, probs_identical_mm
from .single_mode import (
    ChannelTable,
    ScatterCoefficients,
    Scenario,
    Statistics,
    coefficients,
    probs_distinguishable,
    probs_identical,
)
from .special import erf

STAT_CODES = {
    Statistics.DISTINGUISHABLE: "dis",
    Statistics.BOSON: "bos",
    Statistics.FERMION: "fer",
}

DEFAULT_W_COUNT = 401


@dataclass(frozen=True)
class SweepSpec:
    """A channel-probability sweep over the pulse area w.

    Single-mode sweeps use equal perpendicular momenta (the configuration with
    exchange effects); multi-mode sweeps hold the frozen fractions (n_t, m_t)
    constant across the grid and take the exchange overlap from the
    perpendicular Gaussians (k0, k0_prime, mu).
    """

    scenario: Scenario
    statistics: tuple[Statistics, ...]
    w_start: float = 0.0
    w_stop: float = math.pi
    w_count: int = DEFAULT_W_COUNT
    multi_mode: bool = False
    n_t: float = 0.0
    m_t: float = 0.0
    k0: float = 0.0
    k0_prime: float = 0.0
    mu: float = 1.0

    def __post_init__(self) -> None:
        if len(self.statistics) == 0:
            raise ValueError("at least one statistics must be selected")
        if self.w_count < 2:
            raise ValueError("w_count must be at least 2")
        if not self.w_start < self.w_stop:
            raise ValueError("w_start must be below w_stop")
        if not (0.0 <= self.n_t <= 1.0 and 0.0 <= self.m_t <= 1.0):
            raise ValueError("n_t and m_t must lie in [0, 1]")
        if not self.mu > 0:
            raise ValueError("mu must be positive")

    def w_grid(self) -> list[float]:
        span = self.w_stop - self.w_start
        return [self.w_start + span * i / (self.w_count - 1) for i in range(self.w_count)]

    def overlap_value(self) -> float:
        if not self.multi_mode:
            return 1.0
        return overlap(GaussianMode(self.k0, self.mu), GaussianMode(self.k0_prime, self.mu))

    def table(self, statistics: Statistics, w: float) -> ChannelTable:
        """Channel table at one grid point; raises for excluded preparations."""
        if not self.multi_mode:
            if statistics is Statistics.DISTINGUISHABLE:
                c = coefficients(w)
                return probs_distinguishable(c, c, self.scenario)
            return probs_identical(coefficients(w), statistics, self.scenario, perpendicular_equal=True)
        d = effective_coefficients(w, self.n_t)
        dd = effective_coefficients(w, self.m_t)
        if statistics is Statistics.DISTINGUISHABLE:
            return probs_distinguishable_mm(d, dd, self.scenario)
        return probs_identical_mm(d, dd, self.overlap_value(), statistics, self.scenario)


@dataclass(frozen=True)
class RatioSweepSpec:
    """Scattering probability |d_minus|^2 versus the spread ratio sigma/sigma_k.

    Swept on a logarithmic grid at fixed pulse area, with the constant
    single-mode probability |c_minus|^2 as reference column.
    """

    w: float = math.pi / 4.0
    ratio_start: float = 1e-3
    ratio_stop: float = 10.0
    count: int = DEFAULT_W_COUNT

    def __post_init__(self) -> None:
        if self.count < 2:
            raise ValueError("count must be at least 2")
        if not 0.0 < self.ratio_start < self.ratio_stop:
            raise ValueError("need 0 < ratio_start < ratio_stop")

    def ratio_grid(self) -> list[float]:
        lo, hi = math.log(self.ratio_start), math.log(self.ratio_stop)
        return [math.exp(lo + (hi - lo) * i / (self.count - 1)) for i in range(self.count)]


PRESETS: dict[str, SweepSpec | RatioSweepSpec] = {
    # Same arm, single mode: bosons and distinguishable pairs coincide.
    "fig2": SweepSpec(
        scenario=Scenario.SAME_ARM,
        statistics=(Statistics.DISTINGUISHABLE, Statistics.BOSON),
    ),
    # Opposite arms, single mode: the dip for bosons, exclusion for fermions.
    "fig3": SweepSpec(
        scenario=Scenario.OPPOSITE_ARMS,
        statistics=(Statistics.DISTINGUISHABLE, Statistics.BOSON, Statistics.FERMION),
    ),
    # Multi-mode scattering probability versus spread ratio at w = pi/4.
    "fig4": RatioSweepSpec(),
    # Same arm, multi-mode, unequal frozen fractions.
    "fig5": SweepSpec(
        scenario=Scenario.SAME_ARM,
        statistics=(Statistics.DISTINGUISHABLE, Statistics.BOSON, Statistics.FERMION),
        multi_mode=True,
        n_t=0.01,
        m_t=0.8,
        k0=1.0,
        k0_prime=2.0,
        mu=2.0,
    ),
    # Opposite arms, multi-mode, equal coefficients for both particles.
    "fig6": SweepSpec(
        scenario=Scenario.OPPOSITE_ARMS,
        statistics=(Statistics.DISTINGUISHABLE, Statistics.BOSON, Statistics.FERMION),
        multi_mode=True,
        n_t=0.1,
        m_t=0.1,
        k0=1.0,
        k0_prime=2.0,
        mu=2.0,
    ),
}


def _fmt(value: float) -> str:
    return format(value, ".15g")


def sweep_columns(spec: SweepSpec) -> list[str]:
    names = ["w"]
    for statistics in spec.statistics:
        code = STAT_CODES[statistics]
        names.extend((f"{code}_ff", f"{code}_mix", f"{code}_bb"))
    return names


def sweep_csv(spec: SweepSpec | RatioSweepSpec) -> str:
    """Render a sweep as a deterministic CSV document.

    Statistics/scenario combinations without allowed outcomes (e.g. two
    same-arm single-mode fermions) emit ``nan`` cells plus a leading
    ``# pauli_forbidden: <stat>`` comment instead of fabricated zeros.
    """
    if isinstance(spec, RatioSweepSpec):
        return _ratio_sweep_csv(spec)

    grid = spec.w_grid()
    cells: dict[Statistics, list[tuple[float, float, float] | None]] = {}
    pauli_rows: dict[Statistics, int] = {stat: 0 for stat in spec.statistics}
    degenerate_rows: dict[Statistics, int] = {stat: 0 for stat in spec.statistics}
    for statistics in spec.statistics:
        column: list[tuple[float, float, float] | None] = []
        for w in grid:
            try:
                table = spec.table(statistics, w)
            except PauliForbiddenError:
                pauli_rows[statistics] += 1
                column.append(None)
            except DegenerateStateError:
                degenerate_rows[statistics] += 1
                column.append(None)
            else:
                column.append((table.p_ff, table.mixed, table.p_bb))
        cells[statistics] = column

    lines: list[str] = []
    for statistics in spec.statistics:
        if pauli_rows[statistics] == len(grid):
            lines.append(f"# pauli_forbidden: {STAT_CODES[statistics]}")
        elif pauli_rows[statistics] or degenerate_rows[statistics]:
            blocked = pauli_rows[statistics] + degenerate_rows[statistics]
            lines.append(f"# degenerate: {STAT_CODES[statistics]} rows={blocked}")
    lines.append(",".join(sweep_columns(spec)))
    nan_triplet = (math.nan, math.nan, math.nan)
    for row_index, w in enumerate(grid):
        row = [_fmt(w)]
        for statistics in spec.statistics:
            triplet = cells[statistics][row_index] or nan_triplet
            row.extend(_fmt(value) for value in triplet)
        lines.append(",".join(row))
    return "\n".join(lines) + "\n"


def _ratio_sweep_csv(spec: RatioSweepSpec) -> str:
    reference = math.sin(spec.w) ** 2
    lines = ["sigma_ratio,d_minus_sq,c_minus_sq"]
    for ratio in spec.ratio_grid():
        scatterable = erf(1.0 / (math.sqrt(2.0) * ratio))
        lines.append(f"{_fmt(ratio)},{_fmt(scatterable * reference)},{_fmt(reference)}")
    return "\n".join(lines) + "\n"


_INVPHI = (math.sqrt(5.0) - 1.0) / 2.0


def _golden_minimize(f, lo: float, hi: float, tol: float = 1e-11) -> float:
    """Golden-section bracket shrinking; assumes a single minimum in [lo, hi]."""
    a, b = lo, hi
    c = b - _INVPHI * (b - a)
    d = a + _INVPHI * (b - a)
    fc, fd = f(c), f(d)
    while b - a > tol:
        if fc < fd:
            b, d, fd = d, c, fc
            c = b - _INVPHI * (b - a)
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            d = a + _INVPHI * (b - a)
            fd = f(d)
    return 0.5 * (a + b)


def _refine_minimum(f, lo: float, hi: float, tol: float = 1e-12) -> float:
    """Refine a bracketed minimum by bisecting on the central-difference slope.

    Near a quadratic minimum the slope sign stays resolvable long after
    function-value comparisons drown in rounding noise, so this locates the
    minimizer to ~1e-11 even when f bottoms out at machine epsilon.
    """
    step = 1e-6

    def slope(w: float) -> float:
        return f(w + step) - f(w - step)

    s_lo, s_hi = slope(lo), slope(hi)
    if not (s_lo < 0.0 < s_hi):
        return _golden_minimize(f, lo, hi)
    a, b = lo, hi
    while b - a > tol:
        mid = 0.5 * (a + b)
        s = slope(mid)
        if s < 0.0:
            a = mid
        elif s > 0.0:
            b = mid
        else:
            return mid
    return 0.5 * (a + b)


def dip_find(spec: SweepSpec, tolerance: float) -> list[float]:
    """Locate pulse areas where the boson mixed channel dips below tolerance.

    Scans the spec's w grid for interior local minima and refines each bracket
    by slope bisection to well below 1e-10 in w.  Only minima whose refined
    value is below the tolerance are returned; none is not an error.
    """
    if Statistics.BOSON not in spec.statistics:
        raise ValueError("dip finding runs on boson statistics")
    if spec.scenario is not Scenario.OPPOSITE_ARMS:
        raise ValueError("dips occur in the opposite-arms configuration")

    def mixed(w: float) -> float:
        return spec.table(Statistics.BOSON, w).mixed

    grid = spec.w_grid()
    values = [mixed(w) for w in grid]
    dips: list[float] = []
    for i in range(1, len(grid) - 1):
        if values[i] <= values[i - 1] and values[i] <= values[i + 1]:
            w_star = _refine_minimum(mixed, grid[i - 1], grid[i + 1])
            if mixed(w_star) < tolerance and not any(abs(w_star - seen) < 1e-8 for seen in dips):
                dips.append(w_star)
    return dips


@dataclass(frozen=True)
class OverlapEstimate:
    """Result of inverting a measured mixed-channel probability to an overlap."""

    value: float
    raw: float
    clamped: bool


def overlap_estimate(measured_mixed: float, d: ScatterCoefficients) -> OverlapEstimate:
    """Infer the exchange overlap of two bosons from a measured dip depth.

    In the equal-coefficients opposite-arms regime the mixed channel is
    P = |d+|^4 + |d-|^4 - 2 I |d+|^2 |d-|^2, inverted here for I.  Raw values
    slightly outside [0, 1] (measurement noise) are clamped and flagged; far
    outside, the measurement contradicts the model and is rejected.
    """
    if not 0.0 <= measured_mixed <= 1.0:
        raise ValueError("measured_mixed must lie in [0, 1]")
    t2 = abs(d.c_plus) ** 2
    r2 = abs(d.c_minus) ** 2
    product = t2 * r2
    if product < 1e-12:
        raise IllConditionedError(
            "inversion is ill-conditioned where |d+|^2 |d-|^2 vanishes "
            "(pulse area near a multiple of pi/2)"
        )
    raw = (t2 ** 2 + r2 ** 2 - measured_mixed) / (2.0 * product)
    if raw < -0.05 or raw > 1.05:
        raise InconsistentMeasurementError(
            f"measured probability implies overlap {raw:.6g}, outside [-0.05, 1.05]"
        )
    value = min(max(raw, 0.0), 1.0)
    return OverlapEstimate(value=value, raw=raw, clamped=value != raw)
