"""Built-in verification suite behind the ``check`` command.

Re-derives the package's key invariants at runtime: table normalization,
exact exclusion/coincidence statements, the single-mode and distinguishable
limits, agreement with every oracle path, and output determinism.  Each check
produces a machine-readable ``PASS|FAIL <name> <detail>`` line; the suite
passes only if every check does.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

from .errors import DegenerateStateError, PauliForbiddenError
from .multi_mode import (
    GaussianMode,
    effective_coefficients,
    overlap,
    probs_distinguishable_mm,
    probs_identical_mm,
    scatter_fractions,
    multimode_coefficients,
)
from .oracle import (
    brute_force_identical,
    brute_force_single_mode,
    fraction_quadrature,
    monte_carlo_distinguishable,
    overlap_quadrature,
    overlap_quadrature_2d,
)
from .single_mode import Scenario, Statistics, coefficients, probs_distinguishable, probs_identical
from .special import erf
from .sweeps import PRESETS, SweepSpec, dip_find, overlap_estimate, sweep_csv

DEFAULT_SEED = 20240817
DEFAULT_SAMPLES = 200_000

_IDENTICAL = (Statistics.BOSON, Statistics.FERMION)
_FRACTION_GRID = (0.0, 0.1, 0.5, 0.8, 1.0)
_OVERLAP_GRID = (0.0, 0.1, 0.5, 0.8, 1.0)


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str

    def line(self) -> str:
        return f"{'PASS' if self.passed else 'FAIL'} {self.name} {self.detail}"


def _w_grid(count: int, stop: float = math.pi) -> list[float]:
    return [stop * i / (count - 1) for i in range(count)]


def _check_single_mode_normalization() -> CheckResult:
    worst = 0.0
    for w in _w_grid(401):
        c = coefficients(w)
        for scenario in Scenario:
            worst = max(worst, abs(sum(probs_distinguishable(c, c, scenario).as_tuple()) - 1.0))
            for statistics in _IDENTICAL:
                try:
                    table = probs_identical(c, statistics, scenario, perpendicular_equal=True)
                except PauliForbiddenError:
                    continue
                worst = max(worst, abs(sum(table.as_tuple()) - 1.0))
    return CheckResult("single_mode_normalization", worst <= 1e-12, f"max|sum-1|={worst:.3e}")


def _check_multi_mode_normalization() -> CheckResult:
    worst = 0.0
    checked = 0
    for w in _w_grid(101):
        for n_t in _FRACTION_GRID:
            d = effective_coefficients(w, n_t)
            for m_t in _FRACTION_GRID:
                dd = effective_coefficients(w, m_t)
                for overlap_i in _OVERLAP_GRID:
                    for scenario in Scenario:
                        worst = max(
                            worst,
                            abs(sum(probs_distinguishable_mm(d, dd, scenario).as_tuple()) - 1.0),
                        )
                        for statistics in _IDENTICAL:
                            try:
                                table = probs_identical_mm(d, dd, overlap_i, statistics, scenario)
                            except (PauliForbiddenError, DegenerateStateError):
                                continue
                            checked += 1
                            worst = max(worst, abs(sum(table.as_tuple()) - 1.0))
    return CheckResult(
        "multi_mode_normalization", worst <= 1e-12, f"tables={checked} max|sum-1|={worst:.3e}"
    )


def _check_hom_dip() -> CheckResult:
    worst = 0.0
    for w in _w_grid(401):
        table = probs_identical(coefficients(w), Statistics.BOSON, Scenario.OPPOSITE_ARMS, True)
        worst = max(worst, abs(table.mixed - math.cos(2.0 * w) ** 2))
    spec = SweepSpec(scenario=Scenario.OPPOSITE_ARMS, statistics=(Statistics.BOSON,))
    dips = dip_find(spec, tolerance=1e-9)
    dips_ok = len(dips) == 2 and abs(dips[0] - math.pi / 4) <= 1e-10 and abs(
        dips[1] - 3 * math.pi / 4
    ) <= 1e-10
    passed = worst <= 1e-12 and dips_ok
    return CheckResult("hom_dip", passed, f"max|mix-cos^2(2w)|={worst:.3e} dips={len(dips)}")


def _check_fermion_exclusion() -> CheckResult:
    exact = True
    for w in _w_grid(401):
        table = probs_identical(coefficients(w), Statistics.FERMION, Scenario.OPPOSITE_ARMS, True)
        if table.mixed != 1.0 or table.p_ff != 0.0 or table.p_bb != 0.0:
            exact = False
            break
    try:
        probs_identical(coefficients(0.3), Statistics.FERMION, Scenario.SAME_ARM, True)
        raised = False
    except PauliForbiddenError:
        raised = True
    return CheckResult(
        "fermion_exclusion", exact and raised, f"exact_mixed={exact} pauli_raised={raised}"
    )


def _check_boson_distinguishable_coincidence() -> CheckResult:
    worst_single = 0.0
    for w in _w_grid(401):
        c = coefficients(w)
        boson = probs_identical(c, Statistics.BOSON, Scenario.SAME_ARM, True)
        dis = probs_distinguishable(c, c, Scenario.SAME_ARM)
        for x, y in zip(boson.as_tuple(), dis.as_tuple()):
            worst_single = max(worst_single, abs(x - y))
    worst_multi = 0.0
    overlap_i = math.exp(-0.25)
    for w in _w_grid(101):
        d = effective_coefficients(w, 0.1)
        dis = probs_distinguishable_mm(d, d, Scenario.SAME_ARM)
        for statistics in _IDENTICAL:
            table = probs_identical_mm(d, d, overlap_i, statistics, Scenario.SAME_ARM)
            for x, y in zip(table.as_tuple(), dis.as_tuple()):
                worst_multi = max(worst_multi, abs(x - y))
    passed = worst_single <= 1e-12 and worst_multi <= 1e-12
    return CheckResult(
        "boson_distinguishable_coincidence",
        passed,
        f"single={worst_single:.3e} multi={worst_multi:.3e}",
    )


def _check_single_mode_limit() -> CheckResult:
    worst = 0.0
    for w in _w_grid(101):
        c = coefficients(w)
        d = effective_coefficients(w, 0.0)
        for scenario in Scenario:
            for statistics in _IDENTICAL:
                try:
                    mm = probs_identical_mm(d, d, 1.0, statistics, scenario)
                    sm = probs_identical(c, statistics, scenario, perpendicular_equal=True)
                except PauliForbiddenError:
                    continue
                for x, y in zip(mm.as_tuple(), sm.as_tuple()):
                    worst = max(worst, abs(x - y))
    # |d-|^2 against the single-mode 1/2 at w = pi/4, and monotone decay with
    # the spread ratio (probe points spaced so erf resolves the decrease).
    probe = (1e-3, 0.15, 0.3, 0.6, 1.0, 2.0, 4.0, 10.0)
    values = [erf(1.0 / (math.sqrt(2.0) * r)) * 0.5 for r in probe]
    limit_ok = abs(values[0] - 0.5) <= 1e-6
    decreasing = all(a > b for a, b in zip(values, values[1:]))
    passed = worst <= 1e-12 and limit_ok and decreasing
    return CheckResult(
        "single_mode_limit",
        passed,
        f"max_table_dev={worst:.3e} d_minus_sq(1e-3)={values[0]:.9f} decreasing={decreasing}",
    )


def _check_distinguishable_limit() -> CheckResult:
    worst = 0.0
    for w in _w_grid(101):
        d = effective_coefficients(w, 0.3)
        dd = effective_coefficients(w, 0.7)
        for scenario in Scenario:
            dis = probs_distinguishable_mm(d, dd, scenario)
            for statistics in _IDENTICAL:
                table = probs_identical_mm(d, dd, 0.0, statistics, scenario)
                worst = max(
                    worst,
                    abs(table.p_ff - dis.p_ff),
                    abs(table.mixed - dis.mixed),
                    abs(table.p_bb - dis.p_bb),
                )
    return CheckResult("distinguishable_limit", worst <= 1e-12, f"max_dev={worst:.3e}")


def _check_tensor_oracle() -> CheckResult:
    worst = 0.0
    for w in _w_grid(100, stop=2.0 * math.pi):
        c = coefficients(w, epsilon_tau=0.4)
        for scenario in Scenario:
            for statistics in _IDENTICAL:
                try:
                    closed = probs_identical(c, statistics, scenario, perpendicular_equal=True)
                    brute = brute_force_single_mode(c, statistics, scenario)
                except PauliForbiddenError:
                    continue
                for x, y in zip(closed.as_tuple(), brute.as_tuple()):
                    worst = max(worst, abs(x - y))
    # General-overlap spot checks against the multi-mode closed forms.
    for w in (0.4, 1.1, 2.3):
        d = effective_coefficients(w, 0.01)
        dd = effective_coefficients(w, 0.8)
        for overlap_i in (0.25, 0.7788007830714049):
            for scenario in Scenario:
                for statistics in _IDENTICAL:
                    closed = probs_identical_mm(d, dd, overlap_i, statistics, scenario)
                    brute = brute_force_identical(d, dd, overlap_i, statistics, scenario)
                    for x, y in zip(closed.as_tuple(), brute.as_tuple()):
                        worst = max(worst, abs(x - y))
    return CheckResult("tensor_oracle", worst <= 1e-12, f"max_dev={worst:.3e}")


def _check_overlap_quadrature() -> CheckResult:
    worst_closed = 0.0
    worst_pair = 0.0
    cases = [
        (GaussianMode(0.0, 1.0), GaussianMode(0.0, 1.0)),
        (GaussianMode(1.0, 2.0), GaussianMode(2.0, 2.0)),
        (GaussianMode(0.0, 0.7), GaussianMode(1.5, 0.7)),
    ]
    for a, b in cases:
        closed = overlap(a, b)
        factored = overlap_quadrature(a, b)
        two_d = overlap_quadrature_2d(a, b)
        worst_closed = max(worst_closed, abs(factored - closed), abs(two_d - closed))
        worst_pair = max(worst_pair, abs(factored - two_d))
    passed = worst_closed <= 1e-8 and worst_pair <= 1e-10
    return CheckResult(
        "overlap_quadrature", passed, f"vs_closed={worst_closed:.3e} pair={worst_pair:.3e}"
    )


def _check_fraction_quadrature() -> CheckResult:
    worst = 0.0
    mode = GaussianMode(1.0, 1.0)
    for sigma_k in (0.25, 1.0, 2.0, 8.0):
        closed = erf(sigma_k / (math.sqrt(2.0) * mode.spread))
        worst = max(worst, abs(fraction_quadrature(mode, sigma_k) - closed))
    return CheckResult("fraction_quadrature", worst <= 1e-8, f"max_dev={worst:.3e}")


def _check_monte_carlo(seed: int, samples: int) -> CheckResult:
    parallel_a = GaussianMode(1.0, 1.0)
    parallel_b = GaussianMode(-1.0, 0.5)
    sigma_k = 1.0
    w = math.pi / 3.0
    fractions_a = scatter_fractions(parallel_a, sigma_k)
    fractions_b = scatter_fractions(parallel_b, sigma_k)
    d = multimode_coefficients(coefficients(w), fractions_a)
    dd = multimode_coefficients(coefficients(w), fractions_b)
    worst_z = 0.0
    for scenario in Scenario:
        result = monte_carlo_distinguishable(
            parallel_a, parallel_b, sigma_k, w, scenario, samples, seed
        )
        exact = probs_distinguishable_mm(d, dd, scenario)
        for estimate, error, truth in zip(
            result.table.as_tuple(), result.std_errors, exact.as_tuple()
        ):
            if error > 0.0:
                worst_z = max(worst_z, abs(estimate - truth) / error)
    repeat = monte_carlo_distinguishable(
        parallel_a, parallel_b, sigma_k, w, Scenario.SAME_ARM, samples, seed
    )
    again = monte_carlo_distinguishable(
        parallel_a, parallel_b, sigma_k, w, Scenario.SAME_ARM, samples, seed
    )
    reproducible = repeat.table == again.table
    passed = worst_z <= 3.0 and reproducible
    return CheckResult(
        "monte_carlo",
        passed,
        f"samples={samples} worst_z={worst_z:.2f} reproducible={reproducible}",
    )


def _check_overlap_estimator() -> CheckResult:
    worst = 0.0
    for overlap_i in (0.1, 0.5, math.exp(-0.25), 1.0):
        for w in (math.pi / 6.0, math.pi / 3.0):
            d = effective_coefficients(w, 0.1)
            table = probs_identical_mm(d, d, overlap_i, Statistics.BOSON, Scenario.OPPOSITE_ARMS)
            estimate = overlap_estimate(table.mixed, d)
            worst = max(worst, abs(estimate.value - overlap_i))
    return CheckResult("overlap_estimator_roundtrip", worst <= 1e-10, f"max_dev={worst:.3e}")


def _check_dip_visibility() -> CheckResult:
    def mixed_minimum(n_t: float, overlap_i: float) -> float:
        values = []
        for w in _w_grid(401):
            d = effective_coefficients(w, n_t)
            values.append(
                probs_identical_mm(d, d, overlap_i, Statistics.BOSON, Scenario.OPPOSITE_ARMS).mixed
            )
        return min(values)

    partial = mixed_minimum(0.1, 0.5)
    full = mixed_minimum(0.0, 1.0)
    passed = partial > 0.0 and full <= 1e-12
    return CheckResult("dip_visibility", passed, f"min(I=0.5)={partial:.6f} min(I=1)={full:.3e}")


def _check_sweep_determinism() -> CheckResult:
    first = sweep_csv(PRESETS["fig5"])
    second = sweep_csv(PRESETS["fig5"])
    return CheckResult("sweep_determinism", first == second, f"bytes={len(first.encode())}")


def run_checks(seed: int = DEFAULT_SEED, samples: int = DEFAULT_SAMPLES) -> list[CheckResult]:
    """Run the whole suite; failures are reported, never raised."""
    checks: list[tuple[str, Callable[[], CheckResult]]] = [
        ("single_mode_normalization", _check_single_mode_normalization),
        ("multi_mode_normalization", _check_multi_mode_normalization),
        ("hom_dip", _check_hom_dip),
        ("fermion_exclusion", _check_fermion_exclusion),
        ("boson_distinguishable_coincidence", _check_boson_distinguishable_coincidence),
        ("single_mode_limit", _check_single_mode_limit),
        ("distinguishable_limit", _check_distinguishable_limit),
        ("tensor_oracle", _check_tensor_oracle),
        ("overlap_quadrature", _check_overlap_quadrature),
        ("fraction_quadrature", _check_fraction_quadrature),
        ("monte_carlo", lambda: _check_monte_carlo(seed, samples)),
        ("overlap_estimator_roundtrip", _check_overlap_estimator),
        ("dip_visibility", _check_dip_visibility),
        ("sweep_determinism", _check_sweep_determinism),
    ]
    results = []
    for name, check in checks:
        try:
            results.append(check())
        except Exception as exc:  # a crashed check is a failed check
            results.append(CheckResult(name, False, f"raised {type(exc).__name__}: {exc}"))
    return results


def render_report(results: list[CheckResult]) -> str:
    lines = [result.line() for result in results]
    passed = sum(result.passed for result in results)
    lines.append(f"{'PASS' if passed == len(results) else 'FAIL'} total {passed}/{len(results)}")
    return "\n".join(lines) + "\n"
