"""Two-particle Bragg scattering at an optical standing wave.

Core library for exit-channel detection probabilities of particle pairs
(distinguishable, bosons, fermions; single-mode and Gaussian multi-mode
beams), with independent oracles, figure-data sweeps, an exchange-overlap
estimator, and a self-check suite.  The HTTP front end lives in
``braggpair.service`` and the thin command-line client in ``braggpair.cli``.
"""

__version__ = "0.1.0"

from .errors import (
    BraggPairError,
    DegenerateStateError,
    IllConditionedError,
    InconsistentMeasurementError,
    PauliForbiddenError,
    UnsupportedConfigurationError,
)
from .params import DerivedQuantities, InteractionParams, derive, incidence_angle
from .special import erf, erfc
from .single_mode import (
    ChannelTable,
    ScatterCoefficients,
    Scenario,
    Statistics,
    coefficients,
    probs_distinguishable,
    probs_identical,
)
from .multi_mode import (
    GaussianMode,
    ScatterFractions,
    effective_coefficients,
    multimode_coefficients,
    overlap,
    probs_distinguishable_mm,
    probs_identical_mm,
    scatter_fractions,
)
from .oracle import (
    MonteCarloResult,
    TwoParticleState,
    brute_force_identical,
    brute_force_single_mode,
    fraction_quadrature,
    monte_carlo_distinguishable,
    overlap_quadrature,
    overlap_quadrature_2d,
)
from .sweeps import (
    PRESETS,
    OverlapEstimate,
    RatioSweepSpec,
    SweepSpec,
    dip_find,
    overlap_estimate,
    sweep_csv,
)
from .selfcheck import CheckResult, render_report, run_checks

__all__ = [
    "__version__",
    "BraggPairError",
    "DegenerateStateError",
    "IllConditionedError",
    "InconsistentMeasurementError",
    "PauliForbiddenError",
    "UnsupportedConfigurationError",
    "DerivedQuantities",
    "InteractionParams",
    "derive",
    "incidence_angle",
    "erf",
    "erfc",
    "ChannelTable",
    "ScatterCoefficients",
    "Scenario",
    "Statistics",
    "coefficients",
    "probs_distinguishable",
    "probs_identical",
    "GaussianMode",
    "ScatterFractions",
    "effective_coefficients",
    "multimode_coefficients",
    "overlap",
    "probs_distinguishable_mm",
    "probs_identical_mm",
    "scatter_fractions",
    "MonteCarloResult",
    "TwoParticleState",
    "brute_force_identical",
    "brute_force_single_mode",
    "fraction_quadrature",
    "monte_carlo_distinguishable",
    "overlap_quadrature",
    "overlap_quadrature_2d",
    "PRESETS",
    "OverlapEstimate",
    "RatioSweepSpec",
    "SweepSpec",
    "dip_find",
    "overlap_estimate",
    "sweep_csv",
    "CheckResult",
    "render_report",
    "run_checks",
]
