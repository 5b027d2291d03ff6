"""Physical inputs for the grating interaction and the scalars derived from them.

Everything downstream is controlled by the dimensionless pulse area
``w = v0*tau/(4*hbar)``, the accumulated phase ``epsilon*tau`` (a global,
unobservable phase) and the scatterable-window widths ``sigma_k``/``sigma_v``
set by the interaction time.  Defaults put ``hbar = mass = k_l = 1`` so a
caller only ever has to pick ``v0`` and ``tau``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass


@dataclass(frozen=True)
class InteractionParams:
    """Inputs in one consistent unit system.

    v0: depth of the standing-wave potential (energy)
    tau: duration of the interaction (time)
    k_l: wavenumber of the optical grating (1/length)
    mass: particle mass
    hbar: reduced Planck constant
    """

    v0: float
    tau: float
    k_l: float = 1.0
    mass: float = 1.0
    hbar: float = 1.0

    def __post_init__(self) -> None:
        if self.v0 < 0 or self.tau < 0:
            raise ValueError("v0 and tau must be non-negative")
        if self.k_l <= 0 or self.mass <= 0 or self.hbar <= 0:
            raise ValueError("k_l, mass and hbar must be positive")


@dataclass(frozen=True)
class DerivedQuantities:
    """Scalars derived from :class:`InteractionParams`.

    w: dimensionless pulse area, v0*tau/(4*hbar)
    epsilon: recoil angular frequency, hbar*k_l^2/(2*mass)
    epsilon_tau: accumulated phase epsilon*tau (dimensionless)
    sigma_k: width of the scatterable wavenumber window, mass/(tau*hbar*k_l);
        infinite for tau = 0 (every mode scatterable, the single-mode limit)
    sigma_v: the same window in velocity, 1/(tau*k_l)
    """

    w: float
    epsilon: float
    epsilon_tau: float
    sigma_k: float
    sigma_v: float

    @property
    def unbounded_window(self) -> bool:
        return math.isinf(self.sigma_k)


def derive(params: InteractionParams) -> DerivedQuantities:
    """Compute all derived scalars; pure, so equal inputs give equal outputs."""
    w = params.v0 * params.tau / (4.0 * params.hbar)
    epsilon = params.hbar * params.k_l ** 2 / (2.0 * params.mass)
    if params.tau == 0.0:
        sigma_k = math.inf
        sigma_v = math.inf
    else:
        sigma_k = params.mass / (params.tau * params.hbar * params.k_l)
        sigma_v = 1.0 / (params.tau * params.k_l)
    return DerivedQuantities(
        w=w,
        epsilon=epsilon,
        epsilon_tau=epsilon * params.tau,
        sigma_k=sigma_k,
        sigma_v=sigma_v,
    )


def incidence_angle(k_parallel: float, k_perp: float) -> float:
    """Angle between the incoming path and the grating normal, arctan(k_parallel/k_perp).

    Purely geometric; k_perp must be positive (grazing incidence is out of
    the model's domain).
    """
    if k_perp <= 0:
        raise ValueError("k_perp must be positive (grazing incidence not supported)")
    return math.atan2(k_parallel, k_perp)
