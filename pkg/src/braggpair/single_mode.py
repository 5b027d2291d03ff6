"""Single-mode two-particle scattering at a thick standing light wave.

Each particle incident at the first-order resonance of the grating ends up in
a superposition of the two coupled momentum orders with amplitudes

    c_plus  = exp(-i*epsilon*tau) * cos(w)      (keeps its incident order)
    c_minus = -1j * exp(-i*epsilon*tau) * sin(w)  (scattered to the opposite order)

so the grating acts as a two-port beam splitter with splitting ratio set by
the pulse area w.  This module evaluates the joint exit-channel probabilities
for a pair of particles: distinguishable pairs, and identical pairs (bosons or
fermions) where the exchange term interferes.

Channel convention: tables are indexed by the physical exit beams.  "f"
(forward) is the +k_L diffraction order and "b" (backward) the -k_L order,
independent of which order each particle came in on.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from enum import Enum

from .errors import PauliForbiddenError

_NORM_TOL = 1e-12


class Statistics(Enum):
    """Exchange statistics of the pair."""

    DISTINGUISHABLE = "dis"
    BOSON = "bos"
    FERMION = "fer"


class Scenario(Enum):
    """How the two particles enter the grating.

    SAME_ARM: both incident with parallel momentum +k_L.
    OPPOSITE_ARMS: parallel momenta +k_L and -k_L (the two-input beam-splitter
    configuration where Hong-Ou-Mandel-style dips appear).
    """

    SAME_ARM = "same"
    OPPOSITE_ARMS = "opposite"


def exchange_sign(statistics: Statistics) -> int:
    if statistics is Statistics.BOSON:
        return +1
    if statistics is Statistics.FERMION:
        return -1
    raise ValueError("exchange sign is defined for bosons and fermions only")


@dataclass(frozen=True)
class ScatterCoefficients:
    """Complex amplitude pair (c_plus, c_minus) with |c+|^2 + |c-|^2 = 1.

    Also reused for the effective multi-mode coefficients (d_plus, d_minus),
    which obey the same unit-norm constraint.
    """

    c_plus: complex
    c_minus: complex

    def __post_init__(self) -> None:
        norm = abs(self.c_plus) ** 2 + abs(self.c_minus) ** 2
        if abs(norm - 1.0) > _NORM_TOL:
            raise ValueError(f"|c+|^2 + |c-|^2 = {norm!r}, expected 1 within {_NORM_TOL}")

    @property
    def p_transmit(self) -> float:
        """Probability of keeping the incident momentum order."""
        return abs(self.c_plus) ** 2

    @property
    def p_reflect(self) -> float:
        """Probability of being scattered into the opposite order."""
        return abs(self.c_minus) ** 2


def coefficients(w: float, epsilon_tau: float = 0.0) -> ScatterCoefficients:
    """Single-mode amplitudes for pulse area w and accumulated phase epsilon*tau.

    The phase is global: it cancels in every probability below, and defaults
    to 0 when w is supplied directly rather than derived from (v0, tau).
    """
    phase = cmath.exp(-1j * epsilon_tau)
    return ScatterCoefficients(
        c_plus=phase * math.cos(w),
        c_minus=-1j * phase * math.sin(w),
    )


def _clip_unit(value: float, what: str) -> float:
    # Absorb rounding residue at the interval ends; anything larger is a bug.
    if -_NORM_TOL <= value < 0.0:
        return 0.0
    if 1.0 < value <= 1.0 + _NORM_TOL:
        return 1.0
    if not 0.0 <= value <= 1.0:
        raise ValueError(f"{what} = {value!r} outside [0, 1]")
    return value


@dataclass(frozen=True)
class ChannelTable:
    """Joint probabilities of the four exit channels.

    p_ff: both particles leave in the forward (+k_L) beam
    p_fb: particle 1 forward, particle 2 backward (-k_L)
    p_bf: particle 1 backward, particle 2 forward
    p_bb: both backward

    Entries always sum to 1 (the postselected set of detected pairs).  For
    identical particles the two cross channels are physically equivalent, so
    their combined probability is split evenly and p_fb == p_bf.
    """

    p_ff: float
    p_fb: float
    p_bf: float
    p_bb: float

    def __post_init__(self) -> None:
        for name in ("p_ff", "p_fb", "p_bf", "p_bb"):
            object.__setattr__(self, name, _clip_unit(getattr(self, name), name))
        total = self.p_ff + self.p_fb + self.p_bf + self.p_bb
        if abs(total - 1.0) > _NORM_TOL:
            raise ValueError(f"channel probabilities sum to {total!r}, expected 1")

    @property
    def mixed(self) -> float:
        """Combined probability of the particles exiting in different beams."""
        return self.p_fb + self.p_bf

    def as_tuple(self) -> tuple[float, float, float, float]:
        return (self.p_ff, self.p_fb, self.p_bf, self.p_bb)


def table_from_split_probabilities(
    a_transmit: float,
    a_reflect: float,
    b_transmit: float,
    b_reflect: float,
    scenario: Scenario,
) -> ChannelTable:
    """Map per-particle transmit/reflect probabilities onto physical channels.

    Transmission keeps the incident order, so which physical beam it feeds
    depends on the entry arm: with both particles in the +k_L arm the
    double-transmission channel is (f, f); with opposite arms it is (f, b).
    """
    if scenario is Scenario.SAME_ARM:
        return ChannelTable(
            p_ff=a_transmit * b_transmit,
            p_fb=a_transmit * b_reflect,
            p_bf=a_reflect * b_transmit,
            p_bb=a_reflect * b_reflect,
        )
    return ChannelTable(
        p_fb=a_transmit * b_transmit,
        p_ff=a_transmit * b_reflect,
        p_bb=a_reflect * b_transmit,
        p_bf=a_reflect * b_reflect,
    )


def probs_distinguishable(
    a: ScatterCoefficients,
    b: ScatterCoefficients,
    scenario: Scenario,
) -> ChannelTable:
    """Exit-channel table for two distinguishable particles.

    The particles scatter independently, so every entry is a product of
    one-particle probabilities; the same four numbers appear in both
    scenarios, attached to different physical channels.
    """
    return table_from_split_probabilities(
        a.p_transmit, a.p_reflect, b.p_transmit, b.p_reflect, scenario
    )


def probs_identical(
    c: ScatterCoefficients,
    statistics: Statistics,
    scenario: Scenario,
    perpendicular_equal: bool,
) -> ChannelTable:
    """Exit-channel table for two identical particles with equal pulse area.

    Single-mode perpendicular momenta K, K' enter only through whether they
    are equal: for K != K' the exchange term carries <K|K'> = 0 and the table
    collapses to the distinguishable one.  For K = K':

    * same arm, bosons: the direct and exchange terms are the same state, so
      the table again equals the distinguishable one;
    * same arm, fermions: the preparation itself is Pauli-forbidden;
    * opposite arms: the symmetrized amplitudes interfere, giving

          P(different beams) = |c+^2 + s c-^2|^2        (s = +1 bosons, -1 fermions)
          P(f, f) = P(b, b)  = |(1 + s) c+ c-|^2 / 2

      For bosons the mixed channel is cos^2(2w), vanishing at w = pi/4 + n*pi/2
      (the dip); fermions always exit in different beams.
    """
    sign = exchange_sign(statistics)
    if not perpendicular_equal:
        return probs_distinguishable(c, c, scenario)

    if scenario is Scenario.SAME_ARM:
        if statistics is Statistics.FERMION:
            raise PauliForbiddenError(
                "two fermions cannot be prepared in the same incident state "
                "(same arm, equal perpendicular momenta)"
            )
        return probs_distinguishable(c, c, scenario)

    # Opposite arms, K = K': squared amplitudes of the (anti)symmetrized
    # state, kept complex so the phase convention stays load-bearing, then
    # normalized by their explicit sum (the definition of the normalization
    # constant; algebraically 1/sqrt(2)).  For fermions this yields the exact
    # table (1/2, 1/2) across the two beams and 0 in the same-beam channels.
    weight_cross = abs(c.c_plus ** 2 + sign * c.c_minus ** 2) ** 2
    weight_same = abs((1 + sign) * c.c_plus * c.c_minus) ** 2
    total = 2.0 * (weight_cross + weight_same)
    return ChannelTable(
        p_ff=weight_same / total,
        p_fb=weight_cross / total,
        p_bf=weight_cross / total,
        p_bb=weight_same / total,
    )
