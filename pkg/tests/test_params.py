import math

import pytest
from hypothesis import given, strategies as st

from braggpair.params import InteractionParams, derive, incidence_angle


def test_pulse_area_direct_substitution():
    derived = derive(InteractionParams(v0=math.pi, tau=1.0))
    assert derived.w == math.pi / 4.0


def test_sigma_k_direct_substitution():
    derived = derive(InteractionParams(v0=1.0, tau=2.0, k_l=1.0, mass=1.0, hbar=1.0))
    assert derived.sigma_k == 0.5
    assert derived.sigma_v == 0.5


def test_recoil_frequency_and_phase():
    derived = derive(InteractionParams(v0=0.0, tau=1.0, k_l=2.0, mass=1.0, hbar=1.0))
    assert derived.epsilon == 2.0
    assert derived.epsilon_tau == 2.0


def test_zero_tau_flags_unbounded_window():
    derived = derive(InteractionParams(v0=1.0, tau=0.0))
    assert derived.unbounded_window
    assert math.isinf(derived.sigma_k)
    assert math.isinf(derived.sigma_v)
    assert derived.w == 0.0


@pytest.mark.parametrize(
    "kwargs",
    [
        {"v0": -1.0, "tau": 1.0},
        {"v0": 1.0, "tau": -0.5},
        {"v0": 1.0, "tau": 1.0, "k_l": 0.0},
        {"v0": 1.0, "tau": 1.0, "mass": -2.0},
        {"v0": 1.0, "tau": 1.0, "hbar": 0.0},
    ],
)
def test_invalid_inputs_rejected(kwargs):
    with pytest.raises(ValueError):
        InteractionParams(**kwargs)


def test_derive_is_pure():
    params = InteractionParams(v0=1.3, tau=0.7, k_l=2.1, mass=0.9, hbar=1.1)
    assert derive(params) == derive(params)


@given(
    v0=st.floats(min_value=1e-3, max_value=1e3),
    tau=st.floats(min_value=1e-3, max_value=1e3),
    scale=st.floats(min_value=1e-3, max_value=1e3),
)
def test_pulse_area_invariant_under_joint_rescaling(v0, tau, scale):
    base = derive(InteractionParams(v0=v0, tau=tau)).w
    scaled = derive(InteractionParams(v0=v0 * scale, tau=tau / scale)).w
    assert scaled == pytest.approx(base, rel=1e-12)


@given(
    tau=st.floats(min_value=1e-3, max_value=1e3),
    k_l=st.floats(min_value=1e-3, max_value=1e3),
    mass=st.floats(min_value=1e-3, max_value=1e3),
    hbar=st.floats(min_value=1e-3, max_value=1e3),
)
def test_window_widths_are_consistent(tau, k_l, mass, hbar):
    derived = derive(InteractionParams(v0=1.0, tau=tau, k_l=k_l, mass=mass, hbar=hbar))
    assert derived.sigma_k == pytest.approx(mass * derived.sigma_v / hbar, rel=1e-12)


def test_incidence_angle_examples():
    assert incidence_angle(0.0, 5.0) == 0.0
    assert incidence_angle(1.3, 1.3) == pytest.approx(math.pi / 4.0, abs=1e-15)
    # Frozen arctangent evaluation: atan(1/2)
    assert incidence_angle(1.0, 2.0) == pytest.approx(0.463647609000806, abs=1e-12)


def test_incidence_angle_rejects_grazing():
    with pytest.raises(ValueError):
        incidence_angle(1.0, 0.0)
    with pytest.raises(ValueError):
        incidence_angle(1.0, -2.0)
