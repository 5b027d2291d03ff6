import math

import pytest
from hypothesis import assume, given, strategies as st

from braggpair.errors import (
    DegenerateStateError,
    PauliForbiddenError,
    UnsupportedConfigurationError,
)
from braggpair.multi_mode import (
    GaussianMode,
    ScatterFractions,
    effective_coefficients,
    multimode_coefficients,
    overlap,
    probs_distinguishable_mm,
    probs_identical_mm,
    scatter_fractions,
)
from braggpair.single_mode import Scenario, Statistics, coefficients, probs_identical

IDENTICAL = (Statistics.BOSON, Statistics.FERMION)

angles = st.floats(min_value=0.0, max_value=2.0 * math.pi, allow_nan=False)
fractions = st.floats(min_value=0.0, max_value=1.0, allow_nan=False)


class TestGaussianMode:
    def test_positive_spread_required(self):
        with pytest.raises(ValueError):
            GaussianMode(center=0.0, spread=0.0)

    def test_norm_factor(self):
        mode = GaussianMode(center=0.0, spread=2.0)
        assert mode.norm_factor == pytest.approx((2.0 / (math.pi * 4.0)) ** 0.25)

    def test_mode_density_integrates_to_one(self):
        mode = GaussianMode(center=1.5, spread=0.8)
        nodes = [mode.center - 8.0 * mode.spread + i * 16.0 * mode.spread / 20000 for i in range(20001)]
        step = nodes[1] - nodes[0]
        total = sum(mode.amplitude(k) ** 2 for k in nodes) * step
        assert total == pytest.approx(1.0, abs=1e-9)


class TestScatterFractions:
    def test_window_equal_to_spread(self):
        # One-sigma Gaussian mass: erf(1/sqrt(2))
        result = scatter_fractions(GaussianMode(1.0, 1.0), 1.0)
        assert result.n_r == pytest.approx(0.682689492137086, abs=1e-12)
        assert result.n_r + result.n_t == pytest.approx(1.0, abs=1e-12)

    def test_narrow_beam_is_fully_scatterable(self):
        result = scatter_fractions(GaussianMode(1.0, 1e-4), 1.0)
        assert result.n_r == pytest.approx(1.0, abs=1e-12)
        assert result.n_t == pytest.approx(0.0, abs=1e-12)

    def test_unbounded_window(self):
        result = scatter_fractions(GaussianMode(1.0, 3.0), math.inf)
        assert result.n_r == 1.0
        assert result.n_t == 0.0

    def test_nonpositive_window_rejected(self):
        with pytest.raises(ValueError):
            scatter_fractions(GaussianMode(1.0, 1.0), 0.0)

    def test_fraction_invariants_enforced(self):
        with pytest.raises(ValueError):
            ScatterFractions(n_r=0.7, n_t=0.7)
        with pytest.raises(ValueError):
            ScatterFractions(n_r=-0.1, n_t=1.1)


class TestMultimodeCoefficients:
    def test_single_mode_limit(self):
        c = coefficients(1.1)
        d = multimode_coefficients(c, ScatterFractions(n_r=1.0, n_t=0.0))
        assert abs(d.c_plus) == pytest.approx(abs(c.c_plus), abs=1e-15)
        assert d.c_minus == c.c_minus

    def test_frozen_beam(self):
        c = coefficients(1.1)
        d = multimode_coefficients(c, ScatterFractions(n_r=0.0, n_t=1.0))
        assert abs(d.c_plus) == pytest.approx(1.0, abs=1e-15)
        assert d.c_minus == 0.0

    def test_half_scatterable_at_balanced_pulse(self):
        c = coefficients(math.pi / 4.0)
        d = multimode_coefficients(c, ScatterFractions(n_r=0.5, n_t=0.5))
        assert abs(d.c_minus) ** 2 == pytest.approx(0.25, abs=1e-15)

    @given(w=angles, n_t=fractions, phase=angles)
    def test_unit_norm(self, w, n_t, phase):
        d = effective_coefficients(w, n_t, phase)
        assert abs(d.c_plus) ** 2 + abs(d.c_minus) ** 2 == pytest.approx(1.0, abs=1e-12)

    def test_effective_coefficients_validates_fraction(self):
        with pytest.raises(ValueError):
            effective_coefficients(0.5, 1.2)


class TestOverlap:
    def test_identical_distributions(self):
        assert overlap(GaussianMode(1.0, 2.0), GaussianMode(1.0, 2.0)) == 1.0

    def test_frozen_value(self):
        # exp(-1/4) for centers 1 and 2 at spread 2
        value = overlap(GaussianMode(1.0, 2.0), GaussianMode(2.0, 2.0))
        assert value == pytest.approx(0.778800783071405, abs=1e-12)

    def test_distant_centers_vanish(self):
        assert overlap(GaussianMode(0.0, 1.0), GaussianMode(12.0, 1.0)) < 1e-60

    def test_unequal_spreads_rejected(self):
        with pytest.raises(UnsupportedConfigurationError):
            overlap(GaussianMode(0.0, 1.0), GaussianMode(0.0, 2.0))


class TestDistinguishable:
    def test_single_mode_reduction(self):
        from braggpair.single_mode import probs_distinguishable

        for w in (0.3, 1.0, 2.2):
            c = coefficients(w)
            d = effective_coefficients(w, 0.0)
            mm = probs_distinguishable_mm(d, d, Scenario.SAME_ARM)
            sm = probs_distinguishable(c, c, Scenario.SAME_ARM)
            for x, y in zip(mm.as_tuple(), sm.as_tuple()):
                assert x == pytest.approx(y, abs=1e-12)

    def test_no_scattering_keeps_both_forward(self):
        d = effective_coefficients(0.0, 0.01)
        dd = effective_coefficients(0.0, 0.8)
        table = probs_distinguishable_mm(d, dd, Scenario.SAME_ARM)
        assert table.p_ff == pytest.approx(1.0, abs=1e-15)

    def test_uniform_table_in_single_mode_limit(self):
        d = effective_coefficients(math.pi / 4.0, 0.0)
        table = probs_distinguishable_mm(d, d, Scenario.SAME_ARM)
        for entry in table.as_tuple():
            assert entry == pytest.approx(0.25, abs=1e-12)


class TestIdentical:
    def test_equal_coefficients_same_arm_matches_distinguishable(self):
        for w in (0.4, 1.2, 2.0):
            d = effective_coefficients(w, 0.2)
            dis = probs_distinguishable_mm(d, d, Scenario.SAME_ARM)
            for overlap_i in (0.0, 0.3, 1.0):
                for statistics in IDENTICAL:
                    if statistics is Statistics.FERMION and overlap_i == 1.0:
                        continue  # the Pauli-excluded preparation
                    table = probs_identical_mm(d, d, overlap_i, statistics, Scenario.SAME_ARM)
                    for x, y in zip(table.as_tuple(), dis.as_tuple()):
                        assert x == pytest.approx(y, abs=1e-12)

    @pytest.mark.parametrize("overlap_i", [0.0, 0.5, 1.0])
    @pytest.mark.parametrize("w", [0.5, math.pi / 4.0, 1.3])
    def test_equal_coefficients_opposite_arms_closed_form(self, w, overlap_i):
        d = effective_coefficients(w, 0.1)
        t2 = abs(d.c_plus) ** 2
        r2 = abs(d.c_minus) ** 2
        boson = probs_identical_mm(d, d, overlap_i, Statistics.BOSON, Scenario.OPPOSITE_ARMS)
        fermion = probs_identical_mm(d, d, overlap_i, Statistics.FERMION, Scenario.OPPOSITE_ARMS)
        assert boson.mixed == pytest.approx(t2 ** 2 + r2 ** 2 - 2.0 * overlap_i * t2 * r2, abs=1e-12)
        assert boson.p_ff == pytest.approx((1.0 + overlap_i) * t2 * r2, abs=1e-12)
        assert fermion.mixed == pytest.approx(t2 ** 2 + r2 ** 2 + 2.0 * overlap_i * t2 * r2, abs=1e-12)
        assert fermion.p_ff == pytest.approx((1.0 - overlap_i) * t2 * r2, abs=1e-12)

    def test_zero_overlap_reduces_to_distinguishable(self):
        for w in (0.3, 0.9, 1.7):
            d = effective_coefficients(w, 0.01)
            dd = effective_coefficients(w, 0.8)
            for scenario in Scenario:
                dis = probs_distinguishable_mm(d, dd, scenario)
                for statistics in IDENTICAL:
                    table = probs_identical_mm(d, dd, 0.0, statistics, scenario)
                    assert table.p_ff == pytest.approx(dis.p_ff, abs=1e-12)
                    assert table.mixed == pytest.approx(dis.mixed, abs=1e-12)
                    assert table.p_bb == pytest.approx(dis.p_bb, abs=1e-12)

    def test_full_overlap_reduces_to_single_mode(self):
        for w in (0.3, 0.9, 1.7):
            c = coefficients(w)
            d = effective_coefficients(w, 0.0)
            for scenario in Scenario:
                for statistics in IDENTICAL:
                    if statistics is Statistics.FERMION and scenario is Scenario.SAME_ARM:
                        continue
                    mm = probs_identical_mm(d, d, 1.0, statistics, scenario)
                    sm = probs_identical(c, statistics, scenario, perpendicular_equal=True)
                    for x, y in zip(mm.as_tuple(), sm.as_tuple()):
                        assert x == pytest.approx(y, abs=1e-12)

    def test_dip_fills_monotonically_as_overlap_degrades(self):
        d = effective_coefficients(math.pi / 4.0, 0.1)
        values = [
            probs_identical_mm(d, d, overlap_i, Statistics.BOSON, Scenario.OPPOSITE_ARMS).mixed
            for overlap_i in (1.0, 0.8, 0.5, 0.2, 0.0)
        ]
        assert all(a < b for a, b in zip(values, values[1:]))

    def test_partially_overlapping_fermions_can_share_a_beam(self):
        for overlap_i in (0.0, 0.5, 0.99):
            d = effective_coefficients(math.pi / 3.0, 0.1)
            table = probs_identical_mm(d, d, overlap_i, Statistics.FERMION, Scenario.OPPOSITE_ARMS)
            assert table.p_ff > 0.0
            assert table.p_bb > 0.0

    def test_identical_fermions_same_arm_pauli_forbidden(self):
        d = effective_coefficients(0.8, 0.1)
        with pytest.raises(PauliForbiddenError):
            probs_identical_mm(d, d, 1.0, Statistics.FERMION, Scenario.SAME_ARM)

    def test_fully_blocked_opposite_arms_degenerate(self):
        # Particle 1 never scatters, particle 2 always does: with full overlap
        # both fermions would exit the forward beam, which Pauli forbids, and
        # no other channel has weight.
        d = effective_coefficients(math.pi / 2.0, 1.0)
        dd = effective_coefficients(math.pi / 2.0, 0.0)
        with pytest.raises(DegenerateStateError):
            probs_identical_mm(d, dd, 1.0, Statistics.FERMION, Scenario.OPPOSITE_ARMS)

    def test_overlap_range_enforced(self):
        d = effective_coefficients(0.5, 0.1)
        with pytest.raises(ValueError):
            probs_identical_mm(d, d, 1.2, Statistics.BOSON, Scenario.SAME_ARM)

    def test_distinguishable_statistics_rejected(self):
        d = effective_coefficients(0.5, 0.1)
        with pytest.raises(ValueError):
            probs_identical_mm(d, d, 0.5, Statistics.DISTINGUISHABLE, Scenario.SAME_ARM)

    @given(w=angles, n_t=fractions, m_t=fractions, overlap_i=fractions,
           boson=st.booleans(), same_arm=st.booleans())
    def test_normalization(self, w, n_t, m_t, overlap_i, boson, same_arm):
        d = effective_coefficients(w, n_t)
        dd = effective_coefficients(w, m_t)
        statistics = Statistics.BOSON if boson else Statistics.FERMION
        scenario = Scenario.SAME_ARM if same_arm else Scenario.OPPOSITE_ARMS
        try:
            table = probs_identical_mm(d, dd, overlap_i, statistics, scenario)
        except (PauliForbiddenError, DegenerateStateError):
            assume(False)
            return
        assert abs(sum(table.as_tuple()) - 1.0) <= 1e-12
        assert table.p_fb == table.p_bf
