import math

import pytest
from hypothesis import given, strategies as st

from irsim.channel import ValidityError
from irsim.scenario import (
    LinkBudget,
    NodeConfig,
    RadioConfig,
    Scenario,
    link_budget,
    link_distances,
    link_violations,
    noise_power,
)
from reference_formulas import ref_betas, ref_pl_nlos


class TestLinkDistances:
    def test_colocated_point(self, colocated_scenario):
        d = link_distances(colocated_scenario)
        assert d["sr"] == (80.0, 80.0)
        assert d["rd"][0] == 10.0
        assert d["rd"][1] == math.sqrt(172.25)
        assert d["rd"][1] == pytest.approx(13.124404748406688, rel=1e-15)

    def test_destination_at_origin(self):
        d = link_distances(Scenario(d_sr=80.0, d1=0.0))
        assert d["rd"][0] == pytest.approx(80.62257748298549, rel=1e-15)
        assert d["sd"][0] == 10.0
        assert d["sd"][1] == math.sqrt(172.25)

    def test_cross_line_constant_is_exact(self):
        # 10^2 + (10 - 1.5)^2 = 172.25 must form bit-exact, so the 3D
        # distances at zero along-line separation are exactly sqrt(172.25).
        rd = link_distances(Scenario(d_sr=80.0, d1=80.0))["rd"]
        sd = link_distances(Scenario(d_sr=80.0, d1=0.0))["sd"]
        assert rd[1] == math.sqrt(172.25)
        assert sd[1] == math.sqrt(172.25)

    def test_coincident_nodes_rejected_downstream(self):
        s = Scenario(
            d_sr=80.0,
            d1=0.0,
            lateral_offset=0.0,
            destination=NodeConfig(height=10.0, antenna_gain_dbi=0.0),
        )
        assert link_distances(s)["sd"] == (0.0, 0.0)
        with pytest.raises(ValueError):
            link_budget(s, RadioConfig())

    @given(
        d_sr=st.floats(min_value=1.0, max_value=200.0),
        x=st.floats(min_value=0.0, max_value=100.0),
    )
    def test_reflection_symmetry_about_relay(self, d_sr, x):
        ahead = link_distances(Scenario(d_sr=d_sr, d1=d_sr + x))["rd"]
        behind = link_distances(Scenario(d_sr=d_sr, d1=max(d_sr - x, 0.0)))["rd"]
        if d_sr - x < 0.0:
            return  # reflected point is off the layout
        assert ahead[0] == pytest.approx(behind[0], rel=1e-12, abs=1e-12)
        assert ahead[1] == pytest.approx(behind[1], rel=1e-12, abs=1e-12)

    @given(
        d_sr=st.floats(min_value=0.5, max_value=300.0),
        d1=st.floats(min_value=0.0, max_value=300.0),
        offset=st.floats(min_value=0.0, max_value=50.0),
    )
    def test_pythagorean_consistency(self, d_sr, d1, offset):
        s = Scenario(d_sr=d_sr, d1=d1, lateral_offset=offset)
        heights = {
            "sr": s.source.height - s.relay.height,
            "rd": s.relay.height - s.destination.height,
            "sd": s.source.height - s.destination.height,
        }
        for link, (d2, d3) in link_distances(s).items():
            dz_sq = heights[link] ** 2
            assert d3 * d3 - d2 * d2 == pytest.approx(dz_sq, rel=1e-9, abs=1e-9)


class TestLinkBudget:
    def test_matches_reference_chain(self, colocated_scenario, fig4b_radio):
        budget = link_budget(colocated_scenario, fig4b_radio)
        bsr, brd, bsd = ref_betas(80.0, 80.0, 3.0)
        assert budget.beta_sr.linear == pytest.approx(bsr, rel=1e-12)
        assert budget.beta_rd.linear == pytest.approx(brd, rel=1e-12)
        assert budget.beta_sd.linear == pytest.approx(bsd, rel=1e-12)

    def test_direct_link_decomposition(self, colocated_scenario, fig4b_radio):
        budget = link_budget(colocated_scenario, fig4b_radio)
        pl = ref_pl_nlos(math.sqrt(6400.0 + 172.25), 3.0, 1.5)
        assert budget.beta_sd.db == pytest.approx(8.0 - pl, rel=1e-12)

    def test_composite_gain_is_exact_product(self, colocated_scenario, fig4b_radio):
        budget = link_budget(colocated_scenario, fig4b_radio)
        assert budget.beta_irs.linear == budget.beta_sr.linear * budget.beta_rd.linear

    @pytest.mark.parametrize("d1", [0.0, 160.0])
    def test_low_band_sweep_extremes_are_valid(self, d1):
        radio = RadioConfig(f_c_ghz=1.35)
        budget = link_budget(Scenario(d_sr=80.0, d1=d1), radio, validation="strict")
        assert isinstance(budget, LinkBudget)

    def test_determinism(self, colocated_scenario, fig4b_radio):
        a = link_budget(colocated_scenario, fig4b_radio)
        b = link_budget(colocated_scenario, fig4b_radio)
        assert a == b

    def test_strict_violation_names_link(self, fig4b_radio):
        with pytest.raises(ValidityError) as exc_info:
            link_budget(Scenario(d_sr=5.0, d1=80.0), fig4b_radio)
        assert exc_info.value.link == "sr"
        assert exc_info.value.quantity == "d_2d"

    def test_warn_mode_computes_anyway(self, fig4b_radio):
        s = Scenario(d_sr=5.0, d1=80.0)
        with pytest.warns(UserWarning, match="link 'sr'"):
            budget = link_budget(s, fig4b_radio, validation="warn")
        assert budget.beta_sr.linear > 0

    def test_off_mode_is_silent(self, fig4b_radio):
        budget = link_budget(Scenario(d_sr=5.0, d1=80.0), fig4b_radio,
                             validation="off")
        assert budget.beta_sr.linear > 0

    def test_unknown_mode_rejected(self, colocated_scenario, fig4b_radio):
        with pytest.raises(ValueError):
            link_budget(colocated_scenario, fig4b_radio, validation="loose")


class TestLinkViolations:
    def test_all_clear(self, colocated_scenario, fig4b_radio):
        assert link_violations(colocated_scenario, fig4b_radio) == {
            "sr": None, "rd": None, "sd": None,
        }

    def test_flags_offending_link(self, fig4b_radio):
        violations = link_violations(Scenario(d_sr=5.0, d1=80.0), fig4b_radio)
        assert violations["sr"] is not None
        assert violations["sr"].link == "sr"
        assert violations["rd"] is None
        assert violations["sd"] is None


class TestNoisePower:
    def test_default_budget_reproduces_minus_94_dbm(self):
        assert noise_power(RadioConfig(bandwidth_hz=10e6, noise_figure_db=10.0)) == -94.0

    def test_thermal_floor(self):
        assert noise_power(RadioConfig(bandwidth_hz=1.0, noise_figure_db=0.0)) == -174.0

    def test_20_mhz(self):
        assert noise_power(RadioConfig(bandwidth_hz=20e6)) == pytest.approx(
            -90.98970004336019, rel=1e-12
        )

    def test_override_wins(self):
        radio = RadioConfig(bandwidth_hz=20e6, noise_power_dbm=-94.0)
        assert noise_power(radio) == -94.0


class TestInvariantEnforcement:
    @pytest.mark.parametrize(
        "kwargs",
        [
            {"d_sr": 0.0, "d1": 0.0},
            {"d_sr": -1.0, "d1": 0.0},
            {"d_sr": 80.0, "d1": -0.5},
            {"d_sr": 80.0, "d1": 0.0, "lateral_offset": -1.0},
        ],
    )
    def test_scenario_bounds(self, kwargs):
        with pytest.raises(ValueError):
            Scenario(**kwargs)

    @pytest.mark.parametrize(
        "kwargs",
        [
            {"f_c_ghz": 0.2},
            {"f_c_ghz": 150.0},
            {"bandwidth_hz": 0.0},
            {"alpha": 0.0},
            {"alpha": 1.5},
            {"target_rate": 0.0},
        ],
    )
    def test_radio_bounds(self, kwargs):
        with pytest.raises(ValueError):
            RadioConfig(**kwargs)

    def test_node_height(self):
        with pytest.raises(ValueError):
            NodeConfig(height=0.0, antenna_gain_dbi=0.0)
