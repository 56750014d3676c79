import os

import pytest
from hypothesis import settings

from irsim.scenario import RadioConfig, Scenario

# Property tests behave identically on every machine and fresh clone by
# default; HYPOTHESIS_PROFILE=stress explores randomly and much harder.
settings.register_profile("deterministic", derandomize=True)
settings.register_profile("stress", max_examples=2000)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "deterministic"))


@pytest.fixture
def fig4b_radio() -> RadioConfig:
    """f_c = 3 GHz, B = 10 MHz, NF 10 dB (noise -94 dBm), rate 6, alpha 1."""
    return RadioConfig()


@pytest.fixture
def colocated_scenario() -> Scenario:
    """Destination directly opposite the relay/IRS: d_sr = d1 = 80 m."""
    return Scenario(d_sr=80.0, d1=80.0)
