"""Node placement geometry and per-link channel budgets.

The layout: a source and a relay/IRS sit ``d_sr`` apart on one street
line, the destination travels a distance ``d1`` along a parallel line
``lateral_offset`` away. The source-relay and relay-destination links see
LOS propagation, the direct source-destination link sees NLOS.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

from .channel import (
    FC_MAX_GHZ,
    FC_MIN_GHZ,
    Gain,
    PathLossInput,
    ValidityError,
    channel_gain,
    path_loss_los,
    path_loss_nlos,
)

VALIDATION_MODES = ("strict", "warn", "off")


@dataclass(frozen=True)
class NodeConfig:
    """A terminal: its height above ground and its antenna gain."""

    height: float
    antenna_gain_dbi: float

    def __post_init__(self):
        if not self.height > 0.0:
            raise ValueError(f"node height must be > 0, got {self.height!r}")


SOURCE_DEFAULT = NodeConfig(height=10.0, antenna_gain_dbi=8.0)
RELAY_DEFAULT = NodeConfig(height=10.0, antenna_gain_dbi=8.0)
DESTINATION_DEFAULT = NodeConfig(height=1.5, antenna_gain_dbi=0.0)


@dataclass(frozen=True)
class Scenario:
    """Placement of source, relay/IRS and destination (meters)."""

    d_sr: float
    d1: float
    lateral_offset: float = 10.0
    source: NodeConfig = SOURCE_DEFAULT
    relay: NodeConfig = RELAY_DEFAULT
    destination: NodeConfig = DESTINATION_DEFAULT

    def __post_init__(self):
        if not self.d_sr > 0.0:
            raise ValueError(f"d_sr must be > 0, got {self.d_sr!r}")
        if self.d1 < 0.0:
            raise ValueError(f"d1 must be >= 0, got {self.d1!r}")
        if self.lateral_offset < 0.0:
            raise ValueError(
                f"lateral_offset must be >= 0, got {self.lateral_offset!r}"
            )


@dataclass(frozen=True)
class RadioConfig:
    """Carrier, bandwidth, noise and rate/IRS parameters for one run."""

    f_c_ghz: float = 3.0
    bandwidth_hz: float = 10e6
    noise_figure_db: float = 10.0
    noise_power_dbm: float | None = None  # explicit override, else derived
    target_rate: float = 6.0  # bits/sec/Hz
    alpha: float = 1.0  # IRS amplitude reflection coefficient

    def __post_init__(self):
        if not (FC_MIN_GHZ <= self.f_c_ghz <= FC_MAX_GHZ):
            raise ValueError(
                f"f_c_ghz must be in [{FC_MIN_GHZ}, {FC_MAX_GHZ}], got {self.f_c_ghz!r}"
            )
        if not self.bandwidth_hz > 0.0:
            raise ValueError(f"bandwidth_hz must be > 0, got {self.bandwidth_hz!r}")
        if not 0.0 < self.alpha <= 1.0:
            raise ValueError(f"alpha must be in (0, 1], got {self.alpha!r}")
        if not self.target_rate > 0.0:
            raise ValueError(f"target_rate must be > 0, got {self.target_rate!r}")


@dataclass(frozen=True)
class LinkBudget:
    """Linear channel gains of the three physical links plus the IRS composite."""

    beta_sr: Gain
    beta_rd: Gain
    beta_sd: Gain
    beta_irs: Gain  # product beta_sr * beta_rd


def _pair(dx: float, lateral: float, dz: float) -> tuple[float, float]:
    # Grouping (lateral^2 + dz^2) keeps the cross-line constant exact
    # (100 + 72.25 = 172.25 with the default layout).
    d2 = math.hypot(dx, lateral)
    cross_sq = lateral * lateral + dz * dz
    d3 = d2 if dz == 0.0 else math.sqrt(dx * dx + cross_sq)
    return d2, d3


def link_distances(s: Scenario) -> dict[str, tuple[float, float]]:
    """(d_2d, d_3d) per link, keyed 'sr', 'rd', 'sd'."""
    return {
        "sr": _pair(s.d_sr, 0.0, s.source.height - s.relay.height),
        "rd": _pair(s.d1 - s.d_sr, s.lateral_offset,
                    s.relay.height - s.destination.height),
        "sd": _pair(s.d1, s.lateral_offset,
                    s.source.height - s.destination.height),
    }


def _link_inputs(s: Scenario, r: RadioConfig):
    """Per link: path-loss model, its input, and the (tx, rx) antenna gains."""
    d = link_distances(s)
    return {
        "sr": (
            path_loss_los,
            PathLossInput(*d["sr"], r.f_c_ghz, h_ut=s.relay.height,
                          h_bs=s.source.height),
            (s.source.antenna_gain_dbi, s.relay.antenna_gain_dbi),
        ),
        "rd": (
            path_loss_los,
            PathLossInput(*d["rd"], r.f_c_ghz, h_ut=s.destination.height,
                          h_bs=s.relay.height),
            (s.relay.antenna_gain_dbi, s.destination.antenna_gain_dbi),
        ),
        "sd": (
            path_loss_nlos,
            PathLossInput(*d["sd"], r.f_c_ghz, h_ut=s.destination.height,
                          h_bs=s.source.height),
            (s.source.antenna_gain_dbi, s.destination.antenna_gain_dbi),
        ),
    }


def link_violations(s: Scenario, r: RadioConfig) -> dict[str, ValidityError | None]:
    """Check each link against its model's validity region without computing gains."""
    out: dict[str, ValidityError | None] = {}
    for link, (model, inp, _gains) in _link_inputs(s, r).items():
        try:
            model(inp)
            out[link] = None
        except ValidityError as err:
            out[link] = err.annotated(link)
    return out


def link_budget(s: Scenario, r: RadioConfig, *,
                validation: str = "strict") -> LinkBudget:
    """Linear gains for all links of a scenario.

    ``validation`` is one of 'strict' (raise the first validity violation,
    annotated with the link), 'warn' (emit a warning per violation and
    compute anyway) or 'off' (compute silently).
    """
    if validation not in VALIDATION_MODES:
        raise ValueError(f"validation must be one of {VALIDATION_MODES}")
    gains: dict[str, Gain] = {}
    for link, (model, inp, (g_tx, g_rx)) in _link_inputs(s, r).items():
        if validation == "strict":
            try:
                pl = model(inp)
            except ValidityError as err:
                raise err.annotated(link) from None
        else:
            if validation == "warn":
                try:
                    model(inp)
                except ValidityError as err:
                    warnings.warn(str(err.annotated(link)), stacklevel=2)
            pl = model(inp, checked=False)
        gains[link] = channel_gain(pl, g_tx, g_rx)
    return LinkBudget(
        beta_sr=gains["sr"],
        beta_rd=gains["rd"],
        beta_sd=gains["sd"],
        beta_irs=Gain(gains["sr"].linear * gains["rd"].linear),
    )


def noise_power(r: RadioConfig) -> float:
    """Receiver noise power in dBm: thermal floor + bandwidth + noise figure."""
    if r.noise_power_dbm is not None:
        return r.noise_power_dbm
    return -174.0 + 10.0 * math.log10(r.bandwidth_hz) + r.noise_figure_db
