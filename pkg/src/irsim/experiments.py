"""Grid studies over the placement geometry.

Three deterministic experiments: required power versus destination travel
d1, minimum IRS element count versus source-surface separation d_sr, and
an exhaustive search for the largest d_sr at which a small surface still
undercuts both baseline schemes. Every grid point is independent; rows
are emitted in sorted grid order.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

from .channel import ValidityError
from .power import (
    ElementSearchCapError,
    IrsConfig,
    N_SEARCH_CAP,
    dbm_to_watts,
    n_min_search,
    p_df,
    p_irs,
    p_siso,
    watts_to_dbm,
)
from .scenario import RadioConfig, Scenario, link_budget, link_violations, \
    noise_power

NO_RESULT = -1  # sentinel: no qualifying value within the search bounds

DEFAULT_N_ELEMENTS = (25, 50, 80, 150)
DEFAULT_RATIOS = (0.5, 0.75, 1.25, 1.5)
DEFAULT_RATES = (5.0, 6.0, 7.0)
DEFAULT_FC_GRID = (2.0, 3.0, 4.0, 6.0, 8.0, 10.0, 15.0, 20.0, 24.0, 30.0,
                   40.0, 50.0, 60.0, 70.0, 80.0, 90.0, 100.0)

SWEEP_VARIABLES = ("d1", "d_sr", "f_c")


def grid(start: float, stop: float, step: float) -> list[float]:
    """Inclusive arithmetic grid; the stop value is kept even when off-step."""
    if step <= 0.0:
        raise ValueError(f"step must be > 0, got {step!r}")
    if stop < start:
        raise ValueError(f"stop {stop!r} below start {start!r}")
    n = math.floor((stop - start) / step + 1e-9)
    points = [start + i * step for i in range(n + 1)]
    if points[-1] < stop - 1e-9 * max(1.0, abs(stop)):
        points.append(stop)
    return points


@dataclass(frozen=True)
class SweepSpec:
    """One swept variable over [start, stop] with everything else pinned."""

    variable: str
    start: float
    stop: float
    step: float
    scenario: Scenario
    radio: RadioConfig
    n_elements: tuple[int, ...] = ()

    def __post_init__(self):
        if self.variable not in SWEEP_VARIABLES:
            raise ValueError(
                f"variable must be one of {SWEEP_VARIABLES}, got {self.variable!r}"
            )
        if self.step <= 0.0:
            raise ValueError(f"step must be > 0, got {self.step!r}")
        if self.stop < self.start:
            raise ValueError(f"stop {self.stop!r} below start {self.start!r}")
        counts = self.n_elements
        if len(set(counts)) != len(counts) or any(
            n <= 0 or not isinstance(n, int) for n in counts
        ):
            raise ValueError(
                f"n_elements must be distinct positive integers, got {counts!r}"
            )


@dataclass(frozen=True)
class SweepRow:
    """Scheme powers (dBm) at one grid point, with per-link validity flags."""

    value: float
    p_siso_dbm: float
    p_df_dbm: float
    p_irs_dbm: dict[int, float]
    link_valid: dict[str, bool]


@dataclass(frozen=True)
class NminRow:
    d_sr: float
    ratio: float  # d1 = ratio * d_sr
    n_min: int  # NO_RESULT when the search cap was exceeded


@dataclass(frozen=True)
class MaxDsrRow:
    f_c_ghz: float
    rate: float
    max_d_sr: float  # NO_RESULT when no grid value qualifies


def default_d1_spec(scenario: Scenario | None = None,
                    radio: RadioConfig | None = None) -> SweepSpec:
    """The canonical d1 sweep: [0, 160] m at 0.5 m with d_sr = 80 m."""
    return SweepSpec(
        variable="d1",
        start=0.0,
        stop=160.0,
        step=0.5,
        scenario=scenario if scenario is not None else Scenario(d_sr=80.0, d1=0.0),
        radio=radio if radio is not None else RadioConfig(),
        n_elements=DEFAULT_N_ELEMENTS,
    )


def default_nmin_spec(scenario: Scenario | None = None,
                      radio: RadioConfig | None = None) -> SweepSpec:
    """The canonical d_sr sweep for element thresholds: [10, 80] m at 1 m."""
    return SweepSpec(
        variable="d_sr",
        start=10.0,
        stop=80.0,
        step=1.0,
        scenario=scenario if scenario is not None else Scenario(d_sr=80.0, d1=0.0),
        radio=radio if radio is not None else RadioConfig(),
    )


def sweep_d1(spec: SweepSpec) -> list[SweepRow]:
    """Power of every scheme at each d1 grid point.

    Validity violations never abort the sweep; they are recorded in the
    row's ``link_valid`` flags and the formulas are evaluated unchecked.
    """
    if spec.variable != "d1":
        raise ValueError(f"sweep_d1 needs variable 'd1', got {spec.variable!r}")
    rate = spec.radio.target_rate
    alpha = spec.radio.alpha
    noise_w = dbm_to_watts(noise_power(spec.radio))
    rows = []
    for d1 in grid(spec.start, spec.stop, spec.step):
        s = replace(spec.scenario, d1=d1)
        violations = link_violations(s, spec.radio)
        budget = link_budget(s, spec.radio, validation="off")
        beta_sd = budget.beta_sd.linear
        rows.append(SweepRow(
            value=d1,
            p_siso_dbm=watts_to_dbm(p_siso(rate, noise_w, beta_sd)),
            p_df_dbm=watts_to_dbm(p_df(rate, noise_w, beta_sd,
                                       budget.beta_sr.linear,
                                       budget.beta_rd.linear)),
            p_irs_dbm={
                n: watts_to_dbm(p_irs(rate, noise_w, beta_sd,
                                      budget.beta_irs.linear,
                                      IrsConfig(n, alpha)))
                for n in sorted(spec.n_elements)
            },
            link_valid={link: err is None for link, err in violations.items()},
        ))
    return rows


def nmin_vs_dsr(spec: SweepSpec, ratios: tuple[float, ...] = DEFAULT_RATIOS,
                targets: str = "both", cap: int = N_SEARCH_CAP) -> list[NminRow]:
    """Minimum element count per (d_sr, d1 ratio) to undercut the targets."""
    if spec.variable != "d_sr":
        raise ValueError(f"nmin_vs_dsr needs variable 'd_sr', got {spec.variable!r}")
    rate = spec.radio.target_rate
    alpha = spec.radio.alpha
    noise_w = dbm_to_watts(noise_power(spec.radio))
    rows = []
    for d_sr in grid(spec.start, spec.stop, spec.step):
        for ratio in ratios:
            s = replace(spec.scenario, d_sr=d_sr, d1=ratio * d_sr)
            budget = link_budget(s, spec.radio)
            try:
                n_min = n_min_search(rate, noise_w, budget, alpha, targets, cap)
            except ElementSearchCapError:
                n_min = NO_RESULT
            rows.append(NminRow(d_sr=d_sr, ratio=ratio, n_min=n_min))
    return rows


def _dsr_qualifies(scenario: Scenario, radio: RadioConfig, noise_w: float,
                   rate: float, d_sr: float, irs: IrsConfig,
                   d1_step: float) -> bool:
    """True when the surface beats both schemes at every d1 in [d_sr/2, d_sr].

    Grid points whose geometry falls outside the channel model's validity
    region disqualify the candidate rather than being skipped.
    """
    for d1 in grid(d_sr / 2.0, d_sr, d1_step):
        s = replace(scenario, d_sr=d_sr, d1=d1)
        try:
            budget = link_budget(s, radio, validation="strict")
        except ValidityError:
            return False
        beta_sd = budget.beta_sd.linear
        target = min(
            p_df(rate, noise_w, beta_sd, budget.beta_sr.linear,
                 budget.beta_rd.linear),
            p_siso(rate, noise_w, beta_sd),
        )
        if not p_irs(rate, noise_w, beta_sd, budget.beta_irs.linear, irs) < target:
            return False
    return True


def max_dsr_search(n_elements: int = 16,
                   fc_grid: tuple[float, ...] = DEFAULT_FC_GRID,
                   rates: tuple[float, ...] = DEFAULT_RATES, *,
                   radio: RadioConfig | None = None,
                   scenario: Scenario | None = None,
                   dsr_min: float = 10.0, dsr_max: float = 100.0,
                   dsr_step: float = 1.0,
                   d1_step: float = 0.5) -> list[MaxDsrRow]:
    """Largest qualifying d_sr per (carrier, rate); NO_RESULT when none is.

    The rate grid overrides the radio's target_rate; alpha and the noise
    parameters come from the radio (defaults: 10 MHz, alpha = 1).
    """
    base_radio = radio if radio is not None else RadioConfig()
    base_scenario = scenario if scenario is not None else Scenario(d_sr=80.0, d1=0.0)
    noise_w = dbm_to_watts(noise_power(base_radio))
    irs = IrsConfig(n_elements, base_radio.alpha)
    dsr_grid = grid(dsr_min, dsr_max, dsr_step)
    rows = []
    for f_c in fc_grid:
        radio_fc = replace(base_radio, f_c_ghz=f_c)
        for rate in rates:
            best: float = NO_RESULT
            for d_sr in reversed(dsr_grid):
                if _dsr_qualifies(base_scenario, radio_fc, noise_w, rate,
                                  d_sr, irs, d1_step):
                    best = d_sr
                    break
            rows.append(MaxDsrRow(f_c_ghz=f_c, rate=rate, max_d_sr=best))
    return rows
