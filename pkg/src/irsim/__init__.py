"""Transmit-power comparison of SISO, DF relaying and IRS-aided links
under urban-microcell channel models."""

from .channel import (
    Gain,
    PathLossInput,
    ValidityError,
    breakpoint_distance,
    channel_gain,
    db_to_linear,
    linear_to_db,
    path_loss_los,
    path_loss_nlos,
)
from .experiments import (
    MaxDsrRow,
    NO_RESULT,
    NminRow,
    SweepRow,
    SweepSpec,
    default_d1_spec,
    default_nmin_spec,
    grid,
    max_dsr_search,
    nmin_vs_dsr,
    sweep_d1,
)
from .power import (
    ElementSearchCapError,
    IrsConfig,
    PowerReport,
    compare_schemes,
    dbm_to_watts,
    n_min_closed_form,
    n_min_search,
    p_df,
    p_irs,
    p_siso,
    watts_to_dbm,
)
from .scenario import (
    LinkBudget,
    NodeConfig,
    RadioConfig,
    Scenario,
    link_budget,
    link_distances,
    link_violations,
    noise_power,
)

__version__ = "0.1.0"

__all__ = [
    "ElementSearchCapError",
    "Gain",
    "IrsConfig",
    "LinkBudget",
    "MaxDsrRow",
    "NO_RESULT",
    "NminRow",
    "NodeConfig",
    "PathLossInput",
    "PowerReport",
    "RadioConfig",
    "Scenario",
    "SweepRow",
    "SweepSpec",
    "ValidityError",
    "breakpoint_distance",
    "channel_gain",
    "compare_schemes",
    "db_to_linear",
    "dbm_to_watts",
    "default_d1_spec",
    "default_nmin_spec",
    "grid",
    "linear_to_db",
    "link_budget",
    "link_distances",
    "link_violations",
    "max_dsr_search",
    "n_min_closed_form",
    "n_min_search",
    "nmin_vs_dsr",
    "noise_power",
    "p_df",
    "p_irs",
    "p_siso",
    "path_loss_los",
    "path_loss_nlos",
    "sweep_d1",
    "watts_to_dbm",
]
