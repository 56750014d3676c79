"""Command-line front end.

Subcommands: ``gain`` and ``power`` answer single scenario points,
``sweep-d1``, ``nmin-sweep`` and ``max-dsr`` run the grid studies and
write fixed-schema CSV (or JSON) tables. A JSON config file with
``scenario``, ``radio`` and ``experiment`` sections can pin parameters;
explicit flags override it.

Exit codes: 0 success, 1 usage/config error, 2 domain or validity error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from dataclasses import dataclass, replace
from pathlib import Path

from .channel import ValidityError
from .experiments import (
    DEFAULT_FC_GRID,
    DEFAULT_N_ELEMENTS,
    DEFAULT_RATIOS,
    DEFAULT_RATES,
    SweepSpec,
    max_dsr_search,
    nmin_vs_dsr,
    sweep_d1,
)
from .power import ElementSearchCapError, compare_schemes, dbm_to_watts
from .scenario import (
    NodeConfig,
    RadioConfig,
    Scenario,
    link_budget,
    link_distances,
    link_violations,
    noise_power,
)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DOMAIN = 2

OUTPUT_DIR_ENV = "IRSIM_OUTPUT_DIR"

DEFAULT_OUTPUT_STEMS = {
    "sweep-d1": "sweep_d1",
    "nmin-sweep": "nmin_vs_dsr",
    "max-dsr": "max_dsr",
}

SCENARIO_KEYS = {"d_sr", "d1", "lateral_offset", "source", "relay", "destination"}
NODE_KEYS = {"height", "antenna_gain_dbi"}
RADIO_KEYS = {"f_c_ghz", "bandwidth_hz", "noise_figure_db", "noise_power_dbm",
              "target_rate", "alpha"}
EXPERIMENT_KEYS = {"start", "stop", "step", "n_elements", "ratios", "targets",
                   "cap", "fc_grid", "rates", "dsr_min", "dsr_max", "dsr_step",
                   "d1_step"}

LINK_MODELS = {"sr": "los", "rd": "los", "sd": "nlos"}


class ConfigError(ValueError):
    """The configuration file is malformed or holds unknown keys."""


@dataclass(frozen=True)
class RunConfig:
    """A fully resolved invocation: command, parameters and output policy."""

    command: str
    scenario: Scenario
    radio: RadioConfig
    output: Path | None
    fmt: str  # "csv" | "json"
    validation: str  # "strict" | "warn" | "off"
    experiment: dict


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on usage errors; the documented contract is 1.
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _int_list(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _float_list(text: str) -> tuple[float, ...]:
    try:
        return tuple(float(part) for part in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers, got {text!r}")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="irsim",
                     description="Transmit-power comparison of SISO, DF relaying "
                                 "and IRS-aided links under urban-microcell "
                                 "channel models.")
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    def common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--config", type=Path, help="JSON config file")
        p.add_argument("--output", type=Path, help="output file (default: stdout "
                       "for gain/power, <name>.<fmt> for sweeps)")
        p.add_argument("--format", dest="fmt", choices=("csv", "json"),
                       help="output format (default csv)")
        p.add_argument("--validation", choices=("strict", "warn", "off"),
                       help="channel validity policy (default strict)")
        p.add_argument("--fc", type=float, help="carrier frequency, GHz")
        p.add_argument("--dsr", type=float, help="source-to-relay/IRS distance, m")
        p.add_argument("--d1", type=float, help="destination travel distance, m")
        p.add_argument("--offset", type=float, help="line separation, m")
        p.add_argument("--rate", type=float, help="target rate, bits/sec/Hz")
        p.add_argument("--bandwidth", type=float, help="bandwidth, Hz")
        p.add_argument("--noise-figure", dest="noise_figure", type=float,
                       help="noise figure, dB")
        p.add_argument("--noise-power", dest="noise_power", type=float,
                       help="noise power override, dBm")
        p.add_argument("--alpha", type=float, help="IRS amplitude reflection "
                       "coefficient in (0, 1]")

    p_gain = sub.add_parser("gain", help="link distances, path losses and gains "
                            "for one scenario point")
    common(p_gain)

    p_power = sub.add_parser("power", help="required transmit power per scheme "
                             "for one scenario point")
    common(p_power)
    p_power.add_argument("--n", type=_int_list,
                         help="IRS element counts, comma separated")

    p_d1 = sub.add_parser("sweep-d1", help="power of every scheme over a d1 grid")
    common(p_d1)
    p_d1.add_argument("--n", type=_int_list,
                      help="IRS element counts, comma separated")
    p_d1.add_argument("--start", type=float, help="first d1 value, m")
    p_d1.add_argument("--stop", type=float, help="last d1 value, m")
    p_d1.add_argument("--step", type=float, help="d1 grid step, m")

    p_nmin = sub.add_parser("nmin-sweep", help="minimum IRS element count over "
                            "a d_sr grid")
    common(p_nmin)
    p_nmin.add_argument("--start", type=float, help="first d_sr value, m")
    p_nmin.add_argument("--stop", type=float, help="last d_sr value, m")
    p_nmin.add_argument("--step", type=float, help="d_sr grid step, m")
    p_nmin.add_argument("--ratios", type=_float_list,
                        help="d1/d_sr ratios, comma separated")
    p_nmin.add_argument("--targets", choices=("df", "siso", "both"),
                        help="schemes the surface must undercut")
    p_nmin.add_argument("--cap", type=int, help="element search cap")

    p_max = sub.add_parser("max-dsr", help="largest qualifying d_sr per "
                           "(carrier, rate)")
    common(p_max)
    p_max.add_argument("--n", type=int, help="IRS element count")
    p_max.add_argument("--fc-grid", dest="fc_grid", type=_float_list,
                       help="carrier grid, GHz, comma separated")
    p_max.add_argument("--rates", type=_float_list,
                       help="rate grid, bits/sec/Hz, comma separated")
    p_max.add_argument("--dsr-min", dest="dsr_min", type=float)
    p_max.add_argument("--dsr-max", dest="dsr_max", type=float)
    p_max.add_argument("--dsr-step", dest="dsr_step", type=float)
    p_max.add_argument("--d1-step", dest="d1_step", type=float)

    return parser


def _load_config(path: Path) -> dict:
    try:
        raw = json.loads(path.read_text())
    except OSError as err:
        raise ConfigError(f"cannot read config file: {err}") from None
    except json.JSONDecodeError as err:
        raise ConfigError(f"config file is not valid JSON: {err}") from None
    if not isinstance(raw, dict):
        raise ConfigError("config file must hold a JSON object")
    unknown = set(raw) - {"scenario", "radio", "experiment"}
    if unknown:
        raise ConfigError(f"unknown config sections: {sorted(unknown)}")
    for section in raw.values():
        if not isinstance(section, dict):
            raise ConfigError("config sections must be JSON objects")
    return raw


def _check_keys(section: dict, allowed: set, where: str) -> None:
    unknown = set(section) - allowed
    if unknown:
        raise ConfigError(f"unknown keys in {where} section: {sorted(unknown)}")


def _build_node(data: dict, default: NodeConfig, where: str) -> NodeConfig:
    _check_keys(data, NODE_KEYS, where)
    return NodeConfig(
        height=data.get("height", default.height),
        antenna_gain_dbi=data.get("antenna_gain_dbi", default.antenna_gain_dbi),
    )


def _build_scenario(section: dict, args: argparse.Namespace) -> Scenario:
    _check_keys(section, SCENARIO_KEYS, "scenario")
    base = Scenario(d_sr=80.0, d1=80.0)
    scenario = Scenario(
        d_sr=section.get("d_sr", base.d_sr),
        d1=section.get("d1", base.d1),
        lateral_offset=section.get("lateral_offset", base.lateral_offset),
        source=_build_node(section.get("source", {}), base.source, "scenario.source"),
        relay=_build_node(section.get("relay", {}), base.relay, "scenario.relay"),
        destination=_build_node(section.get("destination", {}), base.destination,
                                "scenario.destination"),
    )
    overrides = {}
    if args.dsr is not None:
        overrides["d_sr"] = args.dsr
    if args.d1 is not None:
        overrides["d1"] = args.d1
    if args.offset is not None:
        overrides["lateral_offset"] = args.offset
    return replace(scenario, **overrides) if overrides else scenario


def _build_radio(section: dict, args: argparse.Namespace) -> RadioConfig:
    _check_keys(section, RADIO_KEYS, "radio")
    values = {
        "f_c_ghz": section.get("f_c_ghz"),
        "bandwidth_hz": section.get("bandwidth_hz"),
        "noise_figure_db": section.get("noise_figure_db"),
        "noise_power_dbm": section.get("noise_power_dbm"),
        "target_rate": section.get("target_rate"),
        "alpha": section.get("alpha"),
    }
    flags = {
        "f_c_ghz": args.fc,
        "bandwidth_hz": args.bandwidth,
        "noise_figure_db": args.noise_figure,
        "noise_power_dbm": args.noise_power,
        "target_rate": args.rate,
        "alpha": args.alpha,
    }
    for key, flag in flags.items():
        if flag is not None:
            values[key] = flag
    defaults = RadioConfig()
    return RadioConfig(**{
        key: (value if value is not None else getattr(defaults, key))
        for key, value in values.items()
    })


def _build_experiment(section: dict, args: argparse.Namespace,
                      command: str) -> dict:
    _check_keys(section, EXPERIMENT_KEYS, "experiment")
    experiment = dict(section)
    for key in ("n_elements", "ratios", "fc_grid", "rates"):
        if key in experiment:
            experiment[key] = tuple(experiment[key])
    for key in ("start", "stop", "step", "targets", "cap",
                "dsr_min", "dsr_max", "dsr_step", "d1_step"):
        value = getattr(args, key, None)
        if value is not None:
            experiment[key] = value
    n = getattr(args, "n", None)
    if n is not None:
        experiment["n_elements"] = n
    ratios = getattr(args, "ratios", None)
    if ratios is not None:
        experiment["ratios"] = ratios
    fc_grid = getattr(args, "fc_grid", None)
    if fc_grid is not None:
        experiment["fc_grid"] = fc_grid
    rates = getattr(args, "rates", None)
    if rates is not None:
        experiment["rates"] = rates
    if command == "max-dsr":
        # Point queries: a bare --fc / --rate narrows the grids to one value.
        if args.fc is not None and "fc_grid" not in experiment:
            experiment["fc_grid"] = (args.fc,)
        if args.rate is not None and "rates" not in experiment:
            experiment["rates"] = (args.rate,)
    return experiment


def _assemble(args: argparse.Namespace) -> RunConfig:
    file_cfg = _load_config(args.config) if args.config else {}
    return RunConfig(
        command=args.command,
        scenario=_build_scenario(file_cfg.get("scenario", {}), args),
        radio=_build_radio(file_cfg.get("radio", {}), args),
        output=args.output,
        fmt=args.fmt or "csv",
        validation=args.validation or "strict",
        experiment=_build_experiment(file_cfg.get("experiment", {}), args,
                                     args.command),
    )


def _num(x: float) -> str:
    """Fixed 6-significant-digit decimal rendering; the table contract."""
    return format(x, ".6g")


def _jnum(x: float) -> float:
    return float(_num(x))


def _csv_text(header: list[str], rows: list[list[str]]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def _resolve_output(cfg: RunConfig) -> Path | None:
    if cfg.output is not None:
        return cfg.output
    stem = DEFAULT_OUTPUT_STEMS.get(cfg.command)
    if stem is None:
        return None
    return Path(os.environ.get(OUTPUT_DIR_ENV, ".")) / f"{stem}.{cfg.fmt}"


def _emit(cfg: RunConfig, text: str) -> int:
    target = _resolve_output(cfg)
    if target is None:
        sys.stdout.write(text)
    else:
        target.parent.mkdir(parents=True, exist_ok=True)
        target.write_text(text)
        print(f"wrote {target}", file=sys.stderr)
    return EXIT_OK


def _cmd_gain(cfg: RunConfig) -> int:
    budget = link_budget(cfg.scenario, cfg.radio, validation=cfg.validation)
    distances = link_distances(cfg.scenario)
    node_gains = {
        "sr": cfg.scenario.source.antenna_gain_dbi + cfg.scenario.relay.antenna_gain_dbi,
        "rd": cfg.scenario.relay.antenna_gain_dbi + cfg.scenario.destination.antenna_gain_dbi,
        "sd": cfg.scenario.source.antenna_gain_dbi + cfg.scenario.destination.antenna_gain_dbi,
    }
    betas = {"sr": budget.beta_sr, "rd": budget.beta_rd, "sd": budget.beta_sd}
    if cfg.fmt == "json":
        doc = {
            link: {
                "model": LINK_MODELS[link],
                "d_2d_m": _jnum(distances[link][0]),
                "d_3d_m": _jnum(distances[link][1]),
                "path_loss_db": _jnum(node_gains[link] - betas[link].db),
                "gain_db": _jnum(betas[link].db),
                "gain_linear": _jnum(betas[link].linear),
            }
            for link in ("sr", "rd", "sd")
        }
        doc["irs"] = {
            "model": "composite",
            "gain_db": _jnum(budget.beta_irs.db),
            "gain_linear": _jnum(budget.beta_irs.linear),
        }
        return _emit(cfg, json.dumps(doc, indent=2) + "\n")
    rows = [
        [link, LINK_MODELS[link], _num(distances[link][0]),
         _num(distances[link][1]), _num(node_gains[link] - betas[link].db),
         _num(betas[link].db), _num(betas[link].linear)]
        for link in ("sr", "rd", "sd")
    ]
    rows.append(["irs", "composite", "", "", "", _num(budget.beta_irs.db),
                 _num(budget.beta_irs.linear)])
    return _emit(cfg, _csv_text(
        ["link", "model", "d_2d_m", "d_3d_m", "path_loss_dB", "gain_dB",
         "gain_linear"], rows))


def _cmd_power(cfg: RunConfig) -> int:
    budget = link_budget(cfg.scenario, cfg.radio, validation=cfg.validation)
    noise_w = dbm_to_watts(noise_power(cfg.radio))
    counts = tuple(cfg.experiment.get("n_elements", DEFAULT_N_ELEMENTS))
    report = compare_schemes(cfg.radio.target_rate, noise_w, budget, counts,
                             cfg.radio.alpha)
    if cfg.fmt == "json":
        doc = {
            "p_siso": {"dbm": _jnum(report.p_siso_dbm), "watts": _jnum(report.p_siso_w)},
            "p_df": {"dbm": _jnum(report.p_df_dbm), "watts": _jnum(report.p_df_w)},
            "p_irs": {
                str(n): {"dbm": _jnum(report.p_irs_dbm[n]),
                         "watts": _jnum(report.p_irs_w[n])}
                for n in sorted(report.p_irs_w)
            },
        }
        return _emit(cfg, json.dumps(doc, indent=2) + "\n")
    rows = [
        ["siso", _num(report.p_siso_dbm), _num(report.p_siso_w)],
        ["df", _num(report.p_df_dbm), _num(report.p_df_w)],
    ]
    rows.extend(
        [f"irs_N{n}", _num(report.p_irs_dbm[n]), _num(report.p_irs_w[n])]
        for n in sorted(report.p_irs_w)
    )
    return _emit(cfg, _csv_text(["scheme", "p_dBm", "p_W"], rows))


def _enforce_sweep_validity(cfg: RunConfig, spec: SweepSpec, rows) -> None:
    if cfg.validation == "off":
        return
    for row in rows:
        if all(row.link_valid.values()):
            continue
        s = replace(spec.scenario, d1=row.value)
        for err in link_violations(s, spec.radio).values():
            if err is None:
                continue
            if cfg.validation == "strict":
                raise err
            print(f"irsim: warning: d1={row.value:g}: {err}", file=sys.stderr)


def _cmd_sweep_d1(cfg: RunConfig) -> int:
    e = cfg.experiment
    spec = SweepSpec(
        variable="d1",
        start=e.get("start", 0.0),
        stop=e.get("stop", 160.0),
        step=e.get("step", 0.5),
        scenario=cfg.scenario,
        radio=cfg.radio,
        n_elements=tuple(e.get("n_elements", DEFAULT_N_ELEMENTS)),
    )
    rows = sweep_d1(spec)
    _enforce_sweep_validity(cfg, spec, rows)
    counts = sorted(spec.n_elements)
    if cfg.fmt == "json":
        doc = [
            {"d1_m": _jnum(row.value), "p_siso_dBm": _jnum(row.p_siso_dbm),
             "p_df_dBm": _jnum(row.p_df_dbm),
             **{f"p_irs_N{n}_dBm": _jnum(row.p_irs_dbm[n]) for n in counts}}
            for row in rows
        ]
        return _emit(cfg, json.dumps(doc, indent=2) + "\n")
    header = ["d1_m", "p_siso_dBm", "p_df_dBm"] + [f"p_irs_N{n}_dBm" for n in counts]
    table = [
        [_num(row.value), _num(row.p_siso_dbm), _num(row.p_df_dbm)]
        + [_num(row.p_irs_dbm[n]) for n in counts]
        for row in rows
    ]
    return _emit(cfg, _csv_text(header, table))


def _cmd_nmin_sweep(cfg: RunConfig) -> int:
    e = cfg.experiment
    spec = SweepSpec(
        variable="d_sr",
        start=e.get("start", 10.0),
        stop=e.get("stop", 80.0),
        step=e.get("step", 1.0),
        scenario=cfg.scenario,
        radio=cfg.radio,
    )
    rows = nmin_vs_dsr(
        spec,
        ratios=tuple(e.get("ratios", DEFAULT_RATIOS)),
        targets=e.get("targets", "both"),
        cap=e.get("cap", 10 ** 6),
    )
    if cfg.fmt == "json":
        doc = [
            {"d_sr_m": _jnum(row.d_sr), "ratio": _jnum(row.ratio),
             "n_min": row.n_min}
            for row in rows
        ]
        return _emit(cfg, json.dumps(doc, indent=2) + "\n")
    table = [[_num(row.d_sr), _num(row.ratio), str(row.n_min)] for row in rows]
    return _emit(cfg, _csv_text(["d_sr_m", "ratio", "n_min"], table))


def _cmd_max_dsr(cfg: RunConfig) -> int:
    e = cfg.experiment
    rows = max_dsr_search(
        n_elements=e.get("n_elements", 16),
        fc_grid=tuple(e.get("fc_grid", DEFAULT_FC_GRID)),
        rates=tuple(e.get("rates", DEFAULT_RATES)),
        radio=cfg.radio,
        scenario=cfg.scenario,
        dsr_min=e.get("dsr_min", 10.0),
        dsr_max=e.get("dsr_max", 100.0),
        dsr_step=e.get("dsr_step", 1.0),
        d1_step=e.get("d1_step", 0.5),
    )
    if cfg.fmt == "json":
        doc = [
            {"fc_GHz": _jnum(row.f_c_ghz), "rate_bps_hz": _jnum(row.rate),
             "max_dsr_m": _jnum(row.max_d_sr)}
            for row in rows
        ]
        return _emit(cfg, json.dumps(doc, indent=2) + "\n")
    table = [[_num(row.f_c_ghz), _num(row.rate), _num(row.max_d_sr)]
             for row in rows]
    return _emit(cfg, _csv_text(["fc_GHz", "rate_bps_hz", "max_dsr_m"], table))


HANDLERS = {
    "gain": _cmd_gain,
    "power": _cmd_power,
    "sweep-d1": _cmd_sweep_d1,
    "nmin-sweep": _cmd_nmin_sweep,
    "max-dsr": _cmd_max_dsr,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        cfg = _assemble(args)
        return HANDLERS[cfg.command](cfg)
    except ConfigError as err:
        print(f"irsim: config error: {err}", file=sys.stderr)
        return EXIT_USAGE
    except ValidityError as err:
        print(f"irsim: validity error: {err}", file=sys.stderr)
        return EXIT_DOMAIN
    except ElementSearchCapError as err:
        print(f"irsim: {err}", file=sys.stderr)
        return EXIT_DOMAIN
    except ValueError as err:
        print(f"irsim: {err}", file=sys.stderr)
        return EXIT_DOMAIN


def entrypoint() -> None:
    raise SystemExit(main())
