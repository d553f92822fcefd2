"""Command-line front end.

Subcommands: sweep, kink, regime-map, oracle, preset.  A JSON config file
mirroring SweepConfig can seed any sweep; explicit flags override file
values.  Exit codes: 0 success, 2 configuration error, 3 numerical error,
4 regime / no-solution error.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import sys

import numpy as np

from .errors import ConfigError, DomainError, NumericalError, RegimeError
from .sweep import (
    KinkReport,
    SweepConfig,
    detect_kink,
    format_value,
    oracle_run,
    preset_config,
    preset_kind,
    preset_names,
    preset_regime_map,
    regime_map,
    regime_map_to_csv,
    run_sweep,
    table_to_csv,
    table_to_json,
)

_FIXED_FLAGS = {
    "omega0": "omega0",
    "omega_c": "omega-c",
    "delta0": "delta0",
    "lambda0": "lambda0",
    "s": "s",
    "temperature": "temperature",
    "length": "length",
    "dim": "dim",
}


def _add_sweep_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--config", help="JSON file mirroring the sweep configuration")
    parser.add_argument("--model", choices=["free-particle", "oscillator", "spin-boson"])
    parser.add_argument("--alpha-min", type=float)
    parser.add_argument("--alpha-max", type=float)
    parser.add_argument("--alpha-points", type=int, dest="n_points")
    for key, flag in _FIXED_FLAGS.items():
        typ = int if key == "dim" else float
        parser.add_argument(f"--{flag}", type=typ, dest=f"fixed_{key}")
    parser.add_argument("--include-branch-points", action="store_true", default=None)
    parser.add_argument("--format", choices=["csv", "json"], dest="fmt")
    parser.add_argument("--output", help="write here instead of stdout")


def _config_from_args(args) -> SweepConfig:
    base: dict = {}
    if args.config:
        with open(args.config, "r", encoding="utf-8") as fh:
            base = json.load(fh)
    fixed = dict(base.get("fixed", {}))
    for key in _FIXED_FLAGS:
        val = getattr(args, f"fixed_{key}", None)
        if val is not None:
            fixed[key] = val

    def pick(name, default=None):
        val = getattr(args, name, None)
        if val is not None:
            return val
        return base.get(name, default)

    model = pick("model")
    if model is None:
        raise ConfigError("model is required (flag --model or config file)")
    cfg = SweepConfig(
        model=model,
        alpha_min=pick("alpha_min", 0.01),
        alpha_max=pick("alpha_max", 1.0),
        n_points=int(pick("n_points", 100)),
        fixed=fixed,
        outputs=tuple(base.get("outputs", ())),
        fmt=pick("fmt", base.get("format", "csv")),
        include_branch_points=bool(pick("include_branch_points", False)),
    )
    cfg.validate()
    return cfg


def _emit(text: str, output: str | None) -> None:
    if output:
        with open(output, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _cmd_sweep(args) -> int:
    cfg = _config_from_args(args)
    table = run_sweep(cfg)
    text = table_to_json(table) if cfg.fmt == "json" else table_to_csv(table)
    _emit(text, args.output)
    return 0


def _cmd_kink(args) -> int:
    cfg = _config_from_args(args)
    table = run_sweep(cfg)
    report = detect_kink(table, args.column, threshold=args.threshold)
    _emit(_kink_json(report), args.output)
    return 0


def _kink_json(report: KinkReport | None) -> str:
    if report is None:
        return "null\n"
    doc = {k: format_value(v) for k, v in dataclasses.asdict(report).items()}
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def _cmd_regime_map(args) -> int:
    ratios = np.geomspace(args.ratio_min, args.ratio_max, args.ratio_points)
    alphas = np.geomspace(args.alpha_min, args.alpha_max, args.alpha_points)
    rmap = regime_map(args.s, ratios, alphas)
    _emit(regime_map_to_csv(rmap), args.output)
    return 0


def _cmd_oracle(args) -> int:
    params = {}
    for name in ("eta", "omega0", "omega_c", "length", "sigma_x"):
        val = getattr(args, name, None)
        if val is not None:
            params[name] = val
    knobs = {"n_modes": args.n_modes, "scheme": args.scheme}
    rows = oracle_run(args.model, params, knobs)
    lines = ["observable,analytic,oracle,abs_dev,rel_dev"]
    for r in rows:
        lines.append(
            ",".join(
                [
                    r["observable"],
                    format_value(r["analytic"]),
                    format_value(r["oracle"]),
                    format_value(r["abs_dev"]),
                    format_value(r["rel_dev"]),
                ]
            )
        )
    _emit("\n".join(lines) + "\n", args.output)
    return 0


def _cmd_preset(args) -> int:
    if args.list:
        _emit("\n".join(preset_names()) + "\n", args.output)
        return 0
    if args.name is None:
        raise ConfigError("preset name required (or --list)")
    kind = preset_kind(args.name)
    if kind == "sweep":
        cfg = preset_config(args.name)
        if args.fmt:
            cfg = dataclasses.replace(cfg, fmt=args.fmt)
        table = run_sweep(cfg)
        text = table_to_json(table) if cfg.fmt == "json" else table_to_csv(table)
    else:
        text = regime_map_to_csv(preset_regime_map(args.name))
    _emit(text, args.output)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dissipent",
        description="Entanglement entropy and coherence sweeps for dissipative quantum models",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_sweep = sub.add_parser("sweep", help="evaluate a model over a coupling grid")
    _add_sweep_flags(p_sweep)
    p_sweep.set_defaults(func=_cmd_sweep)

    p_kink = sub.add_parser("kink", help="run a sweep and locate a derivative kink")
    _add_sweep_flags(p_kink)
    p_kink.add_argument("--column", default="S")
    p_kink.add_argument("--threshold", type=float, default=5.0)
    p_kink.set_defaults(func=_cmd_kink)

    p_map = sub.add_parser("regime-map", help="sub-Ohmic regime classification grid")
    p_map.add_argument("--s", type=float, required=True)
    p_map.add_argument("--ratio-min", type=float, default=1e-3)
    p_map.add_argument("--ratio-max", type=float, default=0.9)
    p_map.add_argument("--ratio-points", type=int, default=25)
    p_map.add_argument("--alpha-min", type=float, default=1e-4)
    p_map.add_argument("--alpha-max", type=float, default=2.0)
    p_map.add_argument("--alpha-points", type=int, default=25)
    p_map.add_argument("--output")
    p_map.set_defaults(func=_cmd_regime_map)

    p_oracle = sub.add_parser("oracle", help="closed forms vs brute-force oracles")
    p_oracle.add_argument("--model", required=True,
                          choices=["free-particle", "oscillator", "spin-boson"])
    p_oracle.add_argument("--eta", type=float)
    p_oracle.add_argument("--omega0", type=float)
    p_oracle.add_argument("--omega-c", type=float, dest="omega_c")
    p_oracle.add_argument("--length", type=float)
    p_oracle.add_argument("--sigma-x", type=float, dest="sigma_x")
    p_oracle.add_argument("--n-modes", type=int, default=400)
    p_oracle.add_argument("--scheme", choices=["logarithmic", "linear"], default="logarithmic")
    p_oracle.add_argument("--output")
    p_oracle.set_defaults(func=_cmd_oracle)

    p_preset = sub.add_parser("preset", help="run a canned figure-reproduction config")
    p_preset.add_argument("name", nargs="?")
    p_preset.add_argument("--list", action="store_true")
    p_preset.add_argument("--format", choices=["csv", "json"], dest="fmt")
    p_preset.add_argument("--output")
    p_preset.set_defaults(func=_cmd_preset)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ConfigError, DomainError) as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 2
    except NumericalError as exc:
        print(f"numerical error: {exc}", file=sys.stderr)
        return 3
    except RegimeError as exc:
        print(f"regime error: {exc}", file=sys.stderr)
        return 4


if __name__ == "__main__":
    sys.exit(main())
