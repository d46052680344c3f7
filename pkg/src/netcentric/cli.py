"""Command-line front end.

Subcommands::

    table3     cost grid CSV for the scenario's residences and NCF grid
    curves     SVG curve family (--kind cost|gain)
    optimize   best residence per NCF value
    budget     telecom budget bound for one residence at one NCF
    media      which media classes a connection can sustain
    simulate   run the QoS session simulator, report as CSV
    compare    run both session architectures on the same seed

Common flags: --scenario PATH (defaults to the bundled sample),
--out PATH (defaults to stdout), --seed N (overrides the scenario
seed), --format csv|svg (must match what the subcommand emits).

Exit codes: 0 success, 1 validation or usage error, 2 I/O error.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import replace
from fractions import Fraction
from pathlib import Path
from typing import Optional, Sequence

from .econ import (
    in_place_baseline,
    relocation_baseline,
    telecom_budget,
    whole_dollars,
)
from .media import Bound, ConnectionProfile, PROFILES, feasible_media, required_access
from .report import CurveKind, emit_cost_grid, emit_curves, emit_optimization
from .scenario import Scenario, ScenarioError, bundled_scenario_path, parse_scenario
from .sim import TopologyError, compare_architectures, run_detailed


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # argparse defaults to exit code 2
        self.print_usage(sys.stderr)
        print(f"error: {message}", file=sys.stderr)
        raise SystemExit(1)


def _build_parser() -> _Parser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--scenario", type=Path, default=None, help="scenario file")
    common.add_argument("--out", type=Path, default=None, help="output path (default stdout)")
    common.add_argument("--seed", type=int, default=None, help="override simulation seed")
    common.add_argument("--format", choices=("csv", "svg"), default=None)

    parser = _Parser(prog="netcentric", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    sub.add_parser("table3", parents=[common], help="emit the cost grid as CSV")

    curves = sub.add_parser("curves", parents=[common], help="emit cost/gain curves as SVG")
    curves.add_argument(
        "--kind",
        choices=("cost", "gain"),
        default="cost",
        help="cost of living vs distance, or telecommuting gain vs distance",
    )

    sub.add_parser("optimize", parents=[common], help="best residence per NCF value")

    budget = sub.add_parser(
        "budget", parents=[common], help="telecom budget bound for one residence"
    )
    budget.add_argument("--row", required=True, help="residence label")
    budget.add_argument("--ncf", required=True, help="NCF value, e.g. 0.8")
    budget.add_argument(
        "--baseline",
        choices=("in_place", "relocation"),
        default="in_place",
        help="compare against the same residence at NCF 0, or the best NCF-0 option",
    )

    media = sub.add_parser(
        "media", parents=[common], help="feasible media classes for a connection"
    )
    media.add_argument("--down", type=float, required=True, help="download Mbps")
    media.add_argument("--up", type=float, default=None, help="upload Mbps (default: down)")
    media.add_argument("--loss", type=float, default=0.0, help="packet loss percent")
    media.add_argument("--jitter", type=float, default=0.0, help="jitter ms")
    media.add_argument("--delay", type=float, default=0.0, help="round-trip delay ms")
    media.add_argument(
        "--one-way", action="store_true", help="treat --delay as one-way, not round trip"
    )
    media.add_argument("--factor", type=float, default=1.0, help="over-provisioning factor")
    media.add_argument("--guaranteed", action="store_true", help="guaranteed-QoS line")
    media.add_argument(
        "--strict-message",
        action="store_true",
        help="hold messaging to its sustained-rate stand-in",
    )

    simulate = sub.add_parser("simulate", parents=[common], help="run the session simulator")
    simulate.add_argument("--trace", type=Path, default=None, help="write JSONL event trace")

    sub.add_parser("compare", parents=[common], help="compare both session architectures")
    return parser


def _load_scenario(args) -> Scenario:
    path = args.scenario if args.scenario is not None else bundled_scenario_path()
    return parse_scenario(path)


def _check_format(args, emitted: str) -> None:
    if args.format is not None and args.format != emitted:
        raise ScenarioError(f"{args.command} emits {emitted}, not {args.format}")


def _write(args, text: str) -> None:
    if args.out is None:
        sys.stdout.write(text)
    else:
        args.out.write_text(text, encoding="utf-8")


def _parse_ncf(text: str) -> Fraction:
    try:
        value = Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise ScenarioError(f"--ncf: not a number: {text!r}") from None
    if not 0 <= value <= 1:
        raise ScenarioError(f"--ncf: {text} outside [0, 1]")
    return value


def _sim_config(args):
    scenario = _load_scenario(args)
    if scenario.sim is None:
        raise ScenarioError("scenario has no [topology]/[workload] sections")
    config = scenario.sim
    if args.seed is not None:
        config = replace(config, seed=args.seed)
    return config


def _cmd_table3(args) -> None:
    _check_format(args, "csv")
    _write(args, emit_cost_grid(_load_scenario(args)))


def _cmd_curves(args) -> None:
    _check_format(args, "svg")
    kind = CurveKind.COST_VS_DISTANCE if args.kind == "cost" else CurveKind.GAIN_VS_DISTANCE
    _write(args, emit_curves(_load_scenario(args), kind))


def _cmd_optimize(args) -> None:
    _check_format(args, "csv")
    _write(args, emit_optimization(_load_scenario(args)))


def _cmd_budget(args) -> None:
    _check_format(args, "csv")
    scenario = _load_scenario(args)
    option = scenario.residence(args.row)
    ncf = _parse_ncf(args.ncf)
    if args.baseline == "in_place":
        baseline = in_place_baseline(option, scenario.params)
    else:
        baseline = relocation_baseline(scenario.residences, scenario.params)
    bound = telecom_budget(option, ncf, scenario.params, baseline)
    _write(args, f"{whole_dollars(bound)}\n")


def _cmd_media(args) -> None:
    _check_format(args, "csv")
    conn = ConnectionProfile(
        down=args.down,
        up=args.up if args.up is not None else args.down,
        loss=args.loss,
        jitter=args.jitter,
        delay=args.delay,
        delay_is_rtt=not args.one_way,
    )
    feasible = feasible_media(
        conn,
        overprovision=args.factor,
        guaranteed=args.guaranteed,
        strict_message=args.strict_message,
    )
    factor = 1.0 if args.guaranteed else args.factor
    lines = ["media,qos_tier,required_down_mbps,feasible"]
    for media, prof in PROFILES.items():
        required = required_access(media, factor, Bound.HIGH_END)
        lines.append(
            f"{media.value},{prof.qos.name.lower()},{required:g},"
            f"{'yes' if media in feasible else 'no'}"
        )
    _write(args, "\n".join(lines) + "\n")


def _cmd_simulate(args) -> None:
    _check_format(args, "csv")
    config = _sim_config(args)
    trace_lines: list[str] = []
    if args.trace is not None:
        config = replace(
            config,
            trace=lambda record: trace_lines.append(json.dumps(record, sort_keys=True)),
        )
    result = run_detailed(config)
    if args.trace is not None:
        args.trace.write_text("\n".join(trace_lines) + "\n", encoding="utf-8")
    _write(args, result.report.to_csv())


def _cmd_compare(args) -> None:
    _check_format(args, "csv")
    _write(args, compare_architectures(_sim_config(args)).to_csv())


_COMMANDS = {
    "table3": _cmd_table3,
    "curves": _cmd_curves,
    "optimize": _cmd_optimize,
    "budget": _cmd_budget,
    "media": _cmd_media,
    "simulate": _cmd_simulate,
    "compare": _cmd_compare,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        _COMMANDS[args.command](args)
    except (ScenarioError, TopologyError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
