"""Command line entry point: ``g2kit verify <scenario>`` and ``g2kit list``."""
from __future__ import annotations

import argparse
import os
import sys

from ..report import SamplingSpec, Verdict
from .render import render_report
from .run import run_checks
from .scenario import ScenarioError, bundled_names, load_scenario, scenario_to_json

EXIT_OK, EXIT_FAILED, EXIT_INPUT, EXIT_SAMPLED = 0, 1, 2, 3


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="g2kit", description="Exact checks of G2 and contact compatibility scenarios.")
    sub = parser.add_subparsers(dest="command", required=True)

    verify = sub.add_parser("verify", help="run the checks declared in a scenario")
    verify.add_argument("scenario", help="path to a scenario JSON file or a bundled scenario name")
    verify.add_argument("--samples", type=int, default=64,
                        help="random sample points for nonvanishing certificates (default 64)")
    verify.add_argument("--grid", type=int, default=4,
                        help="lattice points per axis on [-1, 1] (default 4)")
    verify.add_argument("--seed", type=int, default=None,
                        help="sampling seed (default: $G2KIT_SEED, else 0)")
    verify.add_argument("--tol", type=float, default=1e-12,
                        help="tolerance for the numeric checks only (default 1e-12)")
    verify.add_argument("--report", choices=("text", "json"), default="text")
    verify.add_argument("--strict", action="store_true",
                        help="exit 3 when some clause is only verified on samples")
    verify.add_argument("-o", "--output", help="write the report to a file instead of stdout")

    sub.add_parser("list", help="list the bundled scenarios")
    show = sub.add_parser("show", help="print a scenario in canonical JSON")
    show.add_argument("scenario")
    return parser


def _seed(arg: int | None) -> int:
    if arg is not None:
        return arg
    env = os.environ.get("G2KIT_SEED")
    return int(env) if env else 0


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    if args.command == "list":
        for name in bundled_names():
            sc = load_scenario(name)
            print(f"{name}\t{sc.description}")
        return EXIT_OK
    try:
        sc = load_scenario(args.scenario)
        if args.command == "show":
            sys.stdout.write(scenario_to_json(sc))
            return EXIT_OK
        if args.samples < 0 or args.grid < 0:
            raise ValueError("--samples and --grid must be non-negative")
        seed = _seed(args.seed)
    except (ScenarioError, OSError, ValueError) as exc:
        print(f"g2kit: error: {exc}", file=sys.stderr)
        return EXIT_INPUT

    sampling = SamplingSpec(grid=args.grid, samples=args.samples, seed=seed)
    run = run_checks(sc, sampling, args.tol)
    text = render_report(run, args.report)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    if run.failed:
        return EXIT_FAILED
    if args.strict and run.verdict == Verdict.SAMPLED.value:
        return EXIT_SAMPLED
    return EXIT_OK
