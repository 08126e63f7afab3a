"""
Command-line runner.

    autoeq solve --scenario baseline --out results/
    autoeq solve --scenario my_run.cfg --a 0.3 --tau 0.1
    autoeq sweep --param a --range 0:0.9:61
    autoeq verify
    autoeq list-scenarios

Output directory resolution: --out, else the AUTOEQ_OUT environment
variable, else ./out. Exit codes: 0 on success, 2 when a solve fails to
converge, 3 when verification checks fail, 4 on configuration errors.
"""

import argparse
import os
import sys
import time
from dataclasses import replace

from .household import SolverError
from .equilibrium import MarketClearingError
from .automation_policy import AutomationGrid
from .scenarios import PRESETS, ConfigError, parse_config, run


def _out_dir(args):
    if args.out:
        return args.out
    return os.environ.get("AUTOEQ_OUT", "out")


def _load_scenario(token):
    if os.path.exists(token):
        return parse_config(token)
    if token in PRESETS:
        return PRESETS[token]
    raise ConfigError(f"no preset or config file named {token!r}")


def _apply_flags(scenario, args):
    if args.a is not None:
        if args.a == "auto":
            scenario = replace(scenario, kind="decentralized", a_fixed=None,
                               points=None)
        else:
            try:
                a = float(args.a)
            except ValueError:
                raise ConfigError(f"--a expects a number or 'auto', got {args.a!r}")
            scenario = replace(scenario, kind="solve_at_a", a_fixed=a,
                               points=None)
    if args.tau is not None:
        scenario = replace(scenario, tau=args.tau)
    return scenario


def _parse_range(text):
    parts = text.split(":")
    if len(parts) != 3:
        raise ConfigError("--range expects lo:hi:n, e.g. 0:0.9:61")
    try:
        lo, hi, n = float(parts[0]), float(parts[1]), int(parts[2])
    except ValueError:
        raise ConfigError(f"bad --range value {text!r}")
    if n < 2 or hi <= lo:
        raise ConfigError("--range needs hi > lo and at least two points")
    return AutomationGrid(n_points=n, a_min=lo, a_max=hi)


def _execute(scenario, out_dir, jobs, agrid=None):
    start = time.perf_counter()
    manifest = run(scenario, out_dir, jobs=jobs, agrid=agrid)
    elapsed = time.perf_counter() - start
    print(f"{scenario.name}: wrote {len(manifest['outputs'])} files to "
          f"{out_dir} [{elapsed:.1f}s]", file=sys.stderr)
    return manifest


def main(argv=None):
    parser = argparse.ArgumentParser(
        prog="autoeq",
        description="stationary equilibria with endogenous firm automation")
    sub = parser.add_subparsers(dest="command", required=True)

    p_solve = sub.add_parser("solve", help="run a preset or config-file scenario")
    p_solve.add_argument("--scenario", required=True,
                         help="preset name or path to a key = value file")
    p_solve.add_argument("--a", default=None,
                         help="fix the automation level, or 'auto' for the "
                              "decentralized root")
    p_solve.add_argument("--tau", type=float, default=None,
                         help="override the automation tax rate")
    p_solve.add_argument("--jobs", type=int, default=None)
    p_solve.add_argument("--out", default=None)

    p_sweep = sub.add_parser("sweep", help="sweep the automation level")
    p_sweep.add_argument("--param", required=True)
    p_sweep.add_argument("--range", required=True, dest="range_",
                         metavar="RANGE", help="lo:hi:n")
    p_sweep.add_argument("--tau", type=float, default=None)
    p_sweep.add_argument("--jobs", type=int, default=None)
    p_sweep.add_argument("--out", default=None)

    p_verify = sub.add_parser("verify",
                              help="equilibrium checks against stored values")
    p_verify.add_argument("--jobs", type=int, default=None)
    p_verify.add_argument("--out", default=None)

    sub.add_parser("list-scenarios", help="print the preset table")

    args = parser.parse_args(argv)

    try:
        if args.command == "list-scenarios":
            width = max(len(name) for name in PRESETS)
            for name, sc in PRESETS.items():
                print(f"{name:<{width}}  {sc.kind:<16}  {sc.description}")
            return 0

        if args.command == "solve":
            scenario = _apply_flags(_load_scenario(args.scenario), args)
            _execute(scenario, _out_dir(args), args.jobs)
            return 0

        if args.command == "sweep":
            if args.param != "a":
                raise ConfigError(f"only --param a is supported, got {args.param!r}")
            agrid = _parse_range(args.range_)
            scenario = PRESETS["baseline"]
            if args.tau is not None:
                scenario = replace(scenario, tau=args.tau)
            _execute(scenario, _out_dir(args), args.jobs, agrid=agrid)
            return 0

        if args.command == "verify":
            manifest = _execute(PRESETS["verify_grid"], _out_dir(args), args.jobs)
            failures = manifest["diagnostics"]["verify_failures"]
            if failures:
                print(f"verify: {failures} check(s) failed", file=sys.stderr)
                return 3
            print("verify: all checks passed", file=sys.stderr)
            return 0
    except ConfigError as err:
        print(f"config error: {err}", file=sys.stderr)
        return 4
    except (SolverError, MarketClearingError) as err:
        print(f"solver error: {err}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
