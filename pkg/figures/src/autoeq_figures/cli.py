"""Batch renderer: turn a directory of solver CSV tables into PNG figures.

Exit codes: 0 success, 2 missing or inconsistent input data, 4 usage error.
"""

import argparse
import sys

from .csvio import MissingColumnError
from .render import render
from .spec import FIGURE_IDS, build_spec


def main(argv=None):
    parser = argparse.ArgumentParser(
        prog="autoeq-figures",
        description="render figures from the solver CLI's CSV tables")
    sub = parser.add_subparsers(dest="command", required=True)
    p_render = sub.add_parser("render", help="render one figure or all of them")
    which = p_render.add_mutually_exclusive_group(required=True)
    which.add_argument("--all", action="store_true", dest="render_all")
    which.add_argument("--figure", metavar="ID", help="one figure id")
    p_render.add_argument("--in", dest="in_dir", required=True,
                          metavar="DIR", help="directory of solver CSVs")
    p_render.add_argument("--out", dest="out_dir", required=True,
                          metavar="DIR", help="directory for PNG output")
    p_render.add_argument("--list", action="store_true",
                          help="print the figure ids and exit")
    args = parser.parse_args(argv)

    if args.list:
        for fid in FIGURE_IDS:
            print(fid)
        return 0

    ids = FIGURE_IDS if args.render_all else (args.figure,)
    try:
        specs = [build_spec(fid) for fid in ids]
    except KeyError as err:
        print(f"usage error: {err.args[0]}", file=sys.stderr)
        return 4
    try:
        for spec in specs:
            path = render(spec, args.in_dir, args.out_dir)
            print(f"wrote {path}")
    except (FileNotFoundError, MissingColumnError, ValueError) as err:
        print(f"input error: {err}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
