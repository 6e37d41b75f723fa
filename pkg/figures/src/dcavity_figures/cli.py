"""Command-line front end: ``figures <preset|all> --in <dir> --out <dir>``."""

from __future__ import annotations

import argparse
import sys

from .recipes import RECIPES, recipe
from .render import EmptyDataError, MissingColumnError, render


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="figures", description="render sweep CSV data as figure images"
    )
    parser.add_argument("preset", help="figure name or 'all'")
    parser.add_argument("--in", dest="indir", default=".", help="CSV directory")
    parser.add_argument("--out", dest="outdir", default=".", help="image directory")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    names = list(RECIPES) if args.preset == "all" else [args.preset]
    try:
        for name in names:
            for path in render(recipe(name), args.indir, args.outdir):
                print(f"wrote {path}")
    except (KeyError, MissingColumnError) as exc:
        # KeyError reprs its argument; unwrap for a readable message
        print(f"error: {exc.args[0]}", file=sys.stderr)
        return 1
    except (EmptyDataError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


def entrypoint() -> None:
    raise SystemExit(main())
