#!/usr/bin/env python3
"""Regenerate every figure-data CSV and cross-check the time-domain oracle.

Usage: python3 scripts/reproduce_data.py [outdir]

Writes one CSV per preset into outdir (default: data/) and then runs the
closed-form vs time-domain verification grid, exiting non-zero on mismatch.
"""

import sys
from pathlib import Path

from dcavity import cli


def main() -> int:
    outdir = sys.argv[1] if len(sys.argv) > 1 else "data"
    Path(outdir).mkdir(parents=True, exist_ok=True)
    rc = cli.main(["figure", "all", "--out", outdir])
    if rc != 0:
        return rc
    return cli.main(["verify"])


if __name__ == "__main__":
    raise SystemExit(main())
