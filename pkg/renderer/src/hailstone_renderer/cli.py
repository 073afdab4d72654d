"""Render one figure dataset to an image file.

Usage: hailstone-render --figure 2 --out fig2.png fig2_L10.csv
Figure 4 takes two inputs (the 4a sequence file, then the 4b histogram
file). Exit codes: 0 written, 1 schema/input/output failure, 2 usage.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .render import FIGURE_IDS, RenderSpec, load_style, render
from .schema import SchemaError


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hailstone-render", description=__doc__)
    parser.add_argument("inputs", nargs="+", metavar="DATASET",
                        help="dataset file(s), CSV or JSON")
    parser.add_argument("--figure", required=True, choices=FIGURE_IDS)
    parser.add_argument("--out", required=True, help="output image path (.png or .svg)")
    parser.add_argument("--config", default=None, help="JSON style config")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        style = load_style(args.config)
        spec = RenderSpec(args.figure, [Path(p) for p in args.inputs],
                          Path(args.out), style)
        written = render(spec)
    except (SchemaError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    print(written)
    return 0


if __name__ == "__main__":
    sys.exit(main())
