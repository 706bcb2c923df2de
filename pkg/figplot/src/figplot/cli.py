"""figplot command line: one figure per invocation."""

import argparse
import sys
from pathlib import Path

from . import FIGURES, IMAGE_FORMATS, FigureSpec, render


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="figplot", description="Render benchmark figures from a series,x,y CSV.")
    parser.add_argument("--figure", choices=FIGURES, required=True)
    parser.add_argument("--in", dest="input_csv", type=Path, required=True,
                        help="figure-data CSV (from `frlab figures`)")
    parser.add_argument("--out", dest="output_path", type=Path, required=True)
    parser.add_argument("--image-format", choices=IMAGE_FORMATS, default=None,
                        help="default: inferred from the output extension")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    fmt = args.image_format
    if fmt is None:
        suffix = args.output_path.suffix.lstrip(".").lower()
        fmt = suffix if suffix in IMAGE_FORMATS else "svg"
    spec = FigureSpec(input_csv=args.input_csv, figure=args.figure,
                      output_path=args.output_path, image_format=fmt)
    try:
        out = render(spec)
    except OSError as exc:
        print(f"figplot: cannot read input: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"figplot: {exc}", file=sys.stderr)
        return 2
    print(out)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
