"""Command-line front end.

Commands: table1, table2, figures, shatter, norms. Exit codes: 0 success,
2 usage error, 3 memory budget exceeded, 4 internal numeric failure
(quadrature power drifted from coefficient power). FRLAB_MAX_BYTES in the
environment overrides the default memory cap; --max-bytes overrides both.
"""

import argparse
import os
import sys
from pathlib import Path

from . import runners
from .errors import ParsevalError, ResourceLimitError
from .report import FORMATS, render
from .sequences import LABELS
from .spectrum import DEFAULT_MAX_BYTES, DEFAULT_OVERSAMPLE, REALIZATIONS

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_RESOURCE = 3
EXIT_NUMERIC = 4


def _default_max_bytes() -> int:
    env = os.environ.get("FRLAB_MAX_BYTES")
    return int(env) if env else DEFAULT_MAX_BYTES


def _parse_rlist(text: str) -> list[int]:
    items = [part.strip() for part in text.split(",") if part.strip()]
    if not items:
        raise ValueError("R list must not be empty")
    return [int(part) for part in items]


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="frlab",
        description="Fourier-ratio tables, figure data, and shattering experiments.")
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--rlist", type=str, default=None,
                        help="comma-separated sequence lengths R")
    common.add_argument("--oversample", type=int, default=DEFAULT_OVERSAMPLE,
                        help="grid oversampling factor (default 4)")
    common.add_argument("--seed", type=int, default=1,
                        help="seed for random-sign sequences (default 1)")
    common.add_argument("--format", choices=FORMATS, default="csv")
    common.add_argument("--out", type=Path, default=None,
                        help="output path (default stdout)")
    common.add_argument("--max-bytes", type=int, default=None,
                        help="memory budget for transform grids "
                             f"(default {DEFAULT_MAX_BYTES} or FRLAB_MAX_BYTES)")
    common.add_argument("--parallel", type=int, default=1,
                        help="number of concurrent row workers")
    common.add_argument("--realization", choices=REALIZATIONS, default="cosine",
                        help="norm realization: power-matched cosine series "
                             "(default) or complex modulus")

    p1 = sub.add_parser("table1", parents=[common],
                        help="Mobius norm table over an R grid")
    p1.add_argument("--include-1e7", action="store_true",
                    help=f"append the gated R={runners.GATED_R} row "
                         "(run with --oversample 2 to stay in budget)")

    sub.add_parser("table2", parents=[common],
                   help="five-sequence comparison table at one R")
    sub.add_parser("figures", parents=[common],
                   help="figure data series (series,x,y)")

    ps = sub.add_parser("shatter", parents=[common],
                        help="sign-pattern shattering experiment")
    ps.add_argument("--s-size", type=int, default=3,
                    help="size of the shattered candidate set (default 3)")
    ps.add_argument("--threshold", type=float, default=0.5,
                    help="Fourier-ratio threshold a pattern must reach")
    ps.add_argument("--trials", type=int, default=64,
                    help="completions attempted per pattern (default 64)")

    pn = sub.add_parser("norms", parents=[common],
                        help="norm report for a single sequence")
    pn.add_argument("--kind", choices=[k for k in LABELS if k != "custom"],
                    default="mobius")
    pn.add_argument("--centered", action="store_true",
                    help="remove the mean before analyzing")
    return parser


def _single_R(rlist: list[int], command: str) -> int:
    if len(rlist) != 1:
        raise ValueError(f"{command} takes a single R (got {len(rlist)})")
    return rlist[0]


def _build_doc(args):
    max_bytes = args.max_bytes if args.max_bytes is not None else _default_max_bytes()
    if args.command in ("table1", "figures"):
        if args.rlist is None:
            rlist = list(runners.DEFAULT_R_GRID)
            if getattr(args, "include_1e7", False):
                rlist.append(runners.GATED_R)
        else:
            rlist = _parse_rlist(args.rlist)
            if getattr(args, "include_1e7", False) and runners.GATED_R not in rlist:
                rlist.append(runners.GATED_R)
        if args.command == "table1":
            return runners.run_table1(rlist, oversample=args.oversample,
                                      fmt=args.format, max_bytes=max_bytes,
                                      parallel=args.parallel,
                                      realization=args.realization)
        return runners.run_figures(rlist, oversample=args.oversample,
                                   fmt=args.format, seed=args.seed,
                                   max_bytes=max_bytes, parallel=args.parallel,
                                   realization=args.realization)
    rlist = _parse_rlist(args.rlist) if args.rlist else [1_000_000]
    R = _single_R(rlist, args.command)
    if args.command == "table2":
        return runners.run_table2(R, seed=args.seed, oversample=args.oversample,
                                  fmt=args.format, max_bytes=max_bytes,
                                  parallel=args.parallel,
                                  realization=args.realization)
    if args.command == "shatter":
        return runners.run_shatter(R, S_size=args.s_size, threshold=args.threshold,
                                   trials=args.trials, seed=args.seed,
                                   fmt=args.format, oversample=args.oversample,
                                   max_bytes=max_bytes,
                                   realization=args.realization)
    return runners.run_norms(args.kind, R, seed=args.seed, centered=args.centered,
                             realization=args.realization,
                             oversample=args.oversample, fmt=args.format,
                             max_bytes=max_bytes)


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        doc = _build_doc(args)
    except ResourceLimitError as exc:
        print(f"frlab: resource limit: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except ParsevalError as exc:
        print(f"frlab: numeric failure: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    except ValueError as exc:
        print(f"frlab: {exc}", file=sys.stderr)
        return EXIT_USAGE
    text = render(doc)
    if args.out is None:
        sys.stdout.write(text)
    else:
        args.out.write_text(text, encoding="utf-8", newline="")
    return EXIT_OK


if __name__ == "__main__":
    raise SystemExit(main())
