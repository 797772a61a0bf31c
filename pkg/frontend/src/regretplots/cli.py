"""Command line: plot --in a.csv --in b.csv --label A --label B --out fig.png [--logy]"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .plotting import PlotSpec, SchemaError, render


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(prog="plot", description=__doc__)
    parser.add_argument("--in", dest="inputs", type=Path, action="append", required=True,
                        help="input CSV (repeat per policy)")
    parser.add_argument("--label", dest="labels", action="append", default=None,
                        help="legend label (repeat, one per input; defaults to file stems)")
    parser.add_argument("--out", type=Path, required=True, help="output image path")
    parser.add_argument("--logy", action="store_true", help="log-scale the regret axis")
    args = parser.parse_args(argv)
    labels = args.labels if args.labels is not None else [p.stem for p in args.inputs]
    try:
        spec = PlotSpec(tuple(args.inputs), tuple(labels), args.out, args.logy)
        out = render(spec)
    except (SchemaError, FileNotFoundError) as exc:
        print(f"plot error: {exc}", file=sys.stderr)
        return 1
    print(out)
    return 0


if __name__ == "__main__":
    sys.exit(main())
