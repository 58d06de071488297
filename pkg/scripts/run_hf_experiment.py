#!/usr/bin/env python3
"""Run the companion Hilbert-function experiment from the command line.

Draws random ACM varieties of lines, builds the staircase companion of
each (same row sizes in every direction, rows left-packed and sorted),
and compares Hilbert functions over a box.  Any disagreement is written
out as a counterexample artifact.
"""

import argparse
import json
import sys

from acmlines import run_hf_experiment


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--trials", type=int, default=100)
    parser.add_argument("--dmax", type=int, default=3,
                        help="max hyperplanes per family in random draws")
    parser.add_argument("--box", type=int, nargs=3, default=(4, 4, 4),
                        metavar=("I", "J", "K"),
                        help="compare Hilbert values for degrees up to this box")
    parser.add_argument("--seed", type=int, default=None)
    parser.add_argument("--p", type=float, default=0.4,
                        help="line inclusion probability in random draws")
    parser.add_argument("--out-dir", default=None,
                        help="write counterexample artifacts here")
    args = parser.parse_args(argv)

    report = run_hf_experiment(
        trials=args.trials,
        dmax=args.dmax,
        box=tuple(args.box),
        seed=args.seed,
        p=args.p,
        out_dir=args.out_dir,
    )
    print(json.dumps(report.to_dict(), indent=2, sort_keys=True))
    return 1 if report.failures else 0


if __name__ == "__main__":
    sys.exit(main())
