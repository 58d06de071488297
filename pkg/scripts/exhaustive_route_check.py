#!/usr/bin/env python3
"""Exhaustively cross-check the three ACM routes on a small box.

Enumerates every subset of the 12 possible lines over a 2x2x2 box of
hyperplanes, runs the chordality route, the hyperplane-subset route,
and the numeric multiplicity route on each, and reports any variety
where the routes disagree.  Optionally also compares against the
face-ring depth oracle.
"""

import argparse
import itertools
import sys
import time

from acmlines import (
    CriteriaDisagreement,
    compact,
    is_acm,
    make_variety,
    reisner_cm,
    stanley_reisner_complex,
    variety_to_dict,
)


def enumerate_varieties():
    cells = [(i, j) for i in (1, 2) for j in (1, 2)]
    tagged = [(3, c) for c in cells] + [(2, c) for c in cells] + [(1, c) for c in cells]
    for bits in range(1, 1 << len(tagged)):
        chosen = [t for n, t in enumerate(tagged) if bits >> n & 1]
        u3 = {c for f, c in chosen if f == 3}
        u2 = {c for f, c in chosen if f == 2}
        u1 = {c for f, c in chosen if f == 1}
        yield compact(make_variety((2, 2, 2), u3=u3, u2=u2, u1=u1))


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--with-oracle", action="store_true",
                        help="also compare against the face-ring depth oracle")
    args = parser.parse_args(argv)

    started = time.monotonic()
    total = acm = disagreements = oracle_splits = 0
    for X in enumerate_varieties():
        total += 1
        try:
            verdict = is_acm(X)
        except CriteriaDisagreement as exc:
            disagreements += 1
            print("ROUTE DISAGREEMENT:", variety_to_dict(X), exc)
            continue
        if verdict.acm:
            acm += 1
        if args.with_oracle:
            cm = reisner_cm(stanley_reisner_complex(X))
            if cm != verdict.acm:
                oracle_splits += 1
                print("ORACLE DISAGREEMENT:", variety_to_dict(X),
                      "routes say", verdict.acm, "oracle says", cm)

    elapsed = time.monotonic() - started
    print(f"checked {total} varieties in {elapsed:.1f}s: "
          f"{acm} ACM, {disagreements} route disagreements"
          + (f", {oracle_splits} oracle splits" if args.with_oracle else ""))
    return 1 if disagreements or oracle_splits else 0


if __name__ == "__main__":
    sys.exit(main())
