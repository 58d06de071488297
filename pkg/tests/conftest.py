"""Shared fixtures: the worked examples used across the suite and two
session-scoped populations reused by several acceptance criteria."""

import random

import pytest

from acmlines import (
    CriteriaDisagreement,
    compact,
    is_acm,
    make_variety,
    reisner_cm,
    stanley_reisner_complex,
)
from acmlines.sampling import random_variety

# Fifteen lines; the A x B slice is a relabeled staircase of shape
# (5, 4, 3, 1) but the B x C slice is a diagonal pair, so the variety
# cannot be arithmetically Cohen-Macaulay.
FIFTEEN_LINES = make_variety(
    (4, 5, 2),
    u3={
        (1, 2), (1, 4), (1, 5),
        (2, 2), (2, 3), (2, 4), (2, 5),
        (3, 1), (3, 2), (3, 3), (3, 4), (3, 5),
        (4, 4),
    },
    u1={(1, 1), (2, 2)},
)

# Three lines whose A x B slice is a diagonal pair: the smallest
# non-ACM shape.  Kept in compacted labels; the raw form with the
# C-index 3 appears in the normalization tests.
DIAGONAL_PAIR_PLUS_ONE = make_variety(
    (2, 3, 1),
    u3={(1, 1), (2, 2)},
    u1={(3, 1)},
)

# Twelve lines closed under the four-hyperplane coplanarity condition.
FOUR_HYPERPLANE_EXAMPLE = make_variety(
    (2, 3, 2),
    u3={(1, 1), (1, 2), (1, 3), (2, 1), (2, 2)},
    u2={(1, 1), (1, 2), (2, 1)},
    u1={(1, 1), (1, 2), (2, 1), (3, 1)},
)

# Nine lines closed under the five-hyperplane condition.
FIVE_HYPERPLANE_EXAMPLE = make_variety(
    (2, 3, 2),
    u3={(1, 1), (1, 2), (1, 3), (2, 2)},
    u2={(1, 1), (1, 2), (2, 1)},
    u1={(1, 1), (3, 1)},
)

# Nine lines with two triple points on disjoint coordinates: fails the
# six-hyperplane condition and is the standard multiplicity-tensor
# example.
TWO_TRIPLE_POINTS = make_variety(
    (2, 2, 2),
    u3={(1, 1), (1, 2), (2, 2)},
    u2={(1, 1), (2, 1), (2, 2)},
    u1={(1, 1), (1, 2), (2, 2)},
)

# The previous variety plus L(A2, B1): ACM but not a Ferrers variety.
REPAIRED_TRIPLE_POINTS = make_variety(
    (2, 2, 2),
    u3={(1, 1), (1, 2), (2, 1), (2, 2)},
    u2={(1, 1), (2, 1), (2, 2)},
    u1={(1, 1), (1, 2), (2, 2)},
)

# Full-box Ferrers variety on (4, 3, 2): all three index sets are
# complete rectangles.
FULL_BOX_432 = make_variety(
    (4, 3, 2),
    u3={(i, j) for i in range(1, 5) for j in range(1, 4)},
    u2={(i, k) for i in range(1, 5) for k in range(1, 3)},
    u1={(j, k) for j in range(1, 4) for k in range(1, 3)},
)

# Two-direction variety: complete intersection of a pure B-form and a
# mixed A*C-form.
CI_EXAMPLE = make_variety(
    (4, 3, 2),
    u3={(i, j) for i in range(1, 5) for j in range(1, 4)},
    u1={(j, k) for j in range(1, 4) for k in range(1, 3)},
)

# Smallest ACM variety that is not a literal staircase in every
# direction; its companion is the corner variety below.
SKEW_CORNER = make_variety(
    (1, 2, 1), u3={(1, 1)}, u2={(1, 1)}, u1={(2, 1)}
)
CORNER = make_variety((1, 1, 1), u3={(1, 1)}, u2={(1, 1)}, u1={(1, 1)})

SINGLE_LINE = make_variety((1, 1, 1), u3={(1, 1)})


def all_small_varieties():
    """Every nonempty variety on the (2, 2, 2) box, compacted.

    There are 2^12 line subsets; the empty one is dropped.
    """
    cells3 = [(i, j) for i in range(1, 3) for j in range(1, 3)]
    cells2 = [(i, k) for i in range(1, 3) for k in range(1, 3)]
    cells1 = [(j, k) for j in range(1, 3) for k in range(1, 3)]
    tagged = (
        [(3, c) for c in cells3]
        + [(2, c) for c in cells2]
        + [(1, c) for c in cells1]
    )
    out = []
    for bits in range(1, 4096):
        chosen = [tagged[b] for b in range(12) if bits >> b & 1]
        u3 = {c for h, c in chosen if h == 3}
        u2 = {c for h, c in chosen if h == 2}
        u1 = {c for h, c in chosen if h == 1}
        out.append(compact(make_variety((2, 2, 2), u3, u2, u1)))
    return out


@pytest.fixture(scope="session")
def small_population():
    return all_small_varieties()


@pytest.fixture(scope="session")
def route_verdicts(small_population):
    """Verdict for every small variety, plus any route disagreements."""
    verdicts = []
    disagreements = []
    for X in small_population:
        try:
            verdicts.append((X, is_acm(X)))
        except CriteriaDisagreement as exc:
            disagreements.append((X, str(exc)))
    return verdicts, disagreements


@pytest.fixture(scope="session")
def oracle_population():
    """100 seeded random varieties with their two independent verdicts."""
    rng = random.Random(20240817)
    rows = []
    for _ in range(100):
        X = random_variety(rng, 3, p=0.4)
        combinatorial = is_acm(X).acm
        homological = reisner_cm(stanley_reisner_complex(X))
        rows.append((X, combinatorial, homological))
    return rows
