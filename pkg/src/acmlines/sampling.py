"""Random varieties for experiments and property tests."""

from __future__ import annotations

from .criteria import is_acm
from .variety import VarietyOfLines, compact, make_variety


def random_variety(rng, dmax: int, p: float = 0.4) -> VarietyOfLines:
    """Nonempty compacted variety: each candidate line kept with
    probability p over a random box with sides up to dmax."""
    while True:
        d1 = rng.randint(1, dmax)
        d2 = rng.randint(1, dmax)
        d3 = rng.randint(1, dmax)
        u3 = {
            (i, j)
            for i in range(1, d1 + 1)
            for j in range(1, d2 + 1)
            if rng.random() < p
        }
        u2 = {
            (i, k)
            for i in range(1, d1 + 1)
            for k in range(1, d3 + 1)
            if rng.random() < p
        }
        u1 = {
            (j, k)
            for j in range(1, d2 + 1)
            for k in range(1, d3 + 1)
            if rng.random() < p
        }
        if u3 or u2 or u1:
            return compact(make_variety((d1, d2, d3), u3, u2, u1))


def random_acm_variety(rng, dmax: int, p: float = 0.4, max_attempts: int = 1000):
    """Rejection-sample a random variety until one is ACM, or None."""
    for _ in range(max_attempts):
        X = random_variety(rng, dmax, p)
        if is_acm(X).acm:
            return X
    return None


def random_partition(rng, max_rows: int, max_cols: int) -> tuple[int, ...]:
    """Weakly decreasing positive parts; may be empty."""
    nrows = rng.randint(0, max_rows)
    parts = sorted(
        (rng.randint(1, max_cols) for _ in range(nrows)), reverse=True
    )
    return tuple(parts)


def random_ferrers_variety(rng, dmax: int) -> VarietyOfLines:
    """Nonempty compacted variety whose three diagrams are staircases."""
    while True:
        parts = [random_partition(rng, dmax, dmax) for _ in range(3)]
        if not any(parts):
            continue
        diagrams = [
            {
                (r, c)
                for r, size in enumerate(partition, start=1)
                for c in range(1, size + 1)
            }
            for partition in parts
        ]
        d1 = max(
            [len(parts[0]), len(parts[1])]
            + [0]
        )
        d2 = max(
            [parts[0][0] if parts[0] else 0, len(parts[2])]
        )
        d3 = max(
            [parts[1][0] if parts[1] else 0, parts[2][0] if parts[2] else 0]
        )
        return compact(
            make_variety((d1, d2, d3), diagrams[0], diagrams[1], diagrams[2])
        )
