"""Core data type: a union of coordinate lines in (P^1)^3.

A variety is stored by three index sets, one per line direction:

* direction 3 lines run along the third factor and are cut out by a pair
  (A_i, B_j), stored in ``U3`` as ``(i, j)``;
* direction 2 lines are pairs (A_i, C_k), stored in ``U2`` as ``(i, k)``;
* direction 1 lines are pairs (B_j, C_k), stored in ``U1`` as ``(j, k)``.

Indices are 1-based. ``d = (d1, d2, d3)`` counts the hyperplanes in the
three coordinate families A, B, C. The normal form used throughout the
package ("compact") has every index in 1..d_f used by at least one line.
"""

from __future__ import annotations

import json
import warnings
from dataclasses import dataclass
from typing import Iterable, Mapping, NamedTuple

from .errors import (
    DuplicateLine,
    EmptyPointSet,
    OutOfBounds,
    UnknownHyperplane,
    BadPermutation,
    UnusedHyperplane,
    UnusedHyperplaneWarning,
)

FAMILY_NAMES = ("A", "B", "C")

# Families (1=A, 2=B, 3=C) indexing the pair stored for each line direction.
DIRECTION_FAMILIES = {3: (1, 2), 2: (1, 3), 1: (2, 3)}


class HyperplaneId(NamedTuple):
    """One coordinate hyperplane, e.g. A3 = ('A', 3)."""

    family: str
    index: int

    def __str__(self) -> str:
        return f"{self.family}{self.index}"


def _family_number(family) -> int:
    """Accept 1/2/3 or 'A'/'B'/'C' and return 1/2/3."""
    if family in (1, 2, 3):
        return family
    if family in FAMILY_NAMES:
        return FAMILY_NAMES.index(family) + 1
    raise UnknownHyperplane(f"unknown family {family!r}")


@dataclass(frozen=True)
class VarietyOfLines:
    """Immutable union of coordinate lines, normalized or not."""

    d: tuple[int, int, int]
    U3: frozenset[tuple[int, int]]
    U2: frozenset[tuple[int, int]]
    U1: frozenset[tuple[int, int]]

    def __post_init__(self):
        d1, d2, d3 = self.d
        if min(d1, d2, d3) < 0:
            raise OutOfBounds(f"negative hyperplane count in d={self.d}")
        for direction, bound_pair in ((3, (d1, d2)), (2, (d1, d3)), (1, (d2, d3))):
            for p, q in self.u(direction):
                if not (1 <= p <= bound_pair[0] and 1 <= q <= bound_pair[1]):
                    raise OutOfBounds(
                        f"line ({p},{q}) of direction {direction} outside "
                        f"bounds {bound_pair}"
                    )

    def u(self, direction: int) -> frozenset[tuple[int, int]]:
        """The index set for one line direction."""
        return {3: self.U3, 2: self.U2, 1: self.U1}[direction]

    @property
    def line_count(self) -> int:
        return len(self.U3) + len(self.U2) + len(self.U1)

    @property
    def is_empty(self) -> bool:
        return self.line_count == 0

    def lines(self) -> frozenset[tuple[int, int, int]]:
        """All lines as (direction, p, q) triples."""
        return frozenset(
            (h, p, q) for h in (1, 2, 3) for (p, q) in self.u(h)
        )

    def used_indices(self, family) -> set[int]:
        """Indices of one family that appear in at least one line."""
        f = _family_number(family)
        used: set[int] = set()
        for direction, (fam_p, fam_q) in DIRECTION_FAMILIES.items():
            for p, q in self.u(direction):
                if fam_p == f:
                    used.add(p)
                if fam_q == f:
                    used.add(q)
        return used

    def is_compact(self) -> bool:
        return all(
            self.used_indices(f) == set(range(1, self.d[f - 1] + 1))
            for f in (1, 2, 3)
        )


def make_variety(d, u3=(), u2=(), u1=()) -> VarietyOfLines:
    """Convenience constructor from plain iterables of pairs."""
    return VarietyOfLines(
        d=tuple(d),
        U3=frozenset(tuple(p) for p in u3),
        U2=frozenset(tuple(p) for p in u2),
        U1=frozenset(tuple(p) for p in u1),
    )


EMPTY_VARIETY = make_variety((0, 0, 0))


# ---------------------------------------------------------------------------
# validation and normalization
# ---------------------------------------------------------------------------

def validation_errors(raw: Mapping) -> list[str]:
    """All structural problems of a raw input dict, as messages.

    Unused hyperplane indices are reported too; callers decide whether
    they are fatal (strict) or fixable by compaction.
    """
    problems = []
    d = raw.get("d")
    if (
        not isinstance(d, (list, tuple))
        or len(d) != 3
        or not all(isinstance(x, int) and x >= 0 for x in d)
    ):
        return [f"d must be three non-negative integers, got {d!r}"]
    d1, d2, d3 = d
    bounds = {"U3": (d1, d2), "U2": (d1, d3), "U1": (d2, d3)}
    used = {1: set(), 2: set(), 3: set()}
    for key in ("U3", "U2", "U1"):
        direction = int(key[1])
        fam_p, fam_q = DIRECTION_FAMILIES[direction]
        seen = set()
        for entry in raw.get(key, ()):
            if not (
                isinstance(entry, (list, tuple))
                and len(entry) == 2
                and all(isinstance(x, int) for x in entry)
            ):
                problems.append(f"{key}: entry {entry!r} is not an index pair")
                continue
            p, q = entry
            if not (1 <= p <= bounds[key][0] and 1 <= q <= bounds[key][1]):
                problems.append(
                    f"{key}: line ({p},{q}) outside bounds {bounds[key]}"
                )
                continue
            if (p, q) in seen:
                problems.append(f"{key}: duplicate line ({p},{q})")
                continue
            seen.add((p, q))
            used[fam_p].add(p)
            used[fam_q].add(q)
    for f in (1, 2, 3):
        for i in range(1, d[f - 1] + 1):
            if i not in used[f]:
                problems.append(
                    f"unused hyperplane {FAMILY_NAMES[f - 1]}{i}"
                )
    return problems


def validate(raw: Mapping, strict: bool = False) -> VarietyOfLines:
    """Check a raw input dict and return a normalized variety.

    Raises OutOfBounds / DuplicateLine on malformed lines. Unused
    hyperplane indices raise UnusedHyperplane when ``strict``; otherwise
    they produce an UnusedHyperplaneWarning and the result is compacted.
    """
    problems = validation_errors(raw)
    hard = [p for p in problems if not p.startswith("unused hyperplane")]
    if hard:
        message = "; ".join(hard)
        if any("duplicate" in p for p in hard):
            raise DuplicateLine(message)
        raise OutOfBounds(message)
    unused = [p for p in problems if p.startswith("unused hyperplane")]
    variety = make_variety(
        tuple(raw["d"]),
        raw.get("U3", ()),
        raw.get("U2", ()),
        raw.get("U1", ()),
    )
    if unused:
        if strict:
            raise UnusedHyperplane("; ".join(unused))
        warnings.warn("; ".join(unused) + " (compacting)", UnusedHyperplaneWarning)
        variety = compact(variety)
    return variety


def compact(X: VarietyOfLines) -> VarietyOfLines:
    """Renumber each family's used indices to 1..n, preserving order."""
    maps = {}
    new_d = []
    for f in (1, 2, 3):
        used = sorted(X.used_indices(f))
        maps[f] = {old: new for new, old in enumerate(used, start=1)}
        new_d.append(len(used))

    def remap(direction):
        fam_p, fam_q = DIRECTION_FAMILIES[direction]
        return frozenset(
            (maps[fam_p][p], maps[fam_q][q]) for (p, q) in X.u(direction)
        )

    return VarietyOfLines(
        d=tuple(new_d), U3=remap(3), U2=remap(2), U1=remap(1)
    )


# ---------------------------------------------------------------------------
# constructions
# ---------------------------------------------------------------------------

def direction_slice(X: VarietyOfLines, direction: int) -> VarietyOfLines:
    """The sub-variety of lines in one direction, labels preserved.

    The result keeps X's hyperplane numbering (so the three slices
    partition X's line set); it is generally not compact.
    """
    parts = {3: frozenset(), 2: frozenset(), 1: frozenset()}
    parts[direction] = X.u(direction)
    return VarietyOfLines(d=X.d, U3=parts[3], U2=parts[2], U1=parts[1])


def grid_from_points(points: Iterable[tuple[int, int, int]]) -> VarietyOfLines:
    """Union of the three coordinate lines through each point.

    Points are (i, j, k) triples of 1-based hyperplane indices. The
    result is compacted, so point sets with index gaps get renumbered.
    """
    point_set = {tuple(p) for p in points}
    if not point_set:
        raise EmptyPointSet("grid construction needs at least one point")
    for p in point_set:
        if len(p) != 3 or not all(isinstance(x, int) and x >= 1 for x in p):
            raise OutOfBounds(f"bad point {p!r}: need three positive integers")
    d = tuple(max(p[f] for p in point_set) for f in range(3))
    return compact(
        make_variety(
            d,
            u3={(i, j) for (i, j, k) in point_set},
            u2={(i, k) for (i, j, k) in point_set},
            u1={(j, k) for (i, j, k) in point_set},
        )
    )


def remove_hyperplane(X: VarietyOfLines, family, index: int) -> VarietyOfLines:
    """Delete all lines lying in one coordinate hyperplane, then compact."""
    f = _family_number(family)
    if not (1 <= index <= X.d[f - 1]):
        raise UnknownHyperplane(
            f"{FAMILY_NAMES[f - 1]}{index} does not exist (d={X.d})"
        )

    def keep(direction):
        fam_p, fam_q = DIRECTION_FAMILIES[direction]
        return frozenset(
            (p, q)
            for (p, q) in X.u(direction)
            if not (fam_p == f and p == index) and not (fam_q == f and q == index)
        )

    return compact(
        VarietyOfLines(d=X.d, U3=keep(3), U2=keep(2), U1=keep(1))
    )


def relabel(X: VarietyOfLines, perm_a, perm_b, perm_c) -> VarietyOfLines:
    """Apply one permutation per family; perm[old-1] = new index."""
    perms = {}
    for f, perm in ((1, perm_a), (2, perm_b), (3, perm_c)):
        perm = tuple(perm)
        if sorted(perm) != list(range(1, X.d[f - 1] + 1)):
            raise BadPermutation(
                f"family {FAMILY_NAMES[f - 1]}: {perm!r} is not a "
                f"permutation of 1..{X.d[f - 1]}"
            )
        perms[f] = perm

    def apply(direction):
        fam_p, fam_q = DIRECTION_FAMILIES[direction]
        return frozenset(
            (perms[fam_p][p - 1], perms[fam_q][q - 1])
            for (p, q) in X.u(direction)
        )

    return VarietyOfLines(d=X.d, U3=apply(3), U2=apply(2), U1=apply(1))


# ---------------------------------------------------------------------------
# rendering and JSON
# ---------------------------------------------------------------------------

def render(X: VarietyOfLines, direction: int) -> str:
    """Dot diagram of one direction's index set, first family as rows."""
    fam_p, fam_q = DIRECTION_FAMILIES[direction]
    rows, cols = X.d[fam_p - 1], X.d[fam_q - 1]
    cells = X.u(direction)
    return "\n".join(
        " ".join("●" if (r, c) in cells else "·" for c in range(1, cols + 1))
        for r in range(1, rows + 1)
    )


def variety_to_dict(X: VarietyOfLines) -> dict:
    return {
        "d": list(X.d),
        "U3": [list(p) for p in sorted(X.U3)],
        "U2": [list(p) for p in sorted(X.U2)],
        "U1": [list(p) for p in sorted(X.U1)],
    }


def variety_to_json(X: VarietyOfLines) -> str:
    return json.dumps(variety_to_dict(X))


def variety_from_json(text: str, strict: bool = False) -> VarietyOfLines:
    return validate(json.loads(text), strict=strict)


def points_to_dict(points) -> dict:
    return {"points": [list(p) for p in sorted(points)]}


def points_from_json(text: str) -> set[tuple[int, int, int]]:
    raw = json.loads(text)
    pts = raw if isinstance(raw, list) else (
        raw.get("points") if isinstance(raw, dict) else None
    )
    if not isinstance(pts, list):
        raise EmptyPointSet('points JSON needs a "points" list')
    out = set()
    for p in pts:
        if not (
            isinstance(p, list)
            and len(p) == 3
            and all(isinstance(x, int) and x >= 1 for x in p)
        ):
            raise OutOfBounds(f"bad point {p!r}: need three positive integers")
        out.add(tuple(p))
    if not out:
        raise EmptyPointSet("points JSON contains no points")
    return out
