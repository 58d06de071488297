"""Ferrers varieties: detection, generators, and Hilbert functions.

A direction's index set "resembles" a Ferrers diagram when its rows can
be relabeled into a left-justified staircase; equivalently, the row
sets form a chain under inclusion. A Ferrers variety is one where a
single relabeling (one permutation per hyperplane family) makes all
three index sets literal staircases at once. For those, generator
degrees and the Hilbert function have closed combinatorial forms.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .criteria import is_acm
from .errors import NotAcm, NotFerrers
from .variety import (
    DIRECTION_FAMILIES,
    FAMILY_NAMES,
    VarietyOfLines,
    compact,
    make_variety,
    relabel,
)


# ---------------------------------------------------------------------------
# resemblance and detection
# ---------------------------------------------------------------------------

def _row_sets(X: VarietyOfLines, direction: int) -> list[set[int]]:
    fam_p, _ = DIRECTION_FAMILIES[direction]
    nrows = X.d[fam_p - 1]
    rows = [set() for _ in range(nrows)]
    for p, q in X.u(direction):
        rows[p - 1].add(q)
    return rows


def _col_sets(X: VarietyOfLines, direction: int) -> list[set[int]]:
    _, fam_q = DIRECTION_FAMILIES[direction]
    ncols = X.d[fam_q - 1]
    cols = [set() for _ in range(ncols)]
    for p, q in X.u(direction):
        cols[q - 1].add(p)
    return cols


def _is_chain(sets) -> bool:
    distinct = {frozenset(s) for s in sets}
    ordered = sorted(distinct, key=len, reverse=True)
    for a, b in zip(ordered, ordered[1:]):
        if len(a) == len(b) or not a >= b:
            return False
    return True


def row_partition(X: VarietyOfLines, direction: int) -> tuple[int, ...]:
    """Nonzero row sizes of one direction's diagram, sorted decreasing."""
    sizes = [len(r) for r in _row_sets(X, direction) if r]
    return tuple(sorted(sizes, reverse=True))


def resembles_ferrers(X: VarietyOfLines, direction: int):
    """(bool, partition): can one direction's rows be nested by relabeling.

    True iff the row sets form a chain under inclusion, which happens
    iff row and column permutations turn the diagram into a staircase.
    The partition of nonzero row sizes is returned either way.
    """
    return _is_chain(_row_sets(X, direction)), row_partition(X, direction)


def is_literal_ferrers(X: VarietyOfLines, direction: int) -> bool:
    """Is the diagram a left-justified staircase as labeled."""
    cells = X.u(direction)
    return all(
        (p == 1 or (p - 1, q) in cells) and (q == 1 or (p, q - 1) in cells)
        for p, q in cells
    )


@dataclass(frozen=True)
class FerrersCheck:
    ok: bool
    perms: tuple[tuple[int, ...], tuple[int, ...], tuple[int, ...]] | None

    def relabeled(self, X: VarietyOfLines) -> VarietyOfLines:
        if not self.ok:
            raise NotFerrers("no consistent relabeling exists")
        return relabel(X, *self.perms)


def is_ferrers_variety(X: VarietyOfLines) -> FerrersCheck:
    """Test for one relabeling making all three diagrams staircases.

    Each family indexes rows of two diagrams; a consistent order exists
    iff its pairs of row sets form a chain in the product order. The
    returned permutations map old labels to new ones (largest profile
    first) and simultaneously left-justify all three diagrams.
    """
    # family -> the two (direction, role) places it occurs
    profiles = {
        1: (_row_sets(X, 3), _row_sets(X, 2)),
        2: (_col_sets(X, 3), _row_sets(X, 1)),
        3: (_col_sets(X, 2), _col_sets(X, 1)),
    }
    perms = []
    for f in (1, 2, 3):
        first, second = profiles[f]
        indexed = [
            (frozenset(first[i - 1]), frozenset(second[i - 1]), i)
            for i in range(1, X.d[f - 1] + 1)
        ]
        indexed.sort(key=lambda t: (-len(t[0]), -len(t[1]), t[2]))
        for (a1, a2, _), (b1, b2, _) in zip(indexed, indexed[1:]):
            if not (a1 >= b1 and a2 >= b2):
                return FerrersCheck(ok=False, perms=None)
        perm = [0] * X.d[f - 1]
        for new, (_, _, old) in enumerate(indexed, start=1):
            perm[old - 1] = new
        perms.append(tuple(perm))
    return FerrersCheck(ok=True, perms=tuple(perms))


def _canonical(X: VarietyOfLines):
    """(literal-Ferrers relabeling of X, the FerrersCheck used)."""
    check = is_ferrers_variety(X)
    if not check.ok:
        raise NotFerrers(f"not a Ferrers variety: {X}")
    Y = check.relabeled(X)
    assert all(is_literal_ferrers(Y, h) for h in (1, 2, 3))
    return Y, check


# ---------------------------------------------------------------------------
# generator degrees
# ---------------------------------------------------------------------------

def points_generator_degrees(partition) -> set[tuple[int, int]]:
    """Degrees of the minimal generators of a staircase of points in a
    product of two projective lines.

    The staircase with rows ``partition`` (weakly decreasing) has one
    generator per outer corner: (0, p_1), (r, 0), and (i, p_{i+1}) at
    every strict descent. The empty partition yields the unit ideal's
    single generator in degree (0, 0).
    """
    p = tuple(partition)
    if any(a < b for a, b in zip(p, p[1:])) or any(a <= 0 for a in p):
        raise ValueError(f"not a partition: {partition!r}")
    if not p:
        return {(0, 0)}
    r = len(p)
    out = {(0, p[0]), (r, 0)}
    for i in range(1, r):
        if p[i] < p[i - 1]:
            out.add((i, p[i]))
    return out


@dataclass(frozen=True)
class DegreeSets:
    by_direction: dict  # direction -> set of degree triples
    combined: frozenset  # componentwise maxima over one pick per direction
    minimal: frozenset  # minimal elements of combined


def _leq(s, t) -> bool:
    return all(a <= b for a, b in zip(s, t))


def minimal_elements(triples) -> frozenset:
    triples = set(triples)
    return frozenset(
        t for t in triples
        if not any(s != t and _leq(s, t) for s in triples)
    )


def degree_sets(X: VarietyOfLines) -> DegreeSets:
    """Per-direction generator degrees and their combined minimal set.

    Needs a Ferrers variety (a consistent relabeling is applied
    internally; degrees do not depend on labels).
    """
    Y, _ = _canonical(X)
    embed = {
        3: lambda a, b: (a, b, 0),
        2: lambda a, c: (a, 0, c),
        1: lambda b, c: (0, b, c),
    }
    by_direction = {}
    for h in (3, 2, 1):
        partition = row_partition(Y, h)
        pairs = points_generator_degrees(partition)
        by_direction[h] = {embed[h](p, q) for (p, q) in pairs}
    combined = frozenset(
        tuple(max(coords) for coords in zip(t3, t2, t1))
        for t3, t2, t1 in product(
            by_direction[3], by_direction[2], by_direction[1]
        )
    )
    return DegreeSets(
        by_direction=by_direction,
        combined=combined,
        minimal=minimal_elements(combined),
    )


@dataclass(frozen=True)
class GeneratorSet:
    degrees: tuple[tuple[int, int, int], ...]
    products: tuple[str, ...]
    relabeling: tuple | None  # permutations applied, if X was not literal


def _product_string(degree, inverse_prefixes) -> str:
    names = []
    for f, count in enumerate(degree, start=1):
        fam = FAMILY_NAMES[f - 1]
        names.extend(f"{fam}{i}" for i in sorted(inverse_prefixes[f][:count]))
    return "*".join(names) if names else "1"


def minimal_generators(X: VarietyOfLines) -> GeneratorSet:
    """Degrees and explicit products of the minimal generators.

    A generator of degree (a, b, c) is the product of the a largest-
    profile A-hyperplanes, b B-hyperplanes and c C-hyperplanes; original
    labels are reported even when the variety had to be relabeled.
    """
    check = is_ferrers_variety(X)
    if not check.ok:
        raise NotFerrers(f"not a Ferrers variety: {X}")
    sets = degree_sets(X)
    degrees = tuple(sorted(sets.minimal))
    # inverse_prefixes[f] = original labels ordered by new label
    inverse_prefixes = {}
    for f in (1, 2, 3):
        perm = check.perms[f - 1]
        order = sorted(range(1, X.d[f - 1] + 1), key=lambda old: perm[old - 1])
        inverse_prefixes[f] = order
    products = tuple(
        _product_string(deg, inverse_prefixes) for deg in degrees
    )
    literal = all(
        check.perms[f - 1] == tuple(range(1, X.d[f - 1] + 1)) for f in (1, 2, 3)
    )
    return GeneratorSet(
        degrees=degrees,
        products=products,
        relabeling=None if literal else check.perms,
    )


# ---------------------------------------------------------------------------
# Hilbert function of a Ferrers variety
# ---------------------------------------------------------------------------

def delta_hilbert(X: VarietyOfLines, box) -> list:
    """0/1 array over the box: 0 where some minimal degree divides."""
    minimal = degree_sets(X).minimal
    bi, bj, bk = box
    return [
        [
            [
                0 if any(_leq(m, (i, j, k)) for m in minimal) else 1
                for k in range(bk + 1)
            ]
            for j in range(bj + 1)
        ]
        for i in range(bi + 1)
    ]


def hilbert_function(X: VarietyOfLines, box) -> list:
    """Hilbert function as the triple prefix sum of the 0/1 array."""
    delta = delta_hilbert(X, box)
    bi, bj, bk = box
    H = [
        [[0] * (bk + 1) for _ in range(bj + 1)] for _ in range(bi + 1)
    ]
    for i in range(bi + 1):
        for j in range(bj + 1):
            for k in range(bk + 1):
                total = delta[i][j][k]
                if i:
                    total += H[i - 1][j][k]
                if j:
                    total += H[i][j - 1][k]
                if k:
                    total += H[i][j][k - 1]
                if i and j:
                    total -= H[i - 1][j - 1][k]
                if i and k:
                    total -= H[i - 1][j][k - 1]
                if j and k:
                    total -= H[i][j - 1][k - 1]
                if i and j and k:
                    total += H[i - 1][j - 1][k - 1]
                H[i][j][k] = total
    return H


# ---------------------------------------------------------------------------
# complete intersections
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CompleteIntersection:
    degrees: tuple[tuple[int, int, int], tuple[int, int, int]]
    products: tuple[str, str]


def _full_rectangle(X, direction) -> bool:
    fam_p, fam_q = DIRECTION_FAMILIES[direction]
    return len(X.u(direction)) == X.d[fam_p - 1] * X.d[fam_q - 1]


def _pure_degree(f: int, count: int) -> tuple[int, int, int]:
    deg = [0, 0, 0]
    deg[f - 1] = count
    return tuple(deg)


def _all_family_product(f: int, count: int) -> str:
    fam = FAMILY_NAMES[f - 1]
    return "*".join(f"{fam}{i}" for i in range(1, count + 1))


def detect_complete_intersection(X: VarietyOfLines):
    """The two-generator structure of X's ideal, if it has one.

    After compaction, a complete intersection is either a single full
    rectangle of lines in one direction, or two full rectangles sharing
    one hyperplane family. Returns a CompleteIntersection or None.
    """
    X = compact(X)
    nonempty = [h for h in (3, 2, 1) if X.u(h)]
    if len(nonempty) == 1:
        h = nonempty[0]
        if not _full_rectangle(X, h):
            return None
        fam_p, fam_q = DIRECTION_FAMILIES[h]
        deg1 = _pure_degree(fam_p, X.d[fam_p - 1])
        deg2 = _pure_degree(fam_q, X.d[fam_q - 1])
        return CompleteIntersection(
            degrees=(deg1, deg2),
            products=(
                _all_family_product(fam_p, X.d[fam_p - 1]),
                _all_family_product(fam_q, X.d[fam_q - 1]),
            ),
        )
    if len(nonempty) == 2:
        h1, h2 = nonempty
        shared = set(DIRECTION_FAMILIES[h1]) & set(DIRECTION_FAMILIES[h2])
        f = shared.pop()
        others = [
            g
            for g in (1, 2, 3)
            if g != f
        ]
        if not (_full_rectangle(X, h1) and _full_rectangle(X, h2)):
            return None
        deg1 = _pure_degree(f, X.d[f - 1])
        deg2 = tuple(
            X.d[g - 1] if g in others else 0 for g in (1, 2, 3)
        )
        mixed = "*".join(
            _all_family_product(g, X.d[g - 1]) for g in others if X.d[g - 1]
        )
        return CompleteIntersection(
            degrees=(deg1, deg2),
            products=(_all_family_product(f, X.d[f - 1]), mixed),
        )
    return None


# ---------------------------------------------------------------------------
# grid resolution
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class GridResolution:
    """Minimal free resolution data of a full (a, b, c) grid of lines."""

    box: tuple[int, int, int]
    generator_twists: tuple
    syzygy_twists: tuple
    matrix_degrees: tuple  # 3 x 2 entries: degree triple or None (zero)
    matrix_entries: tuple  # 3 x 2 symbolic strings

    def hilbert(self, i: int, j: int, k: int) -> int:
        a, b, c = self.box

        def r(u, v, w):
            if u < 0 or v < 0 or w < 0:
                return 0
            return (u + 1) * (v + 1) * (w + 1)

        return (
            r(i, j, k)
            - r(i - a, j - b, k)
            - r(i - a, j, k - c)
            - r(i, j - b, k - c)
            + 2 * r(i - a, j - b, k - c)
        )


def grid_resolution(a: int, b: int, c: int) -> GridResolution:
    """Length-one free resolution of the full a x b x c grid ideal.

    The ideal is generated by the three full-family products; one syzygy
    column pairs the A-product against the B-product, the other against
    the C-product. The 2x2 minors of the 3x2 matrix recover the three
    generators up to sign.
    """
    if min(a, b, c) < 1:
        raise ValueError("grid sizes must be positive")
    pa = _all_family_product(1, a)
    pb = _all_family_product(2, b)
    pc = _all_family_product(3, c)
    return GridResolution(
        box=(a, b, c),
        generator_twists=(
            (-a, -b, 0),
            (-a, 0, -c),
            (0, -b, -c),
        ),
        syzygy_twists=((-a, -b, -c), (-a, -b, -c)),
        matrix_degrees=(
            ((a, 0, 0), (a, 0, 0)),
            ((0, b, 0), None),
            (None, (0, 0, c)),
        ),
        matrix_entries=(
            (pa, pa),
            (pb, "0"),
            ("0", pc),
        ),
    )


# ---------------------------------------------------------------------------
# companion construction
# ---------------------------------------------------------------------------

def ferrers_companion(X: VarietyOfLines) -> VarietyOfLines:
    """The Ferrers variety with the same three slice partitions as X.

    Each direction's diagram is replaced by the left-justified
    staircase of its row partition; the result is compacted. Requires X
    to be arithmetically Cohen-Macaulay.
    """
    if not is_acm(X).acm:
        raise NotAcm("companion construction needs an ACM variety")
    staircases = {}
    for h in (3, 2, 1):
        partition = row_partition(X, h)
        staircases[h] = {
            (r, c)
            for r, size in enumerate(partition, start=1)
            for c in range(1, size + 1)
        }
    companion = compact(
        make_variety(X.d, staircases[3], staircases[2], staircases[1])
    )
    assert is_ferrers_variety(companion).ok
    return companion
