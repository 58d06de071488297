"""Independent oracles: Hilbert function, generator scan, face-ring test.

The Hilbert oracle computes, for each multidegree, the rank of the
evaluation matrix that pairs monomials with sample points on the lines
(one factor's coordinate swept through deg+1 integer parameter values
per line; hyperplane parameters are the integers 1, 2, 3, ...). A
literal transcription of that matrix is kept as a slow reference; the
fast path computes the same rank through the tensor structure of the
point conditions, using only integer arithmetic.

The generator scan counts minimal ideal generators per multidegree as
dim I_t minus the dimension spanned by degree-one multiples of lower
pieces, all in interpolation (value) coordinates.

The face-ring route builds the vertex-decomposed simplicial complex
whose facets are the vertex complements of the incidence-graph edges
and checks Reisner's vanishing condition on link homology (over the
rationals).
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from itertools import combinations, product

from .criteria import is_acm
from .errors import BoxTooSmallWarning, EmptyVariety, SizeLimit
from .ferrers import degree_sets, ferrers_companion
from .graphs import build_graph
from .linalg import (
    bareiss_rank,
    extension_coeffs,
    lagrange_coeffs,
    nullspace,
    scale_row_to_int,
    sparse_rank,
)
from .variety import VarietyOfLines

MAX_REISNER_VERTICES = 14


def _boxrange(box):
    bi, bj, bk = box
    return product(range(bi + 1), range(bj + 1), range(bk + 1))


# ---------------------------------------------------------------------------
# literal reference oracle
# ---------------------------------------------------------------------------

def line_sample_points(X: VarietyOfLines, deg) -> list[tuple[int, int, int]]:
    """deg-dependent sample points: each line swept through its free
    factor at the integer parameters 1..(free degree + 1)."""
    i, j, k = deg
    pts = []
    for a, b in sorted(X.U3):
        pts.extend((a, b, t) for t in range(1, k + 2))
    for a, c in sorted(X.U2):
        pts.extend((a, t, c) for t in range(1, j + 2))
    for b, c in sorted(X.U1):
        pts.extend((t, b, c) for t in range(1, i + 2))
    return pts


def evaluation_matrix(X: VarietyOfLines, deg) -> list[list[int]]:
    """Sample points (rows) evaluated on all monomials (columns)."""
    i, j, k = deg
    monomials = [
        (s1, s2, s3)
        for s1 in range(i + 1)
        for s2 in range(j + 1)
        for s3 in range(k + 1)
    ]
    matrix = []
    for x, y, z in line_sample_points(X, deg):
        matrix.append([x**s1 * y**s2 * z**s3 for s1, s2, s3 in monomials])
    return matrix


def hilbert_oracle_naive(X: VarietyOfLines, box) -> list:
    """Hilbert function by literal evaluation-matrix ranks (slow)."""
    bi, bj, bk = box
    H = [[[0] * (bk + 1) for _ in range(bj + 1)] for _ in range(bi + 1)]
    for i, j, k in _boxrange(box):
        H[i][j][k] = bareiss_rank(evaluation_matrix(X, (i, j, k)))
    return H


# ---------------------------------------------------------------------------
# structured oracle
# ---------------------------------------------------------------------------

def _eval_row(node_count: int, node: int):
    """Evaluation functional at an integer node, in value coordinates."""
    if node <= node_count:
        row = [0] * node_count
        row[node - 1] = 1
        return row
    return lagrange_coeffs(node_count, node)


def _rank2(deg_pair, rows, cols, points, d_pair, memo) -> int:
    """dim of sum of row spaces v_r (x) Q, column spaces P (x) w_c and
    single tensors v_b (x) w_c inside P (x) Q.

    P has deg_pair[0]+1 value coordinates and indices up to d_pair[0];
    same for Q on the other side.
    """
    key = (
        deg_pair,
        frozenset(rows),
        frozenset(cols),
        frozenset(points),
        d_pair,
    )
    if key in memo:
        return memo[key]
    j, k = deg_pair
    d2, d3 = d_pair
    if d2 <= j + 1:
        pts_by_y: dict[int, set[int]] = {}
        for b, c in points:
            pts_by_y.setdefault(b, set()).add(c)
        rows_set = set(rows)
        cols_set = set(cols)
        total = 0
        for y in range(1, j + 2):
            if y in rows_set:
                total += k + 1
            else:
                s = cols_set | pts_by_y.get(y, set())
                total += min(len(s), k + 1)
        memo[key] = total
        return total
    if d3 <= k + 1:
        total = _rank2(
            (k, j),
            rows=cols,
            cols=rows,
            points=frozenset((c, b) for (b, c) in points),
            d_pair=(d3, d2),
            memo=memo,
        )
        memo[key] = total
        return total
    # both sides deficient: small dense block
    matrix = []
    for r in sorted(rows):
        vr = _eval_row(j + 1, r)
        for z0 in range(k + 1):
            row = [0] * ((j + 1) * (k + 1))
            for y in range(j + 1):
                row[y * (k + 1) + z0] = vr[y]
            matrix.append(scale_row_to_int(row))
    for c in sorted(cols):
        wc = _eval_row(k + 1, c)
        for y0 in range(j + 1):
            row = [0] * ((j + 1) * (k + 1))
            for z in range(k + 1):
                row[y0 * (k + 1) + z] = wc[z]
            matrix.append(scale_row_to_int(row))
    for b, c in sorted(points):
        vb = _eval_row(j + 1, b)
        wc = _eval_row(k + 1, c)
        row = [vb[y] * wc[z] for y in range(j + 1) for z in range(k + 1)]
        matrix.append(scale_row_to_int(row))
    total = bareiss_rank(matrix)
    memo[key] = total
    return total


def _rank3(deg, X: VarietyOfLines, memo) -> int:
    i, j, k = deg
    d1, d2, d3 = X.d
    if d1 <= i + 1:
        rows_by_x: dict[int, set[int]] = {}
        for a, b in X.U3:
            rows_by_x.setdefault(a, set()).add(b)
        cols_by_x: dict[int, set[int]] = {}
        for a, c in X.U2:
            cols_by_x.setdefault(a, set()).add(c)
        return sum(
            _rank2(
                (j, k),
                rows_by_x.get(x, frozenset()),
                cols_by_x.get(x, frozenset()),
                X.U1,
                (d2, d3),
                memo,
            )
            for x in range(1, i + 2)
        )
    if d2 <= j + 1:
        rows_by_y: dict[int, set[int]] = {}
        for a, b in X.U3:
            rows_by_y.setdefault(b, set()).add(a)
        cols_by_y: dict[int, set[int]] = {}
        for b, c in X.U1:
            cols_by_y.setdefault(b, set()).add(c)
        return sum(
            _rank2(
                (i, k),
                rows_by_y.get(y, frozenset()),
                cols_by_y.get(y, frozenset()),
                X.U2,
                (d1, d3),
                memo,
            )
            for y in range(1, j + 2)
        )
    if d3 <= k + 1:
        rows_by_z: dict[int, set[int]] = {}
        for a, c in X.U2:
            rows_by_z.setdefault(c, set()).add(a)
        cols_by_z: dict[int, set[int]] = {}
        for b, c in X.U1:
            cols_by_z.setdefault(c, set()).add(b)
        return sum(
            _rank2(
                (i, j),
                rows_by_z.get(z, frozenset()),
                cols_by_z.get(z, frozenset()),
                X.U3,
                (d1, d2),
                memo,
            )
            for z in range(1, k + 2)
        )
    # every factor deficient: dense, but then all degrees are small
    ncells = (i + 1) * (j + 1) * (k + 1)

    def flat(x, y, z):
        return (x * (j + 1) + y) * (k + 1) + z

    matrix = []
    for a, b in sorted(X.U3):
        ua = _eval_row(i + 1, a)
        vb = _eval_row(j + 1, b)
        for z0 in range(k + 1):
            row = [0] * ncells
            for x in range(i + 1):
                for y in range(j + 1):
                    row[flat(x, y, z0)] = ua[x] * vb[y]
            matrix.append(scale_row_to_int(row))
    for a, c in sorted(X.U2):
        ua = _eval_row(i + 1, a)
        wc = _eval_row(k + 1, c)
        for y0 in range(j + 1):
            row = [0] * ncells
            for x in range(i + 1):
                for z in range(k + 1):
                    row[flat(x, y0, z)] = ua[x] * wc[z]
            matrix.append(scale_row_to_int(row))
    for b, c in sorted(X.U1):
        vb = _eval_row(j + 1, b)
        wc = _eval_row(k + 1, c)
        for x0 in range(i + 1):
            row = [0] * ncells
            for y in range(j + 1):
                for z in range(k + 1):
                    row[flat(x0, y, z)] = vb[y] * wc[z]
            matrix.append(scale_row_to_int(row))
    return bareiss_rank(matrix)


def hilbert_oracle_at(X: VarietyOfLines, deg, memo=None) -> int:
    """H(deg) as the evaluation-matrix rank, computed structurally."""
    if memo is None:
        memo = {}
    return _rank3(tuple(deg), X, memo)


def hilbert_oracle(X: VarietyOfLines, box) -> list:
    """Hilbert function table over the box (inclusive bounds)."""
    memo: dict = {}
    bi, bj, bk = box
    H = [[[0] * (bk + 1) for _ in range(bj + 1)] for _ in range(bi + 1)]
    for i, j, k in _boxrange(box):
        H[i][j][k] = _rank3((i, j, k), X, memo)
    return H


# ---------------------------------------------------------------------------
# generator degree scan
# ---------------------------------------------------------------------------

def _kernel2(deg_pair, rows, cols, points, d_pair):
    """Basis of the joint kernel of the _rank2 conditions, as sparse
    {(y, z): value} dicts over value-grid cells (1-based)."""
    j, k = deg_pair
    d2, d3 = d_pair
    if d2 <= j + 1:
        pts_by_y: dict[int, set[int]] = {}
        for b, c in points:
            pts_by_y.setdefault(b, set()).add(c)
        rows_set = set(rows)
        cols_set = set(cols)
        out = []
        for y in range(1, j + 2):
            if y in rows_set:
                continue
            s = cols_set | pts_by_y.get(y, set())
            if all(c <= k + 1 for c in s):
                out.extend(
                    {(y, z): 1} for z in range(1, k + 2) if z not in s
                )
            else:
                mat = [_eval_row(k + 1, c) for c in sorted(s)]
                for vec in nullspace(mat, k + 1):
                    out.append(
                        {(y, z): v for z, v in enumerate(vec, start=1) if v}
                    )
        return out
    if d3 <= k + 1:
        swapped = _kernel2(
            (k, j),
            rows=cols,
            cols=rows,
            points=frozenset((c, b) for (b, c) in points),
            d_pair=(d3, d2),
        )
        return [
            {(y, z): v for (z, y), v in g.items()} for g in swapped
        ]
    cells = [(y, z) for y in range(1, j + 2) for z in range(1, k + 2)]
    index = {cell: n for n, cell in enumerate(cells)}
    matrix = []
    for r in sorted(rows):
        vr = _eval_row(j + 1, r)
        for z0 in range(1, k + 2):
            row = [0] * len(cells)
            for y in range(1, j + 2):
                row[index[(y, z0)]] = vr[y - 1]
            matrix.append(row)
    for c in sorted(cols):
        wc = _eval_row(k + 1, c)
        for y0 in range(1, j + 2):
            row = [0] * len(cells)
            for z in range(1, k + 2):
                row[index[(y0, z)]] = wc[z - 1]
            matrix.append(row)
    for b, c in sorted(points):
        vb = _eval_row(j + 1, b)
        wc = _eval_row(k + 1, c)
        row = [0] * len(cells)
        for y in range(1, j + 2):
            for z in range(1, k + 2):
                row[index[(y, z)]] = vb[y - 1] * wc[z - 1]
        matrix.append(row)
    return [
        {cells[n]: v for n, v in enumerate(vec) if v}
        for vec in nullspace(matrix, len(cells))
    ]


def _kernel3(deg, X: VarietyOfLines):
    """Basis of I_deg in value coordinates, sparse {(x,y,z): value}."""
    i, j, k = deg
    d1, d2, d3 = X.d
    if d1 <= i + 1:
        rows_by_x: dict[int, set[int]] = {}
        for a, b in X.U3:
            rows_by_x.setdefault(a, set()).add(b)
        cols_by_x: dict[int, set[int]] = {}
        for a, c in X.U2:
            cols_by_x.setdefault(a, set()).add(c)
        out = []
        for x in range(1, i + 2):
            for g in _kernel2(
                (j, k),
                rows_by_x.get(x, frozenset()),
                cols_by_x.get(x, frozenset()),
                X.U1,
                (d2, d3),
            ):
                out.append({(x, y, z): v for (y, z), v in g.items()})
        return out
    if d2 <= j + 1:
        rows_by_y: dict[int, set[int]] = {}
        for a, b in X.U3:
            rows_by_y.setdefault(b, set()).add(a)
        cols_by_y: dict[int, set[int]] = {}
        for b, c in X.U1:
            cols_by_y.setdefault(b, set()).add(c)
        out = []
        for y in range(1, j + 2):
            for g in _kernel2(
                (i, k),
                rows_by_y.get(y, frozenset()),
                cols_by_y.get(y, frozenset()),
                X.U2,
                (d1, d3),
            ):
                out.append({(x, y, z): v for (x, z), v in g.items()})
        return out
    if d3 <= k + 1:
        rows_by_z: dict[int, set[int]] = {}
        for a, c in X.U2:
            rows_by_z.setdefault(c, set()).add(a)
        cols_by_z: dict[int, set[int]] = {}
        for b, c in X.U1:
            cols_by_z.setdefault(c, set()).add(b)
        out = []
        for z in range(1, k + 2):
            for g in _kernel2(
                (i, j),
                rows_by_z.get(z, frozenset()),
                cols_by_z.get(z, frozenset()),
                X.U3,
                (d1, d2),
            ):
                out.append({(x, y, z): v for (x, y), v in g.items()})
        return out
    cells = [
        (x, y, z)
        for x in range(1, i + 2)
        for y in range(1, j + 2)
        for z in range(1, k + 2)
    ]
    index = {cell: n for n, cell in enumerate(cells)}
    matrix = []
    for a, b in sorted(X.U3):
        ua = _eval_row(i + 1, a)
        vb = _eval_row(j + 1, b)
        for z0 in range(1, k + 2):
            row = [0] * len(cells)
            for x in range(1, i + 2):
                for y in range(1, j + 2):
                    row[index[(x, y, z0)]] = ua[x - 1] * vb[y - 1]
            matrix.append(row)
    for a, c in sorted(X.U2):
        ua = _eval_row(i + 1, a)
        wc = _eval_row(k + 1, c)
        for y0 in range(1, j + 2):
            row = [0] * len(cells)
            for x in range(1, i + 2):
                for z in range(1, k + 2):
                    row[index[(x, y0, z)]] = ua[x - 1] * wc[z - 1]
            matrix.append(row)
    for b, c in sorted(X.U1):
        vb = _eval_row(j + 1, b)
        wc = _eval_row(k + 1, c)
        for x0 in range(1, i + 2):
            row = [0] * len(cells)
            for y in range(1, j + 2):
                for z in range(1, k + 2):
                    row[index[(x0, y, z)]] = vb[y - 1] * wc[z - 1]
            matrix.append(row)
    return [
        {cells[n]: v for n, v in enumerate(vec) if v}
        for vec in nullspace(matrix, len(cells))
    ]


def _multiplied_rows(g: dict, axis: int, node_count: int):
    """The two degree-one multiples of a value vector, extended along
    one factor from node_count to node_count+1 nodes.

    Multiplying by the factor's constant coordinate keeps the values;
    multiplying by the parameter coordinate scales each cell by its
    node. Both need the polynomial extension value at the new node.
    """
    coeffs = extension_coeffs(node_count)
    groups: dict[tuple, dict[int, int]] = {}
    for cell, v in g.items():
        key = cell[:axis] + cell[axis + 1:]
        groups.setdefault(key, {})[cell[axis]] = v
    row0 = dict(g)
    for key, vals in groups.items():
        ext = sum(coeffs[x - 1] * v for x, v in vals.items())
        if ext:
            cell = key[:axis] + (node_count + 1,) + key[axis:]
            row0[cell] = ext
    row1 = {cell: cell[axis] * v for cell, v in row0.items()}
    return row0, row1


def generator_degree_scan(X: VarietyOfLines, box) -> dict:
    """Multidegrees (and counts) of minimal ideal generators in the box.

    For each multidegree t, computes dim I_t minus the span of the six
    degree-one multiples of the kernels one step below; positive
    differences are minimal generators. Warns when the box provably
    cuts off generators of an ACM variety.
    """
    box = tuple(box)
    if not X.is_empty and is_acm(X).acm:
        guaranteed = degree_sets(ferrers_companion(X)).minimal
        needed = tuple(max(t[f] for t in guaranteed) for f in range(3))
        if any(n > b for n, b in zip(needed, box)):
            warnings.warn(
                f"box {box} may miss generators up to {needed}",
                BoxTooSmallWarning,
            )
    memo: dict = {}
    kernels: dict[tuple, list[dict]] = {}
    found: dict[tuple, int] = {}
    for t in _boxrange(box):
        i, j, k = t
        dim_ring = (i + 1) * (j + 1) * (k + 1)
        dim_ideal = dim_ring - _rank3(t, X, memo)
        kernels[t] = _kernel3(t, X) if dim_ideal else []
        assert len(kernels[t]) == dim_ideal
        if dim_ideal == 0:
            continue
        grown_rows = []
        for axis in range(3):
            if t[axis] == 0:
                continue
            below = (t[0], t[1], t[2])
            below = below[:axis] + (t[axis] - 1,) + below[axis + 1:]
            for g in kernels[below]:
                grown_rows.extend(_multiplied_rows(g, axis, t[axis]))
        grown = sparse_rank(grown_rows)
        assert grown <= dim_ideal
        count = dim_ideal - grown
        if count:
            found[t] = count
    return found


# ---------------------------------------------------------------------------
# face ring (Stanley-Reisner) route
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SimplicialComplex:
    vertices: tuple
    facets: frozenset


def stanley_reisner_complex(X: VarietyOfLines) -> SimplicialComplex:
    """Complex whose facets are vertex complements of incidence edges."""
    if X.is_empty:
        raise EmptyVariety("face-ring test needs at least one line")
    G = build_graph(X)
    if G.vertex_count > MAX_REISNER_VERTICES:
        raise SizeLimit(
            f"face-ring test limited to {MAX_REISNER_VERTICES} vertices, "
            f"got {G.vertex_count}"
        )
    vset = frozenset(G.vertices)
    facets = frozenset(vset - {u, v} for (u, v) in G.edges)
    assert len({len(f) for f in facets}) == 1  # pure by construction
    return SimplicialComplex(vertices=G.vertices, facets=facets)


def _co_edge_homology_vanishes(W: tuple, edges: list) -> bool:
    """Reduced homology below top dimension of the complex on W whose
    faces are the subsets avoiding some edge."""
    nw = len(W)
    dim_link = nw - 3  # facets have size nw - 2
    if dim_link <= 0:
        return True  # H~(-1) cannot survive once any vertex is a face
    faces_by_size: dict[int, list[tuple]] = {0: [()]}
    for size in range(1, nw - 1):
        faces = [
            tau
            for tau in combinations(W, size)
            if any(not (e & set(tau)) for e in edges)
        ]
        faces_by_size[size] = faces
    rank_boundary: dict[int, int] = {}
    for size in range(1, nw - 1):
        lower_index = {f: n for n, f in enumerate(faces_by_size[size - 1])}
        matrix = []
        for tau in faces_by_size[size]:
            row = [0] * len(lower_index)
            for m in range(size):
                sub = tau[:m] + tau[m + 1:]
                row[lower_index[sub]] = (-1) ** m
            matrix.append(row)
        rank_boundary[size] = bareiss_rank(matrix)
    rank_boundary[nw - 1] = 0
    for q in range(-1, dim_link):
        size = q + 1
        betti = (
            len(faces_by_size[size])
            - rank_boundary.get(size, 0)
            - rank_boundary.get(size + 1, 0)
        )
        if betti:
            return False
    return True


def reisner_cm(cx: SimplicialComplex) -> bool:
    """Reisner's criterion over the rationals: every face's link has
    vanishing reduced homology below its dimension."""
    V = tuple(cx.vertices)
    vset = frozenset(V)
    edges = [vset - f for f in cx.facets]
    for size in range(0, len(V) - 3):
        for sigma in combinations(V, size):
            sset = set(sigma)
            live = [e for e in edges if not (e & sset)]
            if not live:
                continue  # sigma is not a face
            W = tuple(v for v in V if v not in sset)
            if not _co_edge_homology_vanishes(W, live):
                return False
    return True
