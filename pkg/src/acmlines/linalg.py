"""Exact linear algebra over the integers and rationals.

Everything here is fraction-free or Fraction-based; no floating point.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb, lcm


def bareiss_rank(rows) -> int:
    """Rank of an integer matrix via fraction-free (Bareiss) elimination."""
    m = [list(r) for r in rows]
    if not m or not m[0]:
        return 0
    ncols = len(m[0])
    rank = 0
    prev = 1
    for col in range(ncols):
        pivot = None
        for r in range(rank, len(m)):
            if m[r][col]:
                pivot = r
                break
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        piv = m[rank][col]
        prow = m[rank]
        for r in range(rank + 1, len(m)):
            row = m[r]
            factor = row[col]
            for c in range(col + 1, ncols):
                # exact by the Bareiss minor identity
                row[c] = (piv * row[c] - factor * prow[c]) // prev
            row[col] = 0
        prev = piv
        rank += 1
        if rank == len(m):
            break
    return rank


def lagrange_coeffs(n: int, a: int) -> list[Fraction]:
    """Coefficients c_x with p(a) = sum_x c_x p(x) for deg p < n, nodes 1..n."""
    out = []
    for x in range(1, n + 1):
        num = 1
        den = 1
        for y in range(1, n + 1):
            if y != x:
                num *= a - y
                den *= x - y
        out.append(Fraction(num, den))
    return out


def extension_coeffs(n: int) -> list[int]:
    """Integer c_x with p(n+1) = sum_x c_x p(x) for deg p < n, nodes 1..n.

    These are signed binomials coming from the vanishing n-th finite
    difference of a polynomial of degree below n.
    """
    return [(-1) ** (n - x) * comb(n, x - 1) for x in range(1, n + 1)]


def scale_row_to_int(row) -> list[int]:
    """Multiply a rational row by the lcm of denominators."""
    denom = 1
    for v in row:
        denom = lcm(denom, Fraction(v).denominator)
    return [int(Fraction(v) * denom) for v in row]


def nullspace(rows, ncols: int) -> list[list[int]]:
    """Basis of the right kernel of a matrix, as integer vectors.

    ``rows`` may contain ints or Fractions; the basis is returned with
    denominators cleared, one vector per free column (RREF convention).
    """
    m = [[Fraction(v) for v in r] for r in rows]
    pivot_cols: list[int] = []
    r = 0
    for col in range(ncols):
        pivot = None
        for i in range(r, len(m)):
            if m[i][col]:
                pivot = i
                break
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = m[r][col]
        m[r] = [v / inv for v in m[r]]
        for i in range(len(m)):
            if i != r and m[i][col]:
                f = m[i][col]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivot_cols.append(col)
        r += 1
    basis = []
    pivot_set = set(pivot_cols)
    for free in range(ncols):
        if free in pivot_set:
            continue
        vec = [Fraction(0)] * ncols
        vec[free] = Fraction(1)
        for row_idx, pc in enumerate(pivot_cols):
            vec[pc] = -m[row_idx][free]
        basis.append(scale_row_to_int(vec))
    return basis


def sparse_rank(rows) -> int:
    """Rank of a collection of sparse vectors given as {column: value} dicts.

    Columns may be any mutually comparable hashable keys. Exact
    (Fraction) elimination with the smallest column as pivot.
    """
    pivots: dict = {}
    rank = 0
    for raw in rows:
        row = {c: Fraction(v) for c, v in raw.items() if v}
        while row:
            c = min(row)
            if c in pivots:
                coef = row.pop(c)
                for pc, pv in pivots[c].items():
                    if pc == c:
                        continue
                    nv = row.get(pc, 0) - coef * pv
                    if nv:
                        row[pc] = nv
                    else:
                        row.pop(pc, None)
            else:
                inv = row[c]
                pivots[c] = {k: v / inv for k, v in row.items()}
                rank += 1
                break
    return rank
