"""Arithmetic Cohen-Macaulayness by three independent routes.

Route 1 tests chordality of the complement of the incidence graph.
Route 2 enumerates the cyclic hyperplane patterns of lengths 4, 5, 6
that are obstructions (an n-pattern exists iff the complement graph has
an induced n-cycle). Route 3 evaluates purely numeric conditions on the
multiplicity tensor of the variety. All three must agree; a
disagreement raises, because it can only mean a bug.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations, product

from .errors import BadN, CriteriaDisagreement
from .graphs import build_graph, complement, is_chordal, is_induced_cycle
from .variety import FAMILY_NAMES, HyperplaneId, VarietyOfLines


# ---------------------------------------------------------------------------
# multiplicity tensor
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class MultiplicityTensor:
    """mu(i,j,k) = number of lines of X through the point (A_i,B_j,C_k).

    Stored through the three 0/1 slice matrices; mu is their overlay.
    """

    d: tuple[int, int, int]
    m3: tuple[tuple[int, ...], ...]  # d1 x d2
    m2: tuple[tuple[int, ...], ...]  # d1 x d3
    m1: tuple[tuple[int, ...], ...]  # d2 x d3

    def mu(self, i: int, j: int, k: int) -> int:
        return (
            self.m3[i - 1][j - 1] + self.m2[i - 1][k - 1] + self.m1[j - 1][k - 1]
        )

    def slice_matrix(self, direction: int) -> tuple[tuple[int, ...], ...]:
        return {3: self.m3, 2: self.m2, 1: self.m1}[direction]

    def tensor(self) -> tuple:
        d1, d2, d3 = self.d
        return tuple(
            tuple(
                tuple(self.mu(i, j, k) for k in range(1, d3 + 1))
                for j in range(1, d2 + 1)
            )
            for i in range(1, d1 + 1)
        )


def multiplicity_tensor(X: VarietyOfLines) -> MultiplicityTensor:
    def matrix(direction, nrows, ncols):
        cells = X.u(direction)
        return tuple(
            tuple(1 if (r, c) in cells else 0 for c in range(1, ncols + 1))
            for r in range(1, nrows + 1)
        )

    d1, d2, d3 = X.d
    return MultiplicityTensor(
        d=X.d,
        m3=matrix(3, d1, d2),
        m2=matrix(2, d1, d3),
        m1=matrix(1, d2, d3),
    )


# ---------------------------------------------------------------------------
# route 2: cyclic hyperplane patterns
# ---------------------------------------------------------------------------

# Family sequences (1=A, 2=B, 3=C) of the cyclic patterns that can carry
# an obstruction, one representative per dihedral class. Members of the
# same family must sit in consecutive positions; an induced cycle cannot
# hold three vertices of one family.
_PATTERN_FAMILY_SEQS = {
    4: (
        (1, 1, 2, 2),
        (1, 1, 3, 3),
        (2, 2, 3, 3),
        (1, 1, 2, 3),
        (2, 2, 1, 3),
        (3, 3, 1, 2),
    ),
    5: (
        (1, 1, 2, 2, 3),
        (1, 1, 3, 3, 2),
        (2, 2, 3, 3, 1),
    ),
    6: ((1, 1, 2, 2, 3, 3),),
}

_PAIR_DIRECTION = {(1, 2): 3, (1, 3): 2, (2, 3): 1}


def _line_present(X: VarietyOfLines, fam_p, p, fam_q, q) -> bool:
    if fam_p > fam_q:
        fam_p, p, fam_q, q = fam_q, q, fam_p, p
    return (p, q) in X.u(_PAIR_DIRECTION[(fam_p, fam_q)])


def _pattern_constraints(fam_seq):
    """(positions s,t, required presence) for all cross-family pairs.

    Consecutive cross-family pairs must be absent lines (complement
    edges of the cycle); non-consecutive pairs must be present lines
    (complement non-edges).
    """
    n = len(fam_seq)
    constraints = []
    for s in range(n):
        for t in range(s + 1, n):
            if fam_seq[s] == fam_seq[t]:
                continue
            consecutive = (t - s == 1) or (s == 0 and t == n - 1)
            constraints.append((s, t, not consecutive))
    return constraints


def _find_pattern(X: VarietyOfLines, fam_seq):
    """First index assignment matching the pattern, or None."""
    n = len(fam_seq)
    positions_by_family: dict[int, list[int]] = {}
    for pos, fam in enumerate(fam_seq):
        positions_by_family.setdefault(fam, []).append(pos)
    families = sorted(positions_by_family)
    constraints = _pattern_constraints(fam_seq)
    # constraints checkable once the first m families are assigned
    staged = []
    assigned_pos: set[int] = set()
    for fam in families:
        assigned_pos.update(positions_by_family[fam])
        stage = [
            (s, t, req)
            for (s, t, req) in constraints
            if s in assigned_pos and t in assigned_pos
        ]
        staged.append(stage)
        constraints = [c for c in constraints if c not in stage]

    choices = [
        list(permutations(range(1, X.d[fam - 1] + 1), len(positions_by_family[fam])))
        for fam in families
    ]

    def assign(level, labels):
        if level == len(families):
            return tuple(
                HyperplaneId(FAMILY_NAMES[fam_seq[pos] - 1], labels[pos])
                for pos in range(n)
            )
        fam = families[level]
        for combo in choices[level]:
            new_labels = dict(labels)
            for pos, idx in zip(positions_by_family[fam], combo):
                new_labels[pos] = idx
            ok = True
            for s, t, required in staged[level]:
                present = _line_present(
                    X,
                    fam_seq[s],
                    new_labels[s],
                    fam_seq[t],
                    new_labels[t],
                )
                if present != required:
                    ok = False
                    break
            if ok:
                result = assign(level + 1, new_labels)
                if result is not None:
                    return result
        return None

    return assign(0, {})


def has_hyp_star(X: VarietyOfLines, n: int):
    """Whether no length-n cyclic obstruction pattern exists.

    Returns (True, None) when the property holds, else (False, witness)
    with the witness being the offending hyperplane cycle. Lengths above
    6 hold vacuously: a cycle pattern of length >= 7 would need three
    vertices in one family, which is impossible.
    """
    if n < 4:
        raise BadN(f"cycle length must be at least 4, got {n}")
    if n > 6:
        return True, None
    for fam_seq in _PATTERN_FAMILY_SEQS[n]:
        witness = _find_pattern(X, fam_seq)
        if witness is not None:
            Gc = complement(build_graph(X))
            assert is_induced_cycle(Gc, witness), witness
            return False, witness
    return True, None


# ---------------------------------------------------------------------------
# route 3: numeric conditions on the multiplicity tensor
# ---------------------------------------------------------------------------

def _ordered_pairs(size):
    return [(p, q) for p in range(1, size + 1) for q in range(1, size + 1) if p != q]


def _has_diagonal_pattern(matrix):
    """A 2x2 submatrix equal to the identity pattern (1,0 / 0,1)."""
    nrows = len(matrix)
    ncols = len(matrix[0]) if nrows else 0
    for r1, r2 in _ordered_pairs(nrows):
        for c1 in range(1, ncols + 1):
            if matrix[r1 - 1][c1 - 1] != 1 or matrix[r2 - 1][c1 - 1] != 0:
                continue
            for c2 in range(1, ncols + 1):
                if c2 == c1:
                    continue
                if matrix[r1 - 1][c2 - 1] == 0 and matrix[r2 - 1][c2 - 1] == 1:
                    return (r1, r2, c1, c2)
    return None


def criterion_hyp4_numeric(M: MultiplicityTensor):
    """Numeric 4-pattern test on the multiplicity tensor.

    Covers the mixed-family patterns through three tensor conditions
    and the same-family patterns through the 2x2 diagonal-submatrix
    scan of each slice matrix.
    """
    d1, d2, d3 = M.d
    for direction in (3, 2, 1):
        hit = _has_diagonal_pattern(M.slice_matrix(direction))
        if hit:
            return False, {
                "condition": f"slice-{direction} diagonal 2x2 pattern",
                "rows": hit[:2],
                "cols": hit[2:],
            }
    for a1, a2 in _ordered_pairs(d1):
        for b1 in range(1, d2 + 1):
            if M.m3[a1 - 1][b1 - 1] != 1 or M.m3[a2 - 1][b1 - 1] != 0:
                continue
            for c1 in range(1, d3 + 1):
                if M.mu(a1, b1, c1) == 1 and M.mu(a2, b1, c1) == 1:
                    return False, {
                        "condition": "doubled-A tensor pattern",
                        "a": (a1, a2),
                        "b": (b1,),
                        "c": (c1,),
                    }
    for c1, c2 in _ordered_pairs(d3):
        for a1 in range(1, d1 + 1):
            if M.m2[a1 - 1][c1 - 1] != 1 or M.m2[a1 - 1][c2 - 1] != 0:
                continue
            for b1 in range(1, d2 + 1):
                if M.mu(a1, b1, c1) == 1 and M.mu(a1, b1, c2) == 1:
                    return False, {
                        "condition": "doubled-C tensor pattern",
                        "a": (a1,),
                        "b": (b1,),
                        "c": (c1, c2),
                    }
    for b1, b2 in _ordered_pairs(d2):
        for c1 in range(1, d3 + 1):
            if M.m1[b1 - 1][c1 - 1] != 1 or M.m1[b2 - 1][c1 - 1] != 0:
                continue
            for a1 in range(1, d1 + 1):
                if M.mu(a1, b1, c1) == 1 and M.mu(a1, b2, c1) == 1:
                    return False, {
                        "condition": "doubled-B tensor pattern",
                        "a": (a1,),
                        "b": (b1, b2),
                        "c": (c1,),
                    }
    return True, None


def criterion_hyp5_numeric(M: MultiplicityTensor):
    """Numeric 5-pattern test: a 2x2 multiplicity block ((2,1),(2,2))
    against a slice block ((1,1),(0,1)), in each of the three roles."""
    d1, d2, d3 = M.d

    def block_ok(m, r1, r2, s1, s2):
        return (
            m[r1 - 1][s1 - 1] == 1
            and m[r1 - 1][s2 - 1] == 1
            and m[r2 - 1][s1 - 1] == 0
            and m[r2 - 1][s2 - 1] == 1
        )

    for a1, a2 in _ordered_pairs(d1):
        for b1, b2 in _ordered_pairs(d2):
            if not block_ok(M.m3, a1, a2, b1, b2):
                continue
            for c1 in range(1, d3 + 1):
                if (
                    M.mu(a1, b1, c1) == 2
                    and M.mu(a1, b2, c1) == 1
                    and M.mu(a2, b1, c1) == 2
                    and M.mu(a2, b2, c1) == 2
                ):
                    return False, {
                        "condition": "doubled-A-B tensor pattern",
                        "a": (a1, a2),
                        "b": (b1, b2),
                        "c": (c1,),
                    }
    for a1, a2 in _ordered_pairs(d1):
        for c1, c2 in _ordered_pairs(d3):
            if not block_ok(M.m2, a1, a2, c1, c2):
                continue
            for b1 in range(1, d2 + 1):
                if (
                    M.mu(a1, b1, c1) == 2
                    and M.mu(a1, b1, c2) == 1
                    and M.mu(a2, b1, c1) == 2
                    and M.mu(a2, b1, c2) == 2
                ):
                    return False, {
                        "condition": "doubled-A-C tensor pattern",
                        "a": (a1, a2),
                        "b": (b1,),
                        "c": (c1, c2),
                    }
    for b1, b2 in _ordered_pairs(d2):
        for c1, c2 in _ordered_pairs(d3):
            if not block_ok(M.m1, b1, b2, c1, c2):
                continue
            for a1 in range(1, d1 + 1):
                if (
                    M.mu(a1, b1, c1) == 2
                    and M.mu(a1, b1, c2) == 1
                    and M.mu(a1, b2, c1) == 2
                    and M.mu(a1, b2, c2) == 2
                ):
                    return False, {
                        "condition": "doubled-B-C tensor pattern",
                        "a": (a1,),
                        "b": (b1, b2),
                        "c": (c1, c2),
                    }
    return True, None


def criterion_hyp6_numeric(M: MultiplicityTensor):
    """Numeric 6-pattern test: two multiplicity-3 cells with disjoint
    coordinates whose mixed 2x2x2 block is constant 2 elsewhere."""
    d1, d2, d3 = M.d
    triples = [
        (i, j, k)
        for i in range(1, d1 + 1)
        for j in range(1, d2 + 1)
        for k in range(1, d3 + 1)
        if M.mu(i, j, k) == 3
    ]
    for (a1, b1, c1), (a2, b2, c2) in product(triples, repeat=2):
        if a1 == a2 or b1 == b2 or c1 == c2:
            continue
        others = [
            (a1, b2, c1),
            (a2, b1, c1),
            (a2, b2, c1),
            (a1, b1, c2),
            (a1, b2, c2),
            (a2, b1, c2),
        ]
        if all(M.mu(*t) == 2 for t in others):
            return False, {
                "condition": "double-triple tensor pattern",
                "a": (a1, a2),
                "b": (b1, b2),
                "c": (c1, c2),
            }
    return True, None


_NUMERIC_CRITERIA = {
    4: criterion_hyp4_numeric,
    5: criterion_hyp5_numeric,
    6: criterion_hyp6_numeric,
}


# ---------------------------------------------------------------------------
# combined verdict
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class AcmVerdict:
    acm: bool
    chordal: bool
    hyp: dict
    numeric: dict
    cycle_witness: tuple | None
    numeric_witness: dict | None

    def to_dict(self) -> dict:
        witness = None
        if self.cycle_witness is not None:
            witness = {
                "type": "chordless_cycle",
                "vertices": [str(v) for v in self.cycle_witness],
            }
        elif self.numeric_witness is not None:
            witness = {"type": "multiplicity_pattern", **self.numeric_witness}
        return {
            "acm": self.acm,
            "routes": {
                "chordal": self.chordal,
                "hyp": {str(n): self.hyp[n] for n in (4, 5, 6)},
                "numeric": {str(n): self.numeric[n] for n in (4, 5, 6)},
            },
            "witness": witness,
        }


def is_acm(X: VarietyOfLines) -> AcmVerdict:
    """Run all three routes and demand unanimity.

    Raises CriteriaDisagreement if any two routes (or the per-length
    pattern/numeric pair) differ; that would be an implementation bug,
    not a property of the input.
    """
    chordal_ok, cycle = is_chordal(complement(build_graph(X)))
    hyp = {}
    hyp_witness = None
    for n in (4, 5, 6):
        ok, wit = has_hyp_star(X, n)
        hyp[n] = ok
        if not ok and hyp_witness is None:
            hyp_witness = wit
    M = multiplicity_tensor(X)
    numeric = {}
    numeric_witness = None
    for n in (4, 5, 6):
        ok, wit = _NUMERIC_CRITERIA[n](M)
        numeric[n] = ok
        if not ok and numeric_witness is None:
            numeric_witness = wit
    routes = (chordal_ok, all(hyp.values()), all(numeric.values()))
    if len(set(routes)) != 1 or any(hyp[n] != numeric[n] for n in (4, 5, 6)):
        raise CriteriaDisagreement(
            f"routes disagree on {X}: chordal={chordal_ok} hyp={hyp} "
            f"numeric={numeric}"
        )
    if cycle is None and hyp_witness is not None:
        cycle = hyp_witness
    return AcmVerdict(
        acm=chordal_ok,
        chordal=chordal_ok,
        hyp=hyp,
        numeric=numeric,
        cycle_witness=cycle,
        numeric_witness=numeric_witness,
    )
