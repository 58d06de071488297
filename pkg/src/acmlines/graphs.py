"""Incidence graph of a variety of lines, its complement, and chordality.

The incidence graph has one vertex per hyperplane and one edge per line
(joining the two hyperplanes that cut the line out); it is tripartite by
construction. The package's main combinatorial criterion looks at the
complement graph, where same-family vertex pairs are always adjacent.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .errors import SizeLimit
from .variety import (
    DIRECTION_FAMILIES,
    FAMILY_NAMES,
    HyperplaneId,
    VarietyOfLines,
)

MAX_CYCLE_SEARCH_VERTICES = 18


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph with a fixed, ordered vertex tuple."""

    vertices: tuple[HyperplaneId, ...]
    edges: frozenset[tuple[HyperplaneId, HyperplaneId]]

    @property
    def vertex_count(self) -> int:
        return len(self.vertices)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def has_edge(self, u: HyperplaneId, v: HyperplaneId) -> bool:
        return (u, v) in self.edges or (v, u) in self.edges


def _ordinals(G: Graph) -> dict[HyperplaneId, int]:
    return {v: i for i, v in enumerate(G.vertices)}


def _sorted_edge(u, v, ordinal):
    return (u, v) if ordinal[u] < ordinal[v] else (v, u)


def adjacency(G: Graph) -> dict[HyperplaneId, set[HyperplaneId]]:
    adj: dict[HyperplaneId, set[HyperplaneId]] = {v: set() for v in G.vertices}
    for u, v in G.edges:
        adj[u].add(v)
        adj[v].add(u)
    return adj


def build_graph(X: VarietyOfLines) -> Graph:
    """Incidence graph: vertices are hyperplanes, edges are lines."""
    vertices = tuple(
        HyperplaneId(FAMILY_NAMES[f - 1], i)
        for f in (1, 2, 3)
        for i in range(1, X.d[f - 1] + 1)
    )
    ordinal = {v: i for i, v in enumerate(vertices)}
    edges = set()
    for direction in (3, 2, 1):
        fam_p, fam_q = DIRECTION_FAMILIES[direction]
        for p, q in X.u(direction):
            u = HyperplaneId(FAMILY_NAMES[fam_p - 1], p)
            v = HyperplaneId(FAMILY_NAMES[fam_q - 1], q)
            edges.add(_sorted_edge(u, v, ordinal))
    return Graph(vertices=vertices, edges=frozenset(edges))


def complement(G: Graph) -> Graph:
    ordinal = _ordinals(G)
    edges = set()
    for u, v in combinations(G.vertices, 2):
        if not G.has_edge(u, v):
            edges.add(_sorted_edge(u, v, ordinal))
    return Graph(vertices=G.vertices, edges=frozenset(edges))


def is_induced_cycle(G: Graph, cycle) -> bool:
    """Check that the vertex sequence is a chordless cycle of G."""
    n = len(cycle)
    if n < 4 or len(set(cycle)) != n:
        return False
    for i in range(n):
        for j in range(i + 1, n):
            consecutive = (j - i == 1) or (i == 0 and j == n - 1)
            if G.has_edge(cycle[i], cycle[j]) != consecutive:
                return False
    return True


def canonical_cycle(cycle, ordinal) -> tuple:
    """Lexicographically least rotation/reflection of a cyclic sequence."""
    seqs = []
    n = len(cycle)
    for base in (list(cycle), list(reversed(cycle))):
        for s in range(n):
            seqs.append(tuple(base[s:] + base[:s]))
    return min(seqs, key=lambda t: tuple(ordinal[v] for v in t))


def is_chordal(G: Graph):
    """Maximum-cardinality-search chordality test with a cycle certificate.

    Returns (True, None) or (False, cycle) where the cycle is a
    chordless cycle of length >= 4, canonicalized.
    """
    ordinal = _ordinals(G)
    adj = adjacency(G)
    n = len(G.vertices)
    weight = {v: 0 for v in G.vertices}
    unvisited = set(G.vertices)
    order: list[HyperplaneId] = []
    pos: dict[HyperplaneId, int] = {}
    for step in range(n):
        v = max(unvisited, key=lambda x: (weight[x], -ordinal[x]))
        unvisited.remove(v)
        pos[v] = step
        order.append(v)
        for w in adj[v]:
            if w in unvisited:
                weight[w] += 1
    for i, v in enumerate(order):
        earlier = [w for w in adj[v] if pos[w] < i]
        if not earlier:
            continue
        u = max(earlier, key=lambda x: pos[x])
        missing = [w for w in earlier if w != u and w not in adj[u]]
        if not missing:
            continue
        w = min(missing, key=lambda x: ordinal[x])
        cycle = _extract_cycle(G, adj, pos, ordinal, v, u, w, i)
        if cycle is not None:
            return False, cycle
        # theory says a certificate path always exists; fall back to an
        # exhaustive search just in case
        for length in range(4, n + 1):
            found = chordless_cycles(G, length)
            if found:
                return False, found[0]
        raise AssertionError("chordality test failed but no cycle found")
    return True, None


def _extract_cycle(G, adj, pos, ordinal, v, u, w, i):
    """Chordless cycle through v from a failed elimination check.

    u and w are earlier neighbors of v that are non-adjacent; a shortest
    u-w path avoiding N[v] among earlier vertices closes an induced
    cycle.
    """
    allowed = {x for x in G.vertices if pos[x] < i}
    allowed -= {x for x in adj[v] if x not in (u, w)}
    if u not in allowed or w not in allowed:
        return None
    parent = {u: None}
    frontier = [u]
    while frontier and w not in parent:
        nxt = []
        for x in frontier:
            for y in sorted(adj[x] & allowed, key=lambda t: ordinal[t]):
                if y not in parent:
                    parent[y] = x
                    nxt.append(y)
        frontier = nxt
    if w not in parent:
        return None
    path = [w]
    while path[-1] != u:
        path.append(parent[path[-1]])
    path.reverse()
    cycle = canonical_cycle([v] + path, ordinal)
    if not is_induced_cycle(G, cycle):
        return None
    return cycle


def chordless_cycles(G: Graph, max_len: int = 6) -> list[tuple]:
    """All chordless cycles of length 4..max_len, canonicalized, sorted."""
    if G.vertex_count > MAX_CYCLE_SEARCH_VERTICES:
        raise SizeLimit(
            f"cycle enumeration limited to {MAX_CYCLE_SEARCH_VERTICES} "
            f"vertices, got {G.vertex_count}"
        )
    ordinal = _ordinals(G)
    adj = adjacency(G)
    out = set()
    for size in range(4, max_len + 1):
        for subset in combinations(G.vertices, size):
            sset = set(subset)
            degs = {v: len(adj[v] & sset) for v in subset}
            if any(d != 2 for d in degs.values()):
                continue
            # walk the 2-regular induced subgraph; connected iff one cycle
            start = subset[0]
            cycle = [start]
            prev = None
            while True:
                nbrs = adj[cycle[-1]] & sset
                nxt = sorted(
                    (x for x in nbrs if x != prev),
                    key=lambda t: ordinal[t],
                )
                prev = cycle[-1]
                if nxt[0] == start:
                    break
                cycle.append(nxt[0])
            if len(cycle) == size:
                out.add(canonical_cycle(cycle, ordinal))
    return sorted(out, key=lambda t: tuple(ordinal[v] for v in t))


def graph_to_dot(G: Graph, name: str = "G") -> str:
    lines = [f"graph {name} {{"]
    for v in G.vertices:
        lines.append(f'  "{v}";')
    ordinal = _ordinals(G)
    for u, v in sorted(G.edges, key=lambda e: (ordinal[e[0]], ordinal[e[1]])):
        lines.append(f'  "{u}" -- "{v}";')
    lines.append("}")
    return "\n".join(lines)
