"""Independent brute-force references used to check the library.

Nothing here imports digitopo: graphs are networkx graphs or plain dicts, and
every search is naive recursion over vertex subsets.
"""

from __future__ import annotations

import itertools
from functools import lru_cache

import networkx as nx
import numpy as np


def to_nx(G) -> nx.Graph:
    g = nx.Graph()
    g.add_nodes_from(G.vertices)
    g.add_edges_from(G.edges())
    return g


def contractible(g: nx.Graph) -> bool:
    """Delete simple points in every possible order; no memo across graphs, no canonical keys."""
    adj = {v: frozenset(g[v]) for v in g}

    @lru_cache(maxsize=None)
    def rec(S: frozenset) -> bool:
        if len(S) == 1:
            return True
        if not S:
            return False
        for v in sorted(S):
            if rec(adj[v] & S) and rec(S - {v}):
                return True
        return False

    return rec(frozenset(g))


def isomorphic(g: nx.Graph, h: nx.Graph) -> bool:
    """Permutation brute force (small graphs only)."""
    if g.number_of_nodes() != h.number_of_nodes() or g.number_of_edges() != h.number_of_edges():
        return False
    gv, hv = list(g), list(h)
    he = {frozenset(e) for e in h.edges()}
    for perm in itertools.permutations(hv):
        m = dict(zip(gv, perm))
        if all(frozenset((m[a], m[b])) in he for a, b in g.edges()):
            return True
    return False


def _rank_gf2(M: np.ndarray) -> int:
    M = M.copy() % 2
    rows, cols = M.shape
    r = 0
    for c in range(cols):
        piv = np.nonzero(M[r:, c])[0]
        if piv.size == 0:
            continue
        p = r + piv[0]
        M[[r, p]] = M[[p, r]]
        for i in np.nonzero(M[:, c])[0]:
            if i != r:
                M[i] ^= M[r]
        r += 1
        if r == rows:
            break
    return r


def simplices(g: nx.Graph):
    by_dim: dict[int, list[tuple]] = {}
    for c in nx.enumerate_all_cliques(g):
        by_dim.setdefault(len(c) - 1, []).append(tuple(sorted(c)))
    return {d: sorted(s) for d, s in by_dim.items()}


def boundary_matrix(simp, d) -> np.ndarray:
    """Rows: (d-1)-faces, columns: d-simplices, over GF(2)."""
    lower = {s: i for i, s in enumerate(simp.get(d - 1, []))}
    upper = simp.get(d, [])
    M = np.zeros((len(lower), len(upper)), dtype=np.uint8)
    for j, s in enumerate(upper):
        for k in range(len(s)):
            M[lower[s[:k] + s[k + 1:]], j] = 1
    return M


def betti_gf2(g: nx.Graph) -> tuple[int, ...]:
    simp = simplices(g)
    top = max(simp) if simp else -1
    ranks = {d: _rank_gf2(boundary_matrix(simp, d)) if d in simp and d > 0 else 0 for d in range(top + 2)}
    return tuple(len(simp[d]) - ranks[d] - ranks.get(d + 1, 0) for d in range(top + 1))


def euler(g: nx.Graph) -> int:
    return sum((-1) ** d * len(s) for d, s in simplices(g).items())


def cycle_is_essential(g: nx.Graph, cycle_vertices) -> bool:
    """True iff the induced cycle is not a GF(2) boundary of 2-simplices."""
    simp = simplices(g)
    edges = {e: i for i, e in enumerate(simp[1])}
    sub = g.subgraph(cycle_vertices)
    z = np.zeros(len(edges), dtype=np.uint8)
    for a, b in sub.edges():
        z[edges[tuple(sorted((a, b)))]] = 1
    B = boundary_matrix(simp, 2)
    return _rank_gf2(np.column_stack([B, z])) > _rank_gf2(B)


def is_zero_sphere(g):
    return g.number_of_nodes() == 2 and g.number_of_edges() == 0


def _minimal(g, n):
    if g.number_of_nodes() != 2 * n + 2:
        return False
    comp = nx.complement(g)
    return all(d == 1 for _, d in comp.degree())


def _simple_pair(g, x, y):
    ux = set(g[x]) | {x}
    uy = set(g[y]) | {y}
    return not any(g.has_edge(a, b) for a in ux - uy for b in uy - ux)


def _contract(g, x, y):
    h = g.copy()
    nb = (set(g[x]) | set(g[y])) - {x, y}
    h.remove_nodes_from([x, y])
    z = ("z", x, y)
    h.add_node(z)
    h.add_edges_from((z, w) for w in nb)
    return h


def sphere(g: nx.Graph, n: int) -> bool:
    """Definition-level recursion with no memo and no pruning beyond the definition."""
    if n == 0:
        return is_zero_sphere(g)
    if g.number_of_nodes() == 0 or not nx.is_connected(g):
        return False
    if not all(sphere(g.subgraph(g[v]).copy(), n - 1) for v in g):
        return False
    return _reaches_minimal(g, n)


def _reaches_minimal(g, n):
    if _minimal(g, n):
        return True
    if g.number_of_nodes() <= 2 * n + 2:
        return False
    for x, y in g.edges():
        if _simple_pair(g, x, y) and _reaches_minimal(_contract(g, x, y), n):
            return True
    return False
