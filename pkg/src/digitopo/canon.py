"""Canonical labeling of small graphs by partition refinement and backtracking.

Graphs are given as a list of adjacency bitmasks over vertices ``0..n-1``.
The search individualizes vertices of the first smallest non-singleton cell,
refines to an equitable partition, and keeps the lexicographically largest
relabeled adjacency matrix over all leaves.  Automorphisms discovered along
the way prune branches that lie in the same orbit (pointwise stabilizer of
the current prefix), and a leaf equivalent to an earlier one aborts the
whole sibling subtree.  Both prunings only discard leaves whose relabeled
matrix equals one already seen, so the result is exact.
"""

from __future__ import annotations


def _refine(adj, cells):
    while True:
        masks = []
        for cell in cells:
            m = 0
            for v in cell:
                m |= 1 << v
            masks.append(m)
        out = []
        changed = False
        for cell in cells:
            if len(cell) == 1:
                out.append(cell)
                continue
            groups = {}
            for v in cell:
                a = adj[v]
                sig = tuple((a & m).bit_count() for m in masks)
                groups.setdefault(sig, []).append(v)
            if len(groups) == 1:
                out.append(cell)
                continue
            changed = True
            for sig in sorted(groups):
                out.append(groups[sig])
        cells = out
        if not changed:
            return cells


def _target(cells):
    best = None
    for i, cell in enumerate(cells):
        if len(cell) > 1 and (best is None or len(cell) < len(cells[best])):
            best = i
    return best


def _leaf_rows(adj, order):
    pos = {v: i for i, v in enumerate(order)}
    rows = []
    for v in order:
        r = 0
        a = adj[v]
        while a:
            low = a & -a
            r |= 1 << (len(order) - 1 - pos[low.bit_length() - 1])
            a ^= low
        rows.append(r)
    return tuple(rows)


class _Search:
    def __init__(self, adj):
        self.adj = adj
        self.n = len(adj)
        self.first = None
        self.best = None
        self.autos = []

    def orbit_roots(self, prefix):
        parent = list(range(self.n))

        def find(a):
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        fixed = set(prefix)
        for perm in self.autos:
            if any(perm[p] != p for p in fixed):
                continue
            for a, b in enumerate(perm):
                ra, rb = find(a), find(b)
                if ra != rb:
                    parent[max(ra, rb)] = min(ra, rb)
        return find

    def run(self, cells, prefix):
        t = _target(cells)
        if t is None:
            return self.leaf([c[0] for c in cells], prefix)
        cell = sorted(cells[t])
        explored = []
        find = None
        seen_autos = -1
        for v in cell:
            if explored:
                if seen_autos != len(self.autos):
                    find = self.orbit_roots(prefix)
                    seen_autos = len(self.autos)
                rv = find(v)
                if any(find(u) == rv for u in explored):
                    continue
            explored.append(v)
            rest = [u for u in cells[t] if u != v]
            child = _refine(self.adj, cells[:t] + [[v], rest] + cells[t + 1:])
            jump = self.run(child, prefix + [v])
            if jump is not None and jump < len(prefix):
                return jump
        return None

    def leaf(self, order, prefix):
        rows = _leaf_rows(self.adj, order)
        if self.first is None:
            self.first = (rows, order, prefix)
            self.best = self.first
            return None
        for ref in (self.first, self.best):
            if rows == ref[0]:
                perm = [0] * self.n
                for a, b in zip(ref[1], order):
                    perm[a] = b
                self.autos.append(perm)
                d = 0
                for a, b in zip(ref[2], prefix):
                    if a != b:
                        break
                    d += 1
                return d
        if rows > self.best[0]:
            self.best = (rows, order, prefix)
        return None


def canonical_form(adj):
    """Return ``(key, order)`` for the graph with adjacency bitmasks ``adj``.

    ``order[i]`` is the input vertex placed at canonical position ``i``.  Two
    graphs get equal keys iff they are isomorphic.
    """
    n = len(adj)
    if n == 0:
        return b"\x00", []
    s = _Search(adj)
    s.run(_refine(adj, [list(range(n))]), [])
    rows, order, _ = s.best
    width = (n + 7) // 8
    key = bytearray([n])
    for r in rows:
        key += r.to_bytes(width, "big")
    return bytes(key), list(order)


def sub_adjacency(adj, mask):
    """Adjacency bitmasks of the subgraph induced on ``mask``, reindexed densely.

    Returns ``(sub_adj, verts)`` where ``verts[i]`` is the host vertex of new index ``i``.
    """
    verts = []
    m = mask
    while m:
        low = m & -m
        verts.append(low.bit_length() - 1)
        m ^= low
    index = {v: i for i, v in enumerate(verts)}
    sub = []
    for v in verts:
        a = adj[v] & mask
        r = 0
        while a:
            low = a & -a
            r |= 1 << index[low.bit_length() - 1]
            a ^= low
        sub.append(r)
    return sub, verts
