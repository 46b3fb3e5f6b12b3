"""Digital spaces: finite simple graphs with named vertices.

Vertices are opaque strings kept in lexicographic order; adjacency is stored
as one integer bitmask per vertex, indexed by that order.  Spaces are
immutable, so every construction returns a new space.
"""

from __future__ import annotations

from typing import Iterable, Iterator

from .canon import canonical_form, sub_adjacency
from .errors import CapExceededError, NotAnEdgeError, PreconditionError, UnknownVertexError

CANONICAL_CAP = 24

VertexSet = frozenset


def bits(mask: int) -> Iterator[int]:
    """Indices of the set bits of ``mask``, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class DigitalSpace:
    """A finite simple graph treated as a topological object.

    >>> c4 = DigitalSpace("abcd", [("a", "b"), ("b", "c"), ("c", "d"), ("d", "a")])
    >>> sorted(rim(c4, "a").vertices)
    ['b', 'd']
    """

    __slots__ = ("_names", "_index", "_adj", "_canon", "metadata")

    def __init__(self, vertices: Iterable[str] = (), edges: Iterable[tuple[str, str]] = (),
                 metadata: dict | None = None):
        names = sorted(set(vertices))
        for v in names:
            if not isinstance(v, str):
                raise TypeError(f"vertex names must be strings, got {v!r}")
        index = {v: i for i, v in enumerate(names)}
        adj = [0] * len(names)
        for u, v in edges:
            if u not in index:
                raise UnknownVertexError(u)
            if v not in index:
                raise UnknownVertexError(v)
            if u == v:
                raise PreconditionError(f"self-loop at {u!r}")
            i, j = index[u], index[v]
            adj[i] |= 1 << j
            adj[j] |= 1 << i
        self._names = tuple(names)
        self._index = index
        self._adj = tuple(adj)
        self._canon = None
        self.metadata = dict(metadata or {})

    @classmethod
    def _from_masks(cls, names, adj, metadata=None):
        g = cls.__new__(cls)
        g._names = tuple(names)
        g._index = {v: i for i, v in enumerate(g._names)}
        g._adj = tuple(adj)
        g._canon = None
        g.metadata = dict(metadata or {})
        return g

    @classmethod
    def from_adjacency(cls, names, adj):
        """Build from names (any order) and bitmasks indexed by that order."""
        order = sorted(range(len(names)), key=lambda i: names[i])
        pos = {old: new for new, old in enumerate(order)}
        new_adj = []
        for old in order:
            r = 0
            for j in bits(adj[old]):
                r |= 1 << pos[j]
            new_adj.append(r)
        return cls._from_masks([names[i] for i in order], new_adj)

    # -- basic access ---------------------------------------------------------

    @property
    def vertices(self) -> tuple[str, ...]:
        return self._names

    @property
    def adjacency(self) -> tuple[int, ...]:
        """Neighbour bitmasks indexed by vertex position."""
        return self._adj

    @property
    def full_mask(self) -> int:
        return (1 << len(self._names)) - 1

    def __len__(self):
        return len(self._names)

    def __contains__(self, v):
        return v in self._index

    def __iter__(self):
        return iter(self._names)

    def __eq__(self, other):
        if not isinstance(other, DigitalSpace):
            return NotImplemented
        return self._names == other._names and self._adj == other._adj

    def __hash__(self):
        return hash((self._names, self._adj))

    def __repr__(self):
        return f"<DigitalSpace |V|={len(self)} |E|={self.n_edges}>"

    def index(self, v: str) -> int:
        try:
            return self._index[v]
        except KeyError:
            raise UnknownVertexError(v) from None

    def mask(self, vs: Iterable[str]) -> int:
        m = 0
        for v in vs:
            m |= 1 << self.index(v)
        return m

    def names(self, mask: int) -> frozenset:
        return frozenset(self._names[i] for i in bits(mask))

    def sorted_names(self, mask: int) -> list[str]:
        return [self._names[i] for i in bits(mask)]

    def edges(self) -> Iterator[tuple[str, str]]:
        for i, a in enumerate(self._adj):
            for j in bits(a >> (i + 1)):
                yield self._names[i], self._names[i + 1 + j]

    @property
    def n_edges(self) -> int:
        return sum(a.bit_count() for a in self._adj) // 2

    def neighbors(self, v: str) -> tuple[str, ...]:
        return tuple(self._names[j] for j in bits(self._adj[self.index(v)]))

    def degree(self, v: str) -> int:
        return self._adj[self.index(v)].bit_count()

    def adjacent(self, u: str, v: str) -> bool:
        return bool(self._adj[self.index(u)] >> self.index(v) & 1)

    def require_edge(self, u: str, v: str) -> None:
        if not self.adjacent(u, v):
            raise NotAnEdgeError(u, v)

    # -- mask-level helpers used by the search modules ------------------------

    def induced_mask(self, mask: int) -> "DigitalSpace":
        sub, verts = sub_adjacency(self._adj, mask)
        return DigitalSpace._from_masks([self._names[i] for i in verts], sub)

    def is_connected_mask(self, mask: int) -> bool:
        if not mask:
            return True
        seen = mask & -mask
        frontier = seen
        while frontier:
            nxt = 0
            for i in bits(frontier):
                nxt |= self._adj[i]
            nxt &= mask & ~seen
            seen |= nxt
            frontier = nxt
        return seen == mask

    def components_mask(self, mask: int) -> list[int]:
        out = []
        rest = mask
        while rest:
            seen = rest & -rest
            frontier = seen
            while frontier:
                nxt = 0
                for i in bits(frontier):
                    nxt |= self._adj[i]
                nxt &= rest & ~seen
                seen |= nxt
                frontier = nxt
            out.append(seen)
            rest &= ~seen
        return out

    def canonical_form(self):
        """``(key, order)``; see :func:`digitopo.canon.canonical_form`."""
        if self._canon is None:
            self._canon = canonical_form(list(self._adj))
        return self._canon

    # -- graph surgery --------------------------------------------------------

    def without(self, vs: Iterable[str]) -> "DigitalSpace":
        return self.induced_mask(self.full_mask & ~self.mask(vs))

    def with_vertex(self, v: str, neighbors: Iterable[str]) -> "DigitalSpace":
        if v in self._index:
            raise PreconditionError(f"vertex {v!r} already present")
        nbrs = list(neighbors)
        for u in nbrs:
            self.index(u)
        return DigitalSpace(self._names + (v,), list(self.edges()) + [(v, u) for u in nbrs])

    def with_edge(self, u: str, v: str, present: bool = True) -> "DigitalSpace":
        i, j = self.index(u), self.index(v)
        if i == j:
            raise PreconditionError(f"self-loop at {u!r}")
        adj = list(self._adj)
        if present:
            adj[i] |= 1 << j
            adj[j] |= 1 << i
        else:
            adj[i] &= ~(1 << j)
            adj[j] &= ~(1 << i)
        return DigitalSpace._from_masks(self._names, adj)

    def relabel(self, mapping: dict) -> "DigitalSpace":
        names = [mapping.get(v, v) for v in self._names]
        if len(set(names)) != len(names):
            raise PreconditionError("relabeling is not injective")
        return DigitalSpace.from_adjacency(names, list(self._adj))

    def fresh_name(self, base: str) -> str:
        """``base`` if unused, else ``base`` with the smallest free ``'#k'`` suffix."""
        if base not in self._index:
            return base
        k = 1
        while f"{base}#{k}" in self._index:
            k += 1
        return f"{base}#{k}"


def rim(G: DigitalSpace, v: str) -> DigitalSpace:
    """Induced subspace on the neighbours of ``v``, ``v`` excluded."""
    return G.induced_mask(G.adjacency[G.index(v)])


def ball(G: DigitalSpace, v: str) -> DigitalSpace:
    i = G.index(v)
    return G.induced_mask(G.adjacency[i] | 1 << i)


def induced(G: DigitalSpace, S: Iterable[str]) -> DigitalSpace:
    return G.induced_mask(G.mask(S))


def join(G: DigitalSpace, H: DigitalSpace) -> DigitalSpace:
    """Disjoint union of ``G`` and ``H`` plus every cross edge.

    Colliding names get ``'#1'`` (from ``G``) and ``'#2'`` (from ``H``); the
    renaming is recorded in ``metadata['renamed']``.
    """
    clash = set(G.vertices) & set(H.vertices)
    gmap = {v: f"{v}#1" if v in clash else v for v in G.vertices}
    hmap = {v: f"{v}#2" if v in clash else v for v in H.vertices}
    if len(set(gmap.values()) | set(hmap.values())) != len(G) + len(H):
        raise PreconditionError("join renaming produced a collision")
    edges = [(gmap[u], gmap[v]) for u, v in G.edges()]
    edges += [(hmap[u], hmap[v]) for u, v in H.edges()]
    edges += [(gmap[u], hmap[v]) for u in G.vertices for v in H.vertices]
    meta = {}
    if clash:
        meta["renamed"] = {"left": {v: gmap[v] for v in sorted(clash)},
                           "right": {v: hmap[v] for v in sorted(clash)}}
    return DigitalSpace(list(gmap.values()) + list(hmap.values()), edges, metadata=meta)


def components(G: DigitalSpace) -> list[frozenset]:
    """Connected components, ordered by their least vertex."""
    return [G.names(m) for m in G.components_mask(G.full_mask)]


def is_connected(G: DigitalSpace) -> bool:
    return G.is_connected_mask(G.full_mask)


def canonical_key(G: DigitalSpace, cap: int = CANONICAL_CAP) -> bytes:
    """Byte string equal for two spaces iff they are isomorphic."""
    if len(G) > cap:
        raise CapExceededError("canonical_key", len(G), cap)
    return G.canonical_form()[0]


def complement_is_perfect_matching(G: DigitalSpace) -> bool:
    n = len(G)
    if n % 2:
        return False
    full = G.full_mask
    for i, a in enumerate(G.adjacency):
        if (full & ~a & ~(1 << i)).bit_count() != 1:
            return False
    return True
