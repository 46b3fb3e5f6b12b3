"""Simple points and edges, contractibility, and certificate replay.

A space is contractible when repeated deletion of simple points (points
whose rim is contractible) reduces it to one vertex.  Nothing guarantees
that every deletion order works, so the decision is a complete depth-first
search over deletion orders.  A greedy pass (always delete the first simple
point) runs first; if it gets stuck and backtracking then succeeds, the
space is appended to :data:`greedy_failures`.

Every state visited is an induced subspace of the input, as are the rims
examined by simplicity tests, so the search works on vertex bitmasks of the
input.  Answers are also memoized across calls by canonical key.
"""

from __future__ import annotations

from .canon import canonical_form, sub_adjacency
from .certificate import (
    ADD_EDGE,
    ADD_POINT,
    CONTRACT_PAIR,
    DELETE_EDGE,
    DELETE_POINT,
    SPLIT_POINT,
    Certificate,
    TransformStep,
)
from .errors import (
    CapExceededError,
    KeyMismatchError,
    NotAnEdgeError,
    PreconditionError,
    ReplayError,
    UnknownVertexError,
)
from .space import DigitalSpace, bits, canonical_key
from .verdict import Verdict

SEARCH_CAP = 20

# Spaces this small are resolved faster by direct search than by hashing.
_KEY_MIN = 6

# canonical key -> deletion order as canonical positions, or None if not contractible
_memo: dict[bytes, tuple[int, ...] | None] = {}

greedy_failures: list[DigitalSpace] = []


def clear_memo():
    _memo.clear()


class Contractor:
    """Contractibility search over induced subspaces of one host space."""

    def __init__(self, G: DigitalSpace):
        self.G = G
        self.adj = G.adjacency
        self.memo: dict[int, list[int] | None] = {}
        self.explored = 0

    def contractible(self, mask: int) -> bool:
        return self.order(mask) is not None

    def simple(self, v: int, mask: int) -> bool:
        rim = self.adj[v] & mask & ~(1 << v)
        return bool(rim) and self.order(rim) is not None

    def simple_points(self, mask: int) -> list[int]:
        return [v for v in bits(mask) if self.simple(v, mask)]

    def order(self, mask: int) -> list[int] | None:
        """Host indices to delete, in order, leaving a single vertex; None if impossible."""
        try:
            return self.memo[mask]
        except KeyError:
            pass
        res = self._solve(mask)
        self.memo[mask] = res
        return res

    def _solve(self, mask):
        n = mask.bit_count()
        if n == 0:
            return None
        if n == 1:
            return []
        if not self.G.is_connected_mask(mask):
            # deleting a point with a connected nonempty rim never merges components
            return None
        adj = self.adj
        for v in bits(mask):
            if (adj[v] | 1 << v) & mask == mask:
                # cone: every other point has the apex in its rim, adjacent to all of it
                return [u for u in bits(mask) if u != v]
        key = None
        if n >= _KEY_MIN:
            sub, verts = sub_adjacency(adj, mask)
            key, corder = canonical_form(sub)
            if key in _memo:
                hit = _memo[key]
                if hit is None:
                    return None
                return [verts[corder[p]] for p in hit]
        res = self._greedy(mask)
        if res is None:
            res = self._backtrack(mask)
            if res is not None:
                greedy_failures.append(self.G.induced_mask(mask))
        if key is not None:
            if res is None:
                _memo[key] = None
            else:
                pos = {verts[c]: p for p, c in enumerate(corder)}
                _memo[key] = tuple(pos[v] for v in res)
        return res

    def _greedy(self, mask):
        path = []
        while mask.bit_count() > 1:
            for v in bits(mask):
                if self.simple(v, mask):
                    break
            else:
                return None
            path.append(v)
            mask &= ~(1 << v)
        return path

    def _backtrack(self, mask):
        self.explored += 1
        for v in bits(mask):
            if self.simple(v, mask):
                rest = self.order(mask & ~(1 << v))
                if rest is not None:
                    return [v] + rest
        return None


def _check_cap(size, cap, what):
    if size > cap:
        raise CapExceededError(what, size, cap)


def is_simple_point(G: DigitalSpace, v: str, cap: int = SEARCH_CAP) -> bool:
    """True iff the rim of ``v`` is contractible."""
    i = G.index(v)
    rim = G.adjacency[i]
    _check_cap(rim.bit_count(), cap, "is_simple_point")
    return Contractor(G).simple(i, G.full_mask)


def is_simple_edge(G: DigitalSpace, u: str, v: str, cap: int = SEARCH_CAP) -> bool:
    """True iff the joint rim of the edge ``uv`` is contractible."""
    G.require_edge(u, v)
    joint = G.adjacency[G.index(u)] & G.adjacency[G.index(v)]
    _check_cap(joint.bit_count(), cap, "is_simple_edge")
    return bool(joint) and Contractor(G).contractible(joint)


def simple_points(G: DigitalSpace) -> list[str]:
    c = Contractor(G)
    return [G.vertices[i] for i in c.simple_points(G.full_mask)]


def _deletion_certificate(G, order, end_mask):
    steps = tuple(TransformStep(DELETE_POINT, vertex=G.vertices[i]) for i in order)
    return Certificate(steps, canonical_key(G), canonical_key(G.induced_mask(end_mask)))


def is_contractible(G: DigitalSpace, cap: int = SEARCH_CAP) -> Verdict:
    """Decide contractibility by exhaustive search over deletion orders.

    A true verdict carries a :class:`Certificate` of ``delete-point`` steps
    ending at a single vertex.  A false verdict means every deletion order was
    ruled out; ``explored`` counts backtracking nodes.
    """
    if len(G) == 0:
        raise PreconditionError("the empty space has no contractibility status")
    _check_cap(len(G), cap, "is_contractible")
    c = Contractor(G)
    order = c.order(G.full_mask)
    if order is None:
        return Verdict.no(witness="no deletion order of simple points reaches a point",
                          explored=c.explored)
    last = G.full_mask
    for i in order:
        last &= ~(1 << i)
    return Verdict.yes(_deletion_certificate(G, order, last), explored=c.explored)


def contractible(G: DigitalSpace, cap: int = SEARCH_CAP) -> bool:
    return bool(is_contractible(G, cap))


def reduce_onto(G: DigitalSpace, H, cap: int = SEARCH_CAP) -> Verdict:
    """Delete simple points of ``G`` outside ``H`` until exactly ``H`` remains."""
    _check_cap(len(G), cap, "reduce_onto")
    target = G.mask(H)
    if not target:
        raise PreconditionError("target subspace is empty")
    c = Contractor(G)
    if not c.contractible(G.full_mask):
        raise PreconditionError("host space is not contractible")
    if not c.contractible(target):
        raise PreconditionError("target subspace is not contractible")
    failed = set()

    def search(mask):
        if mask == target:
            return []
        if mask in failed:
            return None
        c.explored += 1
        for v in bits(mask & ~target):
            if c.simple(v, mask):
                rest = search(mask & ~(1 << v))
                if rest is not None:
                    return [v] + rest
        failed.add(mask)
        return None

    order = search(G.full_mask)
    if order is None:
        return Verdict.no(witness="no deletion order reaches the target", explored=c.explored)
    return Verdict.yes(_deletion_certificate(G, order, target), explored=c.explored)


# -- applying and replaying steps ---------------------------------------------


def apply_step(G: DigitalSpace, step: TransformStep) -> DigitalSpace:
    """Apply one step after verifying its simplicity precondition."""
    from . import pairs

    kind = step.kind
    if kind == DELETE_POINT:
        if not is_simple_point(G, step.vertex):
            raise ReplayError(f"{step.vertex!r} is not a simple point")
        return G.without([step.vertex])
    if kind == ADD_POINT:
        if step.vertex in G:
            raise ReplayError(f"{step.vertex!r} already present")
        for u in step.rim:
            if u not in G:
                raise ReplayError(f"rim vertex {u!r} unknown")
        mask = G.mask(step.rim)
        if not mask or not Contractor(G).contractible(mask):
            raise ReplayError(f"rim attached to {step.vertex!r} is not contractible")
        return G.with_vertex(step.vertex, step.rim)
    if kind == DELETE_EDGE:
        u, v = step.pair
        try:
            ok = is_simple_edge(G, u, v)
        except (NotAnEdgeError, UnknownVertexError) as e:
            raise ReplayError(str(e)) from None
        if not ok:
            raise ReplayError(f"edge {u!r}-{v!r} is not simple")
        return G.with_edge(u, v, present=False)
    if kind == ADD_EDGE:
        u, v = step.pair
        if u not in G or v not in G or u == v or G.adjacent(u, v):
            raise ReplayError(f"cannot add edge {u!r}-{v!r}")
        joint = G.adjacency[G.index(u)] & G.adjacency[G.index(v)]
        if not joint or not Contractor(G).contractible(joint):
            raise ReplayError(f"added edge {u!r}-{v!r} would not be simple")
        return G.with_edge(u, v)
    if kind == CONTRACT_PAIR:
        x, y = step.pair
        if x not in G or y not in G or not G.adjacent(x, y) or not pairs.is_simple_pair(G, x, y):
            raise ReplayError(f"{{{x!r}, {y!r}}} is not a simple pair")
        return pairs.contracted(G, x, y, step.vertex)
    if kind == SPLIT_POINT:
        try:
            return pairs.split_point(G, pairs.SplitSpec.from_step(step))[0]
        except (PreconditionError, UnknownVertexError) as e:
            raise ReplayError(str(e)) from None
    raise ReplayError(f"unknown step kind {kind!r}")


def inverse_step(G: DigitalSpace, step: TransformStep) -> TransformStep:
    """The step undoing ``step`` when ``step`` is applied to ``G``."""
    kind = step.kind
    if kind == DELETE_POINT:
        return TransformStep(ADD_POINT, vertex=step.vertex, rim=G.neighbors(step.vertex))
    if kind == ADD_POINT:
        return TransformStep(DELETE_POINT, vertex=step.vertex)
    if kind == DELETE_EDGE:
        return TransformStep(ADD_EDGE, pair=step.pair)
    if kind == ADD_EDGE:
        return TransformStep(DELETE_EDGE, pair=step.pair)
    if kind == CONTRACT_PAIR:
        from .pairs import split_spec_inverting

        return split_spec_inverting(G, *step.pair, step.vertex).to_step()
    if kind == SPLIT_POINT:
        return TransformStep(CONTRACT_PAIR, pair=step.pair, vertex=step.vertex)
    raise ValueError(kind)


def replay(G: DigitalSpace, cert: Certificate) -> DigitalSpace:
    """Re-apply every step of ``cert`` to ``G``, re-verifying preconditions."""
    if canonical_key(G) != cert.start_key:
        raise KeyMismatchError("start key does not match the given space")
    for i, step in enumerate(cert.steps):
        try:
            G = apply_step(G, step)
        except ReplayError as e:
            raise ReplayError(str(e), step=i) from None
    if canonical_key(G) != cert.end_key:
        raise KeyMismatchError("replayed space does not match the recorded end key")
    return G


def certificate_from_steps(G: DigitalSpace, steps) -> Certificate:
    """Apply ``steps`` (verifying each) and wrap them with start and end keys."""
    H = G
    steps = tuple(steps)
    for i, step in enumerate(steps):
        try:
            H = apply_step(H, step)
        except ReplayError as e:
            raise ReplayError(str(e), step=i) from None
    return Certificate(steps, canonical_key(G), canonical_key(H))
