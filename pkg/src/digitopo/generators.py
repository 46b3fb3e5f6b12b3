"""Constructors for test corpora: minimal spheres, cycles, random spheres,
triangulated tori, and every small connected graph up to isomorphism."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator

from .canon import canonical_form
from .errors import CapExceededError, PreconditionError
from .pairs import SplitSpec, random_split
from .prng import XorShift64
from .recognizers import Recognizer, sphere
from .space import DigitalSpace, bits, join

ENUMERATION_CAP = 7


def zero_sphere(a: str = "x1", b: str = "y1") -> DigitalSpace:
    return DigitalSpace([a, b])


def minimal_sphere(n: int) -> DigitalSpace:
    """Join of ``n + 1`` two-point edgeless spaces ``{x_i, y_i}``; ``2n + 2`` points."""
    if n < 0:
        raise PreconditionError("dimension must be non-negative")
    G = zero_sphere()
    for i in range(2, n + 2):
        G = join(G, zero_sphere(f"x{i}", f"y{i}"))
    return G


def _pad(i, k):
    return str(i).zfill(len(str(k - 1)))


def cycle(k: int, prefix: str = "c") -> DigitalSpace:
    if k < 3:
        raise PreconditionError("a cycle needs at least 3 points")
    names = [f"{prefix}{_pad(i, k)}" for i in range(k)]
    return DigitalSpace(names, [(names[i], names[(i + 1) % k]) for i in range(k)])


def path(k: int, prefix: str = "p") -> DigitalSpace:
    names = [f"{prefix}{_pad(i, k)}" for i in range(k)]
    return DigitalSpace(names, [(names[i], names[i + 1]) for i in range(k - 1)])


def complete(k: int, prefix: str = "k") -> DigitalSpace:
    names = [f"{prefix}{_pad(i, k)}" for i in range(k)]
    return DigitalSpace(names, [(a, b) for i, a in enumerate(names) for b in names[i + 1:]])


def point(name: str = "o") -> DigitalSpace:
    return DigitalSpace([name])


def wheel(k: int) -> DigitalSpace:
    """A hub joined to a k-cycle."""
    return join(point("hub"), cycle(k))


TORUS_OFFSETS = ((1, 0), (-1, 0), (0, 1), (0, -1), (1, 1), (-1, -1))


def torus_name(i: int, j: int) -> str:
    return f"t{i}_{j}"


def torus_grid(m: int, n: int) -> DigitalSpace:
    """Triangulated torus on ``Z_m x Z_n``; every rim is an induced 6-cycle."""
    if m < 4 or n < 4:
        raise PreconditionError("torus_grid needs m, n >= 4")
    names = [torus_name(i, j) for i in range(m) for j in range(n)]
    edges = set()
    for i in range(m):
        for j in range(n):
            for di, dj in TORUS_OFFSETS:
                a, b = torus_name(i, j), torus_name((i + di) % m, (j + dj) % n)
                edges.add((min(a, b), max(a, b)))
    return DigitalSpace(names, sorted(edges), metadata={"kind": "torus", "m": m, "n": n})


@dataclass
class GeneratorRecipe:
    """Serializable description of a generated space."""

    kind: str
    params: dict = field(default_factory=dict)

    KINDS = ("minimal-sphere", "cycle", "random-sphere", "torus-grid", "enumerate")

    def __post_init__(self):
        if self.kind not in self.KINDS:
            raise PreconditionError(f"unknown generator {self.kind!r}")

    def build(self):
        p = self.params
        if self.kind == "minimal-sphere":
            return minimal_sphere(p["n"])
        if self.kind == "cycle":
            return cycle(p["k"])
        if self.kind == "random-sphere":
            return random_sphere(p["n"], p["steps"], p["seed"])[0]
        if self.kind == "torus-grid":
            return torus_grid(p["m"], p["n"])
        return list(enumerate_connected_graphs(p["max_vertices"]))


def _sphere_split_ok(n, recognizer):
    def accept(H, spec):
        x, y = spec.names()
        # only rims touching the split changed; check those before the full decision
        near = [x, y, *sorted(spec.part_x | spec.part_y)]
        for v in near:
            if not recognizer.sphere(H.induced_mask(H.adjacency[H.index(v)]), n - 1):
                return False
        return True

    return accept


def random_sphere(n: int, steps: int, seed: int):
    """Apply ``steps`` seeded random splits to the minimal n-sphere.

    Each split must leave a digital n-sphere.  Returns ``(space, specs)``; the
    specs replay the construction from :func:`minimal_sphere`.
    """
    if n < 1:
        raise PreconditionError("random_sphere needs n >= 1")
    if steps < 0:
        raise PreconditionError("steps must be non-negative")
    rng = XorShift64(seed)
    G = minimal_sphere(n)
    specs: list[SplitSpec] = []
    rec = Recognizer()
    accept = _sphere_split_ok(n, rec)
    for _ in range(steps):
        G, spec = random_split(G, rng.next_u64(), accept=accept)
        if not sphere(G, n):
            raise PreconditionError("accepted split did not yield a sphere")
        specs.append(spec)
    G.metadata.update({"kind": "random-sphere", "n": n, "steps": steps, "seed": seed})
    return G, specs


def enumerate_connected_graphs(max_vertices: int) -> Iterator[DigitalSpace]:
    """Every connected graph on 1..max_vertices points, one per isomorphism class.

    Graphs on k points come from those on k-1 points by adding a vertex with
    every nonempty neighbourhood; a connected graph always has a vertex whose
    removal keeps it connected, so nothing is missed.  Within a size, graphs
    are ordered by canonical key and vertex ``v{i}`` sits at canonical position i.
    """
    if max_vertices > ENUMERATION_CAP:
        raise CapExceededError("enumerate_connected_graphs", max_vertices, ENUMERATION_CAP)
    if max_vertices < 1:
        return
    level = {canonical_form([0])[0]: [0]}
    k = 1
    while True:
        for key in sorted(level):
            yield _named(level[key])
        if k == max_vertices:
            return
        nxt = {}
        for adj in level.values():
            for nb in range(1, 1 << k):
                new = [a | (1 << k if nb >> i & 1 else 0) for i, a in enumerate(adj)] + [nb]
                key, order = canonical_form(new)
                if key not in nxt:
                    nxt[key] = _reorder(new, order)
        level = nxt
        k += 1


def _reorder(adj, order):
    pos = {v: i for i, v in enumerate(order)}
    out = [0] * len(adj)
    for v, a in enumerate(adj):
        r = 0
        for u in bits(a):
            r |= 1 << pos[u]
        out[pos[v]] = r
    return out


def _named(adj):
    return DigitalSpace._from_masks([f"v{i}" for i in range(len(adj))], adj)


def suspension(G: DigitalSpace) -> DigitalSpace:
    """``S0 + G`` with the two new points named ``s+`` and ``s-``."""
    return join(DigitalSpace(["s+", "s-"]), G)


def cone_over(G: DigitalSpace, apex: str = "apex") -> DigitalSpace:
    return join(point(apex), G)
