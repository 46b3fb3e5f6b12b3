"""Simple pairs, their contraction (C-transformation) and splitting (R-transformation).

Adjacent points ``x, y`` form a simple pair when no point of ``U(x) - U(y)``
is adjacent to a point of ``U(y) - U(x)``, where ``U`` is the closed ball.
Contracting the pair replaces ``x, y`` by one fresh point ``z`` whose rim is
``U(x) | U(y) - {x, y}``; splitting is the inverse move.
"""

from __future__ import annotations

from dataclasses import dataclass

from .certificate import ADD_POINT, DELETE_POINT, SPLIT_POINT, Certificate, TransformStep
from .errors import PreconditionError
from .homotopy import certificate_from_steps
from .prng import XorShift64
from .space import DigitalSpace, bits


def _balls(G, x, y):
    i, j = G.index(x), G.index(y)
    adj = G.adjacency
    return i, j, adj[i] | 1 << i, adj[j] | 1 << j


def _simple_pair_masks(adj, ux, uy):
    only_y = uy & ~ux
    for a in bits(ux & ~uy):
        if adj[a] & only_y:
            return False
    return True


def is_simple_pair(G: DigitalSpace, x: str, y: str) -> bool:
    G.require_edge(x, y)
    _, _, ux, uy = _balls(G, x, y)
    return _simple_pair_masks(G.adjacency, ux, uy)


def simple_pairs(G: DigitalSpace) -> list[tuple[str, str]]:
    """All simple pairs as ``(x, y)`` edges with ``x < y``, in edge order."""
    adj = G.adjacency
    out = []
    for i, a in enumerate(adj):
        ui = a | 1 << i
        for j in bits(a >> (i + 1)):
            j += i + 1
            if _simple_pair_masks(adj, ui, adj[j] | 1 << j):
                out.append((G.vertices[i], G.vertices[j]))
    return out


def contraction_name(G: DigitalSpace, x: str, y: str) -> str:
    return G.fresh_name(f"{x}+{y}")


def contracted(G: DigitalSpace, x: str, y: str, z: str | None = None) -> DigitalSpace:
    """The contracted space, without checking that the pair is simple."""
    i, j, ux, uy = _balls(G, x, y)
    if z is None:
        z = contraction_name(G, x, y)
    elif z in G:
        raise PreconditionError(f"fresh name {z!r} already used")
    keep = G.full_mask & ~(1 << i) & ~(1 << j)
    rim = (ux | uy) & keep
    H = G.induced_mask(keep)
    return H.with_vertex(z, [G.vertices[k] for k in bits(rim)])


@dataclass(frozen=True)
class PairContraction:
    """Record of one contraction ``{x, y} -> z`` with its homotopy witness.

    The witness attaches ``z`` with rim ``U(x) | U(y)``, then deletes ``x`` and
    ``y``; each of the three moves is a simple-point move.
    """

    x: str
    y: str
    z: str
    certificate: Certificate

    def to_dict(self) -> dict:
        return {"x": self.x, "y": self.y, "z": self.z, "certificate": self.certificate.to_dict()}

    @classmethod
    def from_dict(cls, d):
        return cls(d["x"], d["y"], d["z"], Certificate.from_dict(d["certificate"]))


def contract_pair(G: DigitalSpace, x: str, y: str, z: str | None = None):
    """Contract the simple pair ``{x, y}``; returns ``(result, PairContraction)``."""
    if not is_simple_pair(G, x, y):
        raise PreconditionError(f"{{{x!r}, {y!r}}} is not a simple pair")
    if z is None:
        z = contraction_name(G, x, y)
    _, _, ux, uy = _balls(G, x, y)
    steps = (
        TransformStep(ADD_POINT, vertex=z, rim=tuple(G.sorted_names(ux | uy))),
        TransformStep(DELETE_POINT, vertex=x),
        TransformStep(DELETE_POINT, vertex=y),
    )
    cert = certificate_from_steps(G, steps)
    return contracted(G, x, y, z), PairContraction(x, y, z, cert)


@dataclass(frozen=True)
class SplitSpec:
    """Split ``z`` into adjacent fresh points ``x`` (rim part_x) and ``y`` (rim part_y)."""

    z: str
    part_x: frozenset
    part_y: frozenset
    x: str = ""
    y: str = ""

    def names(self) -> tuple[str, str]:
        return (self.x or f"{self.z}.x", self.y or f"{self.z}.y")

    def to_step(self) -> TransformStep:
        return TransformStep(SPLIT_POINT, vertex=self.z, pair=self.names(),
                             parts=(tuple(sorted(self.part_x)), tuple(sorted(self.part_y))))

    @classmethod
    def from_step(cls, step: TransformStep) -> "SplitSpec":
        x, y = step.pair
        return cls(step.vertex, frozenset(step.parts[0]), frozenset(step.parts[1]), x, y)

    def to_dict(self) -> dict:
        x, y = self.names()
        return {"z": self.z, "part_x": sorted(self.part_x), "part_y": sorted(self.part_y),
                "x": x, "y": y}

    @classmethod
    def from_dict(cls, d):
        return cls(d["z"], frozenset(d["part_x"]), frozenset(d["part_y"]),
                   d.get("x", ""), d.get("y", ""))


def _split_raw(G: DigitalSpace, spec: SplitSpec):
    if spec.z not in G:
        raise PreconditionError(f"unknown vertex {spec.z!r}")
    rim = set(G.neighbors(spec.z))
    px, py = set(spec.part_x), set(spec.part_y)
    if (px | py) != rim:
        raise PreconditionError("split parts must exactly cover the rim of the split point")
    x, y = spec.names()
    if x == y or x in G and x != spec.z or y in G and y != spec.z:
        raise PreconditionError(f"split names {x!r}, {y!r} collide")
    H = G.without([spec.z])
    H = H.with_vertex(x, sorted(px))
    return H.with_vertex(y, sorted(py) + [x]), x, y


def split_point(G: DigitalSpace, spec: SplitSpec):
    """Split a point; returns ``(result, PairContraction)`` where the record contracts back.

    Validity is checked on the constructed space: the new pair must be simple.
    """
    H, x, y = _split_raw(G, spec)
    if not is_simple_pair(H, x, y):
        raise PreconditionError("split leaves an adjacency between U(x)-U(y) and U(y)-U(x)")
    _, back = contract_pair(H, x, y, spec.z)
    return H, back


def split_spec_inverting(G: DigitalSpace, x: str, y: str, z: str | None = None) -> SplitSpec:
    """The split of ``z`` in the contracted space that restores ``G``."""
    if z is None:
        z = contraction_name(G, x, y)
    return SplitSpec(z, frozenset(G.neighbors(x)) - {y}, frozenset(G.neighbors(y)) - {x}, x, y)


def _assignment(rim, code):
    # code digit per rim vertex: 0 -> x only, 1 -> y only, 2 -> both
    px, py = set(), set()
    for v in rim:
        code, d = divmod(code, 3)
        if d != 1:
            px.add(v)
        if d != 0:
            py.add(v)
    return frozenset(px), frozenset(py)


def _valid_split(G, spec):
    try:
        H, x, y = _split_raw(G, spec)
    except PreconditionError:
        return None
    return H if is_simple_pair(H, x, y) else None


RANDOM_SPLIT_TRIES = 64


def random_split(G: DigitalSpace, seed: int, accept=None):
    """Sample a valid split of ``G``; returns ``(result, SplitSpec)``.

    Up to ``RANDOM_SPLIT_TRIES`` uniformly random (point, rim cover) pairs are
    tried first; then every candidate is scanned, points in a seeded random
    order.  ``accept(result, spec)`` can impose an extra condition.
    """
    if len(G) < 2:
        raise PreconditionError("random_split needs at least two points")
    rng = XorShift64(seed)
    verts = G.vertices
    for _ in range(RANDOM_SPLIT_TRIES):
        z = rng.choice(verts)
        rim = G.neighbors(z)
        spec = SplitSpec(z, *_assignment(rim, rng.below(3 ** len(rim))))
        H = _valid_split(G, spec)
        if H is not None and (accept is None or accept(H, spec)):
            return H, spec
    for z in rng.shuffled(verts):
        rim = G.neighbors(z)
        for code in range(3 ** len(rim)):
            spec = SplitSpec(z, *_assignment(rim, code))
            H = _valid_split(G, spec)
            if H is not None and (accept is None or accept(H, spec)):
                return H, spec
    raise PreconditionError("no valid split exists")


def all_splits(G: DigitalSpace):
    """Every valid split of every point, as ``(result, SplitSpec)`` pairs."""
    for z in G.vertices:
        rim = G.neighbors(z)
        for code in range(3 ** len(rim)):
            spec = SplitSpec(z, *_assignment(rim, code))
            H = _valid_split(G, spec)
            if H is not None:
                yield H, spec


def joint_ball(G: DigitalSpace, x: str, y: str) -> DigitalSpace:
    """Induced subspace on ``U(x) | U(y)``."""
    _, _, ux, uy = _balls(G, x, y)
    return G.induced_mask(ux | uy)


def pair_rim(G: DigitalSpace, x: str, y: str) -> DigitalSpace:
    """Induced subspace on ``U(x) | U(y) - {x, y}``: the rim of the contracted point."""
    i, j, ux, uy = _balls(G, x, y)
    return G.induced_mask((ux | uy) & ~(1 << i) & ~(1 << j))

