"""Recognition of digital n-spheres, n-manifolds and n-disks.

A connected space is an n-sphere (n > 0) when every rim is an (n-1)-sphere
and some sequence of simple-pair contractions reaches the minimal n-sphere,
the join of n+1 two-point edgeless spaces.  The base case is the 0-sphere:
two points, no edge.

The contraction search is complete backtracking, memoized per dimension on
canonical keys.  Exhausting the node budget yields an unknown verdict, never
a negative one.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import BudgetExceededError, CapExceededError, PreconditionError, ReplayError
from .homotopy import replay
from .pairs import PairContraction, contract_pair, contracted, contraction_name, simple_pairs
from .space import (
    CANONICAL_CAP,
    DigitalSpace,
    ball,
    canonical_key,
    complement_is_perfect_matching,
    is_connected,
    rim,
)
from .verdict import Verdict

SPHERE_CAP = CANONICAL_CAP
DEFAULT_BUDGET = 200_000

# (n, canonical key) -> is an n-sphere
_sphere_memo: dict[tuple[int, bytes], bool] = {}
# (n, canonical key) -> reaches the minimal n-sphere by simple-pair contractions
_reach_memo: dict[tuple[int, bytes], bool] = {}

# spaces whose first-choice contraction sequence got stuck although another one succeeded
divergent_sequences: list[tuple[int, DigitalSpace]] = []


def clear_memo():
    _sphere_memo.clear()
    _reach_memo.clear()


class _OutOfBudget(Exception):
    pass


def is_zero_sphere(G: DigitalSpace) -> bool:
    return len(G) == 2 and G.n_edges == 0


def is_minimal_n_sphere(G: DigitalSpace) -> int | None:
    """``n`` if ``G`` is the minimal n-sphere, else None."""
    if len(G) < 2 or not complement_is_perfect_matching(G):
        return None
    return len(G) // 2 - 1


@dataclass
class SphereCertificate:
    """Contraction sequence to the minimal sphere plus rim witnesses one dimension down."""

    dimension: int
    start_key: bytes
    contractions: tuple[PairContraction, ...] = ()
    rims: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "dimension": self.dimension,
            "start_key": self.start_key.hex(),
            "contractions": [c.to_dict() for c in self.contractions],
            "rims": {v: c.to_dict() for v, c in self.rims.items()},
        }

    @classmethod
    def from_dict(cls, d):
        return cls(
            d["dimension"],
            bytes.fromhex(d["start_key"]),
            tuple(PairContraction.from_dict(c) for c in d["contractions"]),
            {v: cls.from_dict(c) for v, c in d["rims"].items()},
        )


class Recognizer:
    """Sphere search sharing one node budget across all recursive calls."""

    def __init__(self, budget: int = DEFAULT_BUDGET):
        self.budget = budget
        self.explored = 0

    def _tick(self):
        self.explored += 1
        if self.explored > self.budget:
            raise _OutOfBudget

    def sphere(self, G: DigitalSpace, n: int) -> bool:
        if n < 0:
            return False
        if n == 0:
            return is_zero_sphere(G)
        if len(G) < 2 * n + 2:
            return False
        if min(a.bit_count() for a in G.adjacency) < 2 * n:
            return False
        key = (n, canonical_key(G))
        hit = _sphere_memo.get(key)
        if hit is not None:
            return hit
        ok = (is_connected(G)
              and all(self.sphere(G.induced_mask(a), n - 1) for a in G.adjacency)
              and self.reach(G, n) is not None)
        _sphere_memo[key] = ok
        return ok

    def manifold(self, G: DigitalSpace, n: int) -> bool:
        if len(G) == 0 or not is_connected(G):
            return False
        return all(self.sphere(G.induced_mask(a), n - 1) for a in G.adjacency)

    def reach(self, G: DigitalSpace, n: int):
        """List of ``(x, y, z)`` contractions reaching the minimal n-sphere, or None."""
        path = self._greedy(G, n)
        if path is not None:
            return path
        path = self._search(G, n)
        if path is not None:
            divergent_sequences.append((n, G))
        return path

    def _greedy(self, G, n):
        path = []
        while len(G) > 2 * n + 2:
            self._tick()
            pairs = simple_pairs(G)
            if not pairs:
                return None
            x, y = pairs[0]
            z = contraction_name(G, x, y)
            path.append((x, y, z))
            G = contracted(G, x, y, z)
        return path if is_minimal_n_sphere(G) == n else None

    def _search(self, G, n):
        if len(G) < 2 * n + 2:
            return None
        if len(G) == 2 * n + 2:
            return [] if is_minimal_n_sphere(G) == n else None
        key = (n, canonical_key(G))
        if _reach_memo.get(key) is False:
            return None
        self._tick()
        for x, y in simple_pairs(G):
            z = contraction_name(G, x, y)
            rest = self._search(contracted(G, x, y, z), n)
            if rest is not None:
                _reach_memo[key] = True
                return [(x, y, z)] + rest
        _reach_memo[key] = False
        return None

    def certify(self, G: DigitalSpace, n: int) -> SphereCertificate:
        """Certificate for a space already known to be an n-sphere."""
        cert = SphereCertificate(n, canonical_key(G))
        if n == 0:
            return cert
        for v, a in zip(G.vertices, G.adjacency):
            cert.rims[v] = self.certify(G.induced_mask(a), n - 1)
        path = self.reach(G, n)
        if path is None:
            raise PreconditionError("space is not an n-sphere")
        steps = []
        H = G
        for x, y, z in path:
            H, pc = contract_pair(H, x, y, z)
            steps.append(pc)
        cert.contractions = tuple(steps)
        return cert


def is_n_sphere(G: DigitalSpace, n: int, budget: int = DEFAULT_BUDGET,
                cap: int = SPHERE_CAP, certify: bool = True) -> Verdict:
    """Decide whether ``G`` is a digital n-sphere.

    A true verdict carries a :class:`SphereCertificate` unless ``certify`` is
    off.  A budget overrun gives an unknown verdict.
    """
    if len(G) > cap:
        raise CapExceededError("is_n_sphere", len(G), cap)
    r = Recognizer(budget)
    try:
        ok = r.sphere(G, n)
        if not ok:
            return Verdict.no(witness=_sphere_failure(r, G, n), explored=r.explored)
        cert = r.certify(G, n) if certify else None
    except _OutOfBudget:
        return Verdict.maybe(witness=f"node budget {budget} exhausted", explored=r.explored)
    return Verdict.yes(cert, explored=r.explored)


def _sphere_failure(r: Recognizer, G, n):
    if n < 0:
        return "negative dimension"
    if n == 0:
        return "not two isolated points"
    if len(G) < 2 * n + 2:
        return f"fewer than {2 * n + 2} points"
    if not is_connected(G):
        return "disconnected"
    for v, a in zip(G.vertices, G.adjacency):
        if not r.sphere(G.induced_mask(a), n - 1):
            return f"rim of {v!r} is not a {n - 1}-sphere"
    return "no sequence of simple-pair contractions reaches the minimal sphere"


def sphere(G: DigitalSpace, n: int, budget: int = DEFAULT_BUDGET) -> bool:
    """Boolean form of :func:`is_n_sphere`; raises on budget exhaustion."""
    v = is_n_sphere(G, n, budget, certify=False)
    if v.unknown:
        raise BudgetExceededError(v.witness)
    return bool(v)


def is_n_manifold(G: DigitalSpace, n: int, budget: int = DEFAULT_BUDGET,
                  cap: int = SPHERE_CAP) -> bool:
    """Connected, with every rim a digital (n-1)-sphere.

    Only rims are searched, so ``cap`` bounds the largest rim, not ``|G|``.
    """
    widest = max((a.bit_count() for a in G.adjacency), default=0)
    if widest > cap:
        raise CapExceededError("is_n_manifold", widest, cap)
    r = Recognizer(budget)
    try:
        return r.manifold(G, n)
    except _OutOfBudget:
        raise BudgetExceededError(f"node budget {budget} exhausted") from None


def verify_sphere_certificate(G: DigitalSpace, cert: SphereCertificate) -> None:
    """Re-check a sphere certificate against ``G``; raises :class:`ReplayError`."""
    n = cert.dimension
    if canonical_key(G) != cert.start_key:
        raise ReplayError(f"start key mismatch in dimension {n} certificate")
    if n == 0:
        if not is_zero_sphere(G):
            raise ReplayError("0-sphere certificate on a space that is not two isolated points")
        return
    if not is_connected(G):
        raise ReplayError("space is disconnected")
    if set(cert.rims) != set(G.vertices):
        raise ReplayError("rim witnesses do not cover the vertices")
    for v in G.vertices:
        sub = cert.rims[v]
        if sub.dimension != n - 1:
            raise ReplayError(f"rim witness of {v!r} has dimension {sub.dimension}")
        verify_sphere_certificate(rim(G, v), sub)
    H = G
    for i, pc in enumerate(cert.contractions):
        try:
            after = replay(H, pc.certificate)
        except ReplayError as e:
            raise ReplayError(f"contraction {i}: {e}") from None
        expect = contracted(H, pc.x, pc.y, pc.z)
        if after != expect:
            raise ReplayError(f"contraction {i} does not produce the contracted space")
        H = after
    if is_minimal_n_sphere(H) != n:
        raise ReplayError("contraction sequence does not end at the minimal sphere")


@dataclass(frozen=True)
class DiskDecomposition:
    """A disk (or manifold with spherical boundary) split into boundary and interior."""

    disk: DigitalSpace
    boundary: frozenset
    interior: frozenset

    def to_dict(self) -> dict:
        return {"vertices": list(self.disk.vertices), "boundary": sorted(self.boundary),
                "interior": sorted(self.interior)}


def disk_decomposition(M: DigitalSpace, v: str, n: int, verify: bool = True,
                       budget: int = DEFAULT_BUDGET) -> DiskDecomposition:
    """``M - v`` with boundary the rim of ``v``; ``M`` must be an n-sphere."""
    M.index(v)
    if verify and not sphere(M, n, budget):
        raise PreconditionError(f"host is not a {n}-sphere")
    D = M.without([v])
    boundary = frozenset(M.neighbors(v))
    return DiskDecomposition(D, boundary, frozenset(D.vertices) - boundary)


def cone(D: DigitalSpace, base) -> tuple[DigitalSpace, str]:
    """Attach a fresh apex adjacent exactly to ``base``."""
    apex = D.fresh_name("^apex")
    return D.with_vertex(apex, sorted(base)), apex


def is_n_disk(D: DigitalSpace, boundary, n: int, budget: int = DEFAULT_BUDGET) -> bool:
    """True iff coning ``boundary`` off with a fresh point yields an n-sphere."""
    boundary = frozenset(boundary)
    for b in boundary:
        D.index(b)
    K, _ = cone(D, boundary)
    return sphere(K, n, budget)


def manifold_with_boundary(M: DigitalSpace, v: str, n: int, verify: bool = True,
                           budget: int = DEFAULT_BUDGET) -> DiskDecomposition:
    """``M - v`` with spherical boundary ``O(v)`` and interior ``M - U(v)``."""
    M.index(v)
    if verify and not is_n_manifold(M, n, budget):
        raise PreconditionError(f"host is not a {n}-manifold")
    N = M.without([v])
    boundary = frozenset(M.neighbors(v))
    interior = frozenset(M.vertices) - frozenset(ball(M, v).vertices)
    return DiskDecomposition(N, boundary, interior)


def infer_dimension(G: DigitalSpace) -> int | None:
    """Guess n by descending through rims until two isolated points remain.

    Advisory only: it follows one rim per level and proves nothing.
    """
    depth = 0
    H = G
    while len(H) > 2 or H.n_edges:
        if len(H) == 0:
            return None
        H = H.induced_mask(H.adjacency[0])
        depth += 1
        if depth > len(G):
            return None
    return depth if is_zero_sphere(H) else None

