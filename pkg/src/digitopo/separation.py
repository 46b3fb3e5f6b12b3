"""Separation of a space by a subspace, and the sphere-separation checks built on it."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .errors import InconsistencyError, PreconditionError
from .pairs import simple_pairs
from .recognizers import Recognizer, cone, is_n_disk, sphere
from .space import DigitalSpace, bits, is_connected


@dataclass(frozen=True)
class Separation:
    """``host = A | S | B`` with no edge between ``A`` and ``B``."""

    host: DigitalSpace
    A: frozenset
    S: frozenset
    B: frozenset

    def check(self) -> None:
        """Re-verify the partition and adjacency-disjointness; raises on violation."""
        V = frozenset(self.host.vertices)
        if self.A & self.S or self.A & self.B or self.S & self.B:
            raise InconsistencyError("separation parts overlap")
        if self.A | self.S | self.B != V:
            raise InconsistencyError("separation parts do not cover the host")
        if not self.A or not self.B:
            raise InconsistencyError("separation side is empty")
        adj = self.host.adjacency
        bmask = self.host.mask(self.B)
        for a in bits(self.host.mask(self.A)):
            if adj[a] & bmask:
                raise InconsistencyError("a point of A is adjacent to a point of B")

    def to_dict(self) -> dict:
        return {"A": sorted(self.A), "S": sorted(self.S), "B": sorted(self.B)}


@dataclass(frozen=True)
class MultiSplit:
    """Removing ``S`` left more than two components."""

    host: DigitalSpace
    S: frozenset
    parts: tuple[frozenset, ...]

    def to_dict(self) -> dict:
        return {"S": sorted(self.S), "parts": [sorted(p) for p in self.parts]}


def separate(M: DigitalSpace, S) -> Separation | MultiSplit | None:
    """Split ``M - S`` into its two components.

    Returns None when ``M - S`` is connected and a :class:`MultiSplit` when it
    has more than two components.  Sides are ordered by least vertex name.
    """
    smask = M.mask(S)
    if not smask or smask == M.full_mask:
        raise PreconditionError("S must be a nonempty proper subset")
    if not is_connected(M):
        raise PreconditionError("host space must be connected")
    comps = M.components_mask(M.full_mask & ~smask)
    if len(comps) == 1:
        return None
    parts = tuple(M.names(c) for c in comps)
    if len(comps) > 2:
        return MultiSplit(M, M.names(smask), parts)
    sep = Separation(M, parts[0], M.names(smask), parts[1])
    sep.check()
    return sep


@dataclass
class SeparationReport:
    separation: Separation | MultiSplit | None
    checks: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return isinstance(self.separation, Separation) and all(self.checks.values())

    def to_dict(self) -> dict:
        sep = self.separation
        return {"ok": self.ok,
                "separation": None if sep is None else sep.to_dict(),
                "kind": type(sep).__name__ if sep is not None else "connected",
                "checks": dict(self.checks)}


def verify_sphere_separation(M: DigitalSpace, S, n: int, verify: bool = True) -> SeparationReport:
    """Check that an (n-1)-sphere ``S`` in an n-sphere ``M`` separates it into two disks."""
    S = frozenset(S)
    if verify:
        if not sphere(M, n):
            raise PreconditionError(f"host is not a {n}-sphere")
        if not sphere(M.induced_mask(M.mask(S)), n - 1):
            raise PreconditionError(f"S is not a {n - 1}-sphere")
    sep = separate(M, S)
    report = SeparationReport(sep, {"two_sides": isinstance(sep, Separation)})
    if isinstance(sep, Separation):
        report.checks["A_with_S_is_disk"] = is_n_disk(M.induced_mask(M.mask(sep.A | S)), S, n)
        report.checks["B_with_S_is_disk"] = is_n_disk(M.induced_mask(M.mask(sep.B | S)), S, n)
    return report


def _two_sided(M, smask):
    comps = M.components_mask(M.full_mask & ~smask)
    if len(comps) != 2:
        return None
    a, b = comps
    if a.bit_count() > 1 and b.bit_count() > 1:
        return Separation(M, M.names(a), M.names(smask), M.names(b))
    return None


def equator_separation(M: DigitalSpace, verify: bool = True) -> Separation:
    """A separation of a 2-sphere with more than 7 points by a 1-sphere, both sides > 1 point.

    Take a simple pair ``{x, y}`` and its joint rim ``C``; if more than one point
    lies beyond ``C`` that is the separation.  If a single point ``z`` lies
    beyond, route a 4-cycle through ``z`` and one of ``x, y`` instead.
    """
    if len(M) <= 7:
        raise PreconditionError("equator_separation needs a 2-sphere with more than 7 points")
    if verify and not sphere(M, 2):
        raise PreconditionError("host is not a 2-sphere")
    adj = M.adjacency
    rec = Recognizer()
    pairs = simple_pairs(M)
    if not pairs:
        raise InconsistencyError("a 2-sphere with more than 7 points has no simple pair")
    for x, y in pairs:
        i, j = M.index(x), M.index(y)
        ball = adj[i] | adj[j] | 1 << i | 1 << j
        c = ball & ~(1 << i) & ~(1 << j)
        beyond = M.full_mask & ~ball
        if beyond.bit_count() > 1:
            sep = _two_sided(M, c)
            if sep is not None and rec.sphere(M.induced_mask(c), 1):
                sep.check()
                return sep
            continue
        (z,) = bits(beyond)
        for w in (i, j):
            for p, q in itertools.combinations(bits(adj[w] & adj[z]), 2):
                if adj[p] >> q & 1:
                    continue
                s = 1 << w | 1 << z | 1 << p | 1 << q
                sep = _two_sided(M, s)
                if sep is not None and rec.sphere(M.induced_mask(s), 1):
                    sep.check()
                    return sep
    # the constructions above cover every case the theory allows; fall back to a full scan
    from .simply_connected import SearchLimits, _Budget, _curves

    for s in _curves(adj, M.full_mask, len(M), _Budget(SearchLimits().budget)):
        sep = _two_sided(M, s)
        if sep is not None:
            sep.check()
            return sep
    raise InconsistencyError("no two-sided equator found in a 2-sphere")


def _manifold_with_spherical_boundary(M, side, S, n, rec):
    K, _ = cone(M.induced_mask(M.mask(side | S)), S)
    return rec.manifold(K, n)


def manifold_separation_check(M: DigitalSpace, S, n: int, check_lsc: bool = False,
                              verify: bool = True, limits=None) -> SeparationReport:
    """Separate an n-manifold by an (n-1)-sphere and test both closed-up sides.

    A side ``A | S`` counts as an n-manifold with spherical boundary ``S`` when
    coning ``S`` off with a fresh point gives an n-manifold.  With ``check_lsc``
    the local simple connectedness of ``M`` is decided and reported too.
    """
    S = frozenset(S)
    rec = Recognizer()
    if verify:
        if not rec.manifold(M, n):
            raise PreconditionError(f"host is not a {n}-manifold")
        if not rec.sphere(M.induced_mask(M.mask(S)), n - 1):
            raise PreconditionError(f"S is not a {n - 1}-sphere")
    sep = separate(M, S)
    report = SeparationReport(sep, {"two_sides": isinstance(sep, Separation)})
    if check_lsc:
        from .simply_connected import SearchLimits, is_locally_simply_connected

        report.checks["locally_simply_connected"] = bool(
            is_locally_simply_connected(M, limits or SearchLimits()))
    if isinstance(sep, Separation):
        report.checks["A_with_S_manifold"] = _manifold_with_spherical_boundary(M, sep.A, S, n, rec)
        report.checks["B_with_S_manifold"] = _manifold_with_spherical_boundary(M, sep.B, S, n, rec)
    return report
