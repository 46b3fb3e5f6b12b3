"""Simple closed curves, spanning disks, and (local) simple connectedness.

A simple closed curve is a digital 1-sphere.  In a finite graph that is
exactly an induced cycle of length at least 4: connected with every rim two
nonadjacent points forces every vertex to have degree 2 with no chords, and
a 3-cycle fails because its rims are edges.

A curve bounds a disk in ``M`` when some induced ``D`` containing it becomes a
2-sphere after coning the curve off with a fresh point.  Disk search runs
over candidate vertex sets by size, then lexicographically, so answers are
deterministic.  Negative answers are only given after the search covered
every candidate within the limits; running out of budget gives unknown.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import PreconditionError
from .homotopy import Contractor
from .recognizers import DiskDecomposition, Recognizer, _OutOfBudget
from .space import DigitalSpace, bits, is_connected
from .verdict import FALSE, TRUE, UNKNOWN, Verdict


@dataclass(frozen=True)
class SearchLimits:
    """Bounds for curve, disk and contractible-subspace searches.

    ``None`` means "no bound" (the size of the host).  ``budget`` counts
    candidate evaluations plus sphere-search nodes.
    """

    max_curve: int | None = None
    max_disk: int | None = None
    max_contractible: int | None = None
    budget: int = 20_000_000

    def __post_init__(self):
        for name in ("max_curve", "max_disk", "max_contractible"):
            v = getattr(self, name)
            if v is not None and v <= 0:
                raise ValueError(f"{name} must be positive")
        if self.budget <= 0:
            raise ValueError("budget must be positive")


class _Budget:
    def __init__(self, limit):
        self.limit = limit
        self.used = 0

    def tick(self, k=1):
        self.used += k
        if self.used > self.limit:
            raise _OutOfBudget


def _is_cycle_mask(adj, mask):
    n = mask.bit_count()
    if n < 4:
        return False
    for v in bits(mask):
        if (adj[v] & mask).bit_count() != 2:
            return False
    seen = mask & -mask
    frontier = seen
    while frontier:
        nxt = 0
        for v in bits(frontier):
            nxt |= adj[v]
        nxt &= mask & ~seen
        seen |= nxt
        frontier = nxt
    return seen == mask


def is_simple_closed_curve(M: DigitalSpace, C) -> bool:
    return _is_cycle_mask(M.adjacency, M.mask(C))


def _curves(adj, host, max_len, budget):
    """Induced cycles of length 4..max_len inside ``host``, as (length, vertices, mask)."""
    out = []
    for s in bits(host):
        above = host & ~((1 << (s + 1)) - 1)
        first = adj[s] & above

        def extend(path, pmask):
            budget.tick()
            last = path[-1]
            inner = pmask & ~(1 << last) & ~(1 << s)
            for w in bits(adj[last] & above & ~pmask):
                if adj[w] & inner:
                    continue
                if adj[w] >> s & 1:
                    if len(path) >= 3 and path[1] < w:
                        cyc = path + [w]
                        out.append((len(cyc), tuple(sorted(cyc)), pmask | 1 << w))
                    continue
                if len(path) + 1 < max_len:
                    extend(path + [w], pmask | 1 << w)

        for v1 in bits(first):
            extend([s, v1], 1 << s | 1 << v1)
    out.sort()
    return [m for _, _, m in out]


def enumerate_simple_closed_curves(M: DigitalSpace, limits: SearchLimits = SearchLimits()) -> list[frozenset]:
    """All induced cycles of length 4..max_curve, shortest first, then lexicographic."""
    budget = _Budget(limits.budget)
    max_len = limits.max_curve or len(M)
    try:
        masks = _curves(M.adjacency, M.full_mask, max_len, budget)
    except _OutOfBudget:
        raise PreconditionError("curve enumeration exceeded the node budget") from None
    return [M.names(m) for m in masks]


class DiskFinder:
    """Spanning-disk search inside induced subspaces of one host space."""

    def __init__(self, M: DigitalSpace, limits: SearchLimits, budget: _Budget | None = None):
        self.M = M
        self.limits = limits
        self.budget = budget or _Budget(limits.budget)
        self.rec = Recognizer(limits.budget)
        self.found: dict[int, list[int]] = {}
        self._cone_adj: dict[int, list[int]] = {}

    def _coned(self, curve):
        # adjacency of M plus an apex (index len(M)) adjacent exactly to the curve
        adj = self._cone_adj.get(curve)
        if adj is None:
            apex = len(self.M)
            adj = [a | (1 << apex if curve >> v & 1 else 0) for v, a in enumerate(self.M.adjacency)]
            adj.append(curve)
            self._cone_adj[curve] = adj
        return adj

    def _disk_ok(self, curve, disk):
        adj = self._coned(curve)
        kmask = disk | 1 << len(self.M)
        for v in bits(disk):
            if not _is_cycle_mask(adj, adj[v] & kmask):
                return False
        D = self.M.induced_mask(disk)
        K = D.with_vertex(D.fresh_name("^apex"), self.M.sorted_names(curve))
        return self.rec.sphere(K, 2)

    def search(self, curve: int, host: int):
        """Disk mask for ``curve`` inside ``host``, False if none within limits, None if unknown."""
        for d in self.found.get(curve, ()):
            if d & ~host == 0:
                return d
        free = [v for v in bits(host & ~curve)]
        max_extra = len(free)
        if self.limits.max_disk is not None:
            max_extra = min(max_extra, self.limits.max_disk - curve.bit_count())
        try:
            for k in range(1, max_extra + 1):
                for extra in itertools.combinations(free, k):
                    self.budget.tick()
                    disk = curve
                    for v in extra:
                        disk |= 1 << v
                    if self._disk_ok(curve, disk):
                        self.found.setdefault(curve, []).append(disk)
                        return disk
        except _OutOfBudget:
            return None
        return False

    def decomposition(self, curve: int, disk: int) -> DiskDecomposition:
        return DiskDecomposition(self.M.induced_mask(disk), self.M.names(curve),
                                 self.M.names(disk & ~curve))

    def exhaustive(self, curve: int, host: int) -> bool:
        free = (host & ~curve).bit_count()
        return self.limits.max_disk is None or self.limits.max_disk >= curve.bit_count() + free


def find_spanning_disk(M: DigitalSpace, C, limits: SearchLimits = SearchLimits()) -> Verdict:
    """Search for an induced 2-disk in ``M`` whose boundary is the curve ``C``."""
    curve = M.mask(C)
    if not _is_cycle_mask(M.adjacency, curve):
        raise PreconditionError("C does not induce a simple closed curve")
    f = DiskFinder(M, limits)
    d = f.search(curve, M.full_mask)
    if d is None:
        return Verdict.maybe(witness="budget exhausted", explored=f.budget.used)
    if d is False:
        return Verdict.no(witness={"exhaustive": f.exhaustive(curve, M.full_mask)},
                          explored=f.budget.used)
    return Verdict.yes(f.decomposition(curve, d), explored=f.budget.used)


def _simply_connected(f: DiskFinder, curves, host):
    """TRUE/FALSE/UNKNOWN plus disks found or the failing curve."""
    disks = []
    status = TRUE
    for c in curves:
        if c & ~host:
            continue
        d = f.search(c, host)
        if d is None:
            status = UNKNOWN
            continue
        if d is False:
            return FALSE, c
        disks.append((c, d))
    return status, disks


def is_simply_connected(M: DigitalSpace, limits: SearchLimits = SearchLimits()) -> Verdict:
    """Every simple closed curve of ``M`` bounds a disk in ``M``.

    True verdicts carry ``{"disks": [(curve, DiskDecomposition), ...]}``; false
    verdicts carry the first curve without a disk.
    """
    if len(M) == 0 or not is_connected(M):
        raise PreconditionError("simple connectedness is defined for connected spaces")
    f = DiskFinder(M, limits)
    try:
        curves = _curves(M.adjacency, M.full_mask, limits.max_curve or len(M), f.budget)
    except _OutOfBudget:
        return Verdict.maybe(witness="budget exhausted during curve enumeration",
                             explored=f.budget.used)
    status, info = _simply_connected(f, curves, M.full_mask)
    if status == FALSE:
        return Verdict.no(witness={"curve": M.names(info),
                                   "exhaustive": f.exhaustive(info, M.full_mask)},
                          explored=f.budget.used)
    if status == UNKNOWN:
        return Verdict.maybe(witness="budget exhausted during disk search", explored=f.budget.used)
    return Verdict.yes({"disks": [(M.names(c), f.decomposition(c, d)) for c, d in info]},
                       explored=f.budget.used)


def contractible_subspaces(M: DigitalSpace, max_size: int | None = None):
    """Masks of all nonempty contractible induced subspaces, by size then lexicographic."""
    c = Contractor(M)
    n = len(M)
    for k in range(1, (max_size or n) + 1):
        for combo in itertools.combinations(range(n), k):
            mask = 0
            for v in combo:
                mask |= 1 << v
            if c.contractible(mask):
                yield mask


def is_locally_simply_connected(M: DigitalSpace, limits: SearchLimits = SearchLimits()) -> Verdict:
    """``M - B`` is simply connected for every contractible subspace ``B``.

    A false verdict's witness is ``{"removed": B, "curve": C}``.
    """
    if len(M) == 0 or not is_connected(M):
        raise PreconditionError("local simple connectedness is defined for connected spaces")
    f = DiskFinder(M, limits)
    try:
        curves = _curves(M.adjacency, M.full_mask, limits.max_curve or len(M), f.budget)
    except _OutOfBudget:
        return Verdict.maybe(witness="budget exhausted during curve enumeration",
                             explored=f.budget.used)
    unknown = False
    checked = 0
    for B in contractible_subspaces(M, limits.max_contractible):
        host = M.full_mask & ~B
        checked += 1
        status, info = _simply_connected(f, curves, host)
        if status == FALSE:
            return Verdict.no(witness={"removed": M.names(B), "curve": M.names(info),
                                       "exhaustive": f.exhaustive(info, host)},
                              explored=f.budget.used)
        if status == UNKNOWN:
            unknown = True
    if unknown:
        return Verdict.maybe(witness="budget exhausted during disk search", explored=f.budget.used)
    return Verdict.yes({"contractible_subspaces_checked": checked}, explored=f.budget.used)
