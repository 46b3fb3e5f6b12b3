"""Homotopy invariants of the clique complex: clique counts, Euler characteristic,
and Betti numbers over the two-element field.

Contractible transformations leave all three unchanged, which makes them an
audit independent of the search procedures.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import CapExceededError
from .space import DigitalSpace, bits

INVARIANT_CAP = 20


def _check(G, cap):
    if len(G) > cap:
        raise CapExceededError("clique enumeration", len(G), cap)


def cliques(G: DigitalSpace, cap: int = INVARIANT_CAP) -> list[list[int]]:
    """All complete subgraphs grouped by size: ``out[k]`` holds the (k+1)-cliques
    as ascending index tuples, in lexicographic order."""
    _check(G, cap)
    adj = G.adjacency
    out: list[list[tuple[int, ...]]] = []

    def extend(clique, cand):
        k = len(clique)
        if len(out) < k:
            out.append([])
        out[k - 1].append(tuple(clique))
        for v in bits(cand):
            extend(clique + [v], cand & adj[v] & ~((1 << (v + 1)) - 1))

    for v in range(len(G)):
        extend([v], adj[v] & ~((1 << (v + 1)) - 1))
    for level in out:
        level.sort()
    return out


def clique_vector(G: DigitalSpace, cap: int = INVARIANT_CAP) -> tuple[int, ...]:
    """``(c_1, c_2, ...)`` with ``c_k`` the number of k-vertex cliques."""
    return tuple(len(level) for level in cliques(G, cap))


def euler_characteristic(G: DigitalSpace, cap: int = INVARIANT_CAP) -> int:
    return sum((-1) ** k * c for k, c in enumerate(clique_vector(G, cap)))


def _rank_gf2(rows):
    """Rank of a GF(2) matrix whose rows are int bitmasks."""
    pivots = {}
    rank = 0
    for r in rows:
        while r:
            top = r.bit_length() - 1
            if top in pivots:
                r ^= pivots[top]
            else:
                pivots[top] = r
                rank += 1
                break
    return rank


def betti_gf2(G: DigitalSpace, cap: int = INVARIANT_CAP) -> tuple[int, ...]:
    """Betti numbers ``(b_0, ..., b_d)`` of the clique complex over GF(2).

    Trailing zeros above the top simplex dimension are not included; the
    empty space gives ``()``.
    """
    levels = cliques(G, cap)
    if not levels:
        return ()
    # boundary rank from dimension k to k-1, for k = 1..d
    ranks = [0]
    for k in range(1, len(levels)):
        index = {s: i for i, s in enumerate(levels[k - 1])}
        rows = []
        for s in levels[k]:
            r = 0
            for drop in range(len(s)):
                r |= 1 << index[s[:drop] + s[drop + 1:]]
            rows.append(r)
        ranks.append(_rank_gf2(rows))
    ranks.append(0)
    return tuple(len(levels[k]) - ranks[k] - ranks[k + 1] for k in range(len(levels)))


@dataclass(frozen=True)
class HomologyProfile:
    cliques: tuple[int, ...]
    euler: int
    betti: tuple[int, ...]

    def to_dict(self) -> dict:
        return {"cliques": list(self.cliques), "euler": self.euler, "betti": list(self.betti)}


def profile(G: DigitalSpace, cap: int = INVARIANT_CAP) -> HomologyProfile:
    cv = clique_vector(G, cap)
    euler = sum((-1) ** k * c for k, c in enumerate(cv))
    return HomologyProfile(cv, euler, betti_gf2(G, cap))


def reduced(betti: tuple[int, ...]) -> tuple[int, ...]:
    """Strip trailing zeros so profiles of different top dimension compare."""
    out = list(betti)
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)
