import itertools

import networkx as nx
import pytest

from digitopo import (
    SearchLimits,
    contract_pair,
    enumerate_simple_closed_curves,
    find_spanning_disk,
    is_locally_simply_connected,
    is_n_disk,
    is_n_sphere,
    is_simply_connected,
    random_sphere,
    separate,
    simple_pairs,
)
from digitopo.errors import PreconditionError
from digitopo.generators import complete, cycle, minimal_sphere, wheel
from digitopo.simply_connected import is_simple_closed_curve

import oracles


def induced_cycles_oracle(G):
    g = oracles.to_nx(G)
    out = set()
    for r in range(4, len(G) + 1):
        for S in itertools.combinations(G.vertices, r):
            h = g.subgraph(S)
            if nx.is_connected(h) and all(d == 2 for _, d in h.degree()):
                out.add(frozenset(S))
    return out


def test_curve_examples(octahedron):
    assert enumerate_simple_closed_curves(cycle(4)) == [frozenset(cycle(4).vertices)]
    curves = enumerate_simple_closed_curves(octahedron)
    assert len(curves) == 3 and all(len(c) == 4 for c in curves)
    assert enumerate_simple_closed_curves(complete(4)) == []


def test_curves_match_oracle(sphere_corpus, torus44):
    for G in sphere_corpus[::3] + [wheel(6)]:
        got = enumerate_simple_closed_curves(G)
        assert set(got) == induced_cycles_oracle(G) and len(got) == len(set(got))
        assert [len(c) for c in got] == sorted(len(c) for c in got)
    assert all(is_simple_closed_curve(torus44, c) for c in enumerate_simple_closed_curves(torus44))


def test_curve_length_limit(torus44):
    short = enumerate_simple_closed_curves(torus44, SearchLimits(max_curve=4))
    assert short and all(len(c) == 4 for c in short)


def test_spanning_disk_examples(octahedron, torus44):
    eq = {"x2", "y2", "x3", "y3"}
    v = find_spanning_disk(octahedron, eq)
    assert v and set(v.certificate.disk.vertices) == eq | {"x1"}
    assert v.certificate.interior == {"x1"}
    S3 = minimal_sphere(3)
    C = {"x1", "x2", "y1", "y2"}
    v = find_spanning_disk(S3, C)
    assert v and len(v.certificate.interior) == 1
    assert is_n_disk(v.certificate.disk, C, 2)
    v = find_spanning_disk(torus44, {"t0_0", "t1_0", "t2_0", "t3_0"})
    assert v.status == "false" and v.witness["exhaustive"]
    with pytest.raises(PreconditionError):
        find_spanning_disk(octahedron, {"x1", "x2", "x3"})


def test_disk_search_budget_and_limits(torus44):
    C = {"t0_0", "t1_0", "t2_0", "t3_0"}
    v = find_spanning_disk(torus44, C, SearchLimits(budget=5))
    assert v.status == "unknown"
    v = find_spanning_disk(torus44, C, SearchLimits(max_disk=6))
    assert v.status == "false" and not v.witness["exhaustive"]
    with pytest.raises(ValueError):
        SearchLimits(max_disk=0)


def test_simply_connected_examples(octahedron, torus44):
    v = is_simply_connected(octahedron)
    assert v and len(v.certificate["disks"]) == 3
    v = is_simply_connected(torus44)
    assert v.status == "false" and v.witness["exhaustive"]
    assert oracles.cycle_is_essential(oracles.to_nx(torus44), v.witness["curve"])
    assert is_simply_connected(wheel(4))
    with pytest.raises(PreconditionError):
        is_simply_connected(cycle(4).without(["c0", "c2"]))


def test_lsc_examples(octahedron, torus44):
    assert is_locally_simply_connected(octahedron)
    v = is_locally_simply_connected(torus44)
    assert v.status == "false" and len(v.witness["removed"]) == 1
    v = is_locally_simply_connected(wheel(4))
    assert v.status == "false" and v.witness["removed"] == {"hub"}


def test_disks_in_certificates_are_disks(sphere_corpus):
    for G in sphere_corpus[::4]:
        v = is_simply_connected(G)
        for C, d in v.certificate["disks"]:
            assert d.boundary == C and is_n_disk(d.disk, C, 2)


def test_lsc_invariant_under_contraction(sphere_corpus, torus44):
    for M in sphere_corpus[5:14:2] + [torus44]:
        lsc = bool(is_locally_simply_connected(M))
        for x, y in simple_pairs(M)[:2]:
            N, _ = contract_pair(M, x, y)
            assert bool(is_locally_simply_connected(N)) == lsc


def test_lsc_implies_simply_connected_and_sphere(sphere_corpus, torus44):
    for M in sphere_corpus[::3] + [torus44, wheel(5)]:
        if is_locally_simply_connected(M):
            assert is_simply_connected(M)
            assert is_n_sphere(M, 2)


def test_sides_of_lsc_manifold_are_simply_connected(sphere_corpus):
    for M in sphere_corpus[6::4]:
        assert is_locally_simply_connected(M)
        for C in enumerate_simple_closed_curves(M)[:5]:
            sep = separate(M, C)
            for side in (sep.A, sep.B):
                assert is_simply_connected(M.induced_mask(M.mask(side | C)))


def test_three_manifolds_with_lsc_are_spheres():
    for M in [minimal_sphere(3), random_sphere(3, 2, 0)[0], random_sphere(3, 4, 1)[0]]:
        assert len(M) <= 12
        if is_locally_simply_connected(M):
            assert is_n_sphere(M, 3)


def test_two_spheres_are_lsc(sphere_corpus):
    for M in sphere_corpus[::2]:
        assert is_locally_simply_connected(M)


def test_three_sphere_that_is_not_lsc():
    # an induced 6-cycle in M - B bounds no induced 2-disk although M - B is acyclic
    M = random_sphere(3, 4, 1)[0]
    assert is_n_sphere(M, 3)
    v = is_locally_simply_connected(M)
    assert v.status == "false" and v.witness["exhaustive"]
    B, C = v.witness["removed"], v.witness["curve"]
    g = oracles.to_nx(M)
    assert oracles.sphere(g, 3) and oracles.contractible(g.subgraph(B))
    assert oracles.betti_gf2(g.subgraph(set(M.vertices) - B)) == (1, 0, 0, 0)
    free = sorted(set(M.vertices) - B - C)
    for r in range(len(free) + 1):
        for extra in itertools.combinations(free, r):
            D = g.subgraph(C | set(extra)).copy()
            D.add_edges_from(("apex", c) for c in C)
            assert not oracles.sphere(D, 2)
