import pytest
from hypothesis import given, settings

from digitopo import betti_gf2, clique_vector, euler_characteristic, is_contractible, is_simple_edge, profile
from digitopo.errors import CapExceededError
from digitopo.generators import cycle, enumerate_connected_graphs, minimal_sphere
from digitopo.homotopy import simple_points
from digitopo.invariants import reduced

import oracles
from test_space import graphs


@pytest.fixture(scope="module")
def upto7():
    return list(enumerate_connected_graphs(7))


def test_clique_vectors(octahedron):
    assert clique_vector(cycle(4)) == (4, 4)
    assert clique_vector(octahedron) == (6, 12, 8)
    assert clique_vector(minimal_sphere(3)) == (8, 24, 32, 16)


def test_euler_examples(octahedron, torus44):
    assert euler_characteristic(octahedron) == 2
    assert euler_characteristic(minimal_sphere(3)) == 0
    assert euler_characteristic(torus44) == 0
    assert clique_vector(torus44) == (16, 48, 32)


def test_betti_examples(octahedron, torus44):
    assert betti_gf2(octahedron) == (1, 0, 1)
    assert betti_gf2(torus44) == (1, 2, 1)
    assert betti_gf2(minimal_sphere(3)) == (1, 0, 0, 1)
    assert betti_gf2(cycle(7)) == (1, 1)


def test_cap():
    with pytest.raises(CapExceededError):
        betti_gf2(cycle(30))


def test_contractible_graphs_are_acyclic(upto7):
    for G in upto7:
        if is_contractible(G):
            assert reduced(betti_gf2(G)) == (1,)


@settings(max_examples=120, deadline=None)
@given(graphs(9))
def test_matches_numpy_oracle(G):
    g = oracles.to_nx(G)
    assert betti_gf2(G) == oracles.betti_gf2(g)
    assert euler_characteristic(G) == oracles.euler(g)


def test_matches_oracle_on_manifolds(torus44, sphere_corpus):
    for G in [torus44, minimal_sphere(3)] + sphere_corpus[::5]:
        assert betti_gf2(G) == oracles.betti_gf2(oracles.to_nx(G))


def test_euler_poincare(upto7, torus44):
    for G in upto7[::7] + [torus44]:
        p = profile(G)
        assert p.euler == sum((-1) ** i * b for i, b in enumerate(p.betti))
        assert p.to_dict()["euler"] == p.euler


def test_elementary_steps_preserve_invariants(upto7):
    for G in upto7:
        ref = (euler_characteristic(G), reduced(betti_gf2(G)))
        for v in simple_points(G):
            H = G.without([v])
            assert (euler_characteristic(H), reduced(betti_gf2(H))) == ref
        for u, w in G.edges():
            if is_simple_edge(G, u, w):
                H = G.with_edge(u, w, present=False)
                assert (euler_characteristic(H), reduced(betti_gf2(H))) == ref
