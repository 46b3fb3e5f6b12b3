import pytest

from digitopo import (
    DigitalSpace,
    MultiSplit,
    Separation,
    betti_gf2,
    equator_separation,
    is_contractible,
    is_n_disk,
    is_n_sphere,
    join,
    manifold_separation_check,
    random_sphere,
    separate,
    verify_sphere_separation,
)
from digitopo.errors import InconsistencyError, PreconditionError
from digitopo.generators import cycle, minimal_sphere, path
from digitopo.invariants import reduced
from digitopo.simply_connected import contractible_subspaces, enumerate_simple_closed_curves
from digitopo.space import rim


def s0_join_c5():
    return join(DigitalSpace(["p", "q"]), DigitalSpace("abcde", [("a", "b"), ("b", "c"), ("c", "d"),
                                                                  ("d", "e"), ("e", "a")]))


def test_separate_examples(octahedron):
    sep = separate(cycle(4), {"c0", "c2"})
    assert (sep.A, sep.B) == ({"c1"}, {"c3"})
    sep = separate(octahedron, {"x2", "y2", "x3", "y3"})
    assert (sep.A, sep.B) == ({"x1"}, {"y1"})
    assert separate(octahedron, {"x1", "x2", "x3"}) is None


def test_separate_multisplit_and_errors():
    star = DigitalSpace("oabc", [("o", "a"), ("o", "b"), ("o", "c")])
    ms = separate(star, {"o"})
    assert isinstance(ms, MultiSplit) and len(ms.parts) == 3
    with pytest.raises(PreconditionError):
        separate(star, set())
    with pytest.raises(PreconditionError):
        separate(star, set(star.vertices))
    with pytest.raises(PreconditionError):
        separate(DigitalSpace("ab"), {"a"})


def test_separation_check_rejects_bad_partitions():
    P = path(3)
    with pytest.raises(InconsistencyError):
        Separation(P, frozenset({"p0"}), frozenset(), frozenset({"p1", "p2"})).check()


def test_verify_sphere_separation_examples(octahedron):
    rep = verify_sphere_separation(octahedron, {"x2", "y2", "x3", "y3"}, 2)
    assert rep.ok
    S3 = minimal_sphere(3)
    rep = verify_sphere_separation(S3, set(S3.vertices) - {"x4", "y4"}, 3)
    assert rep.ok and rep.separation.A == {"x4"}
    M = s0_join_c5()
    rep = verify_sphere_separation(M, {"p", "a", "q", "c"}, 2)
    assert rep.ok
    assert sorted([len(rep.separation.A), len(rep.separation.B)]) == [1, 2]


def test_verify_sphere_separation_preconditions(octahedron, torus44):
    with pytest.raises(PreconditionError):
        verify_sphere_separation(torus44, rim(torus44, "t0_0").vertices, 2)
    with pytest.raises(PreconditionError):
        verify_sphere_separation(octahedron, {"x1", "x2", "x3"}, 2)


def test_equator_separation(sphere_corpus):
    big = [G for G in sphere_corpus if len(G) > 7]
    assert {8, 9} <= {len(G) for G in big}
    for G in big:
        sep = equator_separation(G)
        assert len(sep.A) > 1 and len(sep.B) > 1
        assert is_n_sphere(G.induced_mask(G.mask(sep.S)), 1)
        assert verify_sphere_separation(G, sep.S, 2).ok
    with pytest.raises(PreconditionError):
        equator_separation(s0_join_c5())


def test_manifold_separation_examples(sphere_corpus, torus44):
    for G in sphere_corpus[::3]:
        C = enumerate_simple_closed_curves(G)[0]
        assert manifold_separation_check(G, C, 2).ok
    essential = {"t0_0", "t1_0", "t2_0", "t3_0"}
    rep = manifold_separation_check(torus44, essential, 2)
    assert rep.separation is None and not rep.ok
    rep = manifold_separation_check(torus44, rim(torus44, "t1_1").vertices, 2, check_lsc=True)
    assert rep.checks["two_sides"] and {"t1_1"} in (rep.separation.A, rep.separation.B)
    assert rep.checks["locally_simply_connected"] is False


def test_sphere_iff_some_curve_splits_into_disks(sphere_corpus, torus44):
    for M in sphere_corpus[::2] + [torus44]:
        found = False
        for C in enumerate_simple_closed_curves(M):
            sep = separate(M, C)
            if isinstance(sep, Separation):
                sep.check()
                if (is_n_disk(M.induced_mask(M.mask(sep.A | C)), C, 2)
                        and is_n_disk(M.induced_mask(M.mask(sep.B | C)), C, 2)):
                    found = True
                    break
        assert found == bool(is_n_sphere(M, 2))


def test_complements_of_contractible_subspaces_share_homology(torus44):
    for M in [minimal_sphere(2), random_sphere(2, 2, 1)[0], torus44]:
        v = M.vertices[0]
        ref = reduced(betti_gf2(M.without([v])))
        limit = 3 if len(M) > 12 else None
        for B in contractible_subspaces(M, limit):
            if B != M.full_mask:
                assert reduced(betti_gf2(M.induced_mask(M.full_mask & ~B))) == ref


def test_torus_minus_point_not_contractible(torus44, sphere_corpus):
    assert not is_contractible(torus44.without(["t0_0"]))
    assert all(is_contractible(G.without([G.vertices[0]])) for G in sphere_corpus)
