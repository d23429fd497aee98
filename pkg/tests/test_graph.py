import pytest
from hypothesis import given, settings

from jacoirr.graph import (
    DegreeTriple,
    Digraph,
    GraphError,
    build_bipartite_lr,
    build_cycle,
    build_path,
    build_wheel,
    degree_profile,
    directed_join,
    make_digraph,
    underlying_simple_graph,
)
from jacoirr.jaco import build_jaco

from .conftest import digraphs


def totals(g):
    return tuple(g.total_degrees())


class TestMakeDigraph:
    def test_single_arc(self):
        g = make_digraph(2, [(1, 2)])
        assert g.arcs == ((1, 2),)

    def test_singleton(self):
        g = make_digraph(1, [])
        assert g.n == 1 and g.arcs == ()

    @pytest.mark.parametrize(
        "n, arcs, message",
        [
            (3, [(1, 2), (1, 2)], "duplicate"),
            (3, [(2, 2)], "self-loop"),
            (3, [(1, 4)], "out of range"),
            (3, [(0, 1)], "out of range"),
        ],
    )
    def test_rejects_invalid_arcs(self, n, arcs, message):
        with pytest.raises(GraphError, match=message) as info:
            make_digraph(n, arcs)
        assert info.value.arc == arcs[-1]

    def test_rejects_empty_vertex_set(self):
        with pytest.raises(GraphError):
            make_digraph(0, [])

    def test_arc_order_is_canonical(self):
        assert make_digraph(3, [(2, 3), (1, 2)]) == make_digraph(3, [(1, 2), (2, 3)])


def test_degree_profile_of_path():
    triples, delta = degree_profile(build_path(3))
    assert triples == [DegreeTriple(0, 1, 1), DegreeTriple(1, 1, 2), DegreeTriple(1, 0, 1)]
    assert delta == 2


def test_degree_profile_of_jaco_5():
    _, delta = degree_profile(build_jaco(5))
    assert totals(build_jaco(5)) == (1, 2, 3, 2, 2)
    assert delta == 3


def test_degree_profile_of_singleton():
    assert degree_profile(make_digraph(1, [])) == ([DegreeTriple(0, 0, 0)], 0)


def test_degree_of_unknown_vertex():
    with pytest.raises(GraphError):
        build_path(3).degree(4)


class TestUnderlyingView:
    def test_opposite_arcs_merge(self):
        assert underlying_simple_graph(make_digraph(2, [(1, 2), (2, 1)])).edges == ((1, 2),)

    def test_jaco_3(self):
        assert underlying_simple_graph(build_jaco(3)).edges == ((1, 2), (2, 3))

    def test_singleton(self):
        assert underlying_simple_graph(make_digraph(1, [])).edges == ()


class TestGenerators:
    def test_path(self):
        assert build_path(2).arcs == ((1, 2),)
        assert build_path(4).arcs == ((1, 2), (2, 3), (3, 4))
        assert totals(build_path(4)) == (1, 2, 2, 1)

    def test_cycle(self):
        g = build_cycle(3)
        assert len(g.arcs) == 3 and totals(g) == (2, 2, 2)

    def test_wheel(self):
        assert totals(build_wheel(3)) == (3, 3, 3, 3)
        assert totals(build_wheel(6))[0] == 6

    def test_bipartite(self):
        g = build_bipartite_lr(3, 2)
        assert len(g.arcs) == 6
        assert totals(g) == (2, 2, 2, 3, 3)
        star = build_bipartite_lr(1, 5)
        assert star.degree(1).out_deg == 5
        assert build_bipartite_lr(5, 1).degree(6).in_deg == 5

    @pytest.mark.parametrize(
        "build, bad", [(build_path, 1), (build_cycle, 2), (build_wheel, 2)]
    )
    def test_too_small(self, build, bad):
        with pytest.raises(GraphError):
            build(bad)

    def test_bipartite_empty_side(self):
        with pytest.raises(GraphError):
            build_bipartite_lr(0, 3)

    def test_generators_are_degree_exact(self):
        for n in range(2, 51):
            assert totals(build_path(n)) == (1,) + (2,) * (n - 2) + (1,)
        for n in range(3, 51):
            assert set(totals(build_cycle(n))) == {2}
            w = totals(build_wheel(n))
            assert w[0] == n and set(w[1:]) == {3}
        for p in range(1, 51, 7):
            for q in range(1, 51, 5):
                t = totals(build_bipartite_lr(p, q))
                assert t[:p] == (q,) * p and t[p:] == (p,) * q


class TestJoin:
    def test_cycle_and_singleton(self):
        g = directed_join(build_cycle(4), make_digraph(1, []))
        assert g.n == 5 and len(g.arcs) == 8

    def test_two_singletons(self):
        k1 = make_digraph(1, [])
        assert directed_join(k1, k1).arcs == ((1, 2),)

    def test_two_paths(self):
        g = directed_join(build_path(2), build_path(2))
        assert g.n == 4 and len(g.arcs) == 6
        assert totals(g) == (3, 3, 3, 3)

    @settings(max_examples=100, deadline=None)
    @given(digraphs(max_n=12), digraphs(max_n=12))
    def test_degree_law(self, g, h):
        joined = directed_join(g, h)
        before = totals(g) + totals(h)
        shift = (h.n,) * g.n + (g.n,) * h.n
        assert totals(joined) == tuple(b + s for b, s in zip(before, shift))


@settings(max_examples=200, deadline=None)
@given(digraphs(max_n=15))
def test_handshake(g):
    assert sum(g.total_degrees()) == 2 * len(g.arcs)


@given(digraphs(max_n=8))
def test_construction_is_pure(g):
    again = Digraph(g.n, g.arcs)
    assert again == g and hash(again) == hash(g)
    assert degree_profile(again) == degree_profile(g)
