import pytest
from hypothesis import given, strategies as st

from arcfix.graphs import (Graph, GraphParseError, find_hole, format_graph,
                           induced_odd_cycle, is_bipartite, is_hole,
                           iter_bits, parse_graph)
from _corpus import cyc, path, random_graph, union


def test_basic_accessors():
    g = Graph(4, [(0, 1), (1, 2), (0, 2)])
    assert g.n == 4
    assert g.edge_count() == 3
    assert g.has_edge(0, 1) and g.has_edge(1, 0)
    assert not g.has_edge(0, 3)
    assert g.degree(1) == 2
    assert sorted(g.neighbors(1)) == [0, 2]
    assert sorted(g.edges()) == [(0, 1), (0, 2), (1, 2)]
    assert sorted(g.non_edges()) == [(0, 3), (1, 3), (2, 3)]


def test_self_loop_rejected():
    with pytest.raises(ValueError):
        Graph(3, [(1, 1)])
    with pytest.raises(ValueError):
        Graph(3).with_edges([(2, 2)])


def test_with_without_edges():
    g = Graph(3, [(0, 1)])
    g2 = g.with_edges([(1, 2)])
    assert g2.has_edge(1, 2) and not g.has_edge(1, 2)
    g3 = g2.without_edges([(0, 1)])
    assert not g3.has_edge(0, 1) and g3.has_edge(1, 2)


def test_subgraph_and_delete():
    g = cyc(5)
    sub, ids = g.subgraph([1, 2, 4])
    assert sub.n == 3
    assert tuple(ids) == (1, 2, 4)
    assert sub.has_edge(0, 1)       # 1-2 survives
    assert not sub.has_edge(1, 2)   # 2-4 was not an edge
    rest, ids = g.delete_vertices([0])
    assert rest.n == 4 and tuple(ids) == (1, 2, 3, 4)
    assert rest.edge_count() == 3


def test_complement_involution():
    g = random_graph(__import__("random").Random(3), 7, 0.4)
    assert g.complement().complement() == g
    co = g.complement()
    for u in range(g.n):
        for v in range(u + 1, g.n):
            assert g.has_edge(u, v) != co.has_edge(u, v)


def test_components():
    g = union(cyc(3), path(2), Graph(1))
    masks = g.component_masks()
    assert len(masks) == 3
    assert sorted(m.bit_count() for m in masks) == [1, 2, 3]
    assert not g.is_connected()
    assert cyc(4).is_connected()
    assert Graph(0).is_connected()


def test_parse_format_round_trip():
    g = cyc(5, extra=2)
    text = format_graph(g, comment="five cycle\nplus two")
    assert text.startswith("# five cycle\n# plus two\n7 5\n")
    assert parse_graph(text) == g


@pytest.mark.parametrize("bad", [
    "", "3", "x y", "-1 0", "2 1\n0 5", "2 1\n0 x", "2 2\n0 1",
    "2 1\n0 0", "2 1\n0 1\n1 0",
])
def test_parse_errors(bad):
    with pytest.raises(GraphParseError):
        parse_graph(bad)


def test_iter_bits():
    assert list(iter_bits(0b101001)) == [0, 3, 5]
    assert list(iter_bits(0)) == []


def test_bipartite_sides():
    ok, sides = is_bipartite(cyc(6))
    assert ok
    s0, s1 = sides
    assert not s0 & s1 and s0 | s1 == set(range(6))
    assert all(not cyc(6).has_edge(u, v) for side in (s0, s1)
               for u in side for v in side if u < v)


def test_bipartite_odd_cycle_witness():
    g = cyc(7)
    ok, cycle = is_bipartite(g)
    assert not ok
    assert len(cycle) % 2 == 1
    assert is_hole(g, cycle) or len(cycle) == 3


def test_induced_odd_cycle_shrinks_chords():
    # 5-cycle with a chord: the walk 0..4 is odd but not induced
    g = cyc(5).with_edges([(0, 2)])
    cycle = induced_odd_cycle(g, [0, 1, 2, 3, 4])
    assert len(cycle) == 3
    a, b, c = cycle
    assert g.has_edge(a, b) and g.has_edge(b, c) and g.has_edge(a, c)


@pytest.mark.parametrize("l", [4, 5, 6, 9])
def test_find_hole_on_cycles(l):
    g = cyc(l)
    h = find_hole(g)
    assert h is not None and len(h) == l
    assert is_hole(g, h)


def test_find_hole_none_on_chordal():
    assert find_hole(path(6)) is None
    assert find_hole(Graph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])) is None
    # chorded 5-cycle is chordal
    assert find_hole(cyc(5).with_edges([(0, 2), (0, 3)])) is None


def test_find_hole_ignores_triangles():
    assert find_hole(cyc(3)) is None
    g = union(cyc(3), cyc(4))
    h = find_hole(g)
    assert h is not None and len(h) == 4


edgesets = st.builds(
    lambda n, picks: Graph(n, {(u % n, v % n) for u, v in picks if u % n != v % n}),
    st.integers(min_value=1, max_value=8),
    st.lists(st.tuples(st.integers(0, 7), st.integers(0, 7)), max_size=16),
)


@given(edgesets)
def test_round_trip_any(g):
    assert parse_graph(format_graph(g)) == g


@given(edgesets)
def test_hole_is_induced(g):
    h = find_hole(g)
    if h is not None:
        assert is_hole(g, h)
