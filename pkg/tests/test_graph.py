import pytest
from hypothesis import given
from hypothesis import strategies as st

from parityorient import (
    Bounds,
    Graph,
    GraphError,
    Infeasible,
    LoopError,
    ParseError,
    components_excluding,
    edge_count_between,
    edge_count_within,
    normalize_bounds,
    parse_graph,
    serialize_graph,
)

from .conftest import graphs, k3

K3_FILE = """\
# triangle, every vertex wants out-degree 1
3 3
0 1 1
1 1 1
2 1 1
0 1
1 2
2 0
"""


def test_parse_k3():
    graph, bounds = parse_graph(K3_FILE)
    assert (graph.n, graph.m) == (3, 3)
    assert graph.edges == ((0, 1), (1, 2), (2, 0))
    assert bounds == Bounds.uniform(3, 1)


def test_parse_parallel_edges():
    graph, _ = parse_graph("2 2\n0 0 2\n1 0 2\n0 1\n0 1\n")
    assert graph.edges == ((0, 1), (0, 1))
    assert graph.is_multigraph()
    assert graph.degrees() == [2, 2]


def test_parse_rejects_loop():
    with pytest.raises(LoopError):
        parse_graph("3 1\n0 0 0\n1 0 0\n2 0 0\n2 2\n")


@pytest.mark.parametrize(
    "text, lineno",
    [
        ("2 1\n0 0 0\n1 0\n0 1\n", 3),
        ("2 1\n0 0 0\n1 0 0\n0 x\n", 4),
        ("2 1\n0 0 0\n1 0 0\n", 3),
        ("2 0\n0 0 0\n1 0 0\n0 1\n", 4),
        ("1 0\n3 0 0\n", 2),
    ],
)
def test_parse_errors_carry_line_number(text, lineno):
    with pytest.raises(ParseError) as info:
        parse_graph(text)
    assert info.value.lineno == lineno
    assert f"line {lineno}" in str(info.value)


@pytest.mark.parametrize("pair", ["0 1 2", "0 3 1"])
def test_parse_rejects_bad_bounds(pair):
    with pytest.raises(GraphError):
        parse_graph(f"1 0\n{pair}\n")


def test_serialize_round_trip_normalizes_whitespace():
    messy = "  3   3 # header\n0 1   1\n 1 1 1\n2 1 1\n0  1\n1 2\n\n2 0\n"
    graph, bounds = parse_graph(messy)
    text = serialize_graph(graph, bounds)
    assert text == "3 3\n0 1 1\n1 1 1\n2 1 1\n0 1\n1 2\n2 0\n"
    assert parse_graph(text) == (graph, bounds)


def test_graph_rejects_loop_and_out_of_range():
    with pytest.raises(LoopError):
        Graph(2, ((1, 1),))
    with pytest.raises(GraphError):
        Graph(2, ((0, 2),))


def test_bounds_invariants():
    with pytest.raises(GraphError):
        Bounds((2,), (1,))
    with pytest.raises(GraphError):
        Bounds((0,), (1,))


@pytest.mark.parametrize(
    "degree, pair, expected",
    [(2, (1, 5), (1, 1)), (4, (-3, 1), (1, 1)), (3, (0, 6), (0, 2)), (0, (-2, 2), (0, 0))],
)
def test_normalize_bounds(degree, pair, expected):
    graph = Graph(degree + 1, tuple((0, i + 1) for i in range(degree)))
    bounds = Bounds((pair[0],) + (0,) * degree, (pair[1],) + (0,) * degree)
    assert normalize_bounds(graph, bounds).pair(0) == expected


def test_normalize_bounds_infeasible():
    graph = Graph(3, ((0, 1), (0, 2)))
    with pytest.raises(Infeasible) as info:
        normalize_bounds(graph, Bounds((3, 1, 1), (3, 1, 1)))
    assert info.value.vertex == 0


def test_edge_counts_on_triangle():
    g = k3()
    assert edge_count_within(g, {0, 1}) == 1
    assert edge_count_within(g, {0, 1, 2}) == 3
    assert edge_count_within(g, set()) == 0
    assert edge_count_between(g, {0}, {1}) == 1
    assert edge_count_between(g, {0}, set()) == 0
    assert edge_count_between(Graph(2, ((0, 1), (1, 0))), {0}, {1}) == 2


def test_edge_count_between_rejects_overlap():
    with pytest.raises(GraphError):
        edge_count_between(k3(), {0, 1}, {1})


def test_edge_count_rejects_bad_vertex():
    with pytest.raises(GraphError):
        edge_count_within(k3(), {5})


def test_components_examples():
    (c,) = components_excluding(k3(), {0})
    assert c.vertices == {1, 2} and c.inner_edges == 1 and c.to_s == 2
    path = Graph(3, ((0, 1), (1, 2)))
    comps = components_excluding(path, {1})
    assert [c.sorted_vertices() for c in comps] == [[0], [2]]
    assert components_excluding(k3(), set())[0].vertices == {0, 1, 2}


def test_components_split_counts():
    path = Graph(4, ((0, 1), (1, 2), (2, 3)))
    (c,) = components_excluding(path, {0}, {3})
    assert (c.inner_edges, c.to_s, c.to_t) == (1, 1, 1)


@given(graphs(max_n=8, max_m=14))
def test_handshake(graph):
    assert sum(graph.degrees()) == 2 * graph.m
    for v in range(graph.n):
        for e in graph.incidence[v]:
            assert v in graph.edges[e]


@given(graphs(max_n=7, max_m=12), st.data())
def test_cut_identities(graph, data):
    status = data.draw(st.lists(st.integers(0, 2), min_size=graph.n, max_size=graph.n))
    s = {v for v in range(graph.n) if status[v] == 1}
    t = {v for v in range(graph.n) if status[v] == 2}
    assert edge_count_within(graph, s | t) == (
        edge_count_within(graph, s) + edge_count_within(graph, t) + edge_count_between(graph, s, t)
    )
    assert edge_count_between(graph, s, t) == edge_count_between(graph, t, s)
    comps = components_excluding(graph, s, t)
    assert sum(len(c.vertices) for c in comps) + len(s | t) == graph.n
    seen = set()
    for c in comps:
        assert not (seen & c.vertices)
        seen |= c.vertices
        assert c.inner_edges == edge_count_within(graph, c.vertices)
        assert c.to_s == edge_count_between(graph, c.vertices, s)
        assert c.to_t == edge_count_between(graph, c.vertices, t)
    assert [min(c.vertices) for c in comps] == sorted(min(c.vertices) for c in comps)
