import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from parityorient import (
    Bounds,
    Graph,
    GraphError,
    SizeLimitError,
    brute_force_parity_factor,
    build_gadget,
    eta,
    find_parity_factor,
    find_parity_orientation,
    orientation_exists_brute,
    reverse,
    solve_parity_factor,
    verify_factor,
    verify_orientation,
)
from parityorient.factor import FEASIBLE, INFEASIBLE, UNCERTIFIED, degree_sum_check
from parityorient.matching import is_matching

from .conftest import cycle, instances, k2, k3, p3


def perfect_matchings(graph):
    k = graph.n // 2
    return [c for c in itertools.combinations(range(graph.m), k) if is_matching(graph, c) and 2 * k == graph.n]


def test_gadget_single_edge():
    gm = build_gadget(k2(), Bounds.uniform(2, 1))
    assert (gm.gadget_graph.n, gm.gadget_graph.m) == (4, 3)
    # hand enumeration: the partner edge leaves both cores unmatched
    (only,) = perfect_matchings(gm.gadget_graph)
    assert gm.partner_edges[0] not in only
    assert brute_force_parity_factor(k2(), Bounds.uniform(2, 1)) == {0}


def test_gadget_slack_pair():
    graph = Graph(3, ((0, 1), (0, 2)))
    gm = build_gadget(graph, Bounds((0, 0, 0), (2, 0, 0)))
    assert len(gm.core[0]) == 2
    assert len(gm.slack[0]) == 1


def test_gadget_zero_upper_bound_forces_partner_edges():
    graph = Graph(3, ((0, 1), (0, 2)))
    gm = build_gadget(graph, Bounds((0, 1, 1), (0, 1, 1)))
    assert gm.core[0] == () and gm.slack[0] == ()
    for pm in perfect_matchings(gm.gadget_graph):
        assert set(gm.partner_edges) <= set(pm)


def test_gadget_rejects_unnormalized():
    with pytest.raises(GraphError):
        build_gadget(k2(), Bounds((1, 1), (3, 1)))


@settings(max_examples=80)
@given(instances(max_n=6, max_m=8))
def test_gadget_structure(instance):
    graph, bounds = instance
    gm = build_gadget(graph, bounds)
    expected = 2 * graph.m + sum(bounds.f) + sum(f - g for g, f in zip(bounds.g, bounds.f))
    assert gm.gadget_graph.n == expected
    adj = {v: set(gm.gadget_graph.neighbors(v)) for v in range(gm.gadget_graph.n)}
    for v in range(graph.n):
        externals = {gm.external[(v, e)] for e in graph.incidence[v]}
        assert len(gm.core[v]) == bounds.f[v]
        assert len(gm.slack[v]) == (bounds.f[v] - bounds.g[v]) // 2
        for c in gm.core[v]:
            assert externals <= adj[c]
        for a, b in gm.slack[v]:
            assert b in adj[a]
            assert set(gm.core[v]) <= adj[a] and set(gm.core[v]) <= adj[b]


def test_find_parity_factor_examples():
    assert find_parity_factor(k2(), Bounds.uniform(2, 1)) == {0}
    assert find_parity_factor(k2(), Bounds((1, 0), (1, 0))) is None
    assert find_parity_factor(cycle(4), Bounds.uniform(4, 2)) == {0, 1, 2, 3}


def test_brute_force_factor_examples():
    assert brute_force_parity_factor(k2(), Bounds((1, 0), (1, 0))) is None
    factor = brute_force_parity_factor(k3(), Bounds((1, 1, 2), (1, 1, 2)))
    # edges (1, 2) and (2, 0) are the two that meet at vertex 2
    assert factor == {1, 2}


def test_brute_force_limit():
    with pytest.raises(SizeLimitError):
        brute_force_parity_factor(Graph(2, ((0, 1),) * 21), Bounds.uniform(2, 0, 20))


@given(instances(max_n=6, max_m=10, raw=True))
def test_gadget_matches_brute_force(instance):
    graph, bounds = instance
    factor = find_parity_factor(graph, bounds)
    assert (factor is None) == (brute_force_parity_factor(graph, bounds) is None)
    if factor is not None:
        assert verify_factor(graph, bounds, factor).ok


def test_orientation_k3():
    result = find_parity_orientation(k3(), Bounds.uniform(3, 1))
    assert result.status == FEASIBLE
    assert verify_orientation(k3(), Bounds.uniform(3, 1), result.orientation).ok
    # a directed 3-cycle: every vertex is a tail exactly once
    assert sorted(result.orientation) == [0, 1, 2]


def test_orientation_single_edge_zero():
    result = find_parity_orientation(k2(), Bounds.uniform(2, 0))
    assert result.status == INFEASIBLE
    cert = result.certificate
    assert cert.value == -1
    assert eta(k2(), Bounds.uniform(2, 0), {0, 1}, set())[0] == -1


def test_orientation_path_certificate():
    bounds = Bounds((1, 2, 1), (1, 2, 1))
    assert not degree_sum_check(p3(), bounds)
    result = find_parity_orientation(p3(), bounds)
    assert result.status == INFEASIBLE
    assert (result.certificate.s, result.certificate.t, result.certificate.value) == (set(), {1}, -2)
    assert [c.sorted_vertices() for c in result.certificate.odd_components] == [[0], [2]]


def test_uncertified_when_over_limit():
    graph = cycle(4)
    bounds = Bounds((2, 0, 2, 0), (2, 0, 2, 0))
    assert find_parity_orientation(graph, bounds).feasible
    # adjacent vertices 0 and 1 both need every incident edge outgoing
    bad = Bounds((2, 2, 0, 0), (2, 2, 0, 0))
    assert not find_parity_orientation(graph, bad).feasible
    assert find_parity_orientation(graph, bad, certificate_limit=2).status == UNCERTIFIED


def test_cheap_certificate_over_limit():
    bounds = Bounds((1, 2, 1), (1, 2, 1))
    result = find_parity_orientation(p3(), bounds, certificate_limit=1)
    assert result.status == INFEASIBLE
    assert result.certificate.value < 0
    assert result.certificate.recheck(p3(), bounds) == result.certificate.value


def test_isolated_vertex_odd_bounds():
    graph = Graph(3, ((0, 1),))
    bounds = Bounds((1, 0, -1), (1, 0, 1))
    result = find_parity_orientation(graph, bounds, certificate_limit=1)
    assert result.status == INFEASIBLE and result.certificate.value < 0
    exhaustive = find_parity_orientation(graph, bounds)
    assert exhaustive.certificate.value < 0


@given(instances(max_n=6, max_m=9, raw=True))
def test_pipeline_dichotomy(instance):
    graph, bounds = instance
    result = find_parity_orientation(graph, bounds)
    brute = orientation_exists_brute(graph, bounds)
    assert result.feasible == (brute is not None)
    if result.feasible:
        assert result.certificate is None
        assert verify_orientation(graph, bounds, result.orientation).ok
    else:
        assert result.orientation is None
        assert result.certificate.value < 0
        assert result.certificate.recheck(graph, bounds) == result.certificate.value


@given(instances(max_n=6, max_m=9))
def test_reversal_duality(instance):
    graph, bounds = instance
    d = graph.degrees()
    dual = Bounds(tuple(d[v] - bounds.f[v] for v in range(graph.n)), tuple(d[v] - bounds.g[v] for v in range(graph.n)))
    result = find_parity_orientation(graph, bounds)
    assert result.feasible == find_parity_orientation(graph, dual).feasible
    if result.feasible:
        assert verify_orientation(graph, dual, reverse(graph, result.orientation)).ok


@given(instances(max_n=6, max_m=9, raw=True), st.data())
def test_widening_keeps_feasibility(instance, data):
    graph, bounds = instance
    if not find_parity_orientation(graph, bounds).feasible:
        return
    wider = Bounds(
        tuple(g - 2 * data.draw(st.integers(0, 2)) for g in bounds.g),
        tuple(f + 2 * data.draw(st.integers(0, 2)) for f in bounds.f),
    )
    assert find_parity_orientation(graph, wider).feasible


@given(instances(max_n=6, max_m=9, raw=True))
def test_degree_sum_condition_is_necessary(instance):
    graph, bounds = instance
    if orientation_exists_brute(graph, bounds) is not None:
        assert degree_sum_check(graph, bounds)


def test_solve_parity_factor():
    ok = solve_parity_factor(p3(), Bounds((1, 2, 1), (1, 2, 1)))
    assert ok.feasible and ok.factor == {0, 1}
    bad = solve_parity_factor(k2(), Bounds((1, 0), (1, 0)))
    assert bad.status == INFEASIBLE
    assert (bad.certificate.s, bad.certificate.t, bad.certificate.value) == (set(), set(), -1)
