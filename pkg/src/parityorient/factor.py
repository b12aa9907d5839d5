"""Parity factors via perfect matching, and the orientation solver built on them.

Gadget for a vertex ``v`` with normalized bounds ``(g, f)``:

* one *external* node per incident edge; the two externals of an edge are
  joined by a *partner* edge;
* ``f`` *core* nodes, each joined to every external of ``v``;
* ``(f - g) / 2`` *slack* pairs ``{a, b}``; ``a`` and ``b`` are joined to
  each other and to every core node of ``v``.

In a perfect matching the externals of ``v`` matched into the core are the
factor edges at ``v``. The remaining core nodes are covered by whole slack
pairs, so ``f - d_F(v)`` is even and at most ``f - g``. An edge belongs to
the factor exactly when its partner edge is unmatched.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from ._enumerate import scan_subsets
from .criteria import (
    CERTIFICATE_VERTEX_LIMIT,
    FACTOR,
    ORIENTATION,
    Certificate,
    find_factor_certificate,
    find_orientation_certificate,
    make_certificate,
)
from .graph import Bounds, Graph, GraphError, Infeasible, SizeLimitError, check_bounds, normalize_bounds
from .matching import has_perfect_matching
from .subdivision import Orientation, factor_to_orientation, lift_bounds, subdivide

BRUTE_FORCE_EDGE_LIMIT = 20

FEASIBLE = "feasible"
INFEASIBLE = "infeasible"
# infeasible, but the instance is too large for the exhaustive certificate search
UNCERTIFIED = "infeasible-uncertified"


@dataclass(frozen=True)
class GadgetMap:
    gadget_graph: Graph
    external: dict[tuple[int, int], int]
    core: tuple[tuple[int, ...], ...]
    slack: tuple[tuple[tuple[int, int], ...], ...]
    partner_edges: tuple[int, ...]


def build_gadget(graph: Graph, bounds: Bounds) -> GadgetMap:
    check_bounds(graph, bounds)
    for v in range(graph.n):
        g, f = bounds.pair(v)
        if not 0 <= g <= f <= graph.degree(v):
            raise GraphError(f"vertex {v}: bounds ({g}, {f}) are not normalized to [0, {graph.degree(v)}]")

    count = 0

    def fresh(k: int) -> list[int]:
        nonlocal count
        ids = list(range(count, count + k))
        count += k
        return ids

    external: dict[tuple[int, int], int] = {}
    core, slack = [], []
    for v in range(graph.n):
        for e in graph.incidence[v]:
            external[(v, e)] = fresh(1)[0]
        core.append(tuple(fresh(bounds.f[v])))
        pairs = (bounds.f[v] - bounds.g[v]) // 2
        nodes = fresh(2 * pairs)
        slack.append(tuple((nodes[2 * i], nodes[2 * i + 1]) for i in range(pairs)))

    edges = [(external[(u, e)], external[(w, e)]) for e, (u, w) in enumerate(graph.edges)]
    for v in range(graph.n):
        for e in graph.incidence[v]:
            edges.extend((c, external[(v, e)]) for c in core[v])
        for a, b in slack[v]:
            edges.append((a, b))
            edges.extend((a, c) for c in core[v])
            edges.extend((b, c) for c in core[v])

    return GadgetMap(
        Graph(count, tuple(edges)),
        external,
        tuple(core),
        tuple(slack),
        tuple(range(graph.m)),
    )


def decode_matching(gm: GadgetMap, matching: frozenset[int]) -> frozenset[int]:
    return frozenset(e for e, p in enumerate(gm.partner_edges) if p not in matching)


def find_parity_factor(graph: Graph, bounds: Bounds) -> Optional[frozenset[int]]:
    """Edge indices of a (g, f)-parity factor, or ``None`` if there is none."""
    try:
        nb = normalize_bounds(graph, bounds)
    except Infeasible:
        return None
    if sum(nb.f) % 2:
        return None
    gm = build_gadget(graph, nb)
    perfect, matching = has_perfect_matching(gm.gadget_graph)
    if not perfect:
        return None
    return decode_matching(gm, matching)


def brute_force_parity_factor(
    graph: Graph, bounds: Bounds, limit: int = BRUTE_FORCE_EDGE_LIMIT
) -> Optional[frozenset[int]]:
    """First parity factor in ascending edge-subset mask order, by exhaustion."""
    check_bounds(graph, bounds)
    if graph.m > limit:
        raise SizeLimitError(f"brute-force factor search limited to {limit} edges, got {graph.m}")
    mask = scan_subsets(graph, bounds)
    if mask is None:
        return None
    return frozenset(i for i in range(graph.m) if mask >> i & 1)


# -- top-level solvers ------------------------------------------------------


@dataclass(frozen=True)
class SolveResult:
    status: str
    orientation: Optional[Orientation] = None
    factor: Optional[frozenset[int]] = None
    certificate: Optional[Certificate] = None

    @property
    def feasible(self) -> bool:
        return self.status == FEASIBLE


def degree_sum_check(graph: Graph, bounds: Bounds) -> bool:
    """Necessary condition: ``g(V) <= m <= f(V)`` and ``m = g(V) (mod 2)``."""
    gv, fv, m = sum(bounds.g), sum(bounds.f), graph.m
    return gv <= m <= fv and (m - gv) % 2 == 0


def _cheap_orientation_pairs(graph: Graph, bounds: Bounds):
    n, m = graph.n, graph.m
    everything = frozenset(range(n))
    gv, fv = sum(bounds.g), sum(bounds.f)
    if gv > m:
        yield frozenset(), everything
    if fv < m:
        yield everything, frozenset()
    if (m - gv) % 2:
        yield frozenset(), frozenset()
    yield from _per_vertex_pairs(graph, bounds)


def _per_vertex_pairs(graph: Graph, bounds: Bounds):
    for v in range(graph.n):
        g, f = bounds.pair(v)
        if f < 0:
            yield frozenset({v}), frozenset()
        elif g > graph.degree(v):
            yield frozenset(), frozenset({v})
        elif graph.degree(v) == 0 and f % 2:
            yield frozenset(), frozenset()


def _cheap_certificate(graph: Graph, bounds: Bounds, pairs, kind: str) -> Optional[Certificate]:
    for s, t in pairs:
        cert = make_certificate(graph, bounds, s, t, kind)
        if cert.value < 0:
            return cert
    return None


def _infeasible(graph, bounds, kind, limit, cheap_pairs) -> SolveResult:
    if graph.n <= limit:
        search = find_orientation_certificate if kind == ORIENTATION else find_factor_certificate
        cert = search(graph, bounds, limit)
        if cert is None:
            raise AssertionError("solver reported infeasible but no violating pair exists")
        return SolveResult(INFEASIBLE, certificate=cert)
    cert = _cheap_certificate(graph, bounds, cheap_pairs, kind)
    if cert is not None:
        return SolveResult(INFEASIBLE, certificate=cert)
    return SolveResult(UNCERTIFIED)


def find_parity_orientation(
    graph: Graph, bounds: Bounds, certificate_limit: int = CERTIFICATE_VERTEX_LIMIT
) -> SolveResult:
    """Decide whether ``graph`` has a (g, f)-parity orientation.

    The search subdivides every edge, asks for a parity factor of the
    subdivided graph with every new vertex pinned to degree one, and reads
    the orientation back off the factor. On failure a violating pair
    ``(S, T)`` is returned when ``n <= certificate_limit``; larger instances
    get a certificate only if a cheap one exists.
    """
    check_bounds(graph, bounds)
    tails = None
    if degree_sum_check(graph, bounds):
        try:
            nb = normalize_bounds(graph, bounds)
        except Infeasible:
            nb = None
        if nb is not None:
            sm = subdivide(graph)
            factor = find_parity_factor(sm.sub_graph, lift_bounds(sm, nb))
            if factor is not None:
                tails = factor_to_orientation(sm, factor)
    if tails is not None:
        return SolveResult(FEASIBLE, orientation=tails)
    return _infeasible(
        graph, bounds, ORIENTATION, certificate_limit, _cheap_orientation_pairs(graph, bounds)
    )


def solve_parity_factor(
    graph: Graph, bounds: Bounds, certificate_limit: int = CERTIFICATE_VERTEX_LIMIT
) -> SolveResult:
    check_bounds(graph, bounds)
    factor = find_parity_factor(graph, bounds)
    if factor is not None:
        return SolveResult(FEASIBLE, factor=factor)
    cheap = [(frozenset(), frozenset()), *_per_vertex_pairs(graph, bounds)]
    return _infeasible(graph, bounds, FACTOR, certificate_limit, cheap)
