"""Deficiency formulas, certificate search and witness verification.

For disjoint vertex sets ``S`` and ``T`` of a graph with bounds ``(g, f)``:

``eta(S, T) = f(S) - e(S) + sum_{v in T} d(v) - e(T) - g(T) - q``
    where ``q`` counts components ``C`` of ``G - S - T`` with
    ``f(C) + e(C) + e(S, C)`` odd. A parity orientation exists iff
    ``eta >= 0`` for every pair.

``delta(S, T) = f(S) - g(T) + sum_{v in T} d_{G-S}(v) - q``
    where ``q`` counts components with ``f(C) + e(C, T)`` odd. A parity
    factor exists iff ``delta >= 0`` for every pair.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, NamedTuple, Optional, Sequence

import numpy as np

from .graph import (
    Bounds,
    Component,
    Graph,
    GraphError,
    SizeLimitError,
    check_bounds,
    components_excluding,
    edge_count_between,
    edge_count_within,
)
from .subdivision import out_degrees

CERTIFICATE_VERTEX_LIMIT = 16

ORIENTATION = "orientation"
FACTOR = "factor"


@dataclass(frozen=True)
class CutPair:
    s: frozenset[int]
    t: frozenset[int]

    def __post_init__(self) -> None:
        object.__setattr__(self, "s", frozenset(self.s))
        object.__setattr__(self, "t", frozenset(self.t))
        if self.s & self.t:
            raise GraphError(f"S and T overlap on {sorted(self.s & self.t)}")

    def validate(self, graph: Graph) -> None:
        for v in self.s | self.t:
            if not 0 <= v < graph.n:
                raise GraphError(f"vertex {v} out of range for n={graph.n}")


@dataclass(frozen=True)
class Certificate:
    s: frozenset[int]
    t: frozenset[int]
    value: int
    kind: str
    odd_components: tuple[Component, ...] = field(default=())

    @property
    def pair(self) -> CutPair:
        return CutPair(self.s, self.t)

    def recheck(self, graph: Graph, bounds: Bounds) -> int:
        evaluate = eta if self.kind == ORIENTATION else delta
        return evaluate(graph, bounds, self.s, self.t)[0]


def eta(
    graph: Graph, bounds: Bounds, s: Iterable[int], t: Iterable[int]
) -> tuple[int, list[Component]]:
    pair = CutPair(frozenset(s), frozenset(t))
    pair.validate(graph)
    check_bounds(graph, bounds)
    s, t = pair.s, pair.t
    odd = [
        c
        for c in components_excluding(graph, s, t)
        if (bounds.f_sum(c.vertices) + c.inner_edges + c.to_s) % 2 == 1
    ]
    value = (
        bounds.f_sum(s)
        - edge_count_within(graph, s)
        + sum(graph.degree(v) for v in t)
        - edge_count_within(graph, t)
        - bounds.g_sum(t)
        - len(odd)
    )
    return value, odd


def delta(
    graph: Graph, bounds: Bounds, s: Iterable[int], t: Iterable[int]
) -> tuple[int, list[Component]]:
    pair = CutPair(frozenset(s), frozenset(t))
    pair.validate(graph)
    check_bounds(graph, bounds)
    s, t = pair.s, pair.t
    odd = [
        c
        for c in components_excluding(graph, s, t)
        if (bounds.f_sum(c.vertices) + c.to_t) % 2 == 1
    ]
    deg_outside_s = sum(graph.degree(v) for v in t) - edge_count_between(graph, s, t)
    value = bounds.f_sum(s) - bounds.g_sum(t) + deg_outside_s - len(odd)
    return value, odd


# -- exhaustive certificate search ------------------------------------------


class _Tables:
    """Per-subset sums indexed by vertex bitmask."""

    def __init__(self, graph: Graph, bounds: Bounds):
        n = graph.n
        masks = np.arange(1 << n, dtype=np.int64)
        bits = (masks[:, None] >> np.arange(n, dtype=np.int64)) & 1
        self.f = bits @ np.asarray(bounds.f, dtype=np.int64)
        self.g = bits @ np.asarray(bounds.g, dtype=np.int64)
        self.deg = bits @ np.asarray(graph.degrees(), dtype=np.int64)
        if graph.m:
            u = np.array([e[0] for e in graph.edges])
            w = np.array([e[1] for e in graph.edges])
            self.inner = (bits[:, u] & bits[:, w]).sum(axis=1)
        else:
            self.inner = np.zeros(1 << n, dtype=np.int64)
        self.adj = [0] * n
        for a, b in graph.edges:
            self.adj[a] |= 1 << b
            self.adj[b] |= 1 << a


def _component_masks(adj: list[int], alive: int) -> list[int]:
    comps = []
    while alive:
        low = alive & -alive
        comp = frontier = low
        while frontier:
            v = (frontier & -frontier).bit_length() - 1
            frontier &= frontier - 1
            new = adj[v] & alive & ~comp
            comp |= new
            frontier |= new
        comps.append(comp)
        alive &= ~comp
    return comps


def _submasks(r: int) -> np.ndarray:
    positions = [i for i in range(r.bit_length()) if r >> i & 1]
    k = len(positions)
    sel = (np.arange(1 << k, dtype=np.int64)[:, None] >> np.arange(k, dtype=np.int64)) & 1
    return sel @ (np.int64(1) << np.asarray(positions, dtype=np.int64)) if k else np.zeros(1, np.int64)


def _scan_values(tab: _Tables, n: int, r: int, kind: str) -> tuple[np.ndarray, np.ndarray]:
    """Values of the formula for every split ``S | T = r``; returns (S masks, values)."""
    full = (1 << n) - 1
    s = _submasks(r)
    t = r ^ s
    inner, f = tab.inner, tab.f
    e_s, e_t = inner[s], inner[t]
    if kind == ORIENTATION:
        value = tab.f[s] - e_s + tab.deg[t] - e_t - tab.g[t]
    else:
        e_st = inner[r] - e_s - e_t
        value = tab.f[s] - tab.g[t] + tab.deg[t] - e_st
    for c in _component_masks(tab.adj, full & ~r):
        e_c = inner[c]
        if kind == ORIENTATION:
            parity = f[c] + e_c + (inner[c | s] - e_c - e_s)
        else:
            parity = f[c] + (inner[c | t] - e_c - e_t)
        value = value - (parity & 1)
    return s, value


def _mask_list(mask: int) -> list[int]:
    return [i for i in range(mask.bit_length()) if mask >> i & 1]


def _min_pair(
    graph: Graph, bounds: Bounds, kind: str, limit: int
) -> tuple[int, frozenset[int], frozenset[int]]:
    check_bounds(graph, bounds)
    n = graph.n
    if n > limit:
        raise SizeLimitError(f"certificate search limited to {limit} vertices, got {n}")
    tab = _Tables(graph, bounds)
    best_key = None
    for r in range(1 << n):
        s_masks, values = _scan_values(tab, n, r, kind)
        low = int(values.min())
        size = bin(r).count("1")
        if best_key is not None and (low, size) > best_key[:2]:
            continue
        for idx in np.flatnonzero(values == low):
            sm = int(s_masks[idx])
            key = (low, size, _mask_list(sm), _mask_list(r ^ sm))
            if best_key is None or key < best_key:
                best_key = key
    assert best_key is not None
    value, _, s, t = best_key
    return value, frozenset(s), frozenset(t)


def min_eta(graph: Graph, bounds: Bounds, limit: int = CERTIFICATE_VERTEX_LIMIT):
    """Minimum of eta over all disjoint pairs, as ``(value, S, T)``.

    Ties break on smaller ``|S | T|``, then on the sorted ``S`` list, then
    on the sorted ``T`` list.
    """
    return _min_pair(graph, bounds, ORIENTATION, limit)


def min_delta(graph: Graph, bounds: Bounds, limit: int = CERTIFICATE_VERTEX_LIMIT):
    return _min_pair(graph, bounds, FACTOR, limit)


def make_certificate(graph: Graph, bounds: Bounds, s, t, kind: str) -> Certificate:
    evaluate = eta if kind == ORIENTATION else delta
    value, odd = evaluate(graph, bounds, s, t)
    return Certificate(frozenset(s), frozenset(t), value, kind, tuple(odd))


def find_orientation_certificate(
    graph: Graph, bounds: Bounds, limit: int = CERTIFICATE_VERTEX_LIMIT
) -> Optional[Certificate]:
    value, s, t = min_eta(graph, bounds, limit)
    if value >= 0:
        return None
    return make_certificate(graph, bounds, s, t, ORIENTATION)


def find_factor_certificate(
    graph: Graph, bounds: Bounds, limit: int = CERTIFICATE_VERTEX_LIMIT
) -> Optional[Certificate]:
    value, s, t = min_delta(graph, bounds, limit)
    if value >= 0:
        return None
    return make_certificate(graph, bounds, s, t, FACTOR)


# -- witness verification ---------------------------------------------------


class Violation(NamedTuple):
    vertex: int
    degree: int
    g: int
    f: int


class Verification(NamedTuple):
    ok: bool
    violations: list[Violation]


def _check_degrees(bounds: Bounds, degrees: Sequence[int]) -> Verification:
    bad = [
        Violation(v, k, bounds.g[v], bounds.f[v])
        for v, k in enumerate(degrees)
        if not bounds.admits(v, k)
    ]
    return Verification(not bad, bad)


def verify_orientation(graph: Graph, bounds: Bounds, tails: Sequence[int]) -> Verification:
    check_bounds(graph, bounds)
    return _check_degrees(bounds, out_degrees(graph, tails))


def verify_factor(graph: Graph, bounds: Bounds, factor: Iterable[int]) -> Verification:
    check_bounds(graph, bounds)
    deg = [0] * graph.n
    for e in set(factor):
        if not 0 <= e < graph.m:
            raise GraphError(f"factor edge {e} out of range for m={graph.m}")
        u, w = graph.edges[e]
        deg[u] += 1
        deg[w] += 1
    return _check_degrees(bounds, deg)


def frank_gyarfas_feasible(
    graph: Graph,
    lower: Sequence[int],
    upper: Sequence[int],
    limit: int = CERTIFICATE_VERTEX_LIMIT,
) -> tuple[bool, Optional[frozenset[int]]]:
    """Check the interval condition for out-degrees in ``[lower(v), upper(v)]``.

    Tests ``lower(U) - d(U) <= e(G[U]) <= upper(U)`` for every vertex set
    ``U``, where ``d(U)`` counts edges leaving ``U``. Returns
    ``(True, None)`` or ``(False, U)`` for the first violating ``U`` in
    order of size, then lexicographically.
    """
    n = graph.n
    if len(lower) != n or len(upper) != n:
        raise GraphError("interval bounds must cover every vertex")
    if any(a > b for a, b in zip(lower, upper)):
        raise GraphError("lower bound exceeds upper bound")
    if n > limit:
        raise SizeLimitError(f"interval check limited to {limit} vertices, got {n}")
    for size in range(n + 1):
        for combo in combinations(range(n), size):
            u = frozenset(combo)
            inside = edge_count_within(graph, u)
            leaving = edge_count_between(graph, u, frozenset(range(n)) - u)
            if sum(lower[v] for v in u) - leaving > inside or inside > sum(upper[v] for v in u):
                return False, u
    return True, None
