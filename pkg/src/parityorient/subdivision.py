"""The subdivision graph and the orientation <-> factor bijection.

Every edge ``i = (x, y)`` of ``G`` gets a new vertex with id ``n + i``. In
the subdivided graph, edge ``2i`` joins ``x`` to it and edge ``2i + 1``
joins ``y`` to it. An orientation is stored as the tuple of tail vertices,
one per edge.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .graph import Bounds, Graph, GraphError, check_bounds

Orientation = tuple[int, ...]


def out_degrees(graph: Graph, tails: Sequence[int]) -> list[int]:
    check_orientation(graph, tails)
    deg = [0] * graph.n
    for t in tails:
        deg[t] += 1
    return deg


def check_orientation(graph: Graph, tails: Sequence[int]) -> None:
    if len(tails) != graph.m:
        raise GraphError(f"orientation covers {len(tails)} of {graph.m} edges")
    for i, t in enumerate(tails):
        if t not in graph.edges[i]:
            raise GraphError(f"edge {i} {graph.edges[i]} cannot have tail {t}")


def reverse(graph: Graph, tails: Sequence[int]) -> Orientation:
    return tuple(graph.other(i, t) for i, t in enumerate(tails))


@dataclass(frozen=True)
class SubdivisionMap:
    original: Graph
    sub_graph: Graph

    @property
    def n_original(self) -> int:
        return self.original.n

    def y_vertex(self, edge: int) -> int:
        return self.original.n + edge

    def half_edges(self, edge: int) -> tuple[int, int]:
        return 2 * edge, 2 * edge + 1

    def is_y(self, v: int) -> bool:
        return v >= self.original.n

    @property
    def x_vertices(self) -> range:
        return range(self.original.n)

    @property
    def y_vertices(self) -> range:
        return range(self.original.n, self.sub_graph.n)


def subdivide(graph: Graph) -> SubdivisionMap:
    n = graph.n
    sub_edges = []
    for i, (x, y) in enumerate(graph.edges):
        sub_edges.append((x, n + i))
        sub_edges.append((y, n + i))
    return SubdivisionMap(graph, Graph(n + graph.m, tuple(sub_edges)))


def lift_bounds(sm: SubdivisionMap, bounds: Bounds) -> Bounds:
    """Copy the bounds onto the original vertices and pin every new vertex to (1, 1)."""
    check_bounds(sm.original, bounds)
    m = sm.original.m
    return Bounds(bounds.g + (1,) * m, bounds.f + (1,) * m)


def orientation_to_factor(sm: SubdivisionMap, tails: Sequence[int]) -> frozenset[int]:
    check_orientation(sm.original, tails)
    out = set()
    for i, t in enumerate(tails):
        first, second = sm.half_edges(i)
        out.add(first if sm.original.edges[i][0] == t else second)
    return frozenset(out)


def factor_to_orientation(sm: SubdivisionMap, factor: Iterable[int]) -> Orientation:
    """Invert :func:`orientation_to_factor`.

    The factor must pick exactly one half of every subdivided edge.
    """
    chosen = set(factor)
    for e in chosen:
        if not 0 <= e < sm.sub_graph.m:
            raise GraphError(f"factor edge {e} is not an edge of the subdivided graph")
    tails = []
    for i, (x, y) in enumerate(sm.original.edges):
        first, second = sm.half_edges(i)
        has_first, has_second = first in chosen, second in chosen
        if has_first == has_second:
            k = 2 if has_first else 0
            raise GraphError(
                f"subdivision vertex of edge {i} ({x}, {y}) has factor degree {k}, expected 1"
            )
        tails.append(x if has_first else y)
    return tuple(tails)
