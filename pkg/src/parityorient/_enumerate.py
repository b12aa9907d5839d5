"""Vectorised exhaustive enumeration over edge subsets.

Row ``k`` of every block corresponds to the edge subset whose bitmask is
``k`` (bit ``i`` set means edge ``i`` is selected), so scanning blocks in
order visits subsets in ascending mask order.
"""

from __future__ import annotations

from typing import Iterator

import numpy as np

from .graph import Bounds, Graph

_BLOCK_BITS = 14


def _blocks(m: int) -> Iterator[tuple[int, np.ndarray]]:
    low = min(m, _BLOCK_BITS)
    rows = np.arange(1 << low, dtype=np.int64)
    low_bits = ((rows[:, None] >> np.arange(low)) & 1).astype(np.int16)
    for high in range(1 << (m - low)):
        high_bits = np.broadcast_to(
            ((high >> np.arange(m - low)) & 1).astype(np.int16), (len(rows), m - low)
        )
        yield high << low, np.hstack([low_bits, high_bits])


def _admissible(bounds: Bounds, degrees: np.ndarray) -> np.ndarray:
    g = np.asarray(bounds.g)
    f = np.asarray(bounds.f)
    ok = (degrees >= g) & (degrees <= f) & ((f - degrees) % 2 == 0)
    return ok.all(axis=1)


def _incidence(graph: Graph, side: int) -> np.ndarray:
    inc = np.zeros((graph.m, graph.n), dtype=np.int16)
    for i, e in enumerate(graph.edges):
        inc[i, e[side]] = 1
    return inc


def scan_subsets(graph: Graph, bounds: Bounds, count: bool = False):
    """First admissible edge subset as a mask (or the number of them with ``count``)."""
    inc = _incidence(graph, 0) + _incidence(graph, 1)
    total = 0
    for offset, bits in _blocks(graph.m):
        ok = _admissible(bounds, bits @ inc)
        if count:
            total += int(ok.sum())
        elif ok.any():
            return offset + int(np.argmax(ok))
    return total if count else None


def scan_orientations(graph: Graph, bounds: Bounds, count: bool = False):
    """First admissible orientation as a mask (bit ``i`` set: edge ``i`` leaves its second endpoint)."""
    first, second = _incidence(graph, 0), _incidence(graph, 1)
    base = first.sum(axis=0)
    swap = second - first
    total = 0
    for offset, bits in _blocks(graph.m):
        ok = _admissible(bounds, base + bits @ swap)
        if count:
            total += int(ok.sum())
        elif ok.any():
            return offset + int(np.argmax(ok))
    return total if count else None
