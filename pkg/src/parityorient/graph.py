"""Undirected multigraphs, per-vertex parity bounds and cut primitives.

Vertices are dense integer ids ``0 .. n-1``. Edges are kept in input order
and addressed by index; parallel edges are allowed, loops are not.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Optional, TextIO, Union


class GraphError(ValueError):
    """Invalid graph or bounds data."""


class ParseError(GraphError):
    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


class LoopError(GraphError):
    pass


class SizeLimitError(ValueError):
    """An exhaustive routine was asked to run on a too-large instance."""


@dataclass(frozen=True)
class Graph:
    n: int
    edges: tuple[tuple[int, int], ...]
    incidence: tuple[tuple[int, ...], ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if self.n < 0:
            raise GraphError("vertex count must be nonnegative")
        edges = tuple((int(u), int(w)) for u, w in self.edges)
        inc: list[list[int]] = [[] for _ in range(self.n)]
        for i, (u, w) in enumerate(edges):
            if not (0 <= u < self.n and 0 <= w < self.n):
                raise GraphError(f"edge {i} ({u}, {w}) has an endpoint out of range")
            if u == w:
                raise LoopError(f"edge {i} is a loop at vertex {u}")
            inc[u].append(i)
            inc[w].append(i)
        object.__setattr__(self, "edges", edges)
        object.__setattr__(self, "incidence", tuple(tuple(x) for x in inc))

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.incidence[v])

    def degrees(self) -> list[int]:
        return [len(x) for x in self.incidence]

    def other(self, e: int, v: int) -> int:
        u, w = self.edges[e]
        return w if u == v else u

    def neighbors(self, v: int) -> list[int]:
        return [self.other(e, v) for e in self.incidence[v]]

    def isolated_vertices(self) -> list[int]:
        return [v for v in range(self.n) if not self.incidence[v]]

    def is_multigraph(self) -> bool:
        seen = set()
        for u, w in self.edges:
            key = (min(u, w), max(u, w))
            if key in seen:
                return True
            seen.add(key)
        return False


@dataclass(frozen=True)
class Bounds:
    """Per-vertex parity intervals ``H(v) = {g, g+2, ..., f}``."""

    g: tuple[int, ...]
    f: tuple[int, ...]

    def __post_init__(self) -> None:
        g = tuple(int(x) for x in self.g)
        f = tuple(int(x) for x in self.f)
        if len(g) != len(f):
            raise GraphError("lower and upper bounds differ in length")
        for v, (lo, hi) in enumerate(zip(g, f)):
            if lo > hi:
                raise GraphError(f"vertex {v}: g={lo} exceeds f={hi}")
            if (hi - lo) % 2:
                raise GraphError(f"vertex {v}: g={lo} and f={hi} differ in parity")
        object.__setattr__(self, "g", g)
        object.__setattr__(self, "f", f)

    @classmethod
    def uniform(cls, n: int, g: int, f: Optional[int] = None) -> Bounds:
        return cls((g,) * n, ((g if f is None else f),) * n)

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple[int, int]]) -> Bounds:
        pairs = list(pairs)
        return cls(tuple(p[0] for p in pairs), tuple(p[1] for p in pairs))

    def __len__(self) -> int:
        return len(self.g)

    def pair(self, v: int) -> tuple[int, int]:
        return self.g[v], self.f[v]

    def admits(self, v: int, k: int) -> bool:
        """Whether ``k`` lies in ``H(v)``."""
        return self.g[v] <= k <= self.f[v] and (self.f[v] - k) % 2 == 0

    def f_sum(self, vs: Iterable[int]) -> int:
        return sum(self.f[v] for v in vs)

    def g_sum(self, vs: Iterable[int]) -> int:
        return sum(self.g[v] for v in vs)


@dataclass(frozen=True)
class Component:
    """A connected component of ``G - (S | T)``.

    ``to_s`` and ``to_t`` count edges (with multiplicity) from the component
    to ``S`` and to ``T`` respectively.
    """

    vertices: frozenset[int]
    inner_edges: int
    to_s: int
    to_t: int

    @property
    def boundary(self) -> int:
        return self.to_s + self.to_t

    def sorted_vertices(self) -> list[int]:
        return sorted(self.vertices)


class Infeasible(Exception):
    """Raised by :func:`normalize_bounds` when some ``H(v)`` becomes empty."""

    def __init__(self, vertex: int):
        super().__init__(f"vertex {vertex} admits no out-degree in [0, d(v)]")
        self.vertex = vertex


def check_bounds(graph: Graph, bounds: Bounds) -> None:
    if len(bounds) != graph.n:
        raise GraphError(f"bounds cover {len(bounds)} vertices, graph has {graph.n}")


def normalize_bounds(graph: Graph, bounds: Bounds) -> Bounds:
    """Intersect every ``H(v)`` with ``[0, d(v)]``, keeping the parity of ``f(v)``.

    Raises :class:`Infeasible` naming the first vertex whose intersection
    is empty.
    """
    check_bounds(graph, bounds)
    g_out, f_out = [], []
    for v in range(graph.n):
        g, f = bounds.pair(v)
        d = graph.degree(v)
        parity = f % 2
        lo = max(g, parity)
        hi = min(f, d if d % 2 == parity else d - 1)
        if lo > hi:
            raise Infeasible(v)
        g_out.append(lo)
        f_out.append(hi)
    return Bounds(tuple(g_out), tuple(f_out))


def _as_set(graph: Graph, vs: Iterable[int]) -> frozenset[int]:
    s = frozenset(int(v) for v in vs)
    for v in s:
        if not 0 <= v < graph.n:
            raise GraphError(f"vertex {v} out of range for n={graph.n}")
    return s


def edge_count_within(graph: Graph, s: Iterable[int]) -> int:
    s = _as_set(graph, s)
    return sum(1 for u, w in graph.edges if u in s and w in s)


def edge_count_between(graph: Graph, a: Iterable[int], b: Iterable[int]) -> int:
    a, b = _as_set(graph, a), _as_set(graph, b)
    if a & b:
        raise GraphError(f"vertex sets overlap on {sorted(a & b)}")
    return sum(1 for u, w in graph.edges if (u in a and w in b) or (u in b and w in a))


def components_excluding(
    graph: Graph, s: Iterable[int], t: Iterable[int] = ()
) -> list[Component]:
    """Components of ``G - (s | t)`` ordered by smallest vertex id.

    With a single removed set, pass it as ``s``; its edge counts then land
    in ``Component.to_s``.
    """
    s, t = _as_set(graph, s), _as_set(graph, t)
    if s & t:
        raise GraphError(f"vertex sets overlap on {sorted(s & t)}")
    removed = s | t
    label = [-1] * graph.n
    members: list[list[int]] = []
    for root in range(graph.n):
        if root in removed or label[root] >= 0:
            continue
        cid = len(members)
        label[root] = cid
        stack, comp = [root], [root]
        while stack:
            v = stack.pop()
            for e in graph.incidence[v]:
                w = graph.other(e, v)
                if w not in removed and label[w] < 0:
                    label[w] = cid
                    stack.append(w)
                    comp.append(w)
        members.append(comp)

    inner = [0] * len(members)
    to_s = [0] * len(members)
    to_t = [0] * len(members)
    for u, w in graph.edges:
        lu, lw = label[u], label[w]
        if lu >= 0 and lw >= 0:
            inner[lu] += 1
        elif lu >= 0 or lw >= 0:
            c, other = (lu, w) if lu >= 0 else (lw, u)
            if other in s:
                to_s[c] += 1
            else:
                to_t[c] += 1
    return [
        Component(frozenset(vs), inner[i], to_s[i], to_t[i]) for i, vs in enumerate(members)
    ]


# -- file format -----------------------------------------------------------


def _content_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line


def _ints(lineno: int, line: str, count: int) -> list[int]:
    parts = line.split()
    if len(parts) != count:
        raise ParseError(lineno, f"expected {count} integers, got {len(parts)} fields")
    try:
        return [int(p) for p in parts]
    except ValueError:
        raise ParseError(lineno, f"non-integer field in {line!r}") from None


def parse_graph(source: Union[str, TextIO]) -> tuple[Graph, Bounds]:
    """Read a graph file: ``n m``, then ``n`` lines ``v g f``, then ``m`` lines ``u w``.

    ``#`` starts a comment. Repeated edge lines give parallel edges.
    """
    text = source if isinstance(source, str) else source.read()
    lines = list(_content_lines(text))
    if not lines:
        raise ParseError(1, "empty graph file")
    lineno, header = lines[0]
    n, m = _ints(lineno, header, 2)
    if n < 0 or m < 0:
        raise ParseError(lineno, "negative vertex or edge count")
    expected = 1 + n + m
    if len(lines) > expected:
        raise ParseError(lines[expected][0], f"unexpected line beyond the declared {n} vertices and {m} edges")
    if len(lines) < expected:
        raise ParseError(lines[-1][0], f"file ends early: expected {n} vertex lines and {m} edge lines")

    g: list[Optional[int]] = [None] * n
    f: list[Optional[int]] = [None] * n
    for lineno, line in lines[1 : 1 + n]:
        v, lo, hi = _ints(lineno, line, 3)
        if not 0 <= v < n:
            raise ParseError(lineno, f"vertex id {v} out of range")
        if g[v] is not None:
            raise ParseError(lineno, f"vertex {v} listed twice")
        if lo > hi or (hi - lo) % 2:
            raise GraphError(f"line {lineno}: vertex {v} bounds ({lo}, {hi}) violate g <= f or parity")
        g[v], f[v] = lo, hi

    edges = []
    for lineno, line in lines[1 + n :]:
        u, w = _ints(lineno, line, 2)
        if u == w:
            raise LoopError(f"line {lineno}: loop edge at vertex {u}")
        if not (0 <= u < n and 0 <= w < n):
            raise ParseError(lineno, f"edge ({u}, {w}) has an endpoint out of range")
        edges.append((u, w))
    return Graph(n, tuple(edges)), Bounds(tuple(g), tuple(f))  # type: ignore[arg-type]


def serialize_graph(graph: Graph, bounds: Bounds, comments: Iterable[str] = ()) -> str:
    check_bounds(graph, bounds)
    out = [f"# {c}" if c else "#" for c in comments]
    out.append(f"{graph.n} {graph.m}")
    out.extend(f"{v} {bounds.g[v]} {bounds.f[v]}" for v in range(graph.n))
    out.extend(f"{u} {w}" for u, w in graph.edges)
    return "\n".join(out) + "\n"
