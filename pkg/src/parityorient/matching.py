"""Maximum-cardinality matching in general graphs.

Edmonds' blossom algorithm with implicit blossom contraction through a
``base`` array: each phase grows an alternating tree from one free vertex by
BFS and either augments or proves that vertex can stay unmatched. A vertex
that fails to augment never becomes augmentable later, so one pass over the
free vertices in ascending id order suffices. Time O(n**3).
"""

from __future__ import annotations

from collections import deque

from .graph import Graph, SizeLimitError

BRUTE_FORCE_EDGE_LIMIT = 24


class _Blossom:
    def __init__(self, n: int, adj: list[list[int]]):
        self.n = n
        self.adj = adj
        self.mate = [-1] * n

    def _lca(self, a: int, b: int, base: list[int], parent: list[int]) -> int:
        mate = self.mate
        seen = [False] * self.n
        while True:
            a = base[a]
            seen[a] = True
            if mate[a] == -1:
                break
            a = parent[mate[a]]
        while True:
            b = base[b]
            if seen[b]:
                return b
            b = parent[mate[b]]

    def _mark_path(self, v, b, child, base, parent, in_blossom) -> None:
        mate = self.mate
        while base[v] != b:
            in_blossom[base[v]] = in_blossom[base[mate[v]]] = True
            parent[v] = child
            child = mate[v]
            v = parent[mate[v]]

    def _find_path(self, root: int) -> tuple[int, list[int]]:
        n, adj, mate = self.n, self.adj, self.mate
        used = [False] * n
        parent = [-1] * n
        base = list(range(n))
        used[root] = True
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for to in adj[v]:
                if base[v] == base[to] or mate[v] == to:
                    continue
                if to == root or (mate[to] != -1 and parent[mate[to]] != -1):
                    # odd cycle: contract the blossom onto its base
                    cur = self._lca(v, to, base, parent)
                    in_blossom = [False] * n
                    self._mark_path(v, cur, to, base, parent, in_blossom)
                    self._mark_path(to, cur, v, base, parent, in_blossom)
                    for i in range(n):
                        if in_blossom[base[i]]:
                            base[i] = cur
                            if not used[i]:
                                used[i] = True
                                queue.append(i)
                elif parent[to] == -1:
                    parent[to] = v
                    if mate[to] == -1:
                        return to, parent
                    used[mate[to]] = True
                    queue.append(mate[to])
        return -1, parent

    def run(self) -> list[int]:
        mate = self.mate
        for v in range(self.n):
            if mate[v] == -1:
                for w in self.adj[v]:
                    if mate[w] == -1:
                        mate[v], mate[w] = w, v
                        break
        for root in range(self.n):
            if mate[root] != -1:
                continue
            end, parent = self._find_path(root)
            while end != -1:
                prev = parent[end]
                nxt = mate[prev]
                mate[end], mate[prev] = prev, end
                end = nxt
        return mate


def _simple_adjacency(graph: Graph) -> list[list[int]]:
    # parallel edges collapse to one candidate
    adj: list[list[int]] = [[] for _ in range(graph.n)]
    for v in range(graph.n):
        seen = set()
        for w in graph.neighbors(v):
            if w not in seen:
                seen.add(w)
                adj[v].append(w)
    return adj


def _mates_to_edges(graph: Graph, mate: list[int]) -> frozenset[int]:
    chosen = set()
    for i, (u, w) in enumerate(graph.edges):
        if mate[u] == w and mate[w] == u:
            chosen.add(i)
            mate[u] = mate[w] = -2  # claim once; later parallels are skipped
    return frozenset(chosen)


def max_matching(graph: Graph) -> frozenset[int]:
    """Return the edge indices of a maximum-cardinality matching.

    Among parallel edges the lowest index is used.
    """
    mate = _Blossom(graph.n, _simple_adjacency(graph)).run()
    return _mates_to_edges(graph, mate)


def has_perfect_matching(graph: Graph) -> tuple[bool, frozenset[int] | None]:
    if graph.n % 2:
        return False, None
    matching = max_matching(graph)
    if 2 * len(matching) == graph.n:
        return True, matching
    return False, None


def is_matching(graph: Graph, edges) -> bool:
    used = set()
    for e in edges:
        u, w = graph.edges[e]
        if u in used or w in used:
            return False
        used.update((u, w))
    return True


def brute_force_max_matching(graph: Graph, limit: int = BRUTE_FORCE_EDGE_LIMIT) -> int:
    """Exact maximum matching size by exhaustive branching.

    Branches on the lowest unresolved vertex: leave it unmatched or match it
    to each free neighbour. Prunes when the remaining vertices cannot beat
    the best size found.
    """
    if graph.m > limit:
        raise SizeLimitError(f"brute-force matching limited to {limit} edges, got {graph.m}")
    adj = _simple_adjacency(graph)
    n = graph.n
    used = [False] * n
    best = 0

    def search(v: int, size: int, free_left: int) -> None:
        nonlocal best
        while v < n and used[v]:
            v += 1
        if v == n:
            best = max(best, size)
            return
        if size + free_left // 2 <= best:
            return
        used[v] = True
        for w in adj[v]:
            if not used[w]:
                used[w] = True
                search(v + 1, size + 1, free_left - 2)
                used[w] = False
        search(v + 1, size, free_left - 1)
        used[v] = False

    search(0, 0, n)
    return best
