"""Classical connectivity invariants computed exactly.

Vertex connectivity uses Menger duality via unit-capacity max-flow on a
split-vertex digraph; edge connectivity fixes one endpoint and scans the
rest.  The cut version of k-connectivity is a direct search over vertex
subsets in increasing size, intended for desk-scale graphs.
"""

from __future__ import annotations

from itertools import combinations

from .graphs import Graph, InputError, components


def min_degree(g: Graph) -> int:
    if g.n == 0:
        raise InputError("min_degree: graph has no vertices")
    if g.n == 1:
        return 0
    return min(g.degrees())


class _FlowNet:
    """Tiny unit-capacity max-flow network (BFS augmenting paths)."""

    def __init__(self, size: int):
        self.size = size
        self.to: list[int] = []
        self.cap: list[int] = []
        self.head: list[list[int]] = [[] for _ in range(size)]

    def add(self, u: int, v: int, c: int) -> None:
        self.head[u].append(len(self.to))
        self.to.append(v)
        self.cap.append(c)
        self.head[v].append(len(self.to))
        self.to.append(u)
        self.cap.append(0)

    def max_flow(self, s: int, t: int, limit: int) -> int:
        flow = 0
        while flow < limit:
            prev = [-1] * self.size
            prev[s] = -2
            queue = [s]
            qi = 0
            while qi < len(queue) and prev[t] == -1:
                v = queue[qi]
                qi += 1
                for a in self.head[v]:
                    w = self.to[a]
                    if self.cap[a] > 0 and prev[w] == -1:
                        prev[w] = a
                        queue.append(w)
            if prev[t] == -1:
                break
            v = t
            while v != s:
                a = prev[v]
                self.cap[a] -= 1
                self.cap[a ^ 1] += 1
                v = self.to[a ^ 1]
            flow += 1
        return flow


def _vertex_flow(g: Graph, s: int, t: int) -> int:
    """Max number of internally disjoint s-t routes for non-adjacent s, t."""
    inf = g.n
    net = _FlowNet(2 * g.n)
    for v in range(g.n):
        net.add(2 * v, 2 * v + 1, 1 if v not in (s, t) else inf)
    for u, v in g.edges:
        net.add(2 * u + 1, 2 * v, inf)
        net.add(2 * v + 1, 2 * u, inf)
    return net.max_flow(2 * s + 1, 2 * t, inf)


def _edge_flow(g: Graph, s: int, t: int) -> int:
    net = _FlowNet(g.n)
    for u, v in g.edges:
        net.add(u, v, 1)
        net.add(v, u, 1)
    return net.max_flow(s, t, g.m)


def connectivity(g: Graph) -> int:
    """Vertex connectivity; n-1 for complete graphs, 0 when disconnected."""
    if g.n == 0:
        raise InputError("connectivity: graph has no vertices")
    if g.m == g.n * (g.n - 1) // 2:
        return g.n - 1
    if not g.is_connected():
        return 0
    best = g.n - 1
    for s, t in combinations(range(g.n), 2):
        if not g.has_edge(s, t):
            best = min(best, _vertex_flow(g, s, t))
    return best


def edge_connectivity(g: Graph) -> int:
    """Edge connectivity; 0 for a single vertex or a disconnected graph."""
    if g.n == 0:
        raise InputError("edge_connectivity: graph has no vertices")
    if g.n == 1:
        return 0
    if not g.is_connected():
        return 0
    return min(_edge_flow(g, 0, t) for t in range(1, g.n))


def k_connectivity_cut(g: Graph, k: int, with_cut: bool = False):
    """Fewest vertices whose removal leaves >= k components or < k vertices.

    Searches vertex subsets in increasing size, lexicographic within a size,
    so the returned cut is deterministic.  Exponential; meant for small n.
    """
    if k < 1:
        raise InputError("k_connectivity_cut: k must be >= 1")
    if g.n == 0:
        raise InputError("k_connectivity_cut: graph has no vertices")
    for size in range(g.n + 1):
        for cut in combinations(range(g.n), size):
            left = g.n - size
            if left < k or len(components(g, set(cut))) >= k:
                return (size, cut) if with_cut else size
    raise AssertionError("unreachable: removing all vertices leaves 0 < k vertices")
