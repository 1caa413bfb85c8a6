"""Independent naive oracles for the exact solvers.

Everything here is written from the definitions, sharing no code with the
package kernels: terminal paths by plain DFS between terminal pairs,
terminal trees by scanning all edge subsets, packing by exhaustive
include/skip search, and cut-based connectivity by removing every subset.
Slow on purpose; only run at small scale.
"""

from __future__ import annotations

from itertools import combinations

from pathconn.graphs import Graph


def _adj_sets(g: Graph) -> list[set[int]]:
    nbr: list[set[int]] = [set() for _ in range(g.n)]
    for u, v in g.edges:
        nbr[u].add(v)
        nbr[v].add(u)
    return nbr


def _path_edges(seq: tuple[int, ...]) -> frozenset[tuple[int, int]]:
    return frozenset(
        (min(a, b), max(a, b)) for a, b in zip(seq, seq[1:]))


def all_terminal_paths(g: Graph, s) -> list[tuple[int, ...]]:
    """Every simple path that contains all of s and ends in two of them."""
    sset = set(s)
    nbr = _adj_sets(g)
    found: list[tuple[int, ...]] = []

    def extend(seq: list[int], seen: set[int]) -> None:
        v = seq[-1]
        if v in sset and v > seq[0] and sset <= seen:
            found.append(tuple(seq))
        for w in sorted(nbr[v]):
            if w not in seen:
                seq.append(w)
                seen.add(w)
                extend(seq, seen)
                seen.remove(w)
                seq.pop()

    for a in sorted(sset):
        extend([a], {a})
    return found


def all_terminal_trees(g: Graph, s) -> list[tuple[tuple[int, int], ...]]:
    """Every edge subset forming a tree that contains s with leaves in s."""
    sset = set(s)
    out: list[tuple[tuple[int, int], ...]] = []
    for r in range(1, g.m + 1):
        for sub in combinations(g.edges, r):
            verts = {v for e in sub for v in e}
            if not sset <= verts or len(sub) != len(verts) - 1:
                continue
            # connectivity of the covered vertex set under the chosen edges
            nbr: dict[int, set[int]] = {v: set() for v in verts}
            for u, v in sub:
                nbr[u].add(v)
                nbr[v].add(u)
            seen = set()
            stack = [next(iter(verts))]
            while stack:
                v = stack.pop()
                if v in seen:
                    continue
                seen.add(v)
                stack.extend(nbr[v] - seen)
            if seen != verts:
                continue
            if any(len(nbr[v]) == 1 and v not in sset for v in verts):
                continue
            out.append(tuple(sorted(sub)))
    return out


def max_disjoint(members, s, internal: bool, is_tree: bool) -> int:
    """Largest pairwise compatible subfamily, by exhaustive search."""
    sset = set(s)
    edge_sets = []
    inner_sets = []
    for item in members:
        if is_tree:
            edge_sets.append(frozenset(item))
            verts = {v for e in item for v in e}
        else:
            edge_sets.append(_path_edges(item))
            verts = set(item)
        inner_sets.append(frozenset(verts - sset))
    best = 0

    def rec(i: int, used_edges: frozenset, used_inner: frozenset, size: int) -> None:
        nonlocal best
        if size > best:
            best = size
        if i == len(members) or size + (len(members) - i) <= best:
            return
        if not (edge_sets[i] & used_edges) and not (
                internal and inner_sets[i] & used_inner):
            rec(i + 1, used_edges | edge_sets[i],
                used_inner | inner_sets[i], size + 1)
        rec(i + 1, used_edges, used_inner, size)

    rec(0, frozenset(), frozenset(), 0)
    return best


def naive_local_value(g: Graph, s, variant: str) -> int:
    is_tree = variant in ("kappa", "lambda")
    internal = variant in ("pi", "kappa")
    members = all_terminal_trees(g, s) if is_tree else all_terminal_paths(g, s)
    return max_disjoint(members, s, internal, is_tree)


def _connected(g: Graph, verts: set[int]) -> bool:
    if not verts:
        return True
    nbr = _adj_sets(g)
    seen = set()
    stack = [next(iter(sorted(verts)))]
    while stack:
        v = stack.pop()
        if v in seen:
            continue
        seen.add(v)
        stack.extend(w for w in nbr[v] if w in verts and w not in seen)
    return seen == verts


def naive_global_value(g: Graph, k: int, variant: str) -> int:
    if k == 1:
        return min(g.degrees()) if g.n > 1 else 0
    connected = _connected(g, set(range(g.n)))
    if k > g.n:
        return 1 if connected else 0
    if not connected:
        return 0
    return min(naive_local_value(g, s, variant)
               for s in combinations(range(g.n), k))


def naive_vertex_connectivity(g: Graph) -> int:
    """Smallest vertex set whose removal disconnects; n-1 for complete."""
    n = g.n
    if n <= 1:
        return 0
    for r in range(n - 1):
        for cut in combinations(range(n), r):
            rest = set(range(n)) - set(cut)
            if len(rest) > 1 and not _connected(g, rest):
                return r
    return n - 1


def naive_edge_connectivity(g: Graph) -> int:
    if g.n <= 1:
        return 0
    if not _connected(g, set(range(g.n))):
        return 0
    for r in range(g.m + 1):
        for cut in combinations(range(g.m), r):
            keep = [e for i, e in enumerate(g.edges) if i not in cut]
            sub = Graph(g.n, tuple(keep))
            if not _connected(sub, set(range(g.n))):
                return r
    return g.m
