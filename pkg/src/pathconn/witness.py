"""Explicit disjoint-family constructions and an independent family checker.

The product construction targets K_R x K_C with R = 2p and C = 2q - 2p + 2
(both even, q = (R + C - 2) / 2) and produces, for any terminal triple,
exactly q internally disjoint terminal paths.  Cases are split by how many
rows/columns the triple occupies; column-heavy configurations are handled
by transposing, building in the transposed grid, and mapping back.

verify_family is deliberately naive (set arithmetic on vertices and edges,
no bitmasks, no shared code with the solvers) so it can vouch for solver
certificates and constructed families alike.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .graphs import Graph, InputError, canon_edge, complete, complete_bipartite
from .steiner import (
    KAPPA, LAMBDA, OMEGA, PI, GlobalResult, PackDecision, PackingCertificate,
    LOWER_BOUND, global_connectivity, local_upper_bound, pack_at_least,
    terminal_set,
)
from .transforms import LabeledGraph, cartesian_product, line_graph


# ---------------------------------------------------------------------------
# independent verification

def family_violations(g: Graph, s, family, variant: str) -> list[str]:
    """All reasons the family fails to certify the variant's value at s."""
    s = terminal_set(g, s)
    sset = set(s)
    tree = variant in (KAPPA, LAMBDA)
    internal = variant in (PI, KAPPA)
    problems = []
    vsets = []
    esets = []
    for idx, item in enumerate(family):
        tag = f"member {idx}"
        if tree:
            edges = [tuple(e) for e in item]
            eset = set()
            vset = set()
            ok = True
            for e in edges:
                if len(e) != 2 or canon_edge(*e) not in g.edge_index:
                    problems.append(f"{tag}: {e!r} is not an edge of the graph")
                    ok = False
                    break
                ce = canon_edge(*e)
                if ce in eset:
                    problems.append(f"{tag}: repeated edge {ce!r}")
                    ok = False
                    break
                eset.add(ce)
                vset.update(ce)
            if not ok:
                continue
            if not edges or len(eset) != len(vset) - 1 or not _connected_on(vset, eset):
                problems.append(f"{tag}: edges do not form a tree")
                continue
        else:
            verts = list(item)
            if len(verts) < 2 or len(set(verts)) != len(verts):
                problems.append(f"{tag}: not a simple path")
                continue
            eset = set()
            ok = True
            for a, b in zip(verts, verts[1:]):
                if canon_edge(a, b) not in g.edge_index:
                    problems.append(f"{tag}: ({a}, {b}) is not an edge of the graph")
                    ok = False
                    break
                eset.add(canon_edge(a, b))
            if not ok:
                continue
            vset = set(verts)
        if not sset <= vset:
            problems.append(f"{tag}: missing terminals {sorted(sset - vset)}")
            continue
        vsets.append((idx, vset))
        esets.append((idx, eset))
    for i in range(len(esets)):
        for j in range(i + 1, len(esets)):
            ii, ei = esets[i]
            jj, ej = esets[j]
            shared = ei & ej
            if shared:
                problems.append(f"members {ii} and {jj} share edges {sorted(shared)}")
            if internal:
                extra = (vsets[i][1] & vsets[j][1]) - sset
                if extra:
                    problems.append(f"members {ii} and {jj} share non-terminals {sorted(extra)}")
    return problems


def _connected_on(vset, eset) -> bool:
    verts = list(vset)
    if not verts:
        return False
    adj = {v: [] for v in verts}
    for u, v in eset:
        adj[u].append(v)
        adj[v].append(u)
    seen = {verts[0]}
    stack = [verts[0]]
    while stack:
        v = stack.pop()
        for w in adj[v]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == len(verts)


def verify_family(g: Graph, s, family, variant: str) -> bool:
    """True iff the family is a valid disjoint witness family for s."""
    return not family_violations(g, s, family, variant)


# ---------------------------------------------------------------------------
# complete graphs

def complete_graph_witness(n: int, s) -> tuple[tuple[int, ...], ...]:
    """floor(n/2) internally disjoint terminal paths for a triple in K_n."""
    g = complete(n)
    s = terminal_set(g, s)
    if len(s) != 3:
        raise InputError("complete_graph_witness needs exactly three terminals")
    a, b, c = s
    rest = [v for v in range(n) if v not in s]
    fam = [(a, b, c)]
    if rest:
        fam.append((b, rest[0], a, c))
        w = rest[1:]
        for i in range(0, len(w) - 1, 2):
            fam.append((a, w[i], b, w[i + 1], c))
    return tuple(fam)


# ---------------------------------------------------------------------------
# products of complete graphs

@dataclass(frozen=True)
class ProductCoordinates:
    """Row/column coordinates for K_rows x K_cols under flat ids r*cols + c."""

    rows: int
    cols: int

    def flat(self, r: int, c: int) -> int:
        if not (0 <= r < self.rows and 0 <= c < self.cols):
            raise InputError(f"coordinate ({r}, {c}) out of range")
        return r * self.cols + c

    def coords(self, v: int) -> tuple[int, int]:
        if not 0 <= v < self.rows * self.cols:
            raise InputError(f"vertex {v} out of range")
        return divmod(v, self.cols)


def _check_product_params(p: int, q: int) -> tuple[int, int]:
    if p < 2 or q < p + 1:
        raise InputError("product construction needs p >= 2 and q >= p + 1")
    return 2 * p, 2 * q - 2 * p + 2


def product_witness_graph(p: int, q: int) -> LabeledGraph:
    """The product K_{2p} x K_{2q-2p+2}, labeled with coordinates."""
    rows, cols = _check_product_params(p, q)
    return cartesian_product(complete(rows), complete(cols))


@lru_cache(maxsize=8)
def _cached_product(p: int, q: int) -> Graph:
    return product_witness_graph(p, q).graph


def product_witness_family(p: int, q: int, s, check: bool = True) -> tuple[tuple[int, ...], ...]:
    """q internally disjoint terminal paths for any triple in K_{2p} x K_{2q-2p+2}."""
    rows, cols = _check_product_params(p, q)
    grid = ProductCoordinates(rows, cols)
    g = _cached_product(p, q)
    s = terminal_set(g, s)
    if len(s) != 3:
        raise InputError("product_witness_family needs exactly three terminals")
    trip = [grid.coords(v) for v in s]
    fam_coords = _product_family(rows, cols, trip)
    fam = tuple(tuple(grid.flat(r, c) for r, c in pathc) for pathc in fam_coords)
    if len(fam) != q:
        raise AssertionError(f"constructed {len(fam)} paths, expected {q}")
    if check:
        problems = family_violations(g, s, fam, PI)
        if problems:
            raise AssertionError(f"invalid constructed family: {problems[:3]}")
    return fam


def classify_triple(p: int, q: int, s) -> str:
    """Which construction case handles the triple (for reporting)."""
    rows, cols = _check_product_params(p, q)
    grid = ProductCoordinates(rows, cols)
    trip = [grid.coords(v) for v in terminal_set(_cached_product(p, q), s)]
    rset = {r for r, _ in trip}
    cset = {c for _, c in trip}
    if len(rset) == 1:
        return "one-row"
    if len(cset) == 1:
        return "one-column"
    if len(rset) == 3 and len(cset) == 3:
        return "rows-and-columns-distinct"
    if len(rset) == 2:
        return "shared-row-stacked" if len(cset) == 2 else "shared-row"
    return "shared-column"


def _product_family(rows, cols, trip):
    rset = {r for r, _ in trip}
    cset = {c for _, c in trip}
    if len(rset) == 1:
        return _one_row(rows, cols, trip)
    if len(cset) == 1:
        return [[(r, c) for c, r in pathc]
                for pathc in _one_row(cols, rows, [(c, r) for r, c in trip])]
    if len(rset) == 3 and len(cset) == 3:
        return _all_distinct(rows, cols, trip)
    if len(rset) == 2:
        return _shared_row(rows, cols, trip)
    # two terminals share a column: build in the transposed grid
    return [[(r, c) for c, r in pathc]
            for pathc in _shared_row(cols, rows, [(c, r) for r, c in trip])]


def _free(total, used):
    return [i for i in range(total) if i not in used]


def _all_distinct(rows, cols, trip):
    """All rows and all columns distinct."""
    (r1, c1), (r2, c2), (r3, c3) = sorted(trip)
    x, y, z = (r1, c1), (r2, c2), (r3, c3)
    fam = [
        [x, (r1, c2), y, (r2, c3), z],
        [x, (r2, c1), y, (r3, c2), z],
    ]
    fr = _free(rows, {r1, r2, r3})
    fc = _free(cols, {c1, c2, c3})
    t = min(len(fr), len(fc))
    for a, b in zip(fr[:t], fc[:t]):
        fam.append([x, (a, c1), (a, c2), y, (r2, b), (r3, b), z])
    for i in range(t, len(fc) - 1, 2):
        b, b2 = fc[i], fc[i + 1]
        fam.append([x, (r1, b), (r2, b), y, (r2, b2), (r3, b2), z])
    for i in range(t, len(fr) - 1, 2):
        a, a2 = fr[i], fr[i + 1]
        fam.append([x, (a, c1), (a, c2), y, (a2, c2), (a2, c3), z])
    return fam


def _shared_row(rows, cols, trip):
    """Exactly two terminals in one row."""
    by_row = {}
    for rc in trip:
        by_row.setdefault(rc[0], []).append(rc)
    (r1, pair), = ((r, v) for r, v in by_row.items() if len(v) == 2)
    (z,) = (rc for rc in trip if rc[0] != r1)
    r2, cz = z
    pair.sort(key=lambda rc: rc[1])
    if cz in (pair[0][1], pair[1][1]):
        x = pair[0] if pair[0][1] == cz else pair[1]
        y = pair[1] if x is pair[0] else pair[0]
        return _shared_row_stacked(rows, cols, x, y, z)
    x, y = pair
    return _shared_row_fresh(rows, cols, x, y, z)


def _shared_row_fresh(rows, cols, x, y, z):
    """x, y in row r1; z in a fresh row and a fresh column."""
    r1, cx = x
    _, cy = y
    r2, cz = z
    fam = [
        [x, y, (r1, cz), z],
        [y, (r2, cy), z, (r2, cx), x],
    ]
    fr = _free(rows, {r1, r2})
    fc = _free(cols, {cx, cy, cz})
    for i in range(0, len(fr) - 1, 2):
        a, a2 = fr[i], fr[i + 1]
        fam.append([x, (a, cx), (a, cy), y, (a2, cy), (a2, cz), z])
    for i in range(0, len(fc) - 1, 2):
        b, b2 = fc[i], fc[i + 1]
        fam.append([x, (r1, b), y, (r1, b2), (r2, b2), z])
    return fam


def _shared_row_stacked(rows, cols, x, y, z):
    """x, y in row r1; z directly below x (same column)."""
    r1, c1 = x
    _, c2 = y
    r2, _ = z
    fr = _free(rows, {r1, r2})
    fc = _free(cols, {c1, c2})
    a0 = fr[0]
    fam = [
        [y, (r2, c2), z, x],
        [z, (a0, c1), x, y],
    ]
    rest_rows = fr[1:]
    i = 0
    while i + 1 < len(rest_rows):
        a, a2 = rest_rows[i], rest_rows[i + 1]
        fam.append([x, (a, c1), (a, c2), y, (a2, c2), (a2, c1), z])
        i += 2
    ci = 0
    if i < len(rest_rows):
        a, b = rest_rows[i], fc[0]
        fam.append([x, (a, c1), (a, c2), y, (r1, b), (r2, b), z])
        ci = 1
    while ci + 1 < len(fc):
        b, b2 = fc[ci], fc[ci + 1]
        fam.append([x, (r1, b), y, (r1, b2), (r2, b2), z])
        ci += 2
    return fam


def _one_row(rows, cols, trip):
    """All three terminals in one row."""
    (r1, c1), (r1b, c2), (r1c, c3) = sorted(trip, key=lambda rc: rc[1])
    x, y, z = (r1, c1), (r1b, c2), (r1c, c3)
    fr = _free(rows, {r1})
    fc = _free(cols, {c1, c2, c3})
    a0 = fr[0]
    fam = [
        [x, y, z],
        [y, (a0, c2), (a0, c1), x, z],
    ]
    rest = fr[1:]
    for i in range(0, len(rest) - 1, 2):
        a, a2 = rest[i], rest[i + 1]
        fam.append([x, (a, c1), (a, c2), y, (a2, c2), (a2, c3), z])
    for i in range(0, len(fc) - 1, 2):
        b, b2 = fc[i], fc[i + 1]
        fam.append([x, (r1, b), y, (r1, b2), z])
    return fam


# ---------------------------------------------------------------------------
# line graph instance with prescribed values

@dataclass(frozen=True)
class PrescribedInstance:
    """A bipartite base graph and its line graph with certified path values.

    The base is K_{2p, 2q-2p+2}: its triple path value is exactly p, and its
    line graph (identical to the product K_{2p} x K_{2q-2p+2} under the
    index-preserving correspondence) carries a constructed family of q
    internally disjoint paths at a solver-chosen triple.  The gap q - p is
    therefore certified as at least prescribed.

    refutation, when requested, is an optimality probe at that same triple:
    answer "no" pins the local value to exactly q, answer "yes" (always
    re-checked against the independent verifier before being returned)
    shows the local value exceeds q so the constructed family is a strict
    lower bound there, and "unknown" means the work budget expired first.
    """

    base: Graph
    base_result: GlobalResult
    line: LabeledGraph
    line_certificate: PackingCertificate
    refutation: PackDecision | None


def prescribed_instance(p: int, q: int, budget_ms: int | None = 60_000,
                        refute: bool = True,
                        base_budget_ms: int | None = None) -> PrescribedInstance:
    """Build the instance, certify both values, and probe the q upper bound.

    The refutation step asks whether q + 1 disjoint paths exist at the
    chosen triple; "no" confirms the constructed family is optimal there,
    "unknown" is acceptable within the budget, and "yes" means the solver
    found a strictly larger family, so the construction is a lower bound
    but not the local optimum.  A "yes" certificate is re-verified with
    the independent checker and an invalid one raises, since that can only
    be a solver defect.  base_budget_ms caps the exact solve on the
    bipartite base (needed beyond 10 base vertices, where the result
    degrades to a lower-bound certificate).
    """
    rows, cols = _check_product_params(p, q)
    base = complete_bipartite(rows, cols)
    base_result = global_connectivity(base, 3, PI, budget_ms=base_budget_ms)
    line = line_graph(base)
    prod = _cached_product(p, q)
    if line.graph != prod:
        raise AssertionError("line graph does not match the product layout")
    lg = line.graph
    best = None
    for a in range(lg.n):
        for b in range(a + 1, lg.n):
            for c in range(b + 1, lg.n):
                s = (a, b, c)
                key = (local_upper_bound(lg, s, PI), s)
                if best is None or key < best:
                    best = key
    s_star = best[1]
    fam = product_witness_family(p, q, s_star)
    cert = PackingCertificate(PI, s_star, fam, LOWER_BOUND)
    refutation = None
    if refute:
        refutation = pack_at_least(lg, s_star, q + 1, PI, budget_ms=budget_ms)
        if refutation.answer == "yes":
            extra = refutation.certificate
            if extra is None or len(extra.family) <= q:
                problems = ["missing or undersized certificate"]
            else:
                problems = family_violations(lg, s_star, extra.family, PI)
            if problems:
                raise AssertionError(
                    f"unverifiable {q + 1}-path packing at {s_star}: {problems[0]}")
    return PrescribedInstance(base, base_result, line, cert, refutation)
