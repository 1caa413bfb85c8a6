"""Exact connectivity over terminal sets via enumeration and disjoint packing.

Four variants, named by their conventional symbols:

  pi      internally disjoint terminal paths   (share exactly the terminals)
  omega   edge-disjoint terminal paths
  kappa   internally disjoint terminal trees
  lambda  edge-disjoint terminal trees

The local value for a terminal set S is the largest disjoint family of
minimal terminal paths/trees; restricting to minimal ones is lossless
because trimming a non-terminal leaf or end never breaks disjointness.
The global value is the minimum of the local values over all k-subsets,
with the usual conventions: k = 1 gives the minimum degree, a disconnected
graph gives 0, and a connected graph with fewer than k vertices gives 1.

Budgets are deterministic work units (see _pure); budget_ms is converted at
a fixed rate so identical inputs give identical outputs on any machine.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from ._backend import BACKEND, impl
from ._pure import enumerate_trees as _enumerate_trees
from .graphs import Graph, InputError, components

PI, OMEGA, KAPPA, LAMBDA = "pi", "omega", "kappa", "lambda"
VARIANTS = (PI, OMEGA, KAPPA, LAMBDA)

_INTERNAL = {PI: True, OMEGA: False, KAPPA: True, LAMBDA: False}
_TREE = {PI: False, OMEGA: False, KAPPA: True, LAMBDA: True}

DEFAULT_CAP = 200_000
UNITS_PER_MS = 500
_INF_UNITS = 1 << 62

EXACT, LOWER_BOUND, ZERO = "exact", "lower-bound", "zero"


def complete_graph_value(n: int, k: int) -> int:
    """Largest internally disjoint terminal-path family in a complete graph.

    Closed form floor((2n + k^2 - 3k) / (2k - 2)); valid for 2 <= k <= n.
    Used only for reporting and as a documented sanity bound, never inside
    the solver, so solver results verify it independently.
    """
    if not 2 <= k <= n:
        raise InputError("complete_graph_value needs 2 <= k <= n")
    return (2 * n + k * k - 3 * k) // (2 * k - 2)


class WorkBudget:
    """Deterministic work-unit pool shared across solver calls."""

    def __init__(self, budget_ms: int | None = None, units: int | None = None):
        if units is not None:
            self.left = units
        elif budget_ms is not None:
            if budget_ms < 0:
                raise InputError("budget must be >= 0")
            self.left = budget_ms * UNITS_PER_MS
        else:
            self.left = _INF_UNITS
        self.spent = 0

    def charge(self, units: int) -> None:
        self.left -= units
        self.spent += units

    @property
    def exhausted(self) -> bool:
        return self.left <= 0


@dataclass(frozen=True)
class PackingCertificate:
    """A disjoint family witnessing a local value.

    family holds vertex tuples for path variants, edge tuples for tree
    variants.  status: exact (value is the local optimum), lower-bound
    (search stopped early), zero (proven empty).  value == len(family).
    """

    variant: str
    terminals: tuple[int, ...]
    family: tuple[tuple, ...]
    status: str

    @property
    def value(self) -> int:
        return len(self.family)

    def to_dict(self) -> dict:
        fam = [[list(e) for e in item] if _TREE[self.variant] else list(item)
               for item in self.family]
        return {
            "variant": self.variant,
            "terminals": list(self.terminals),
            "family": fam,
            "value": self.value,
            "status": self.status,
        }


@dataclass(frozen=True)
class GlobalResult:
    """Result of a global scan over all k-subsets."""

    variant: str
    k: int
    value: int
    status: str  # exact | lower-bound
    terminals: tuple[int, ...] | None
    certificate: PackingCertificate | None
    units: int

    def to_dict(self) -> dict:
        return {
            "variant": self.variant,
            "k": self.k,
            "value": self.value,
            "status": self.status,
            "terminals": None if self.terminals is None else list(self.terminals),
            "certificate": None if self.certificate is None else self.certificate.to_dict(),
            "units": self.units,
        }


@dataclass(frozen=True)
class PackDecision:
    """Answer to `is there a disjoint family of size >= t`."""

    answer: str  # yes | no | unknown
    certificate: PackingCertificate | None
    units: int


def terminal_set(g: Graph, vertices) -> tuple[int, ...]:
    """Validate and canonicalize a terminal set (sorted, distinct, in range)."""
    try:
        s = tuple(sorted(vertices))
    except TypeError:
        raise InputError(f"terminal set {vertices!r} is not iterable") from None
    if len(s) != len(set(s)):
        raise InputError(f"terminal set {s!r} has repeated vertices")
    for v in s:
        if not isinstance(v, int) or not 0 <= v < g.n:
            raise InputError(f"terminal {v!r} out of range for n={g.n}")
    return s


def _check_variant(variant: str) -> None:
    if variant not in VARIANTS:
        raise InputError(f"unknown variant {variant!r}; expected one of {VARIANTS}")


def _check_solver_size(g: Graph) -> None:
    if g.n > 64:
        raise InputError("solvers support at most 64 vertices")
    if g.n == 0:
        raise InputError("graph has no vertices")


def _smask(s: tuple[int, ...]) -> int:
    m = 0
    for v in s:
        m |= 1 << v
    return m


def _eid_flat(g: Graph) -> list[int]:
    eid = [-1] * (g.n * g.n)
    for i, (u, v) in enumerate(g.edges):
        eid[u * g.n + v] = i
        eid[v * g.n + u] = i
    return eid


def local_upper_bound(g: Graph, s: tuple[int, ...], variant: str) -> int:
    """Combinatorial upper bound on the local value at terminal set s.

    Components: the smallest terminal degree; one less when two equal-degree
    terminals are adjacent (for k >= 3 the member through that edge, or its
    absence, always wastes one endpoint slot); total terminal degree divided
    by the slots one member consumes (2k-2 for paths with two endpoints and
    k-2 interior terminals, k for trees); total edges divided by the k-1
    edges one member needs; and for internal variants the non-terminal
    vertex budget plus the floor(k/2) members that fit inside the terminals.
    """
    k = len(s)
    degs = [g.degree(v) for v in s]
    bound = min(degs)
    if k >= 3:
        for u, v in combinations(s, 2):
            if g.has_edge(u, v) and g.degree(u) == g.degree(v):
                bound = min(bound, g.degree(u) - 1)
    slots_per = k if _TREE[variant] else 2 * k - 2
    bound = min(bound, sum(degs) // slots_per)
    bound = min(bound, g.m // (k - 1))
    if _INTERNAL[variant]:
        bound = min(bound, k // 2 + (g.n - k))
    return max(bound, 0)


def upper_bound(g: Graph, k: int, variant: str) -> int:
    """Global sanity upper bound on the k-value.

    Combines the combinatorial local bound at a worst-case style subset with
    the closed-form complete-graph value (internal paths embed into the
    complete graph on the same vertices), the vertex connectivity when a
    subset avoiding a minimum cut exists, and the edge connectivity for
    edge-disjoint variants.  Not used inside the solver.
    """
    _check_variant(variant)
    if k < 1:
        raise InputError("k must be >= 1")
    if g.n == 0:
        raise InputError("graph has no vertices")
    from .invariants import connectivity, edge_connectivity, min_degree
    if not g.is_connected():
        return 0
    if k > g.n:
        return 1
    if k == 1:
        return min_degree(g)
    degs = sorted(g.degrees())
    bound = degs[0]
    if k >= 3:
        for u, v in g.edges:
            if g.degree(u) == g.degree(v):
                bound = min(bound, g.degree(u) - 1)
                break
    slots_per = k if _TREE[variant] else 2 * k - 2
    bound = min(bound, sum(degs[:k]) // slots_per)
    bound = min(bound, g.m // (k - 1))
    if _INTERNAL[variant]:
        bound = min(bound, k // 2 + (g.n - k))
    if variant == PI:
        bound = min(bound, complete_graph_value(g.n, k))
    if _INTERNAL[variant]:
        kap = connectivity(g)
        if k <= g.n - kap:
            bound = min(bound, kap)
    else:
        bound = min(bound, edge_connectivity(g))
    return max(bound, 0)


def _enumerate(g: Graph, smask: int, variant: str, cap: int, budget: int):
    if _TREE[variant]:
        return _enumerate_trees(g.n, g.masks, g.edges, smask, cap, budget)
    return impl.enumerate_paths(g.n, g.masks, smask, cap, budget)


def _pack(g: Graph, eid, cands, s, variant, target, prune_below_target, budget):
    k = len(s)
    slots_per = k if _TREE[variant] else 2 * k - 2
    return impl.solve_pack(
        g.n, g.m, eid, cands, _TREE[variant], _smask(s), _INTERNAL[variant],
        slots_per, k // 2, [g.degree(v) for v in s],
        target, prune_below_target, budget)


def enumerate_minimal_spaths(g: Graph, s, cap: int = DEFAULT_CAP,
                             budget_ms: int | None = None):
    """All minimal terminal paths for s, canonical order.

    Returns (paths, truncated); truncated means the cap or budget stopped
    enumeration before it was exhaustive.
    """
    _check_solver_size(g)
    s = terminal_set(g, s)
    if len(s) < 2:
        raise InputError("need at least two terminals")
    pool = WorkBudget(budget_ms)
    paths, complete, units = impl.enumerate_paths(g.n, g.masks, _smask(s), cap, pool.left)
    return tuple(paths), not complete


def enumerate_minimal_strees(g: Graph, s, cap: int = DEFAULT_CAP,
                             budget_ms: int | None = None):
    """All minimal terminal trees for s (edge tuples), canonical order."""
    _check_solver_size(g)
    s = terminal_set(g, s)
    if len(s) < 2:
        raise InputError("need at least two terminals")
    pool = WorkBudget(budget_ms)
    trees, complete, units = _enumerate_trees(g.n, g.masks, g.edges, _smask(s), cap, pool.left)
    return tuple(trees), not complete


def _local_solve(g: Graph, eid, s, variant, pool: WorkBudget, cap: int,
                 known_ub: int | None = None) -> PackingCertificate:
    """Exact-intent local solve; degrades to lower-bound on budget expiry."""
    if pool.exhausted:
        return PackingCertificate(variant, s, (), LOWER_BOUND)
    cands, enum_complete, units = _enumerate(g, _smask(s), variant, cap, pool.left)
    pool.charge(units)
    if not cands:
        return PackingCertificate(variant, s, (), ZERO if enum_complete else LOWER_BOUND)
    ub = local_upper_bound(g, s, variant)
    if known_ub is not None:
        ub = min(ub, known_ub)
    best, sel, pack_complete, units = _pack(
        g, eid, cands, s, variant, target=ub, prune_below_target=False,
        budget=max(pool.left, 0))
    pool.charge(units)
    exact = best >= ub or (pack_complete and enum_complete)
    family = tuple(cands[i] for i in sel)
    return PackingCertificate(variant, s, family, EXACT if exact else LOWER_BOUND)


def local_connectivity(g: Graph, s, variant: str, budget_ms: int | None = None,
                       cap: int = DEFAULT_CAP) -> PackingCertificate:
    """Largest disjoint family of minimal terminal paths/trees for s."""
    _check_variant(variant)
    _check_solver_size(g)
    s = terminal_set(g, s)
    if len(s) < 2:
        raise InputError("need at least two terminals")
    pool = WorkBudget(budget_ms)
    return _local_solve(g, _eid_flat(g), s, variant, pool, cap)


def pack_at_least(g: Graph, s, t: int, variant: str,
                  budget_ms: int | None = None, cap: int = DEFAULT_CAP) -> PackDecision:
    """Decide whether a disjoint family of size >= t exists for s."""
    _check_variant(variant)
    _check_solver_size(g)
    s = terminal_set(g, s)
    if len(s) < 2:
        raise InputError("need at least two terminals")
    if t < 1:
        raise InputError("t must be >= 1")
    if local_upper_bound(g, s, variant) < t:
        return PackDecision("no", None, 0)
    pool = WorkBudget(budget_ms)
    eid = _eid_flat(g)
    cands, enum_complete, units = _enumerate(g, _smask(s), variant, cap, pool.left)
    pool.charge(units)
    if not cands:
        if enum_complete:
            return PackDecision("no", None, pool.spent)
        return PackDecision("unknown", None, pool.spent)
    best, sel, pack_complete, units = _pack(
        g, eid, cands, s, variant, target=t, prune_below_target=True,
        budget=max(pool.left, 0))
    pool.charge(units)
    family = tuple(cands[i] for i in sel)
    cert = PackingCertificate(variant, s, family, LOWER_BOUND) if family else None
    if best >= t:
        return PackDecision("yes", cert, pool.spent)
    if pack_complete and enum_complete:
        return PackDecision("no", cert, pool.spent)
    return PackDecision("unknown", cert, pool.spent)


def _try_reach(g, eid, s, variant, goal, pool, cap):
    """Cheap two-phase attempt to certify local value >= goal.

    Returns (hit, decisive_no, best_found).  decisive_no means the search
    proved the local value < goal.
    """
    if goal == 0:
        return True, False, 0
    if local_upper_bound(g, s, variant) < goal:
        return False, True, 0
    smask = _smask(s)
    best_seen = 0
    for phase_cap in (256, cap):
        if pool.exhausted:
            return False, False, best_seen
        cands, enum_complete, units = _enumerate(g, smask, variant, phase_cap, pool.left)
        pool.charge(units)
        if not cands:
            if enum_complete:
                return False, True, 0
            return False, False, best_seen
        best, sel, pack_complete, units = _pack(
            g, eid, cands, s, variant, target=goal, prune_below_target=True,
            budget=max(pool.left, 0))
        pool.charge(units)
        best_seen = max(best_seen, best)
        if best >= goal:
            return True, False, best
        if pack_complete and enum_complete:
            return False, True, best_seen
        if enum_complete or phase_cap == cap:
            # enumeration was already exhaustive (or fully capped); the pack
            # budget must have expired, so a larger phase cannot help
            return False, False, best_seen
    return False, False, best_seen


def global_connectivity(g: Graph, k: int, variant: str,
                        budget_ms: int | None = None,
                        cap: int = DEFAULT_CAP) -> GlobalResult:
    """Minimum local value over all k-subsets, with conventions.

    k = 1: minimum degree.  Disconnected graph: 0 with a witness subset
    spanning two components (when k <= n).  Connected graph with n < k: 1.
    Convention results carry no certificate.
    """
    _check_variant(variant)
    if k < 1:
        raise InputError("k must be >= 1")
    _check_solver_size(g)
    n = g.n
    if k == 1:
        degs = g.degrees()
        v = min(range(n), key=lambda i: degs[i])
        val = degs[v] if n > 1 else 0
        return GlobalResult(variant, k, val, EXACT, (v,), None, 0)
    connected = g.is_connected()
    if k > n:
        return GlobalResult(variant, k, 1 if connected else 0, EXACT, None, None, 0)
    if not connected:
        comps = components(g)
        picked = [comps[0][0], comps[1][0]]
        rest = sorted(set(range(n)) - set(picked))
        s = tuple(sorted(picked + rest[:k - 2]))
        cert = PackingCertificate(variant, s, (), ZERO)
        return GlobalResult(variant, k, 0, EXACT, s, cert, 0)

    eid = _eid_flat(g)
    subsets = [tuple(c) for c in combinations(range(n), k)]
    subsets.sort(key=lambda s: (local_upper_bound(g, s, variant), s))

    best_val: int | None = None
    best_s: tuple[int, ...] | None = None
    best_cert: PackingCertificate | None = None
    lbs: dict[tuple[int, ...], int] = {}
    pool = WorkBudget(budget_ms)
    scanned_all = True

    for s in subsets:
        if pool.exhausted:
            for rest_s in subsets[len(lbs):]:
                lbs[rest_s] = 0
            scanned_all = False
            break
        known_ub = None
        if best_val is not None and local_upper_bound(g, s, variant) >= best_val:
            hit, decisive_no, found = _try_reach(g, eid, s, variant, best_val, pool, cap)
            if hit:
                lbs[s] = best_val
                continue
            if not decisive_no:
                lbs[s] = found
                continue
            known_ub = best_val - 1
        cert = _local_solve(g, eid, s, variant, pool, cap, known_ub=known_ub)
        lbs[s] = cert.value
        if cert.status in (EXACT, ZERO) and (best_val is None or cert.value < best_val):
            best_val, best_s, best_cert = cert.value, s, cert

    if (scanned_all and best_val is not None
            and all(v >= best_val for v in lbs.values())):
        return GlobalResult(variant, k, best_val, EXACT, best_s, best_cert, pool.spent)
    value = min(lbs.values()) if lbs else 0
    return GlobalResult(variant, k, value, LOWER_BOUND, best_s, best_cert, pool.spent)


def global_at_least(g: Graph, k: int, t: int, variant: str,
                    budget_ms: int | None = None, cap: int = DEFAULT_CAP) -> str:
    """Decide whether every k-subset admits a disjoint family of size >= t.

    Returns "yes", "no", or "unknown".  Much cheaper than an exact global
    scan when only a lower bound needs checking.
    """
    _check_variant(variant)
    if k < 1 or t < 0:
        raise InputError("k must be >= 1 and t >= 0")
    _check_solver_size(g)
    if t == 0:
        return "yes"
    if k == 1:
        from .invariants import min_degree
        return "yes" if min_degree(g) >= t else "no"
    if k > g.n:
        return "yes" if (g.is_connected() and t <= 1) else "no"
    if not g.is_connected():
        return "no"
    eid = _eid_flat(g)
    pool = WorkBudget(budget_ms)
    unknown = False
    for s in combinations(range(g.n), k):
        if pool.exhausted:
            return "unknown"
        hit, decisive_no, _ = _try_reach(g, eid, s, variant, t, pool, cap)
        if hit:
            continue
        if decisive_no:
            return "no"
        unknown = True
        break
    return "unknown" if unknown else "yes"
