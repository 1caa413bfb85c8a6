"""Pure-Python search kernels.

This module is the reference twin of the compiled kernel (_kernel.pyx).
Both must visit search nodes in exactly the same order and count work units
at exactly the same points, so that values, witness families, completion
flags, and budget cutoffs agree bit-for-bit across backends.

Work units are abstract: one unit per path-extension attempt, per tree
search node, per extra-vertex set considered, per packing candidate scan.
Budgets expressed in units make every result machine-independent.

Terminal paths and trees:
  * a terminal path contains every terminal and both its endpoints are
    terminals; it is emitted oriented from its smaller endpoint;
  * a terminal tree contains every terminal and all its leaves are
    terminals; it is emitted as a sorted tuple of canonical edges.
"""

from __future__ import annotations

from itertools import combinations

BACKEND_NAME = "pure"


def enumerate_paths(n, adj, smask, cap, budget):
    """Enumerate terminal paths in increasing (length, start, sequence) order.

    adj: neighbor bitmasks.  smask: terminal bitmask with >= 2 bits.
    Returns (paths, complete, units); complete is False when the cap or the
    budget stopped enumeration early.
    """
    units = 0
    out = []
    terms = [v for v in range(n) if (smask >> v) & 1]
    k = len(terms)
    for length in range(k - 1, n):
        for s in terms:
            seq = [s]
            used = 1 << s
            cur = [0]
            while seq:
                depth = len(seq) - 1
                if depth == length:
                    t = seq[-1]
                    if t > s and (smask >> t) & 1 and (smask & ~used) == 0:
                        out.append(tuple(seq))
                        if len(out) >= cap:
                            return out, False, units
                    used &= ~(1 << seq.pop())
                    cur.pop()
                    continue
                rest = (adj[seq[-1]] & ~used) >> cur[-1]
                if rest == 0:
                    used &= ~(1 << seq.pop())
                    cur.pop()
                    continue
                w = cur[-1] + (rest & -rest).bit_length() - 1
                cur[-1] = w + 1
                units += 1
                if units >= budget:
                    return out, False, units
                if (smask & ~used & ~(1 << w)).bit_count() > length - depth - 1:
                    continue
                seq.append(w)
                used |= 1 << w
                cur.append(0)
    return out, True, units


def enumerate_trees(n, adj, edges, smask, cap, budget):
    """Enumerate terminal trees ordered by (extra vertex set, edge list).

    Extra vertex sets are scanned by increasing size, lexicographic within a
    size.  For each set X the spanning trees of the subgraph induced on
    terminals + X whose leaves are all terminals are listed by include-first
    search over the canonical edge list.  Shared by both backends.
    """
    units = 0
    out = []
    others = [v for v in range(n) if not (smask >> v) & 1]
    k = n - len(others)
    for xsize in range(len(others) + 1):
        for xset in combinations(others, xsize):
            units += 1
            if units >= budget:
                return out, False, units
            umask = smask
            for x in xset:
                umask |= 1 << x
            # every extra vertex must be internal, so it needs degree >= 2
            if any((adj[x] & umask).bit_count() < 2 for x in xset):
                continue
            sub = [e for e in edges if (umask >> e[0]) & 1 and (umask >> e[1]) & 1]
            nu = k + xsize
            if len(sub) < nu - 1:
                continue
            done, units = _span_trees(sub, nu, umask, xset, out, cap, budget, units)
            if not done:
                return out, False, units
    return out, True, units


def _span_trees(sub, nu, umask, xset, out, cap, budget, units):
    """Append spanning trees of the induced subgraph whose leaves are terminals.

    Returns (done, units); done is False when the cap or budget was hit.
    """
    verts = [v for v in range(umask.bit_length()) if (umask >> v) & 1]
    pos = {v: i for i, v in enumerate(verts)}
    parent = list(range(nu))

    # no path compression: the include branch must roll back a union with a
    # single assignment, which compression side effects would corrupt
    def find(a):
        while parent[a] != a:
            a = parent[a]
        return a

    picked = []
    deg = {v: 0 for v in verts}

    def spans(idx):
        # can the picked edges plus the undecided suffix still connect all?
        p2 = [find(i) for i in range(nu)]

        def f2(a):
            while p2[a] != a:
                a = p2[a]
            return a

        comps = len({f2(i) for i in range(nu)})
        if comps == 1:
            return True
        for u, v in sub[idx:]:
            ru, rv = f2(pos[u]), f2(pos[v])
            if ru != rv:
                p2[ru] = rv
                comps -= 1
                if comps == 1:
                    return True
        return False

    def rec(idx):
        # returns 0 = done, 1 = budget hit, 2 = cap hit
        nonlocal units
        units += 1
        if units >= budget:
            return 1
        if len(picked) == nu - 1:
            if all(deg[x] >= 2 for x in xset):
                out.append(tuple(picked))
                if len(out) >= cap:
                    return 2
            return 0
        if idx == len(sub):
            return 0
        if nu - 1 - len(picked) > len(sub) - idx:
            return 0
        if not spans(idx):
            return 0
        u, v = sub[idx]
        ru, rv = find(pos[u]), find(pos[v])
        if ru != rv:
            parent[ru] = rv
            picked.append(sub[idx])
            deg[u] += 1
            deg[v] += 1
            st = rec(idx + 1)
            deg[u] -= 1
            deg[v] -= 1
            picked.pop()
            parent[ru] = ru
            if st:
                return st
        return rec(idx + 1)

    st = rec(0)
    return st == 0, units


def solve_pack(n, m, eid, cands, is_tree, smask, internal, slots_per, zcap,
               degs, target, prune_below_target, budget):
    """Maximum disjoint-family search over candidate footprints.

    Candidates are vertex tuples (paths) or edge tuples (trees).  Two
    candidates conflict when they share an edge, or, for internal variants,
    when they share a vertex outside the terminal set.  Finds a maximum
    pairwise compatible family; with target > 0 the search stops as soon as
    a family of that size is found, and with prune_below_target it also
    discards subtrees that cannot reach the target (decision mode: the
    returned best is then only a valid lower bound unless complete).

    Returns (best, best_sel, complete, units).
    """
    big = len(cands)
    k = len(degs)
    terms = [v for v in range(n) if (smask >> v) & 1]
    tpos = {v: i for i, v in enumerate(terms)}
    navail = n - k

    fps = []
    ne = []
    ev = []
    tu = []
    for cand in cands:
        if is_tree:
            ed = cand
            vmask = 0
            for u, v in ed:
                vmask |= (1 << u) | (1 << v)
        else:
            vmask = 0
            for v in cand:
                vmask |= 1 << v
            ed = [(cand[i], cand[i + 1]) if cand[i] < cand[i + 1]
                  else (cand[i + 1], cand[i]) for i in range(len(cand) - 1)]
        fp = (vmask & ~smask) if internal else 0
        row = [0] * k
        for u, v in ed:
            fp |= 1 << (n + eid[u * n + v])
            if (smask >> u) & 1:
                row[tpos[u]] += 1
            if (smask >> v) & 1:
                row[tpos[v]] += 1
        fps.append(fp)
        ne.append(len(ed))
        ev.append((vmask & ~smask).bit_count())
        tu.extend(row)

    best = 0
    best_sel: list[int] = []
    sel: list[int] = []
    used_tu = [0] * k
    acc = 0
    u_ne = 0
    u_ev = 0
    u_z = 0
    units = 0

    def rec(start):
        # returns 0 = exhausted, 1 = budget hit, 2 = target reached
        nonlocal acc, u_ne, u_ev, u_z, units, best, best_sel
        for i in range(start, big):
            units += 1
            if units >= budget:
                return 1
            f = fps[i]
            if f & acc:
                continue
            saved = acc
            acc = saved | f
            u_ne += ne[i]
            u_ev += ev[i]
            zero_extra = 1 if ev[i] == 0 else 0
            u_z += zero_extra
            base = i * k
            for t in range(k):
                used_tu[t] += tu[base + t]
            sel.append(i)
            st = 0
            if len(sel) > best:
                best = len(sel)
                best_sel = sel.copy()
                if target and best >= target:
                    st = 2
            if st == 0:
                fut = degs[0] - used_tu[0]
                ssum = 0
                for t in range(k):
                    d = degs[t] - used_tu[t]
                    if d < fut:
                        fut = d
                    ssum += d
                x = ssum // slots_per
                if x < fut:
                    fut = x
                x = (m - u_ne) // (k - 1)
                if x < fut:
                    fut = x
                if internal:
                    x = (navail - u_ev) + (zcap - u_z if zcap > u_z else 0)
                    if x < fut:
                        fut = x
                x = big - i - 1
                if x < fut:
                    fut = x
                pot = len(sel) + fut
                if pot > best and (not prune_below_target or target == 0 or pot >= target):
                    st = rec(i + 1)
            sel.pop()
            for t in range(k):
                used_tu[t] -= tu[base + t]
            u_z -= zero_extra
            u_ev -= ev[i]
            u_ne -= ne[i]
            acc = saved
            if st:
                return st
        return 0

    status = rec(0)
    return best, best_sel, status == 0, units
