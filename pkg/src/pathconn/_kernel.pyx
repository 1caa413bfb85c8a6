# cython: language_level=3
"""Compiled search kernels.

This module is the compiled twin of _pure.py.  Both visit search nodes in
exactly the same order and count work units at exactly the same points, so
values, witness families, completion flags, and budget cutoffs agree
bit-for-bit across backends.  Any change here must be mirrored in _pure.py
and vice versa; the backend parity tests enforce this on sampled inputs.

Vertex bitmasks fit one 64-bit word (the solvers cap graphs at 64 vertices);
packing footprints carry vertex bits plus one bit per edge and are stored as
fixed-width multiword bitsets.

Tree enumeration is shared with the pure backend (re-exported below): its
cost is dominated by the packing stage, so only paths and packing are
compiled.
"""

from libc.stdlib cimport calloc, free
from libc.string cimport memcpy

from ._pure import enumerate_trees  # noqa: F401  (shared implementation)

cdef extern from *:
    """
    #include <stdint.h>
    static inline int pk_ctz64(uint64_t x) { return (int)__builtin_ctzll(x); }
    static inline int pk_pop64(uint64_t x) { return (int)__builtin_popcountll(x); }
    """
    int pk_ctz64(unsigned long long x) nogil
    int pk_pop64(unsigned long long x) nogil

ctypedef unsigned long long u64

BACKEND_NAME = "compiled"

# budgets at or above this are unreachable in any terminating run, so larger
# Python ints are clamped to it rather than overflowing the C conversion
cdef long long _INF_UNITS = <long long> 1 << 62


cdef long long _clamp(object value):
    if value > (<object> _INF_UNITS):
        return _INF_UNITS
    return <long long> value


def enumerate_paths(int n, adj, smask, cap, budget):
    """Enumerate terminal paths in increasing (length, start, sequence) order.

    adj: neighbor bitmasks.  smask: terminal bitmask with >= 2 bits.
    Returns (paths, complete, units); complete is False when the cap or the
    budget stopped enumeration early.
    """
    cdef long long cap_c = _clamp(cap)
    cdef long long budget_c = _clamp(budget)
    cdef u64 smask_c = <u64> smask
    cdef long long units = 0
    cdef list out = []
    cdef u64 *adjc = <u64 *> calloc(n if n > 0 else 1, sizeof(u64))
    cdef int *terms = <int *> calloc(n if n > 0 else 1, sizeof(int))
    cdef int *seq = <int *> calloc(n + 1, sizeof(int))
    cdef int *cur = <int *> calloc(n + 1, sizeof(int))
    if adjc == NULL or terms == NULL or seq == NULL or cur == NULL:
        free(adjc); free(terms); free(seq); free(cur)
        raise MemoryError()
    cdef int k = 0
    cdef int v, length, si, s, top, depth, t, w, shift, j
    cdef u64 used, rest
    try:
        for v in range(n):
            adjc[v] = <u64> adj[v]
            if (smask_c >> v) & 1:
                terms[k] = v
                k += 1
        for length in range(k - 1, n):
            for si in range(k):
                s = terms[si]
                seq[0] = s
                used = (<u64> 1) << s
                cur[0] = 0
                top = 1
                while top > 0:
                    depth = top - 1
                    if depth == length:
                        t = seq[top - 1]
                        if t > s and (smask_c >> t) & 1 and (smask_c & ~used) == 0:
                            out.append(tuple([seq[j] for j in range(top)]))
                            if <long long> len(out) >= cap_c:
                                return out, False, units
                        top -= 1
                        used &= ~((<u64> 1) << seq[top])
                        continue
                    shift = cur[top - 1]
                    rest = 0 if shift >= 64 else (adjc[seq[top - 1]] & ~used) >> shift
                    if rest == 0:
                        top -= 1
                        used &= ~((<u64> 1) << seq[top])
                        continue
                    w = shift + pk_ctz64(rest)
                    cur[top - 1] = w + 1
                    units += 1
                    if units >= budget_c:
                        return out, False, units
                    if pk_pop64(smask_c & ~used & ~((<u64> 1) << w)) > length - depth - 1:
                        continue
                    seq[top] = w
                    used |= (<u64> 1) << w
                    cur[top] = 0
                    top += 1
        return out, True, units
    finally:
        free(adjc)
        free(terms)
        free(seq)
        free(cur)


ctypedef struct PackCtx:
    long long units
    long long budget
    int big
    int k
    int nwords
    int m
    int navail
    int slots_per
    int zcap
    int target
    bint internal
    bint prune
    u64 *fps
    int *ne
    int *ev
    int *tu
    int *degs
    u64 *acc
    u64 *save
    int *sel
    int sel_len
    int *used_tu
    int u_ne
    int u_ev
    int u_z
    int best
    int *best_sel
    int best_len


cdef int _pack_rec(PackCtx *c, int start) nogil:
    # returns 0 = exhausted, 1 = budget hit, 2 = target reached
    cdef int i, t, w, stt, zero_extra, base, fut, ssum, d, x, pot
    cdef bint conflict
    cdef u64 *f
    for i in range(start, c.big):
        c.units += 1
        if c.units >= c.budget:
            return 1
        f = c.fps + (<size_t> i) * c.nwords
        conflict = False
        for w in range(c.nwords):
            if f[w] & c.acc[w]:
                conflict = True
                break
        if conflict:
            continue
        memcpy(c.save + (<size_t> c.sel_len) * c.nwords, c.acc,
               c.nwords * sizeof(u64))
        for w in range(c.nwords):
            c.acc[w] |= f[w]
        c.u_ne += c.ne[i]
        c.u_ev += c.ev[i]
        zero_extra = 1 if c.ev[i] == 0 else 0
        c.u_z += zero_extra
        base = i * c.k
        for t in range(c.k):
            c.used_tu[t] += c.tu[base + t]
        c.sel[c.sel_len] = i
        c.sel_len += 1
        stt = 0
        if c.sel_len > c.best:
            c.best = c.sel_len
            memcpy(c.best_sel, c.sel, c.sel_len * sizeof(int))
            c.best_len = c.sel_len
            if c.target != 0 and c.best >= c.target:
                stt = 2
        if stt == 0:
            fut = c.degs[0] - c.used_tu[0]
            ssum = 0
            for t in range(c.k):
                d = c.degs[t] - c.used_tu[t]
                if d < fut:
                    fut = d
                ssum += d
            x = ssum // c.slots_per
            if x < fut:
                fut = x
            x = (c.m - c.u_ne) // (c.k - 1)
            if x < fut:
                fut = x
            if c.internal:
                x = (c.navail - c.u_ev) + (c.zcap - c.u_z if c.zcap > c.u_z else 0)
                if x < fut:
                    fut = x
            x = c.big - i - 1
            if x < fut:
                fut = x
            pot = c.sel_len + fut
            if pot > c.best and (not c.prune or c.target == 0 or pot >= c.target):
                stt = _pack_rec(c, i + 1)
        c.sel_len -= 1
        for t in range(c.k):
            c.used_tu[t] -= c.tu[base + t]
        c.u_z -= zero_extra
        c.u_ev -= c.ev[i]
        c.u_ne -= c.ne[i]
        memcpy(c.acc, c.save + (<size_t> c.sel_len) * c.nwords,
               c.nwords * sizeof(u64))
        if stt:
            return stt
    return 0


def solve_pack(int n, int m, eid, cands, bint is_tree, smask, bint internal,
               int slots_per, int zcap, degs, int target,
               bint prune_below_target, budget):
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
    cdef int big = len(cands)
    cdef int k = len(degs)
    cdef u64 smask_c = <u64> smask
    cdef int nwords = (n + m + 63) >> 6
    cdef int maxsel = (m if big > m else big) + 2
    cdef PackCtx c
    cdef u64 *fps = <u64 *> calloc((<size_t> big) * nwords + 1, sizeof(u64))
    cdef int *ne = <int *> calloc(big + 1, sizeof(int))
    cdef int *ev = <int *> calloc(big + 1, sizeof(int))
    cdef int *tu = <int *> calloc((<size_t> big) * k + 1, sizeof(int))
    cdef int *degsc = <int *> calloc(k + 1, sizeof(int))
    cdef u64 *acc = <u64 *> calloc(nwords, sizeof(u64))
    cdef u64 *save = <u64 *> calloc((<size_t> maxsel) * nwords, sizeof(u64))
    cdef int *sel = <int *> calloc(maxsel, sizeof(int))
    cdef int *best_sel = <int *> calloc(maxsel, sizeof(int))
    cdef int *used_tu = <int *> calloc(k + 1, sizeof(int))
    cdef int *eidc = <int *> calloc((<size_t> n) * n + 1, sizeof(int))
    cdef int *tposc = <int *> calloc(n + 1, sizeof(int))
    if (fps == NULL or ne == NULL or ev == NULL or tu == NULL or degsc == NULL
            or acc == NULL or save == NULL or sel == NULL or best_sel == NULL
            or used_tu == NULL or eidc == NULL or tposc == NULL):
        free(fps); free(ne); free(ev); free(tu); free(degsc); free(acc)
        free(save); free(sel); free(best_sel); free(used_tu); free(eidc)
        free(tposc)
        raise MemoryError()
    cdef int i, j, t, u, v, a, b, nt, bit, L, status
    cdef u64 vmask
    cdef u64 *fp
    cdef object cand, e
    try:
        for t in range(k):
            degsc[t] = <int> degs[t]
        for i in range(n * n):
            eidc[i] = <int> eid[i]
        nt = 0
        for v in range(n):
            tposc[v] = -1
            if (smask_c >> v) & 1:
                tposc[v] = nt
                nt += 1
        for i in range(big):
            cand = cands[i]
            fp = fps + (<size_t> i) * nwords
            vmask = 0
            L = len(cand)
            if is_tree:
                ne[i] = L
                for j in range(L):
                    e = cand[j]
                    u = <int> e[0]
                    v = <int> e[1]
                    vmask |= ((<u64> 1) << u) | ((<u64> 1) << v)
                    bit = n + eidc[u * n + v]
                    fp[bit >> 6] |= (<u64> 1) << (bit & 63)
                    if (smask_c >> u) & 1:
                        tu[i * k + tposc[u]] += 1
                    if (smask_c >> v) & 1:
                        tu[i * k + tposc[v]] += 1
            else:
                ne[i] = L - 1
                for j in range(L):
                    vmask |= (<u64> 1) << (<int> cand[j])
                for j in range(L - 1):
                    a = <int> cand[j]
                    b = <int> cand[j + 1]
                    u = a if a < b else b
                    v = b if a < b else a
                    bit = n + eidc[u * n + v]
                    fp[bit >> 6] |= (<u64> 1) << (bit & 63)
                    if (smask_c >> u) & 1:
                        tu[i * k + tposc[u]] += 1
                    if (smask_c >> v) & 1:
                        tu[i * k + tposc[v]] += 1
            if internal:
                fp[0] |= vmask & ~smask_c
            ev[i] = pk_pop64(vmask & ~smask_c)
        c.units = 0
        c.budget = _clamp(budget)
        c.big = big
        c.k = k
        c.nwords = nwords
        c.m = m
        c.navail = n - k
        c.slots_per = slots_per
        c.zcap = zcap
        c.target = target
        c.internal = internal
        c.prune = prune_below_target
        c.fps = fps
        c.ne = ne
        c.ev = ev
        c.tu = tu
        c.degs = degsc
        c.acc = acc
        c.save = save
        c.sel = sel
        c.sel_len = 0
        c.used_tu = used_tu
        c.u_ne = 0
        c.u_ev = 0
        c.u_z = 0
        c.best = 0
        c.best_sel = best_sel
        c.best_len = 0
        status = _pack_rec(&c, 0)
        return (c.best, [best_sel[j] for j in range(c.best_len)],
                status == 0, c.units)
    finally:
        free(fps)
        free(ne)
        free(ev)
        free(tu)
        free(degsc)
        free(acc)
        free(save)
        free(sel)
        free(best_sel)
        free(used_tu)
        free(eidc)
        free(tposc)
