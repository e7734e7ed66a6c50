"""JIT kernels for canonical labelling of graphs on at most 63 vertices.

Mirrors the reference implementation in hamsq.iso: twin-class collapse,
connected-component split, colour refinement and branch-and-bound with
automorphism backjumps.  Adjacency masks are int64 bit rows; bit 63 is never
used, so signed arithmetic and lexicographic comparisons are safe.
"""

from __future__ import annotations

import numpy as np
from numba import njit

I64 = np.int64


@njit(cache=True)
def _row_gt(K, a, b, w):
    for t in range(w):
        if K[a, t] != K[b, t]:
            return K[a, t] > K[b, t]
    return False


@njit(cache=True)
def _refine(q, qrows, colors, K, order, tmp):
    """Refine colors in place to the stable neighbour-count partition; returns #colors.

    Incoming colors may reach 2q-1 right after individualization, so the count
    columns span 2q+2 slots (K has width 2q+3).
    """
    w = 2 * q + 3
    while True:
        for v in range(q):
            K[v, 0] = colors[v]
            for c in range(1, w):
                K[v, c] = 0
            m = qrows[v]
            u = 0
            while m:
                if m & 1:
                    K[v, 1 + colors[u]] += 1
                m >>= 1
                u += 1
        for i in range(q):
            order[i] = i
        for i in range(1, q):
            x = order[i]
            j = i - 1
            while j >= 0 and _row_gt(K, order[j], x, w):
                order[j + 1] = order[j]
                j -= 1
            order[j + 1] = x
        rank = 0
        tmp[order[0]] = 0
        for i in range(1, q):
            a = order[i - 1]
            b = order[i]
            same = True
            for t in range(w):
                if K[a, t] != K[b, t]:
                    same = False
                    break
            if not same:
                rank += 1
            tmp[b] = rank
        changed = False
        for v in range(q):
            if tmp[v] != colors[v]:
                changed = True
            colors[v] = tmp[v]
        if not changed:
            return rank + 1


@njit(cache=True)
def _expand_leaf(k, q, colors, weights, cliquef, qrows, order, offs, leafcode):
    for v in range(q):
        order[colors[v]] = v
    pos = 0
    for p in range(q):
        v = order[p]
        offs[v] = pos
        pos += weights[v]
    for v in range(q):
        nbr = I64(0)
        m = qrows[v]
        u = 0
        while m:
            if m & 1:
                nbr |= ((I64(1) << weights[u]) - 1) << offs[u]
            m >>= 1
            u += 1
        base = offs[v]
        w = weights[v]
        if cliquef[v]:
            blk = ((I64(1) << w) - 1) << base
            for t in range(w):
                leafcode[base + t] = nbr | (blk & ~(I64(1) << (base + t)))
        else:
            for t in range(w):
                leafcode[base + t] = nbr


@njit(cache=True)
def _canon_component(k, rows):
    out = np.zeros(k, I64)
    if k == 1:
        return out
    one = I64(1)

    # twin classes: open twins first, closed twins among the rest, then singletons
    class_id = np.full(k, -1, I64)
    cliquef = np.zeros(k, I64)
    q = 0
    for v in range(k):
        if class_id[v] != -1:
            continue
        cnt = 1
        for u in range(v + 1, k):
            if class_id[u] == -1 and rows[u] == rows[v]:
                cnt += 1
        if cnt >= 2:
            class_id[v] = q
            for u in range(v + 1, k):
                if class_id[u] == -1 and rows[u] == rows[v]:
                    class_id[u] = q
            cliquef[q] = 0
            q += 1
    for v in range(k):
        if class_id[v] != -1:
            continue
        cv = rows[v] | (one << v)
        cnt = 1
        for u in range(v + 1, k):
            if class_id[u] == -1 and (rows[u] | (one << u)) == cv:
                cnt += 1
        if cnt >= 2:
            class_id[v] = q
            for u in range(v + 1, k):
                if class_id[u] == -1 and (rows[u] | (one << u)) == cv:
                    class_id[u] = q
            cliquef[q] = 1
            q += 1
    for v in range(k):
        if class_id[v] == -1:
            class_id[v] = q
            cliquef[q] = 0
            q += 1

    weights = np.zeros(q, I64)
    for v in range(k):
        weights[class_id[v]] += 1
    starts = np.zeros(q + 1, I64)
    for i in range(q):
        starts[i + 1] = starts[i] + weights[i]
    fillpos = starts[:q].copy()
    members = np.zeros(k, I64)
    for v in range(k):
        c = class_id[v]
        members[fillpos[c]] = v
        fillpos[c] += 1
    member_mask = np.zeros(q, I64)
    for v in range(k):
        member_mask[class_id[v]] |= one << v
    qrows = np.zeros(q, I64)
    for i in range(q):
        rep = rows[members[starts[i]]]
        for j in range(q):
            if j != i and (rep & member_mask[j]) != 0:
                qrows[i] |= one << j

    # initial colours: rank classes by (weight, clique flag)
    cur = np.zeros(q, I64)
    iorder = np.zeros(q, I64)
    for i in range(q):
        iorder[i] = i
    for i in range(1, q):
        x = iorder[i]
        j = i - 1
        while j >= 0 and (
            weights[iorder[j]] > weights[x]
            or (weights[iorder[j]] == weights[x] and cliquef[iorder[j]] > cliquef[x])
        ):
            iorder[j + 1] = iorder[j]
            j -= 1
        iorder[j + 1] = x
    rank = 0
    cur[iorder[0]] = 0
    for i in range(1, q):
        a = iorder[i - 1]
        b = iorder[i]
        if weights[a] != weights[b] or cliquef[a] != cliquef[b]:
            rank += 1
        cur[b] = rank

    # DFS stacks
    maxd = q + 1
    colors_stk = np.zeros((maxd, q), I64)
    cand_stk = np.zeros((maxd, q), I64)
    cand_len = np.zeros(maxd, I64)
    cand_idx = np.zeros(maxd, I64)
    done_stk = np.zeros(maxd, I64)
    path = np.zeros(maxd, I64)
    gcap = 4 * q + 16
    gens = np.zeros((gcap, q), I64)
    gcount = 0
    best_code = np.zeros(k, I64)
    best_perm = np.zeros(q, I64)
    have_best = False
    K = np.zeros((q, 2 * q + 3), I64)
    order_scr = np.zeros(q, I64)
    tmp_scr = np.zeros(q, I64)
    offs_scr = np.zeros(q, I64)
    leafcode = np.zeros(k, I64)
    binv = np.zeros(q, I64)
    sig = np.zeros(q, I64)
    ccount = np.zeros(q, I64)

    depth = 0
    entering = True
    just_pushed = False
    backjump = -1
    while True:
        if entering:
            nc = _refine(q, qrows, cur, K, order_scr, tmp_scr)
            if nc == q:
                _expand_leaf(k, q, cur, weights, cliquef, qrows, order_scr, offs_scr, leafcode)
                if not have_best:
                    for t in range(k):
                        best_code[t] = leafcode[t]
                    for v in range(q):
                        best_perm[v] = cur[v]
                    have_best = True
                else:
                    cmp = 0
                    for t in range(k):
                        if leafcode[t] != best_code[t]:
                            cmp = -1 if leafcode[t] < best_code[t] else 1
                            break
                    if cmp < 0:
                        for t in range(k):
                            best_code[t] = leafcode[t]
                        for v in range(q):
                            best_perm[v] = cur[v]
                    elif cmp == 0:
                        for v in range(q):
                            binv[best_perm[v]] = v
                        nontrivial = False
                        for v in range(q):
                            sig[v] = binv[cur[v]]
                            if sig[v] != v:
                                nontrivial = True
                        if nontrivial:
                            if gcount < gcap:
                                for v in range(q):
                                    gens[gcount, v] = sig[v]
                                gcount += 1
                            for d in range(depth):
                                pd = path[d]
                                if sig[pd] != pd:
                                    if done_stk[d] >> sig[pd] & 1:
                                        backjump = d
                                    break
                entering = False
                continue
            i = depth
            for v in range(q):
                colors_stk[i, v] = cur[v]
            for c in range(nc):
                ccount[c] = 0
            for v in range(q):
                ccount[cur[v]] += 1
            cellcolor = -1
            for c in range(nc):
                if ccount[c] >= 2:
                    cellcolor = c
                    break
            nl = 0
            for v in range(q):
                if cur[v] == cellcolor:
                    cand_stk[i, nl] = v
                    nl += 1
            cand_len[i] = nl
            cand_idx[i] = 0
            done_stk[i] = 0
            depth += 1
            entering = False
            just_pushed = True
            continue

        # advance the top frame
        if backjump >= 0:
            depth = backjump + 1
            i = depth - 1
            done_stk[i] |= one << path[i]
            backjump = -1
        elif depth > 0 and not just_pushed:
            i = depth - 1
            done_stk[i] |= one << path[i]
        just_pushed = False
        if depth == 0:
            break
        i = depth - 1
        found = -1
        while cand_idx[i] < cand_len[i]:
            v = cand_stk[i, cand_idx[i]]
            cand_idx[i] += 1
            if done_stk[i] >> v & 1:
                continue
            if gcount > 0 and done_stk[i] != 0:
                closure = done_stk[i]
                changed = True
                while changed:
                    changed = False
                    for gi in range(gcount):
                        ok = True
                        for d in range(i):
                            pd = path[d]
                            if gens[gi, pd] != pd:
                                ok = False
                                break
                        if not ok:
                            continue
                        add = I64(0)
                        m = closure
                        u = 0
                        while m:
                            if m & 1:
                                add |= one << gens[gi, u]
                            m >>= 1
                            u += 1
                        if add & ~closure:
                            closure |= add
                            changed = True
                if closure >> v & 1:
                    done_stk[i] |= one << v
                    continue
            found = v
            break
        if found == -1:
            depth -= 1
            continue
        path[i] = found
        for v in range(q):
            cur[v] = 2 * colors_stk[i, v] + (0 if v == found else 1)
        entering = True

    for t in range(k):
        out[t] = best_code[t]
    return out


@njit(cache=True)
def canon_masks_fast(rows):
    """Canonical adjacency masks of a labelled graph given as int64 bit rows."""
    n = rows.shape[0]
    out = np.zeros(n, I64)
    if n <= 1:
        return out
    one = I64(1)
    comp_of = np.full(n, -1, I64)
    ncomp = 0
    for v in range(n):
        if comp_of[v] != -1:
            continue
        compmask = one << v
        frontier = compmask
        while frontier:
            nxt = I64(0)
            m = frontier
            u = 0
            while m:
                if m & 1:
                    nxt |= rows[u]
                m >>= 1
                u += 1
            frontier = nxt & ~compmask
            compmask |= nxt
        m = compmask
        u = 0
        while m:
            if m & 1:
                comp_of[u] = ncomp
            m >>= 1
            u += 1
        ncomp += 1

    comp_codes = np.zeros((ncomp, n), I64)
    comp_size = np.zeros(ncomp, I64)
    loc = np.zeros(n, I64)
    for c in range(ncomp):
        kc = 0
        for v in range(n):
            if comp_of[v] == c:
                loc[v] = kc
                kc += 1
        comp_size[c] = kc
        sub = np.zeros(kc, I64)
        for v in range(n):
            if comp_of[v] == c:
                m = rows[v]
                u = 0
                while m:
                    if m & 1:
                        sub[loc[v]] |= one << loc[u]
                    m >>= 1
                    u += 1
        code = _canon_component(kc, sub)
        for t in range(kc):
            comp_codes[c, t] = code[t]

    # sort components by (size, code rows lexicographically)
    cidx = np.zeros(ncomp, I64)
    for c in range(ncomp):
        cidx[c] = c
    for i in range(1, ncomp):
        x = cidx[i]
        j = i - 1
        while j >= 0:
            a = cidx[j]
            gt = False
            if comp_size[a] != comp_size[x]:
                gt = comp_size[a] > comp_size[x]
            else:
                for t in range(comp_size[x]):
                    if comp_codes[a, t] != comp_codes[x, t]:
                        gt = comp_codes[a, t] > comp_codes[x, t]
                        break
            if not gt:
                break
            cidx[j + 1] = a
            j -= 1
        cidx[j + 1] = x

    off = 0
    for p in range(ncomp):
        c = cidx[p]
        kc = comp_size[c]
        for t in range(kc):
            out[off + t] = comp_codes[c, t] << off
        off += kc
    return out


@njit(cache=True)
def expand_children_fast(n, rows, cap, out_codes, out_orders):
    """Canonical codes of all one-edge extensions of an isolated-free graph.

    rows: int64 bit rows over vertices 0..n-1, all non-isolated (n >= 2 in the
    intended use; n == 0 seeds the single-edge graph).  cap bounds the child's
    non-isolated vertex count.  Children are: a new edge between existing
    vertices, a pendant edge to one fresh vertex, and a disjoint fresh edge.
    Writes child codes padded with zero rows into out_codes and the child
    order into out_orders; returns the child count.
    """
    one = I64(1)
    cnt = 0
    if n == 0:
        if cap >= 2:
            buf = np.zeros(2, I64)
            buf[0] = 2
            buf[1] = 1
            code = canon_masks_fast(buf)
            out_orders[cnt] = 2
            for t in range(2):
                out_codes[cnt, t] = code[t]
            cnt += 1
        return cnt
    for v in range(n):
        for u in range(v + 1, n):
            if rows[v] >> u & 1:
                continue
            buf = np.zeros(n, I64)
            for t in range(n):
                buf[t] = rows[t]
            buf[v] |= one << u
            buf[u] |= one << v
            code = canon_masks_fast(buf)
            out_orders[cnt] = n
            for t in range(n):
                out_codes[cnt, t] = code[t]
            cnt += 1
    if n + 1 <= cap:
        for v in range(n):
            buf = np.zeros(n + 1, I64)
            for t in range(n):
                buf[t] = rows[t]
            buf[v] |= one << n
            buf[n] = one << v
            code = canon_masks_fast(buf)
            out_orders[cnt] = n + 1
            for t in range(n + 1):
                out_codes[cnt, t] = code[t]
            cnt += 1
    if n + 2 <= cap:
        buf = np.zeros(n + 2, I64)
        for t in range(n):
            buf[t] = rows[t]
        buf[n] = one << (n + 1)
        buf[n + 1] = one << n
        code = canon_masks_fast(buf)
        out_orders[cnt] = n + 2
        for t in range(n + 2):
            out_codes[cnt, t] = code[t]
        cnt += 1
    return cnt
