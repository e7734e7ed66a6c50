"""Canonical forms, isomorphism, subgraph embedding and clique number.

The canonical labeler follows the classical individualization-refinement
scheme: split off twin classes, decompose into connected components, refine
by iterated neighbour-colour counting, and branch over the first
non-singleton cell.  Discovered automorphisms prune sibling branches via a
backjump rule, which keeps highly symmetric inputs (stars, cliques, unions
of small components) cheap without a full-strength group engine.

A numba kernel (hamsq._canonfast) accelerates graphs on at most 63 vertices;
this module holds the reference implementation, used directly for larger
orders and as the cross-check oracle in the test suite.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .core import Graph, _bits, _popcount, encode_graph6
from .errors import EmbeddingPreconditionError

try:
    from ._canonfast import canon_masks_fast

    _HAVE_FAST = True
except Exception:  # pragma: no cover - numba missing or failed to compile
    canon_masks_fast = None
    _HAVE_FAST = False


# -- canonical form ----------------------------------------------------------


@dataclass(frozen=True)
class CanonicalCode:
    """Canonical certificate: graph6 of the canonically relabelled graph."""

    code: str
    policy: str


def canon_masks(n: int, rows: Sequence[int], use_fast: bool = True) -> tuple[int, ...]:
    """Canonical adjacency masks for the labelled graph (no isolated-vertex policy)."""
    if n <= 1:
        return tuple(rows)
    if use_fast and _HAVE_FAST and n <= 63:
        import numpy as np

        arr = np.zeros(n, dtype=np.int64)
        for v in range(n):
            arr[v] = rows[v]
        out = canon_masks_fast(arr)
        return tuple(int(x) for x in out)
    return _canon_masks_py(n, rows)


def canonical_graph(g: Graph, policy: str = "drop") -> Graph:
    """Canonically labelled copy; policy 'drop' removes isolated vertices first."""
    if policy not in ("drop", "keep"):
        raise ValueError(f"unknown isolated-vertex policy {policy!r}")
    h = g.drop_isolated() if policy == "drop" else g
    return Graph(h.order, canon_masks(h.order, h.rows))


def canonical_form(g: Graph, policy: str = "drop") -> CanonicalCode:
    return CanonicalCode(encode_graph6(canonical_graph(g, policy)), policy)


def is_isomorphic(g: Graph, h: Graph, policy: str = "drop") -> bool:
    if policy == "keep" and g.order != h.order:
        return False
    return canonical_form(g, policy) == canonical_form(h, policy)


# -- reference implementation -------------------------------------------------


def _canon_masks_py(n: int, rows: Sequence[int]) -> tuple[int, ...]:
    comps = []
    seen = 0
    for v in range(n):
        if seen >> v & 1:
            continue
        comp = 1 << v
        frontier = 1 << v
        while frontier:
            nxt = 0
            for u in _bits(frontier):
                nxt |= rows[u]
            frontier = nxt & ~comp
            comp |= nxt
        seen |= comp
        verts = list(_bits(comp))
        index = {u: i for i, u in enumerate(verts)}
        sub = [0] * len(verts)
        for i, u in enumerate(verts):
            for w in _bits(rows[u]):
                sub[i] |= 1 << index[w]
        comps.append(_canon_component_py(len(verts), sub))
    comps.sort(key=lambda masks: (len(masks), masks))
    out = []
    offset = 0
    for masks in comps:
        out.extend(r << offset for r in masks)
        offset += len(masks)
    return tuple(out)


def _twin_classes(k: int, rows: Sequence[int]):
    """Partition into open-twin classes, closed-twin classes and singletons.

    Open twins (equal neighbourhoods) are pairwise non-adjacent, closed twins
    (equal closed neighbourhoods) pairwise adjacent, and no vertex can sit in
    both kinds of class, so the collapse is well defined.
    """
    open_groups: dict[int, list[int]] = {}
    closed_groups: dict[int, list[int]] = {}
    for v in range(k):
        open_groups.setdefault(rows[v], []).append(v)
        closed_groups.setdefault(rows[v] | 1 << v, []).append(v)
    classes = []
    used = [False] * k
    for key in sorted(open_groups):
        members = open_groups[key]
        if len(members) >= 2:
            classes.append((members, False))
            for v in members:
                used[v] = True
    for key in sorted(closed_groups):
        members = [v for v in closed_groups[key] if not used[v]]
        if len(members) >= 2:
            classes.append((members, True))
            for v in members:
                used[v] = True
    for v in range(k):
        if not used[v]:
            classes.append(([v], False))
    classes.sort(key=lambda c: c[0][0])
    return classes


def _canon_component_py(k: int, rows: Sequence[int]) -> tuple[int, ...]:
    if k == 1:
        return (0,)
    classes = _twin_classes(k, rows)
    q = len(classes)
    member_mask = []
    for members, _ in classes:
        m = 0
        for v in members:
            m |= 1 << v
        member_mask.append(m)
    qrows = [0] * q
    for i, (members, _) in enumerate(classes):
        rep = rows[members[0]]
        for j in range(q):
            if j != i and rep & member_mask[j]:
                qrows[i] |= 1 << j
    weights = [len(members) for members, _ in classes]
    cliquef = [1 if is_clique else 0 for _, is_clique in classes]

    init = _rank_colors([(weights[v], cliquef[v]) for v in range(q)])

    best: dict = {"code": None, "perm": None}
    gens: list[list[int]] = []
    path: list[int] = []
    frames_done: list[set] = []

    def refine(colors: list[int]) -> list[int]:
        # individualized colors can reach 2q-1 before the first re-ranking
        while True:
            keys = []
            for v in range(q):
                counts = [0] * (2 * q + 2)
                for u in _bits(qrows[v]):
                    counts[colors[u]] += 1
                keys.append((colors[v], tuple(counts)))
            new = _rank_colors(keys)
            if new == colors:
                return colors
            colors = new

    def expand(colors: list[int]) -> tuple[int, ...]:
        # colors is discrete: quotient position of class v is colors[v]
        order = [0] * q
        for v in range(q):
            order[colors[v]] = v
        offset = [0] * q
        pos = 0
        full_pos: list[list[int]] = [[] for _ in range(q)]
        for p, v in enumerate(order):
            offset[p] = pos
            full_pos[v] = list(range(pos, pos + weights[v]))
            pos += weights[v]
        out = [0] * k
        for v in range(q):
            nbr_bits = 0
            for u in _bits(qrows[v]):
                for x in full_pos[u]:
                    nbr_bits |= 1 << x
            for x in full_pos[v]:
                row = nbr_bits
                if cliquef[v]:
                    for y in full_pos[v]:
                        if y != x:
                            row |= 1 << y
                out[x] = row
        return tuple(out)

    def orbit_closure(done: set, depth: int) -> set:
        usable = [s for s in gens if all(s[path[d]] == path[d] for d in range(depth))]
        if not usable:
            return set(done)
        closure = set(done)
        changed = True
        while changed:
            changed = False
            for s in usable:
                for v in list(closure):
                    if s[v] not in closure:
                        closure.add(s[v])
                        changed = True
        return closure

    def dfs(colors: list[int], depth: int) -> Optional[int]:
        colors = refine(colors)
        ncolors = max(colors) + 1 if q else 0
        if ncolors == q:
            code = expand(colors)
            if best["code"] is None or code < best["code"]:
                best["code"] = code
                best["perm"] = colors[:]
                return None
            if code == best["code"]:
                binv = [0] * q
                for v in range(q):
                    binv[best["perm"][v]] = v
                sigma = [binv[colors[v]] for v in range(q)]
                if any(sigma[v] != v for v in range(q)):
                    gens.append(sigma)
                    for d in range(depth):
                        if sigma[path[d]] != path[d]:
                            if sigma[path[d]] in frames_done[d]:
                                return d
                            break
            return None
        cellcolor = min(c for c in range(ncolors) if sum(1 for x in colors if x == c) >= 2)
        cand = [v for v in range(q) if colors[v] == cellcolor]
        done: set = set()
        frames_done.append(done)
        try:
            for v in cand:
                if v in orbit_closure(done, depth):
                    done.add(v)
                    continue
                child = [2 * c + (0 if u == v else 1) for u, c in enumerate(colors)]
                path.append(v)
                r = dfs(child, depth + 1)
                path.pop()
                done.add(v)
                if r is not None and r < depth:
                    return r
            return None
        finally:
            frames_done.pop()

    dfs(init, 0)
    return best["code"]


def _rank_colors(keys: list) -> list[int]:
    order = sorted(range(len(keys)), key=lambda v: keys[v])
    colors = [0] * len(keys)
    rank = 0
    for i, v in enumerate(order):
        if i and keys[v] != keys[order[i - 1]]:
            rank += 1
        colors[v] = rank
    return colors


# -- subgraph embedding --------------------------------------------------------


def embed_subgraph(
    pattern: Graph, host: Graph, host_transitive: bool = False
) -> Optional[tuple[Optional[int], ...]]:
    """Injective map sending every pattern edge to a host edge, or None.

    The witness tuple is indexed by pattern vertex; isolated pattern vertices
    are padded onto unused host vertices while capacity lasts (entry None once
    the host is exhausted).  ``host_transitive=True`` asserts the host is
    vertex-transitive, which pins the first placed vertex to host vertex 0.
    """
    pverts = [v for v in range(pattern.order) if pattern.rows[v]]
    if len(pverts) > host.order:
        raise EmbeddingPreconditionError(
            f"pattern has {len(pverts)} non-isolated vertices, host order is {host.order}"
        )
    if not pverts:
        return _pad_witness(pattern, host, {}, 0)

    pdeg = {v: pattern.degree(v) for v in pverts}
    hdeg = [host.degree(v) for v in range(host.order)]
    order = _embedding_order(pattern, pverts, pdeg)

    # dominance prefilter data: descending neighbour degree sequences
    p_nbr_degs = {
        v: sorted((pdeg[u] for u in pattern.neighbors(v)), reverse=True) for v in pverts
    }
    h_nbr_degs = [
        sorted((hdeg[u] for u in host.neighbors(v)), reverse=True) for v in range(host.order)
    ]

    def feasible(pv: int, hv: int) -> bool:
        if hdeg[hv] < pdeg[pv]:
            return False
        hseq = h_nbr_degs[hv]
        for i, d in enumerate(p_nbr_degs[pv]):
            if hseq[i] < d:
                return False
        return True

    n_p = len(order)
    placed_nbrs = []
    for idx, pv in enumerate(order):
        mask = 0
        for u in pattern.neighbors(pv):
            for j in range(idx):
                if order[j] == u:
                    mask |= 1 << j
        placed_nbrs.append(mask)

    # anchors[idx]: earlier positions some later vertex attaches to.  A state
    # (idx, used set, anchor images) fully determines the residual search, so
    # failed states are memoized; interchangeable vertices (star leaves, union
    # components) would otherwise be re-permuted factorially on dead ends.
    suffix = 0
    anchors: list[tuple[int, ...]] = [()] * n_p
    for idx in range(n_p - 1, -1, -1):
        suffix |= placed_nbrs[idx]
        anchors[idx] = tuple(_bits(suffix & ((1 << idx) - 1)))

    image = [0] * n_p
    used = 0
    full_host = (1 << host.order) - 1
    failed: set = set()
    memo_cap = 1 << 18

    def dfs(idx: int) -> bool:
        nonlocal used
        if idx == n_p:
            return True
        key = (idx, used, tuple(image[j] for j in anchors[idx]))
        if key in failed:
            return False
        pv = order[idx]
        mask = placed_nbrs[idx]
        if mask:
            cand = full_host
            m = mask
            while m:
                j = (m & -m).bit_length() - 1
                cand &= host.rows[image[j]]
                m &= m - 1
        else:
            cand = 1 if (host_transitive and idx == 0) else full_host
        cand &= ~used
        while cand:
            hv = (cand & -cand).bit_length() - 1
            cand &= cand - 1
            if not feasible(pv, hv):
                continue
            image[idx] = hv
            used |= 1 << hv
            if dfs(idx + 1):
                return True
            used &= ~(1 << hv)
        if len(failed) < memo_cap:
            failed.add(key)
        return False

    if not dfs(0):
        return None
    mapping = {order[i]: image[i] for i in range(n_p)}
    return _pad_witness(pattern, host, mapping, used)


def _embedding_order(pattern: Graph, pverts: list[int], pdeg: dict[int, int]) -> list[int]:
    remaining = set(pverts)
    order: list[int] = []
    placed_mask = 0
    while remaining:
        best_v = None
        best_key = None
        for v in remaining:
            conn = _popcount(pattern.rows[v] & placed_mask)
            key = (conn, pdeg[v], -v)
            if best_key is None or key > best_key:
                best_key = key
                best_v = v
        order.append(best_v)
        placed_mask |= 1 << best_v
        remaining.discard(best_v)
    return order


def _pad_witness(pattern: Graph, host: Graph, mapping: dict, used: int):
    out: list[Optional[int]] = [None] * pattern.order
    for pv, hv in mapping.items():
        out[pv] = hv
    free = [v for v in range(host.order) if not used >> v & 1]
    fi = 0
    for pv in range(pattern.order):
        if out[pv] is None and fi < len(free):
            out[pv] = free[fi]
            fi += 1
    return tuple(out)


def embeds(pattern: Graph, host: Graph, host_transitive: bool = False) -> bool:
    return embed_subgraph(pattern, host, host_transitive) is not None


def embed_subgraph_naive(pattern: Graph, host: Graph) -> Optional[tuple[int, ...]]:
    """Oracle: try every injective placement.  Only sensible for host order <= 7."""
    from itertools import permutations

    pverts = [v for v in range(pattern.order) if pattern.rows[v]]
    if len(pverts) > host.order:
        raise EmbeddingPreconditionError("pattern larger than host")
    for perm in permutations(range(host.order), len(pverts)):
        image = dict(zip(pverts, perm))
        if all(host.has_edge(image[u], image[v]) for u, v in pattern.edges()):
            used = 0
            for hv in perm:
                used |= 1 << hv
            return _pad_witness(pattern, host, image, used)
    return None


# -- clique number ---------------------------------------------------------------


def clique_number(g: Graph) -> int:
    """Exact maximum clique order, branch and bound with greedy colouring bound."""
    if g.order == 0:
        return 0
    order = sorted(range(g.order), key=g.degree, reverse=True)
    pos = {v: i for i, v in enumerate(order)}
    rows = [0] * g.order
    for v in range(g.order):
        for u in _bits(g.rows[v]):
            rows[pos[v]] |= 1 << pos[u]
    best = 1

    def color_bound(cand: int) -> list[tuple[int, int]]:
        # greedy colouring; returns (vertex, colour) in reverse processing order
        out = []
        color = 0
        rest = cand
        while rest:
            color += 1
            avail = rest
            while avail:
                v = (avail & -avail).bit_length() - 1
                avail &= avail - 1
                out.append((v, color))
                avail &= ~rows[v]
                rest &= ~(1 << v)
        return out

    def expand(cand: int, size: int):
        nonlocal best
        colored = color_bound(cand)
        for v, c in reversed(colored):
            if size + c <= best:
                return
            if size + 1 > best:
                best = size + 1
            nxt = cand & rows[v]
            if nxt:
                expand(nxt, size + 1)
            cand &= ~(1 << v)

    expand((1 << g.order) - 1, 0)
    return best
