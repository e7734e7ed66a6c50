"""Bondy-Chvatal k-closure.

The k-closure of a graph is obtained by repeatedly joining nonadjacent
vertex pairs whose degree sum is at least k, until no such pair remains.
Degrees only grow during the process, so a pair that becomes eligible stays
eligible and the fixed point does not depend on the join order.  The
recorded join sequence, however, does, so joins are performed in a fixed
canonical order (lexicographically smallest eligible pair first) to keep
the artifact reproducible.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass

from .core import Graph, _popcount


@dataclass(frozen=True)
class ClosureResult:
    """Closure graph plus the pairs joined to reach it, in join order."""

    graph: Graph
    joined: tuple[tuple[int, int], ...]


def k_closure(g: Graph, k: int) -> ClosureResult:
    """Join nonadjacent pairs with degree sum >= k until none remain."""
    if k < 0:
        raise ValueError(f"threshold must be nonnegative, got {k}")
    n = g.order
    rows = list(g.rows)
    degs = [_popcount(r) for r in rows]

    heap: list[tuple[int, int]] = []
    queued: set[tuple[int, int]] = set()

    def offer(u: int, v: int) -> None:
        if rows[u] >> v & 1 or degs[u] + degs[v] < k:
            return
        pair = (u, v) if u < v else (v, u)
        if pair not in queued:
            queued.add(pair)
            heapq.heappush(heap, pair)

    for u in range(n):
        for v in range(u + 1, n):
            offer(u, v)

    joined: list[tuple[int, int]] = []
    while heap:
        u, v = heapq.heappop(heap)
        rows[u] |= 1 << v
        rows[v] |= 1 << u
        degs[u] += 1
        degs[v] += 1
        joined.append((u, v))
        # only pairs through u or v cross the threshold at this step
        for w in range(n):
            if w != u:
                offer(u, w)
            if w != v:
                offer(v, w)
    return ClosureResult(Graph(n, rows), tuple(joined))


def is_complete(g: Graph) -> bool:
    return 2 * g.edge_count() == g.order * (g.order - 1)
