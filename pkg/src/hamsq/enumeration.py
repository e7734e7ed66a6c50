"""Isomorph-free enumeration of edge classes and minimal non-embeddable cores.

An edge class (n, t) is the set of isomorphism types with exactly t edges and
at most n non-isolated vertices (isolated vertices are normalized away).
Generation is by augmentation: every class at level t arises from a level
t-1 class by adding one edge between existing vertices, one pendant edge, or
one disjoint edge, so expanding canonical representatives level by level and
deduplicating by canonical code enumerates each level exactly once.

Cores are computed against the standard circulant host (complement of the
squared cycle): a core is a non-embeddable class all of whose one-edge
deletions embed.  Two routes exist: a full sweep, and a growth recursion that
only extends non-embeddable classes of the next-smaller host by one vertex
(degree at most ceil((n-1)/4)-1) plus a bounded direct search over classes of
minimum degree above that threshold.  The growth route's completeness rests
on the lifting property that embeddability at order n-1 lifts through such
attachments; its output is independently certified non-embeddable and
minimal by direct embedding tests.
"""

from __future__ import annotations

import time
from itertools import combinations
from math import ceil, comb, inf
from typing import Iterator, Optional

import numpy as np

from .catalog import GraphFamily, describe, squared_cycle_complement
from .core import Graph, encode_graph6
from .errors import BudgetExceededError
from .iso import canon_masks, clique_number, embed_subgraph
from . import _canonfast

_MAX_CHILD = 256


# One augmentation chain per vertex cap; levels[t] is the sorted code matrix
# of level t.  A wider chain answers narrower queries by order filtering, but
# only when it already reaches the requested level: extending a wide chain on
# behalf of a narrow query would blow up the level sizes.
_CHAINS: dict[int, list[np.ndarray]] = {}


def _next_level(parents: np.ndarray, cap: int, deadline: float, max_members, t: int) -> np.ndarray:
    registry = set()
    out_codes = np.zeros((_MAX_CHILD, cap), np.int64)
    out_orders = np.zeros(_MAX_CHILD, np.int64)
    token = f"cap={cap},t={t}"
    for idx in range(parents.shape[0]):
        if idx % 512 == 0 and time.monotonic() > deadline:
            raise BudgetExceededError(
                f"edge-class level {t} not finished", partial=None, resume_token=token
            )
        row = parents[idx]
        n_p = int(np.count_nonzero(row))
        out_codes.fill(0)  # kernel writes only the child's first `order` columns
        cnt = _canonfast.expand_children_fast(n_p, row, cap, out_codes, out_orders)
        be = out_codes[:cnt].astype(">i8")
        for i in range(cnt):
            registry.add(be[i].tobytes())
        if max_members is not None and len(registry) > max_members:
            raise BudgetExceededError(
                f"edge-class level {t} exceeds {max_members} members",
                partial=None,
                resume_token=token,
            )
    if not registry:
        return np.zeros((0, cap), np.int64)
    keys = sorted(registry)
    arr = np.frombuffer(b"".join(keys), dtype=">i8").reshape(len(keys), cap).astype(np.int64)
    return arr


def _levels_for(cap: int, t_max: int, deadline: float = inf, max_members=None) -> list[np.ndarray]:
    covering = [c for c, lv in _CHAINS.items() if c >= cap and len(lv) > t_max]
    if covering:
        return _CHAINS[min(covering)]
    levels = _CHAINS.setdefault(cap, [np.zeros((1, cap), np.int64)])
    while len(levels) <= t_max:
        t = len(levels)
        prev = levels[-1]
        if prev.shape[0] == 0:
            levels.append(np.zeros((0, cap), np.int64))
            continue
        levels.append(_next_level(prev, cap, deadline, max_members, t))
    return levels


def _deadline(budget_seconds) -> float:
    return inf if budget_seconds is None else time.monotonic() + budget_seconds


def chain_level_sizes(cap: int, t_max: int, budget_seconds=None) -> list[int]:
    """Class counts per edge level for the given vertex cap (diagnostics).

    Counts are for the cap actually consulted, which may exceed `cap` when a
    wider chain already covers the request; use family_count for exact
    per-class-parameter counts.
    """
    levels = _levels_for(cap, t_max, _deadline(budget_seconds))
    return [int(lv.shape[0]) for lv in levels[: t_max + 1]]


def _graph_from_row(row: np.ndarray, order: int) -> Graph:
    return Graph(order, [int(x) for x in row[:order]])


def iter_family(n: int, t: int, budget_seconds=None) -> Iterator[Graph]:
    """Members of edge class (n, t) in deterministic storage order."""
    if n < 0 or t < 0:
        raise ValueError("edge class parameters must be nonnegative")
    if t == 0:
        yield Graph(0, [])
        return
    cap = min(n, 2 * t)
    if cap < 2:
        return
    levels = _levels_for(cap, t, _deadline(budget_seconds))
    level = levels[t]
    orders = np.count_nonzero(level, axis=1)
    for i in np.nonzero(orders <= cap)[0]:
        yield _graph_from_row(level[i], int(orders[i]))


def family_count(n: int, t: int, budget_seconds=None) -> int:
    """|edge class (n, t)| without materializing graphs."""
    if n < 0 or t < 0:
        raise ValueError("edge class parameters must be nonnegative")
    if t == 0:
        return 1
    cap = min(n, 2 * t)
    if cap < 2:
        return 0
    levels = _levels_for(cap, t, _deadline(budget_seconds))
    orders = np.count_nonzero(levels[t], axis=1)
    return int((orders <= cap).sum())


def enumerate_family(n: int, t: int, budget_seconds=None, max_members=None) -> GraphFamily:
    """Edge class (n, t) as a family sorted by canonical code."""
    deadline = _deadline(budget_seconds)
    if t > 0 and min(n, 2 * t) >= 2:
        _levels_for(min(n, 2 * t), t, deadline, max_members)
    named = [(encode_graph6(g), g) for g in iter_family(n, t)]
    named.sort(key=lambda kv: kv[0])
    return GraphFamily(
        members=tuple(g for _, g in named),
        names=tuple(nm for nm, _ in named),
        n=n,
        t=t,
    )


# -- embeddability against the standard host ---------------------------------

_HOSTS: dict[int, Graph] = {}


def _host(n: int) -> Graph:
    h = _HOSTS.get(n)
    if h is None:
        h = _HOSTS[n] = squared_cycle_complement(n)
    return h


def embeds_in_host(g: Graph, n: int) -> bool:
    """Subgraph test against the order-n host, with cheap degree cutoffs."""
    if g.nonisolated_count() > n:
        return False
    if g.edge_count() == 0:
        return True
    if max(g.degrees()) > n - 5:
        return False
    # host cliques are independent circulant sets, so at most n // 3 vertices
    if clique_number(g) > n // 3:
        return False
    return embed_subgraph(g, _host(n), host_transitive=True) is not None


# -- non-embeddable classes and minimal cores --------------------------------

_GROW_BASE_N = 13

_NE_MEMO: dict[tuple[int, int, str], dict[str, Graph]] = {}


def _canon_key(g: Graph) -> tuple[str, Graph]:
    masks = canon_masks(g.order, g.rows)
    cg = Graph(g.order, list(masks))
    return encode_graph6(cg), cg


def _attachment_children(gp: Graph, t0: int, n_limit: int, t_limit: int) -> Iterator[Graph]:
    """One-vertex extensions used by the growth recursion.

    A graph with minimum degree d <= t0 arises from its vertex-deleted
    predecessor either by joining a new vertex to d existing vertices (all
    neighbors keep degree >= 1 when d >= 2), or, when d = 1, possibly as a
    disjoint new edge.
    """
    k, e = gp.order, gp.edge_count()
    for d in range(1, t0 + 1):
        if e + d > t_limit or k + 1 > n_limit:
            break
        for subset in combinations(range(k), d):
            rows = list(gp.rows) + [0]
            for u in subset:
                rows[u] |= 1 << k
                rows[k] |= 1 << u
            yield Graph(k + 1, rows)
    if e + 1 <= t_limit and k + 2 <= n_limit:
        rows = list(gp.rows) + [1 << (k + 1), 1 << k]
        yield Graph(k + 2, rows)


def _ne_dict(n: int, t_max: int, method: str, deadline: float) -> dict[str, Graph]:
    # the routes only diverge above the base order, so base levels are shared
    sweeping = method == "sweep" or n <= _GROW_BASE_N or t_max <= 0
    key = (n, t_max, "sweep" if sweeping else "grow")
    cached = _NE_MEMO.get(key)
    if cached is not None:
        return cached
    if sweeping:
        out: dict[str, Graph] = {}
        for t in range(1, t_max + 1):
            for g in iter_family(n, t):
                if time.monotonic() > deadline:
                    raise BudgetExceededError(
                        "non-embeddable sweep not finished",
                        resume_token=f"ne-sweep:n={n},t={t}",
                    )
                if not embeds_in_host(g, n):
                    out[encode_graph6(g)] = g
        _NE_MEMO[key] = out
        return out
    prev = _ne_dict(n - 1, t_max - 1, method, deadline)
    t0 = ceil((n - 1) / 4) - 1
    cand: dict[str, Graph] = {}
    # bounded direct search: minimum degree above the attachment budget
    # forces at most 2*t_max/(t0+1) non-isolated vertices
    cap_a = (2 * t_max) // (t0 + 1)
    for t in range(1, min(t_max, comb(cap_a, 2)) + 1):
        for g in iter_family(cap_a, t):
            if g.order and min(g.degrees()) >= t0 + 1:
                cand[encode_graph6(g)] = g
    for gp in prev.values():
        if time.monotonic() > deadline:
            raise BudgetExceededError(
                "growth recursion not finished", resume_token=f"ne-grow:n={n}"
            )
        for child in _attachment_children(gp, t0, n, t_max):
            code, cg = _canon_key(child)
            cand.setdefault(code, cg)
    out = {code: g for code, g in cand.items() if not embeds_in_host(g, n)}
    _NE_MEMO[key] = out
    return out


def _resolve_method(n: int, method: str) -> str:
    if method == "auto":
        return "grow" if n > _GROW_BASE_N else "sweep"
    if method not in ("sweep", "grow"):
        raise ValueError(f"unknown method {method!r}")
    return method


def nonembeddable_upto(
    n: int, t_max: int, method: str = "auto", budget_seconds=None
) -> GraphFamily:
    """All classes with at most t_max edges that do not embed into the host."""
    if not 0 <= t_max <= n - 2:
        raise ValueError(f"edge bound {t_max} outside 0..{n - 2}")
    ne = _ne_dict(n, t_max, _resolve_method(n, method), _deadline(budget_seconds))
    named = sorted(ne.items())
    return GraphFamily(
        members=tuple(g for _, g in named),
        names=tuple(describe(g) for _, g in named),
        n=n,
        t=None,
        kind="NE",
    )


def minimal_forbidden_cores(
    n: int, t_max: int, method: str = "auto", budget_seconds=None
) -> GraphFamily:
    """Non-embeddable classes whose every one-edge deletion embeds."""
    if not 0 <= t_max <= n - 2:
        raise ValueError(f"edge bound {t_max} outside 0..{n - 2}")
    deadline = _deadline(budget_seconds)
    ne = _ne_dict(n, t_max, _resolve_method(n, method), deadline)
    cores = []
    for code, g in sorted(ne.items()):
        minimal = True
        for u, v in g.edges():
            rows = list(g.rows)
            rows[u] &= ~(1 << v)
            rows[v] &= ~(1 << u)
            child = Graph(g.order, rows).drop_isolated()
            if not embeds_in_host(child, n):
                minimal = False
                break
        if minimal:
            cores.append((code, g))
    return GraphFamily(
        members=tuple(g for _, g in cores),
        names=tuple(describe(g) for _, g in cores),
        n=n,
        t=None,
        kind="cores",
    )
