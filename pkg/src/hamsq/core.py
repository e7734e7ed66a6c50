"""Dense immutable graphs on at most MAX_ORDER vertices.

Vertices are labelled 0..n-1 and adjacency is stored as one integer bitmask
per vertex, which keeps set operations (intersection of neighbourhoods,
component sweeps, candidate filtering) single machine-word cheap for the
orders this package works at.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Optional, Sequence

from .errors import Graph6ParseError, GraphConstructionError

MAX_ORDER = 256


class Graph:
    """Immutable undirected simple graph with vertex set {0, ..., order-1}."""

    __slots__ = ("order", "rows", "_hash")

    def __init__(self, order: int, rows: Sequence[int]):
        if not (0 <= order <= MAX_ORDER):
            raise GraphConstructionError(f"order {order} outside supported range 0..{MAX_ORDER}")
        if len(rows) != order:
            raise GraphConstructionError(f"expected {order} adjacency rows, got {len(rows)}")
        full = (1 << order) - 1
        for v, row in enumerate(rows):
            if row & ~full:
                raise GraphConstructionError(f"row {v} references vertices >= {order}")
            if row >> v & 1:
                raise GraphConstructionError(f"loop at vertex {v}")
        for v in range(order):
            for u in _bits(rows[v]):
                if not rows[u] >> v & 1:
                    raise GraphConstructionError(f"asymmetric adjacency between {u} and {v}")
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "rows", tuple(rows))
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self.order == other.order and self.rows == other.rows

    def __hash__(self) -> int:
        h = self._hash
        if h is None:
            h = hash((self.order, self.rows))
            object.__setattr__(self, "_hash", h)
        return h

    def __repr__(self) -> str:
        return f"Graph(order={self.order}, edges={self.edge_count()})"

    # -- basic queries ---------------------------------------------------

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def degree(self, v: int) -> int:
        return _popcount(self.rows[v])

    def degrees(self) -> tuple[int, ...]:
        return tuple(_popcount(r) for r in self.rows)

    def edge_count(self) -> int:
        return sum(_popcount(r) for r in self.rows) // 2

    def edges(self) -> Iterator[tuple[int, int]]:
        for v in range(self.order):
            for u in _bits(self.rows[v] >> (v + 1) << (v + 1)):
                yield (v, u)

    def neighbors(self, v: int) -> Iterator[int]:
        return _bits(self.rows[v])

    def nonisolated_mask(self) -> int:
        m = 0
        for v, r in enumerate(self.rows):
            if r:
                m |= 1 << v
        return m

    def nonisolated_count(self) -> int:
        return _popcount(self.nonisolated_mask())

    # -- derived graphs --------------------------------------------------

    def induced(self, vertices: Sequence[int]) -> "Graph":
        """Subgraph induced on the given vertices, relabelled 0..k-1 in list order."""
        index = {v: i for i, v in enumerate(vertices)}
        if len(index) != len(vertices):
            raise GraphConstructionError("duplicate vertices in induced subgraph request")
        rows = [0] * len(vertices)
        for i, v in enumerate(vertices):
            for u in _bits(self.rows[v]):
                j = index.get(u)
                if j is not None:
                    rows[i] |= 1 << j
        return Graph(len(vertices), rows)

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Image under the permutation v -> perm[v]."""
        if sorted(perm) != list(range(self.order)):
            raise GraphConstructionError("relabel requires a permutation of all vertices")
        rows = [0] * self.order
        for v in range(self.order):
            rv = 0
            for u in _bits(self.rows[v]):
                rv |= 1 << perm[u]
            rows[perm[v]] = rv
        return Graph(self.order, rows)

    def drop_isolated(self) -> "Graph":
        """Copy with isolated vertices removed (the edge-class normal form)."""
        keep = [v for v in range(self.order) if self.rows[v]]
        return self.induced(keep)

    def pad(self, order: int) -> "Graph":
        """Copy extended with isolated vertices up to the given order."""
        if order < self.order:
            raise GraphConstructionError(f"cannot pad order {self.order} down to {order}")
        return Graph(order, self.rows + (0,) * (order - self.order))


def _popcount(x: int) -> int:
    return x.bit_count()


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_vertices(mask: int) -> list[int]:
    return list(_bits(mask))


# -- constructors and operations ------------------------------------------


def build_graph(order: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph from an edge list; duplicate edges collapse, loops are rejected."""
    if not (0 <= order <= MAX_ORDER):
        raise GraphConstructionError(f"order {order} outside supported range 0..{MAX_ORDER}")
    rows = [0] * order
    for u, v in edges:
        if u == v:
            raise GraphConstructionError(f"loop at vertex {u}")
        if not (0 <= u < order and 0 <= v < order):
            raise GraphConstructionError(f"edge ({u},{v}) out of range for order {order}")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(order, rows)


def complement(g: Graph) -> Graph:
    full = (1 << g.order) - 1
    return Graph(g.order, [full & ~r & ~(1 << v) for v, r in enumerate(g.rows)])


def power(g: Graph, k: int) -> Graph:
    """Graph power: u ~ v when their distance in g is between 1 and k."""
    if k < 1:
        raise GraphConstructionError("power exponent must be >= 1")
    rows = []
    for v in range(g.order):
        reach = 1 << v
        frontier = 1 << v
        for _ in range(k):
            nxt = 0
            for u in _bits(frontier):
                nxt |= g.rows[u]
            frontier = nxt & ~reach
            reach |= nxt
            if not frontier:
                break
        rows.append(reach & ~(1 << v))
    return Graph(g.order, rows)


def disjoint_union(g: Graph, h: Graph) -> Graph:
    shift = g.order
    rows = list(g.rows) + [r << shift for r in h.rows]
    return Graph(g.order + h.order, rows)


def join(g: Graph, h: Graph) -> Graph:
    """Disjoint union plus all edges between the two parts."""
    n = g.order + h.order
    g_mask = (1 << g.order) - 1
    h_mask = ((1 << n) - 1) ^ g_mask
    rows = [r | h_mask for r in g.rows] + [(r << g.order) | g_mask for r in h.rows]
    return Graph(n, rows)


@dataclass(frozen=True)
class PlacementSpec:
    """Placement of a pattern inside a complete host of the given order.

    ``anchor`` maps pattern vertex i to host vertex anchor[i]; by default the
    pattern occupies the first pattern.order host vertices.
    """

    host_order: int
    pattern: Graph
    anchor: Optional[tuple[int, ...]] = None

    def resolved_anchor(self) -> tuple[int, ...]:
        anchor = self.anchor if self.anchor is not None else tuple(range(self.pattern.order))
        if len(anchor) != self.pattern.order:
            raise GraphConstructionError("anchor length must equal pattern order")
        if len(set(anchor)) != len(anchor):
            raise GraphConstructionError("anchor must be injective")
        if any(not 0 <= a < self.host_order for a in anchor):
            raise GraphConstructionError("anchor vertex outside host")
        return anchor


def delete_pattern_edges(placement: PlacementSpec) -> Graph:
    """Complete graph on host_order vertices minus the anchored pattern edges."""
    anchor = placement.resolved_anchor()
    n = placement.host_order
    full = (1 << n) - 1
    rows = [full & ~(1 << v) for v in range(n)]
    for u, v in placement.pattern.edges():
        a, b = anchor[u], anchor[v]
        rows[a] &= ~(1 << b)
        rows[b] &= ~(1 << a)
    return Graph(n, rows)


def complete_minus(pattern: Graph, host_order: int) -> Graph:
    """Shorthand for delete_pattern_edges with the default anchor."""
    return delete_pattern_edges(PlacementSpec(host_order, pattern))


@dataclass(frozen=True)
class DegreeStats:
    degrees: tuple[int, ...]
    min_degree: int
    max_degree: int
    sum_of_squares: int


def degree_stats(g: Graph) -> DegreeStats:
    degs = g.degrees()
    if degs:
        return DegreeStats(degs, min(degs), max(degs), sum(d * d for d in degs))
    return DegreeStats((), 0, 0, 0)


# -- connectivity ----------------------------------------------------------


def component_masks(g: Graph) -> list[int]:
    """Vertex masks of the connected components, in order of least vertex."""
    seen = 0
    out = []
    for v in range(g.order):
        if seen >> v & 1:
            continue
        comp = 1 << v
        frontier = 1 << v
        while frontier:
            nxt = 0
            for u in _bits(frontier):
                nxt |= g.rows[u]
            frontier = nxt & ~comp
            comp |= nxt
        out.append(comp)
        seen |= comp
    return out


def is_connected(g: Graph) -> bool:
    return g.order <= 1 or len(component_masks(g)) == 1


# -- graph6 ----------------------------------------------------------------


def encode_graph6(g: Graph) -> str:
    """Standard graph6 encoding (upper triangle, column major, 6-bit groups)."""
    n = g.order
    if n <= 62:
        head = [n + 63]
    elif n <= 258047:
        head = [126, (n >> 12) + 63, ((n >> 6) & 63) + 63, (n & 63) + 63]
    else:  # unreachable under MAX_ORDER, kept for format completeness
        raise GraphConstructionError("graph6 order overflow")
    bits = []
    for j in range(1, n):
        col = g.rows[j]
        for i in range(j):
            bits.append(col >> i & 1)
    while len(bits) % 6:
        bits.append(0)
    body = []
    for i in range(0, len(bits), 6):
        word = 0
        for b in bits[i : i + 6]:
            word = word << 1 | b
        body.append(word + 63)
    return bytes(head + body).decode("ascii")


def decode_graph6(data: str | bytes) -> Graph:
    """Inverse of encode_graph6; raises Graph6ParseError with the offending byte offset."""
    raw = data.encode("ascii") if isinstance(data, str) else bytes(data)
    raw = raw.rstrip(b"\n")
    if raw.startswith(b">>graph6<<"):
        raw = raw[10:]
    if not raw:
        raise Graph6ParseError("empty graph6 string", 0)
    pos = 0
    if raw[0] == 126:
        if len(raw) >= 2 and raw[1] == 126:
            raise Graph6ParseError("graph6 orders above 258047 are not supported", 1)
        if len(raw) < 4:
            raise Graph6ParseError("truncated graph6 order field", len(raw))
        for k in (1, 2, 3):
            if not 63 <= raw[k] <= 126:
                raise Graph6ParseError(f"invalid graph6 byte {raw[k]}", k)
        n = ((raw[1] - 63) << 12) | ((raw[2] - 63) << 6) | (raw[3] - 63)
        pos = 4
    else:
        if not 63 <= raw[0] <= 125:
            raise Graph6ParseError(f"invalid graph6 order byte {raw[0]}", 0)
        n = raw[0] - 63
        pos = 1
    if n > MAX_ORDER:
        raise Graph6ParseError(f"order {n} exceeds supported maximum {MAX_ORDER}", 0)
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    if len(raw) - pos < nbytes:
        raise Graph6ParseError(f"truncated graph6 body (need {nbytes} bytes)", len(raw))
    if len(raw) - pos > nbytes:
        raise Graph6ParseError("trailing bytes after graph6 body", pos + nbytes)
    rows = [0] * n
    bit_index = 0
    for k in range(nbytes):
        byte = raw[pos + k]
        if not 63 <= byte <= 126:
            raise Graph6ParseError(f"invalid graph6 byte {byte}", pos + k)
        word = byte - 63
        for shift in range(5, -1, -1):
            b = word >> shift & 1
            if bit_index >= nbits:
                if b:
                    raise Graph6ParseError("nonzero padding bits", pos + k)
                bit_index += 1
                continue
            if b:
                i, j = _triangle_position(bit_index)
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            bit_index += 1
    return Graph(n, rows)


def _triangle_position(bit_index: int) -> tuple[int, int]:
    # column-major upper triangle: column j holds j bits (i = 0..j-1)
    j = 1
    while bit_index >= j:
        bit_index -= j
        j += 1
    return bit_index, j
