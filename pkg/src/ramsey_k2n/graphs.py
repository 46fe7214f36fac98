"""Compact exact graph type on at most 64 vertices.

Graphs are immutable values: each vertex's neighborhood is one machine-word
bitmask, so set algebra on neighborhoods is branch-free integer arithmetic.
All mutators return new graphs.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Iterator

MAX_ORDER = 64


class GraphError(ValueError):
    """Invalid graph parameter or operation."""


class FormatError(GraphError):
    """Malformed external graph encoding (graph6, JSON)."""


def bits(mask: int) -> Iterator[int]:
    """Iterate set bit positions of a vertex-set mask, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


@dataclass(frozen=True, slots=True)
class Graph:
    """Simple undirected graph; ``adj[v]`` is the neighbor bitmask of v."""

    order: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if not 1 <= self.order <= MAX_ORDER:
            raise GraphError(f"order {self.order} outside 1..{MAX_ORDER}")
        if len(self.adj) != self.order:
            raise GraphError("adjacency length does not match order")
        full = (1 << self.order) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise GraphError(f"vertex {v} has neighbors beyond the order")
            if row >> v & 1:
                raise GraphError(f"loop at vertex {v}")
        for v, row in enumerate(self.adj):
            for u in bits(row):
                if not self.adj[u] >> v & 1:
                    raise GraphError(f"asymmetric edge {v}-{u}")

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def edges(self) -> list[tuple[int, int]]:
        out = []
        for u in range(self.order):
            row = self.adj[u] >> (u + 1)
            for d in bits(row << (u + 1)):
                out.append((u, d))
        return out

    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def vertices_mask(self) -> int:
        return (1 << self.order) - 1


def _check_vertex(g: Graph, v: int) -> None:
    if not 0 <= v < g.order:
        raise GraphError(f"vertex {v} outside 0..{g.order - 1}")


def empty_graph(order: int) -> Graph:
    if not 1 <= order <= MAX_ORDER:
        raise GraphError(f"order {order} outside 1..{MAX_ORDER}")
    return Graph(order, (0,) * order)


def complete_graph(order: int) -> Graph:
    if not 1 <= order <= MAX_ORDER:
        raise GraphError(f"order {order} outside 1..{MAX_ORDER}")
    full = (1 << order) - 1
    return Graph(order, tuple(full ^ (1 << v) for v in range(order)))


def cycle_graph(order: int) -> Graph:
    if order < 3:
        raise GraphError("cycle needs order >= 3")
    g = empty_graph(order)
    for v in range(order):
        g = add_edge(g, v, (v + 1) % order)
    return g


def path_graph(order: int) -> Graph:
    g = empty_graph(order)
    for v in range(order - 1):
        g = add_edge(g, v, v + 1)
    return g


def add_edge(g: Graph, u: int, v: int) -> Graph:
    _check_vertex(g, u)
    _check_vertex(g, v)
    if u == v:
        raise GraphError("loops are not allowed")
    rows = list(g.adj)
    rows[u] |= 1 << v
    rows[v] |= 1 << u
    return Graph(g.order, tuple(rows))


def from_edges(order: int, edges: Iterable[tuple[int, int]]) -> Graph:
    if not 1 <= order <= MAX_ORDER:
        raise GraphError(f"order {order} outside 1..{MAX_ORDER}")
    rows = [0] * order
    for u, v in edges:
        if not (0 <= u < order and 0 <= v < order):
            raise GraphError(f"edge ({u},{v}) outside 0..{order - 1}")
        if u == v:
            raise GraphError("loops are not allowed")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(order, tuple(rows))


def complement(g: Graph) -> Graph:
    full = (1 << g.order) - 1
    return Graph(g.order, tuple((full ^ row) & ~(1 << v) for v, row in enumerate(g.adj)))


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    n = g1.order + g2.order
    if n > MAX_ORDER:
        raise GraphError(f"combined order {n} exceeds {MAX_ORDER}")
    shift = g1.order
    return Graph(n, g1.adj + tuple(row << shift for row in g2.adj))


def join(g1: Graph, g2: Graph) -> Graph:
    """Disjoint union plus all edges between the two vertex sets."""
    g = disjoint_union(g1, g2)
    m1 = (1 << g1.order) - 1
    m2 = ((1 << g.order) - 1) ^ m1
    rows = [row | (m2 if v < g1.order else m1) for v, row in enumerate(g.adj)]
    return Graph(g.order, tuple(rows))


def complete_multipartite(part_sizes: list[int]) -> Graph:
    if not part_sizes:
        raise GraphError("at least one part required")
    if any(s < 1 for s in part_sizes):
        raise GraphError("each part must have size >= 1")
    n = sum(part_sizes)
    if n > MAX_ORDER:
        raise GraphError(f"order {n} exceeds {MAX_ORDER}")
    full = (1 << n) - 1
    rows = []
    start = 0
    for size in part_sizes:
        part = ((1 << size) - 1) << start
        rows.extend((full ^ part) for _ in range(size))
        start += size
    return Graph(n, tuple(rows))


def induced_subgraph(g: Graph, vertices: list[int]) -> Graph:
    """Induced subgraph, relabeled so vertices[i] becomes i."""
    pos = {v: i for i, v in enumerate(vertices)}
    if len(pos) != len(vertices):
        raise GraphError("duplicate vertices")
    rows = [0] * len(vertices)
    for i, v in enumerate(vertices):
        for u in bits(g.adj[v]):
            j = pos.get(u)
            if j is not None:
                rows[i] |= 1 << j
    return Graph(len(vertices), tuple(rows))


def delete_vertex(g: Graph, v: int) -> Graph:
    _check_vertex(g, v)
    if g.order == 1:
        raise GraphError("cannot delete the only vertex")
    return induced_subgraph(g, [u for u in range(g.order) if u != v])


def add_vertex(g: Graph, neighbors_mask: int) -> Graph:
    """New graph with one extra vertex adjacent to ``neighbors_mask``."""
    if g.order + 1 > MAX_ORDER:
        raise GraphError(f"order {g.order + 1} exceeds {MAX_ORDER}")
    if neighbors_mask & ~g.vertices_mask():
        raise GraphError("neighbor mask outside existing vertices")
    v = g.order
    rows = [row | (1 << v if neighbors_mask >> u & 1 else 0) for u, row in enumerate(g.adj)]
    rows.append(neighbors_mask)
    return Graph(g.order + 1, tuple(rows))


def relabel(g: Graph, perm: list[int]) -> Graph:
    """Relabeled copy: vertex v becomes perm[v]."""
    rows = [0] * g.order
    for v in range(g.order):
        rows[perm[v]] = mask_of(perm[u] for u in bits(g.adj[v]))
    return Graph(g.order, tuple(rows))


def common_neighbors(g: Graph, u: int, v: int) -> int:
    """Mask of vertices adjacent to both u and v."""
    _check_vertex(g, u)
    _check_vertex(g, v)
    if u == v:
        raise GraphError("u and v must differ")
    return g.adj[u] & g.adj[v]


def union_neighborhood_excl(g: Graph, u: int, v: int) -> int:
    """|(N(u) u N(v)) \\ {u, v}|."""
    _check_vertex(g, u)
    _check_vertex(g, v)
    if u == v:
        raise GraphError("u and v must differ")
    return ((g.adj[u] | g.adj[v]) & ~(1 << u) & ~(1 << v)).bit_count()


# graph6 text format (bit-exact per the public format description)

def encode_graph6(g: Graph) -> str:
    n = g.order
    if n <= 62:
        head = chr(n + 63)
    else:
        head = "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    out = []
    acc = 0
    nbits = 0
    for col in range(1, n):
        for row in range(col):
            acc = (acc << 1) | (g.adj[row] >> col & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(acc + 63))
                acc = 0
                nbits = 0
    if nbits:
        acc <<= 6 - nbits
        out.append(chr(acc + 63))
    return head + "".join(out)


def decode_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise FormatError("empty graph6 string")
    if s[0] == "~":
        if len(s) < 4 or s[1] == "~":
            raise FormatError("unsupported long-form graph6 header")
        n = 0
        for c in s[1:4]:
            k = ord(c) - 63
            if not 0 <= k <= 63:
                raise FormatError(f"bad header byte {c!r}")
            n = (n << 6) | k
        body = s[4:]
    else:
        n = ord(s[0]) - 63
        body = s[1:]
    if not 1 <= n <= MAX_ORDER:
        raise FormatError(f"order {n} outside 1..{MAX_ORDER}")
    need = (n * (n - 1) // 2 + 5) // 6
    if len(body) != need:
        raise FormatError(f"expected {need} body bytes, got {len(body)}")
    bitlist = []
    for c in body:
        k = ord(c) - 63
        if not 0 <= k <= 63:
            raise FormatError(f"bad body byte {c!r}")
        bitlist.extend((k >> s6) & 1 for s6 in range(5, -1, -1))
    pad = bitlist[n * (n - 1) // 2:]
    if any(pad):
        raise FormatError("nonzero padding bits")
    rows = [0] * n
    i = 0
    for col in range(1, n):
        for row in range(col):
            if bitlist[i]:
                rows[row] |= 1 << col
                rows[col] |= 1 << row
            i += 1
    return Graph(n, tuple(rows))


def to_json_dict(g: Graph) -> dict:
    return {"order": g.order, "edges": [[u, v] for u, v in g.edges()]}


def to_json(g: Graph) -> str:
    return json.dumps(to_json_dict(g), sort_keys=True)


def from_json_dict(d: dict) -> Graph:
    try:
        return from_edges(int(d["order"]), [(int(u), int(v)) for u, v in d["edges"]])
    except (KeyError, TypeError) as exc:
        raise FormatError(f"bad graph JSON: {exc}") from exc
