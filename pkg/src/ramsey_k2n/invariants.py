"""Exact structural invariants: degrees, connectivity, cycles, independence,
K_{2,n}-freeness, and the hypothesis predicates of the cited cycle lemmas.

Everything here is exact search, no heuristics.  Cycle searches are
backtracking over bitmasks with reachability pruning, which is fast on the
dense clique-union graphs this package cares about and exhaustive everywhere.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations

from .graphs import (
    Graph,
    GraphError,
    bits,
    common_neighbors,
    union_neighborhood_excl,
)

INFINITY = math.inf


@dataclass(frozen=True, slots=True)
class CycleWitness:
    """An explicit cycle, as the ordered vertex sequence."""

    vertices: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.vertices)

    def validate(self, g: Graph) -> bool:
        vs = self.vertices
        if len(set(vs)) != len(vs) or not 3 <= len(vs) <= g.order:
            return False
        return all(g.has_edge(vs[i], vs[(i + 1) % len(vs)]) for i in range(len(vs)))

    def to_json_dict(self) -> dict:
        return {"kind": "cycle", "vertices": list(self.vertices)}


@dataclass(frozen=True, slots=True)
class K2nWitness:
    """An explicit K_{2,n} embedding: a vertex pair plus n common neighbors."""

    pair: tuple[int, int]
    common: tuple[int, ...]

    def validate(self, g: Graph) -> bool:
        u, v = self.pair
        if u == v or not self.common:
            return False
        cset = set(self.common)
        if len(cset) != len(self.common) or cset & {u, v}:
            return False
        return all(g.has_edge(u, w) and g.has_edge(v, w) for w in self.common)

    def to_json_dict(self) -> dict:
        return {"kind": "k2n", "pair": list(self.pair), "common": list(self.common)}


@dataclass(frozen=True)
class PatternParams:
    """Chromatic data of the target pattern, for Burr's lower bound."""

    kind: str  # "cycle" | "cycle_pair" | "k2n"
    size: int  # m for cycles, n for K_{2,n}

    def __post_init__(self):
        if self.kind not in ("cycle", "cycle_pair", "k2n"):
            raise GraphError(f"unknown pattern kind {self.kind!r}")
        if self.kind in ("cycle", "cycle_pair") and self.size < 3:
            raise GraphError("cycle length must be >= 3")
        if self.kind == "k2n" and self.size < 2:
            raise GraphError("K_{2,n} goodness arithmetic requires n >= 2")

    @classmethod
    def cycle(cls, m: int) -> "PatternParams":
        return cls("cycle", m)

    @classmethod
    def cycle_pair(cls, m: int) -> "PatternParams":
        return cls("cycle_pair", m)

    @classmethod
    def k2n(cls, n: int) -> "PatternParams":
        return cls("k2n", n)

    @property
    def chi(self) -> int:
        if self.kind == "cycle":
            return 2 if self.size % 2 == 0 else 3
        if self.kind == "k2n":
            return 2
        raise GraphError("cycle_pair has no single chromatic number")

    @property
    def sigma(self) -> int:
        if self.kind == "cycle":
            return self.size // 2 if self.size % 2 == 0 else 1
        if self.kind == "k2n":
            return 2
        raise GraphError("cycle_pair has no single sigma")

    def burr_lower_bound(self, g_order: int) -> int:
        return (g_order - 1) * (self.chi - 1) + self.sigma


def min_degree(g: Graph) -> int:
    return min(row.bit_count() for row in g.adj)


def max_degree(g: Graph) -> int:
    return max(row.bit_count() for row in g.adj)


def _reachable(adj: tuple[int, ...], v: int, allowed: int) -> int:
    """Mask of allowed vertices reachable from v via allowed vertices."""
    seen = adj[v] & allowed
    frontier = seen
    while frontier:
        nxt = 0
        for w in bits(frontier):
            nxt |= adj[w]
        frontier = nxt & allowed & ~seen
        seen |= frontier
    return seen


def is_connected(g: Graph) -> bool:
    full = g.vertices_mask()
    return (_reachable(g.adj, 0, full) | 1) == full


def _max_disjoint_paths(g: Graph, s: int, t: int) -> int:
    """Internally vertex-disjoint s-t paths for nonadjacent s, t (Menger)."""
    n = g.order
    # node splitting: node 2v = v_in, 2v+1 = v_out; unit capacities
    cap: dict[tuple[int, int], int] = {}
    for v in range(n):
        cap[(2 * v, 2 * v + 1)] = 1
    for u in range(n):
        for v in bits(g.adj[u]):
            cap[(2 * u + 1, 2 * v)] = 1
    src, sink = 2 * s + 1, 2 * t
    cap[(2 * s, 2 * s + 1)] = n
    cap[(2 * t, 2 * t + 1)] = n
    for (a, b) in list(cap):
        cap.setdefault((b, a), 0)  # residual arcs must be traversable
    succ: dict[int, list[int]] = {}
    for (a, b) in cap:
        succ.setdefault(a, []).append(b)
        succ.setdefault(b, [])
    flow = 0
    while True:
        prev = {src: -1}
        queue = [src]
        while queue and sink not in prev:
            a = queue.pop(0)
            for b in succ[a]:
                if b not in prev and cap.get((a, b), 0) > 0:
                    prev[b] = a
                    queue.append(b)
        if sink not in prev:
            return flow
        b = sink
        while b != src:
            a = prev[b]
            cap[(a, b)] -= 1
            cap[(b, a)] = cap.get((b, a), 0) + 1
            b = a
        flow += 1


def connectivity(g: Graph) -> int:
    """Exact vertex connectivity."""
    n = g.order
    if n == 1:
        return 0
    if not is_connected(g):
        return 0
    full = g.vertices_mask()
    if all(row == full ^ (1 << v) for v, row in enumerate(g.adj)):
        return n - 1
    best = n - 1
    for u in range(n):
        for v in range(u + 1, n):
            if not g.has_edge(u, v):
                best = min(best, _max_disjoint_paths(g, u, v))
    return best


def girth(g: Graph) -> float:
    """Length of a shortest cycle; math.inf for forests."""
    n = g.order
    best = INFINITY
    for root in range(n):
        dist = {root: 0}
        parent = {root: -1}
        queue = [root]
        while queue:
            u = queue.pop(0)
            for w in bits(g.adj[u]):
                if w not in dist:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif parent[u] != w and parent[w] != u:
                    best = min(best, dist[u] + dist[w] + 1)
        if best == 3:
            return 3
    return best


def longest_cycle(g: Graph) -> CycleWitness | None:
    """Exact longest cycle via branch-and-bound with reachability pruning."""
    adj = g.adj
    n = g.order
    best_len = 0
    best_path: tuple[int, ...] | None = None

    for s in range(n):
        gt = g.vertices_mask() & ~((1 << (s + 1)) - 1)  # vertices > s
        if (adj[s] & gt).bit_count() < 2:
            continue
        stack_path = [s]

        def dfs(v: int, used: int) -> None:
            nonlocal best_len, best_path
            depth = len(stack_path)
            closes = depth >= 3 and adj[v] >> s & 1
            if closes and depth > best_len:
                best_len = depth
                best_path = tuple(stack_path)
            rem = gt & ~used
            if not rem:
                return
            reach = _reachable(adj, v, rem)
            if depth + reach.bit_count() <= best_len:
                return
            if not adj[s] & reach:
                return  # no extension can ever close back to s
            for w in bits(adj[v] & rem):
                stack_path.append(w)
                dfs(w, used | (1 << w))
                stack_path.pop()

        dfs(s, 1 << s)
    return CycleWitness(best_path) if best_path else None


def circumference(g: Graph) -> int:
    """Longest cycle length, 0 for forests."""
    w = longest_cycle(g)
    return w.length if w else 0


def has_cycle_of_length(g: Graph, m: int) -> CycleWitness | None:
    """Exact search for a cycle of length exactly m; witness or None.

    Deterministic: extensions are tried in ascending vertex order, so the
    returned witness is reproducible.
    """
    n = g.order
    if not 3 <= m <= n:
        raise GraphError(f"cycle length {m} outside 3..{n}")
    adj = g.adj

    for s in range(n - m + 1):
        gt = g.vertices_mask() & ~((1 << (s + 1)) - 1)
        stack_path = [s]
        found: list[tuple[int, ...]] = []

        def dfs(v: int, used: int) -> bool:
            depth = len(stack_path)
            if depth == m:
                if adj[v] >> s & 1:
                    found.append(tuple(stack_path))
                    return True
                return False
            rem = gt & ~used
            reach = _reachable(adj, v, rem)
            if reach.bit_count() < m - depth:
                return False
            if not adj[s] & reach:
                return False
            for w in bits(adj[v] & rem):
                stack_path.append(w)
                if dfs(w, used | (1 << w)):
                    return True
                stack_path.pop()
            return False

        if dfs(s, 1 << s):
            return CycleWitness(found[0])
    return None


def all_longest_cycles(g: Graph, cap: int = 10_000) -> tuple[list[CycleWitness], bool]:
    """All maximum-length cycles up to rotation and reflection.

    Returns (cycles, cap_hit).  Normalization: the cycle starts at its
    lowest vertex and runs toward the smaller of its two neighbors.
    """
    first = longest_cycle(g)
    if first is None:
        return [], False
    ln = first.length
    adj = g.adj
    n = g.order
    out: list[CycleWitness] = []
    cap_hit = False

    for s in range(n - ln + 1):
        if cap_hit:
            break
        gt = g.vertices_mask() & ~((1 << (s + 1)) - 1)
        stack_path = [s]

        def dfs(v: int, used: int) -> None:
            nonlocal cap_hit
            if cap_hit:
                return
            depth = len(stack_path)
            if depth == ln:
                if adj[v] >> s & 1 and stack_path[1] < stack_path[-1]:
                    out.append(CycleWitness(tuple(stack_path)))
                    if len(out) >= cap:
                        cap_hit = True
                return
            rem = gt & ~used
            reach = _reachable(adj, v, rem)
            if reach.bit_count() < ln - depth or not adj[s] & reach:
                return
            for w in bits(adj[v] & rem):
                stack_path.append(w)
                dfs(w, used | (1 << w))
                stack_path.pop()

        dfs(s, 1 << s)
    return out, cap_hit


def cycle_spectrum(g: Graph) -> set[int]:
    if g.order < 3:
        return set()
    return {ln for ln in range(3, g.order + 1) if has_cycle_of_length(g, ln)}


def is_weakly_pancyclic(g: Graph) -> bool:
    """Cycles of every length between girth and circumference.

    Vacuously true for forests (empty length range).
    """
    spec = cycle_spectrum(g)
    if not spec:
        return True
    return spec == set(range(min(spec), max(spec) + 1))


def is_hamiltonian(g: Graph) -> CycleWitness | None:
    if g.order < 3:
        raise GraphError("Hamiltonicity needs order >= 3")
    return has_cycle_of_length(g, g.order)


def independence_number(g: Graph) -> int:
    adj = g.adj
    best = 0

    def rec(avail: int, size: int) -> None:
        nonlocal best
        if size + avail.bit_count() <= best:
            return
        if not avail:
            best = max(best, size)
            return
        v = (avail & -avail).bit_length() - 1
        rec(avail & ~adj[v] & ~(1 << v), size + 1)
        rec(avail & ~(1 << v), size)

    rec(g.vertices_mask(), 0)
    return best


def max_common_neighborhood(g: Graph) -> int:
    """max over vertex pairs of |N(u) & N(v)|; 0 for order 1."""
    if g.order < 2:
        return 0
    return max(
        (g.adj[u] & g.adj[v]).bit_count() for u, v in combinations(range(g.order), 2)
    )


def k2n_free(g: Graph, n: int) -> bool:
    """True iff no vertex pair has n or more common neighbors."""
    if n < 1:
        raise GraphError("n must be >= 1")
    return g.order < 2 or max_common_neighborhood(g) <= n - 1


def find_k2n(g: Graph, n: int) -> K2nWitness | None:
    """An explicit K_{2,n} embedding if present (lowest pair first)."""
    if n < 1:
        raise GraphError("n must be >= 1")
    for u, v in combinations(range(g.order), 2):
        cn = g.adj[u] & g.adj[v]
        if cn.bit_count() >= n:
            chosen = []
            for w in bits(cn):
                chosen.append(w)
                if len(chosen) == n:
                    break
            return K2nWitness((u, v), tuple(chosen))
    return None


def is_bipartite(g: Graph) -> bool:
    color: dict[int, int] = {}
    for root in range(g.order):
        if root in color:
            continue
        color[root] = 0
        queue = [root]
        while queue:
            u = queue.pop(0)
            for w in bits(g.adj[u]):
                if w not in color:
                    color[w] = color[u] ^ 1
                    queue.append(w)
                elif color[w] == color[u]:
                    return False
    return True


# Hypothesis predicates of the cited lemmas (exact truth values).

def dirac_cycle_bound_hypothesis(g: Graph, k: int) -> bool:
    """2-connected and every nonadjacent pair has degree sum >= k."""
    if connectivity(g) < 2:
        return False
    return all(
        g.degree(u) + g.degree(v) >= k
        for u, v in combinations(range(g.order), 2)
        if not g.has_edge(u, v)
    )


def dirac_hamiltonian_hypothesis(g: Graph) -> bool:
    """order >= 3 and min degree >= order/2 (exact rational comparison)."""
    return g.order >= 3 and 2 * min_degree(g) >= g.order


def nash_williams_hypothesis(g: Graph) -> bool:
    """2-connected with min degree >= max{(order+2)/3, independence number}."""
    if connectivity(g) < 2:
        return False
    d = min_degree(g)
    return 3 * d >= g.order + 2 and d >= independence_number(g)


def brandt_hypothesis(g: Graph) -> bool:
    """2-connected, nonbipartite, min degree >= order/4 + 250.

    Non-vacuous only from order 335 up; implemented for completeness but
    never empirically asserted at desk scale.
    """
    if is_bipartite(g) or connectivity(g) < 2:
        return False
    return 4 * min_degree(g) >= g.order + 1000


def cycle_lemma_hypothesis(g: Graph, k: int) -> bool:
    """2-connected and |(N(u) u N(v)) \\ {u,v}| >= k for all pairs u != v."""
    if connectivity(g) < 2:
        return False
    return all(
        union_neighborhood_excl(g, u, v) >= k
        for u, v in combinations(range(g.order), 2)
    )
