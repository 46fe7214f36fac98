"""Isomorph-free exhaustive generation of small graphs.

Generation is by canonical augmentation: each graph on k+1 vertices is
produced from the unique parent obtained by deleting its canonically-last
vertex.  A child is accepted iff that canonical deletion is isomorphic to the
parent it was extended from, so each isomorphism class appears exactly once
globally.  Hereditary filters prune the search tree safely because a filtered
class's canonical parent also passes the filter.
"""

from __future__ import annotations

import math
from multiprocessing import get_context
from typing import Callable, Iterable, Iterator

from .canon import canonical_form, canonical_labeling
from .graphs import Graph, add_vertex, bits, empty_graph, induced_subgraph

_PARALLEL_SPLIT_ORDER = 5
_ORBIT_BFS_CAP = 4096


class GenerationFilter:
    """Pruning predicate for generation.

    ``hereditary`` filters must be closed under vertex deletion; they are
    applied at every intermediate order.  Non-hereditary filters are applied
    only to the final graphs.  ``candidate_masks``, when given, restricts the
    neighborhoods tried for the new vertex (an optimization; it must not
    exclude any mask whose child passes the filter).
    """

    name = "custom"
    hereditary = False

    def accepts(self, g: Graph) -> bool:
        raise NotImplementedError

    def candidate_masks(self, g: Graph) -> Iterable[int] | None:
        return None


class AllGraphs(GenerationFilter):
    name = "all"
    hereditary = True

    def accepts(self, g: Graph) -> bool:
        return True


class K2nFreeFilter(GenerationFilter):
    """K_{2,n}-free graphs; hereditary, with candidate-mask pruning."""

    hereditary = True

    def __init__(self, n: int):
        if n < 1:
            raise ValueError("n must be >= 1")
        self.n = n
        self.name = f"k2n_free({n})"

    def accepts(self, g: Graph) -> bool:
        from .invariants import k2n_free

        return k2n_free(g, self.n)

    def candidate_masks(self, g: Graph) -> Iterable[int]:
        """Masks S keeping the extension K_{2,n}-free.

        The new vertex w creates a K_{2,n} only through pairs inside S
        (their common count grows by one) or pairs (w, u) with
        |S & N(u)| >= n.
        """
        n = self.n
        adj = g.adj
        k = g.order
        # pairs allowed to coexist in S
        ok = [0] * k
        for u in range(k):
            for v in range(u + 1, k):
                if (adj[u] & adj[v]).bit_count() <= n - 2:
                    ok[u] |= 1 << v

        out: list[int] = []

        def rec(mask: int, allowed: int, start: int) -> None:
            out.append(mask)
            m = allowed & ~((1 << start) - 1)
            for v in bits(m):
                rec(mask | (1 << v), allowed & ok[v], v + 1)

        rec(0, (1 << k) - 1, 0)
        full = (1 << k) - 1
        return [
            s
            for s in out
            if all((s & adj[u]).bit_count() <= n - 1 for u in bits(full))
        ]


class PredicateFilter(GenerationFilter):
    """Wrap a module-level predicate (must be picklable for parallel runs)."""

    def __init__(self, pred: Callable[[Graph], bool], hereditary: bool, name: str = "custom"):
        self.pred = pred
        self.hereditary = hereditary
        self.name = name

    def accepts(self, g: Graph) -> bool:
        return self.pred(g)


ALL_GRAPHS = AllGraphs()


def _orbit_min(mask: int, tables: list[list[int]]) -> int:
    """Smallest mask in the orbit of ``mask`` under the generator tables."""
    seen = {mask}
    frontier = [mask]
    best = mask
    while frontier and len(seen) <= _ORBIT_BFS_CAP:
        m = frontier.pop()
        for tab in tables:
            im = 0
            mm = m
            while mm:
                low = mm & -mm
                im |= 1 << tab[low.bit_length() - 1]
                mm ^= low
            if im not in seen:
                seen.add(im)
                frontier.append(im)
                if im < best:
                    best = im
    return best


def _children(
    g: Graph, form: bytes, auts: list[tuple[int, ...]], flt: GenerationFilter, final: bool
) -> Iterator[tuple[Graph, bytes, list[tuple[int, ...]]]]:
    """Accepted one-vertex extensions of g (exactly one per class)."""
    k = g.order
    cand = flt.candidate_masks(g)
    masks: Iterable[int] = range(1 << k) if cand is None else cand
    g_edges = g.edge_count()
    g_degseq = sorted(row.bit_count() for row in g.adj)
    tables = [list(a) for a in auts]
    seen_orbit: set[int] = set()
    seen_children: set[bytes] = set()
    for s in masks:
        if tables:
            rep = _orbit_min(s, tables)
            if rep in seen_orbit:
                continue
            seen_orbit.add(rep)
        child = add_vertex(g, s)
        if (flt.hereditary or final) and not flt.accepts(child):
            continue
        perm, cform, cauts = canonical_labeling(child)
        if cform in seen_children:
            continue
        seen_children.add(cform)
        # canonical-deletion parent test
        last = perm[-1]
        if child.adj[last].bit_count() != s.bit_count():
            continue
        parent = induced_subgraph(child, list(perm[:-1]))
        if parent.edge_count() != g_edges:
            continue
        if sorted(row.bit_count() for row in parent.adj) != g_degseq:
            continue
        if canonical_form(parent) != form:
            continue
        yield child, cform, cauts


def _extend_to(
    g: Graph,
    form: bytes,
    auts: list[tuple[int, ...]],
    order: int,
    flt: GenerationFilter,
) -> Iterator[Graph]:
    if g.order == order:
        yield g
        return
    final = g.order + 1 == order
    for child, cform, cauts in _children(g, form, auts, flt, final):
        yield from _extend_to(child, cform, cauts, order, flt)


def enumerate_graphs(order: int, flt: GenerationFilter = ALL_GRAPHS) -> Iterator[Graph]:
    """One representative per isomorphism class passing the filter.

    Deterministic output order; graphs are streamed, never materialized.
    """
    if order < 1:
        raise ValueError("order must be >= 1")
    g1 = empty_graph(1)
    if order == 1:
        if flt.hereditary or flt.accepts(g1):
            yield g1
        return
    if flt.hereditary and not flt.accepts(g1):
        return
    perm, form, auts = canonical_labeling(g1)
    yield from _extend_to(g1, form, auts, order, flt)


def _parallel_task(args: tuple[str, int, GenerationFilter]) -> list[str]:
    from .graphs import decode_graph6, encode_graph6

    g6, order, flt = args
    seed = decode_graph6(g6)
    _, form, auts = canonical_labeling(seed)
    return [encode_graph6(g) for g in _extend_to(seed, form, auts, order, flt)]


def enumerate_parallel(
    order: int, flt: GenerationFilter = ALL_GRAPHS, workers: int = 1
) -> Iterator[Graph]:
    """Same multiset of graphs as enumerate_graphs; order may differ.

    The search tree is split at the seed order and subtrees are distributed
    across worker processes.  Filters must be picklable.
    """
    if workers < 1:
        raise ValueError("workers must be >= 1")
    if workers == 1 or order <= _PARALLEL_SPLIT_ORDER + 1:
        yield from enumerate_graphs(order, flt)
        return
    from .graphs import decode_graph6, encode_graph6

    seeds = [encode_graph6(g) for g in enumerate_graphs(_PARALLEL_SPLIT_ORDER, flt)]
    ctx = get_context("fork")
    with ctx.Pool(workers) as pool:
        for chunk in pool.imap(_parallel_task, [(s, order, flt) for s in seeds]):
            for g6 in chunk:
                yield decode_graph6(g6)


def write_graph6_stream(graphs: Iterable[Graph], fp) -> int:
    """Sink: one graph6 string per line.  Returns the number written."""
    from .graphs import encode_graph6

    count = 0
    for g in graphs:
        fp.write(encode_graph6(g) + "\n")
        count += 1
    return count


# Independent counting oracle (no generation involved).

def _partitions(n: int, largest: int | None = None) -> Iterator[tuple[int, ...]]:
    if largest is None:
        largest = n
    if n == 0:
        yield ()
        return
    for k in range(min(n, largest), 0, -1):
        for rest in _partitions(n - k, k):
            yield (k,) + rest


def unlabeled_graph_count(n: int) -> int:
    """Number of isomorphism classes of simple graphs on n vertices.

    Burnside's lemma over the symmetric group acting on vertex pairs:
    for a permutation of cycle type L, the number of edge orbits is
    sum gcd(a,b) over cycle pairs plus sum floor(a/2) per cycle.
    """
    total = 0
    for part in _partitions(n):
        mult: dict[int, int] = {}
        for a in part:
            mult[a] = mult.get(a, 0) + 1
        perms = math.factorial(n)
        for a, m in mult.items():
            perms //= a**m * math.factorial(m)
        orbits = sum(a // 2 for a in part)
        for i, a in enumerate(part):
            for b in part[i + 1:]:
                orbits += math.gcd(a, b)
        total += perms * (1 << orbits)
    return total // math.factorial(n)
