"""Canonical labeling by iterative refinement with backtracking.

Two graphs have equal canonical form iff they are isomorphic.  The search
individualizes vertices inside the first non-singleton cell of the refined
partition and keeps the lexicographically smallest packed adjacency matrix.
Automorphisms discovered when two branches tie are used to prune sibling
branches, which keeps highly symmetric graphs (cliques, unions of cliques,
complete multipartite graphs) tractable.
"""

from __future__ import annotations

from .graphs import Graph, induced_subgraph

_MAX_AUT_GENERATORS = 64


def _refine(adj: tuple[int, ...], cells: list[list[int]]) -> list[list[int]]:
    """Stable equitable refinement of an ordered partition."""
    while True:
        masks = [0] * len(cells)
        for i, cell in enumerate(cells):
            m = 0
            for v in cell:
                m |= 1 << v
            masks[i] = m
        new_cells: list[list[int]] = []
        changed = False
        for cell in cells:
            if len(cell) == 1:
                new_cells.append(cell)
                continue
            keyed: dict[tuple[int, ...], list[int]] = {}
            for v in cell:
                row = adj[v]
                key = tuple((row & m).bit_count() for m in masks)
                keyed.setdefault(key, []).append(v)
            if len(keyed) == 1:
                new_cells.append(cell)
            else:
                changed = True
                for key in sorted(keyed):
                    new_cells.append(keyed[key])
        if not changed:
            return new_cells
        cells = new_cells


def _pack(adj: tuple[int, ...], perm: tuple[int, ...], n: int) -> bytes:
    """Upper-triangle bits of the relabeled adjacency matrix, plus order."""
    word = 0
    for i in range(n):
        row = adj[perm[i]]
        for j in range(i + 1, n):
            word = (word << 1) | (row >> perm[j] & 1)
    nbits = n * (n - 1) // 2
    return bytes([n]) + word.to_bytes((nbits + 7) // 8 or 1, "big")


def canonical_labeling(g: Graph) -> tuple[tuple[int, ...], bytes, list[tuple[int, ...]]]:
    """Return (perm, form, automorphism generators).

    ``perm[i]`` is the original vertex placed at canonical position i.
    ``form`` is equal across all graphs isomorphic to g and only those.
    The generator list contains genuine automorphisms of g (possibly not
    the whole group).
    """
    n = g.order
    adj = g.adj
    if n == 1:
        return (0,), _pack(adj, (0,), 1), []

    by_degree: dict[int, list[int]] = {}
    for v in range(n):
        by_degree.setdefault(adj[v].bit_count(), []).append(v)
    base = _refine(adj, [by_degree[d] for d in sorted(by_degree)])

    best_form: bytes | None = None
    best_perm: tuple[int, ...] | None = None
    auts: list[tuple[int, ...]] = []
    aut_seen: set[tuple[int, ...]] = set()

    def rec(cells: list[list[int]]) -> None:
        nonlocal best_form, best_perm
        idx = -1
        for i, cell in enumerate(cells):
            if len(cell) > 1:
                idx = i
                break
        if idx < 0:
            perm = tuple(cell[0] for cell in cells)
            form = _pack(adj, perm, n)
            if best_form is None or form < best_form:
                best_form, best_perm = form, perm
            elif form == best_form and len(auts) < _MAX_AUT_GENERATORS:
                aut = [0] * n
                for a, b in zip(best_perm, perm):
                    aut[a] = b
                taut = tuple(aut)
                if taut not in aut_seen and any(aut[v] != v for v in range(n)):
                    aut_seen.add(taut)
                    auts.append(taut)
            return
        fixed = [cell[0] for cell in cells if len(cell) == 1]
        cell = cells[idx]
        tried: list[int] = []
        for v in cell:
            if tried:
                # orbit closure of already-tried candidates under the
                # subgroup (of discovered generators) fixing the prefix
                applicable = [a for a in auts if all(a[f] == f for f in fixed)]
                orbit = set(tried)
                frontier = list(tried)
                while frontier:
                    u = frontier.pop()
                    for a in applicable:
                        w = a[u]
                        if w not in orbit:
                            orbit.add(w)
                            frontier.append(w)
                if v in orbit:
                    continue
            tried.append(v)
            rest = [w for w in cell if w != v]
            rec(_refine(adj, cells[:idx] + [[v], rest] + cells[idx + 1:]))

    rec(base)
    assert best_perm is not None
    return best_perm, best_form, auts


def canonical_form(g: Graph) -> bytes:
    return canonical_labeling(g)[1]


def canonical_parent(g: Graph) -> Graph:
    """Induced subgraph on the first order-1 canonical positions.

    Well-defined up to isomorphism even when several labelings tie, since
    tied labelings share the same canonical adjacency matrix.
    """
    perm, _, _ = canonical_labeling(g)
    return induced_subgraph(g, list(perm[:-1]))


def are_isomorphic(g1: Graph, g2: Graph) -> bool:
    if g1.order != g2.order or g1.edge_count() != g2.edge_count():
        return False
    return canonical_form(g1) == canonical_form(g2)
