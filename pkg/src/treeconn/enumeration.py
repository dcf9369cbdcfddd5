"""Exhaustive small-graph enumeration up to isomorphism.

Canonical forms are computed by branch-and-bound over vertex placements: the
signature of a labelling is the column-major upper triangle of its adjacency
matrix, and the canonical form is the lexicographically smallest signature.
Isomorphism classes on n vertices are generated level by level: every class
with m+1 edges arises from some class with m edges by adding one edge, so
growing all representatives and deduplicating by canonical form is complete.
Intended for n up to 8; beyond that use a specialised generator.
"""

from __future__ import annotations

from .graphs import Graph


def canonical_form(g: Graph) -> tuple[int, ...]:
    """Lexicographically smallest placement signature; equal iff isomorphic."""
    n = g.n
    adj = g.adjacency_masks()
    best: list[int] | None = None
    sig: list[int] = []
    placed: list[int] = []

    def rec(depth: int, pmask: int) -> None:
        nonlocal best
        if best is not None and sig > best[:depth]:
            return
        if depth == n:
            if best is None or sig < best:
                best = sig.copy()
            return
        cand = []
        for v in range(n):
            if (pmask >> v) & 1:
                continue
            col = 0
            av = adj[v]
            for i in range(depth):
                if (av >> placed[i]) & 1:
                    col |= 1 << i
            cand.append((col, v))
        cand.sort()
        for col, v in cand:
            sig.append(col)
            placed.append(v)
            rec(depth + 1, pmask | (1 << v))
            sig.pop()
            placed.pop()

    rec(0, 0)
    return (n,) + tuple(best if best is not None else [])


def graph_classes(n: int) -> list[Graph]:
    """One representative per isomorphism class of simple graphs on n vertices."""
    if n < 1:
        raise ValueError("need n >= 1")
    empty = Graph(n)
    reps: dict[tuple[int, ...], Graph] = {canonical_form(empty): empty}
    frontier = [empty]
    while frontier:
        nxt = []
        for g in frontier:
            for u in range(n):
                for v in range(u + 1, n):
                    if not g.has_edge(u, v):
                        g2 = g.with_edge(u, v)
                        key = canonical_form(g2)
                        if key not in reps:
                            reps[key] = g2
                            nxt.append(g2)
        frontier = nxt
    return [reps[key] for key in sorted(reps)]


def connected_graph_classes(n: int) -> list[Graph]:
    return [g for g in graph_classes(n) if g.is_connected()]
