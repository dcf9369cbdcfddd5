"""Exact tree-packing oracle: kappa(S) for 3-sets and kappa_3 of a graph.

kappa(S) is the largest number of edge-disjoint trees that all contain S and
pairwise share no vertex outside S. The oracle decides whether l such trees
exist by a labelling search: every vertex outside S gets a label in
{0, 1, ..., l} (0 = unused) and every edge inside S gets a label too; tree i
must be recoverable from S plus the label-i vertices plus the label-i inner
edges, which holds iff S is connected within that class. Edges inside S are
turned into subdivision vertices first so that the whole search is a vertex
labelling. Branch and bound prunes a partial labelling as soon as some class
can no longer reach all of S through its own plus unlabelled vertices, and
label classes are introduced in increasing order to break the symmetry
between interchangeable trees.

This module never consults the constructive machinery in casetrees; it only
reuses its certificate verifier as a soundness assertion.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .casetrees import TreeCertificate, verify_certificate
from .graphs import Graph, make_triple


@dataclass(frozen=True)
class PackingResult:
    """kappa(S) plus, when positive, a verified certificate with that many trees."""

    s: tuple[int, int, int]
    kappa: int
    witness: TreeCertificate | None


@dataclass(frozen=True)
class Kappa3Result:
    value: int
    argmin: tuple[int, int, int]
    witness: TreeCertificate | None


def lemma1_upper_bound(g: Graph) -> int:
    """min degree, minus one when two minimum-degree vertices are adjacent.

    The 3-connectivity of a connected graph never exceeds this number.
    """
    if g.n < 3:
        raise ValueError("needs at least 3 vertices")
    if not g.is_connected():
        raise ValueError("upper bound is defined for connected graphs")
    d = g.min_degree()
    for u in range(g.n):
        if len(g.adj[u]) == d:
            for v in g.adj[u]:
                if len(g.adj[v]) == d:
                    return d - 1
    return d


class _Packer:
    """Labelling search for one graph and one 3-set, reusable across l."""

    def __init__(self, g: Graph, s: tuple[int, int, int]):
        self.g = g
        self.s = s
        sset = set(s)
        # Subdivide the edges inside S: each becomes a virtual vertex adjacent
        # to its two endpoints, so inner-edge labels are ordinary vertex labels.
        self.inner_edges = [
            (u, v) for u, v in combinations(sorted(sset), 2) if g.has_edge(u, v)
        ]
        nv = g.n + len(self.inner_edges)
        adj = [0] * nv
        for u in range(g.n):
            m = 0
            for w in g.adj[u]:
                if u in sset and w in sset:
                    continue
                m |= 1 << w
            adj[u] = m
        for j, (u, v) in enumerate(self.inner_edges):
            w = g.n + j
            adj[w] = (1 << u) | (1 << v)
            adj[u] |= 1 << w
            adj[v] |= 1 << w
        self.adj = adj
        self.smask = sum(1 << v for v in s)
        self.s_first = 1 << s[0]

        # Only vertices reachable from S can ever serve a tree; everything
        # else is pinned to label 0 by simply not being an item.
        full = (1 << nv) - 1
        region = self._reach(self.smask, full)
        items = [g.n + j for j in range(len(self.inner_edges))]
        seen = self.smask | sum(1 << v for v in items)
        frontier = list(s)
        order = []
        while frontier:
            nxt = []
            for u in frontier:
                m = adj[u] & region & ~seen
                while m:
                    v = (m & -m).bit_length() - 1
                    m &= m - 1
                    seen |= 1 << v
                    nxt.append(v)
            nxt.sort()
            order.extend(nxt)
            frontier = nxt
        self.items = items + order

    def _reach(self, start_mask: int, allowed: int) -> int:
        adj = self.adj
        reach = start_mask & allowed
        frontier = reach
        while frontier:
            nxt = 0
            m = frontier
            while m:
                v = (m & -m).bit_length() - 1
                m &= m - 1
                nxt |= adj[v]
            frontier = nxt & allowed & ~reach
            reach |= frontier
        return reach

    def _connects(self, allowed: int) -> bool:
        return not (self.smask & ~self._reach(self.s_first, allowed | self.smask))

    def search(self, l: int) -> list[int] | None:
        """Labels for the items witnessing an l-packing, or None.

        Returns the lexicographically smallest feasible labelling (over the
        fixed item order, with interchangeable classes canonicalized).
        """
        if l < 1:
            raise ValueError("need l >= 1")
        if l > min(len(self.g.adj[v]) for v in self.s):
            return None  # each tree consumes an edge at every member of S
        items = self.items
        nitems = len(items)
        unassigned = sum(1 << v for v in items)
        if not self._connects(unassigned):
            return None  # S is not even connected in its region
        class_mask = [0] * (l + 1)
        label = [0] * nitems
        smask = self.smask
        connects = self._connects

        def dfs(t: int, used_max: int, unassigned: int) -> bool:
            if t == nitems:
                return True
            vb = 1 << items[t]
            rest = unassigned & ~vb
            top = min(l, used_max + 1)
            for lab in range(0, top + 1):
                if lab:
                    class_mask[lab] |= vb
                ok = True
                for j in range(1, l + 1):
                    if j != lab and not connects(class_mask[j] | rest):
                        ok = False
                        break
                if ok and dfs(t + 1, max(used_max, lab), rest):
                    label[t] = lab
                    return True
                if lab:
                    class_mask[lab] &= ~vb
            return False

        return list(label) if dfs(0, 0, unassigned) else None

    def certificate(self, l: int, labels: list[int]) -> TreeCertificate:
        """Trees extracted from a feasible labelling: per class, a pruned
        spanning tree of the subgraph on S plus that class's vertices."""
        g = self.g
        s = self.s
        by_class: list[set[int]] = [set() for _ in range(l + 1)]
        for item, lab in zip(self.items, labels):
            by_class[lab].add(item)
        trees = []
        for i in range(1, l + 1):
            verts = set(s) | {v for v in by_class[i] if v < g.n}
            inner = [
                self.inner_edges[v - g.n] for v in by_class[i] if v >= g.n
            ]
            adj: dict[int, list[int]] = {v: [] for v in verts}
            for u in verts:
                for w in g.adj[u]:
                    if w in verts and u < w and not (u in s and w in s):
                        adj[u].append(w)
                        adj[w].append(u)
            for u, w in inner:
                adj[u].append(w)
                adj[w].append(u)
            # BFS spanning tree from the smallest member of S, then repeatedly
            # strip leaves outside S so internal vertices sit on S-paths only.
            root = s[0]
            parent = {root: None}
            frontier = [root]
            while frontier:
                nxt = []
                for u in frontier:
                    for w in sorted(adj[u]):
                        if w not in parent:
                            parent[w] = u
                            nxt.append(w)
                frontier = nxt
            tadj: dict[int, set[int]] = {v: set() for v in parent}
            for v, p in parent.items():
                if p is not None:
                    tadj[v].add(p)
                    tadj[p].add(v)
            changed = True
            while changed:
                changed = False
                for v in list(tadj):
                    if v not in s and len(tadj[v]) <= 1:
                        for w in tadj[v]:
                            tadj[w].discard(v)
                        del tadj[v]
                        changed = True
            edges = sorted(
                (u, w) for u in tadj for w in tadj[u] if u < w
            )
            trees.append(tuple(edges))
        cert = TreeCertificate(s, tuple(trees), None)
        ok, why = verify_certificate(g, cert)
        assert ok, f"oracle produced an invalid certificate: {why}"
        return cert


def packing_exists(g: Graph, s, l: int) -> TreeCertificate | None:
    """A certificate of l internally disjoint trees connecting s, or None."""
    s = make_triple(g.n, *s)
    packer = _Packer(g, s)
    labels = packer.search(l)
    return packer.certificate(l, labels) if labels is not None else None


def kappa_set(g: Graph, s, max_l: int | None = None) -> PackingResult:
    """kappa(S): the largest l with an l-packing; 0 when s is not connected in g.

    max_l caps the search (the result is then min(kappa(S), max_l)).
    """
    s = make_triple(g.n, *s)
    if not g.connected_within(range(g.n), s):
        return PackingResult(s, 0, None)
    packer = _Packer(g, s)
    cap = min(len(g.adj[v]) for v in s)
    if max_l is not None:
        cap = min(cap, max_l)
    best_l = 0
    best_labels = None
    for l in range(1, cap + 1):
        labels = packer.search(l)
        if labels is None:
            break
        best_l, best_labels = l, labels
    witness = packer.certificate(best_l, best_labels) if best_l else None
    return PackingResult(s, best_l, witness)


def kappa3(g: Graph, use_bound_cap: bool = True) -> Kappa3Result:
    """min of kappa(S) over all 3-sets, with the canonically smallest argmin.

    Per-set searches are capped at the running minimum (sets that still admit
    that many trees cannot lower it), the sweep starts from the degree-based
    upper bound, and it stops once the minimum hits the floor of 1. With
    use_bound_cap the start is the adjacent-min-degree bound, otherwise the
    plain minimum degree.
    """
    if g.n < 3:
        raise ValueError("3-connectivity needs at least 3 vertices")
    if not g.is_connected():
        for s in combinations(range(g.n), 3):
            if not g.connected_within(range(g.n), s):
                return Kappa3Result(0, s, None)
        raise AssertionError("disconnected graph with no disconnected 3-set")
    cap0 = lemma1_upper_bound(g) if use_bound_cap else g.min_degree()
    current = max(cap0, 1)
    argmin: tuple[int, int, int] | None = None
    witness: TreeCertificate | None = None
    for s in combinations(range(g.n), 3):
        packer = _Packer(g, s)
        if packer.search(current) is not None:
            continue
        value = 0
        labels = None
        for l in range(current - 1, 0, -1):
            labels = packer.search(l)
            if labels is not None:
                value = l
                break
        assert value >= 1, "kappa(S) = 0 inside a connected graph"
        current = value
        argmin = s
        witness = packer.certificate(value, labels)
        if current == 1:
            break
    if argmin is None:
        # Every set packs at the initial cap, so kappa_3 equals it; find the
        # canonically smallest set that does not exceed it.
        for s in combinations(range(g.n), 3):
            packer = _Packer(g, s)
            if packer.search(cap0 + 1) is None:
                argmin = s
                witness = packer.certificate(cap0, packer.search(cap0))
                break
        assert argmin is not None, "no 3-set attains the upper bound"
        current = cap0
    if current == 2:
        deg2 = [v for v in range(g.n) if len(g.adj[v]) == 2]
        assert g.is_stable(deg2), "kappa_3 = 2 with adjacent degree-2 vertices"
    return Kappa3Result(current, argmin, witness)
