"""Immutable simple undirected graphs and the small predicates built on them."""

from __future__ import annotations

from collections import deque
from collections.abc import Iterable

Edge = tuple[int, int]


def make_triple(n: int, a: int, b: int, c: int) -> tuple[int, int, int]:
    """Canonically sorted 3-set of distinct vertex ids, validated against n."""
    s = tuple(sorted((a, b, c)))
    if len(set(s)) != 3:
        raise ValueError(f"triple {s} has repeated vertices")
    if s[0] < 0 or s[2] >= n:
        raise ValueError(f"triple {s} out of range for n={n}")
    return s


class Graph:
    """Simple undirected graph on vertices 0..n-1 with set-based adjacency.

    Instances are immutable: anything that looks like an edit returns a new
    graph, so graphs can be shared freely between concurrent workers.
    """

    __slots__ = ("n", "adj", "_m")

    def __init__(self, n: int, edges: Iterable[Edge] = ()):
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        adj: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            adj[u].add(v)
            adj[v].add(u)
        self.n = n
        self.adj: tuple[frozenset[int], ...] = tuple(frozenset(s) for s in adj)
        self._m = sum(len(s) for s in adj) // 2

    @property
    def e(self) -> int:
        return self._m

    def _check_vertex(self, v: int) -> None:
        if not (0 <= v < self.n):
            raise ValueError(f"vertex {v} out of range for n={self.n}")

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return len(self.adj[v])

    def min_degree(self) -> int:
        if self.n == 0:
            raise ValueError("empty graph has no degrees")
        return min(len(s) for s in self.adj)

    def max_degree(self) -> int:
        if self.n == 0:
            raise ValueError("empty graph has no degrees")
        return max(len(s) for s in self.adj)

    def has_edge(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        return v in self.adj[u]

    def edges(self) -> list[Edge]:
        """Edges as sorted (min, max) pairs, in lexicographic order."""
        return sorted((u, v) for u in range(self.n) for v in self.adj[u] if u < v)

    def with_edge(self, u: int, v: int) -> "Graph":
        """New graph with one extra edge."""
        if self.has_edge(u, v):
            raise ValueError(f"edge ({u},{v}) already present")
        return Graph(self.n, self.edges() + [(u, v)])

    def is_stable(self, vset: Iterable[int]) -> bool:
        """True iff no edge of the graph joins two vertices of vset."""
        vs = list(vset)
        for v in vs:
            self._check_vertex(v)
        inside = set(vs)
        return all(not (self.adj[v] & inside) for v in inside)

    def components(self) -> list[set[int]]:
        seen: set[int] = set()
        comps = []
        for start in range(self.n):
            if start in seen:
                continue
            comp = {start}
            queue = deque([start])
            while queue:
                u = queue.popleft()
                for w in self.adj[u]:
                    if w not in comp:
                        comp.add(w)
                        queue.append(w)
            seen |= comp
            comps.append(comp)
        return comps

    def is_connected(self) -> bool:
        if self.n <= 1:
            return True
        return len(self.components()[0]) == self.n

    def connected_within(self, vset: Iterable[int], s: Iterable[int]) -> bool:
        """True iff all of s lies in one component of the subgraph induced on vset | s."""
        s = list(s)
        if not s:
            return True
        allowed = set(vset) | set(s)
        for v in allowed:
            self._check_vertex(v)
        start = s[0]
        reach = {start}
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for w in self.adj[u]:
                if w in allowed and w not in reach:
                    reach.add(w)
                    queue.append(w)
        return all(v in reach for v in s)

    def induced_subgraph(self, vset: Iterable[int]) -> tuple["Graph", dict[int, int]]:
        """Subgraph on vset with re-indexed vertices; returns (graph, old->new map)."""
        vs = sorted(set(vset))
        for v in vs:
            self._check_vertex(v)
        index = {v: i for i, v in enumerate(vs)}
        edges = [
            (index[u], index[v])
            for u in vs
            for v in self.adj[u]
            if v in index and u < v
        ]
        return Graph(len(vs), edges), index

    def adjacency_masks(self) -> list[int]:
        """Neighbourhoods as bitmasks, for the search routines."""
        return [sum(1 << w for w in s) for s in self.adj]

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, e={self.e})"


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    if n < 1:
        raise ValueError("a path needs at least 1 vertex")
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def complete_graph(n: int) -> Graph:
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])
