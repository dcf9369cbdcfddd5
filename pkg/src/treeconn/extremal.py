"""The tight family H(k): a 4k-cycle of alternating x/y vertices plus k chord
vertices z_i, each joined to the antipodal pair x_i, x_{i+k}.

H(k) has 5k vertices and 6k edges, so its size is exactly 6/5 of its order.
Vertices carry roles: X(i), Y(i) for 1 <= i <= 2k around the cycle, Z(i) for
1 <= i <= k. Cycle position p in [1, 4k] holds x_{(p+1)/2} for odd p and
y_{p/2} for even p.
"""

from __future__ import annotations

import re

from .cycles import mod_index
from .graphs import Graph

# A role is ("x"|"y"|"z", 1-based index); it serializes as "x3", "y12", "z1".
Role = tuple[str, int]

_LABEL_RE = re.compile(r"^([xyz])(\d+)$")


def role_label(role: Role) -> str:
    kind, i = role
    return f"{kind}{i}"


def parse_role_label(text: str) -> Role:
    m = _LABEL_RE.match(text.strip())
    if not m:
        raise ValueError(f"not a role label: {text!r}")
    return (m.group(1), int(m.group(2)))


def mirror_role(k: int, role: Role) -> Role:
    """The reflection symmetry of H(k); an involution that reverses the cycle.

    x_i <-> x_{[2k+1-i]}, y_i <-> y_{[2k-i]}, z_j <-> z_{[k+1-j]}. Antipodal
    x-pairs map to antipodal x-pairs, so chords map to chords.
    """
    kind, i = role
    if kind == "x":
        return ("x", mod_index(2 * k + 1 - i, 2 * k))
    if kind == "y":
        return ("y", mod_index(2 * k - i, 2 * k))
    return ("z", mod_index(k + 1 - i, k))


class ExtremalGraph:
    """H(k) with role bookkeeping. Build via build_H(k)."""

    __slots__ = ("k", "graph", "roles", "_by_role")

    def __init__(self, k: int):
        if k < 1:
            raise ValueError(f"k must be a positive integer, got {k}")
        self.k = k
        n_cycle = 4 * k
        roles: list[Role] = []
        for p in range(1, n_cycle + 1):
            roles.append(("x", (p + 1) // 2) if p % 2 == 1 else ("y", p // 2))
        roles.extend(("z", i) for i in range(1, k + 1))
        self.roles: tuple[Role, ...] = tuple(roles)
        self._by_role = {r: v for v, r in enumerate(roles)}

        edges = [(p - 1, p % n_cycle) for p in range(1, n_cycle + 1)]
        for i in range(1, k + 1):
            z = self._by_role[("z", i)]
            edges.append((z, self._by_role[("x", i)]))
            edges.append((z, self._by_role[("x", i + k)]))
        self.graph = Graph(5 * k, edges)

        assert self.graph.e == 6 * k
        assert all(
            self.graph.degree(v) == (3 if r[0] == "x" else 2)
            for v, r in enumerate(roles)
        )

    @property
    def cycle_length(self) -> int:
        return 4 * self.k

    def vertex_of_role(self, role: Role) -> int:
        try:
            return self._by_role[role]
        except KeyError:
            raise ValueError(f"role {role} not present in H({self.k})") from None

    def role_of_vertex(self, v: int) -> Role:
        if not (0 <= v < self.graph.n):
            raise ValueError(f"vertex {v} out of range")
        return self.roles[v]

    def vertex_at_position(self, p: int) -> int:
        """Cycle position (1-based, in [1, 4k]) to vertex id."""
        if not (1 <= p <= self.cycle_length):
            raise ValueError(f"position {p} outside [1,{self.cycle_length}]")
        return p - 1

    def position_of_vertex(self, v: int) -> int:
        role = self.role_of_vertex(v)
        if role[0] == "z":
            raise ValueError(f"{role_label(role)} is not on the cycle")
        kind, i = role
        return 2 * i - 1 if kind == "x" else 2 * i

    def labels(self) -> dict[int, str]:
        return {v: role_label(r) for v, r in enumerate(self.roles)}

    def vertex_of_label(self, text: str) -> int:
        return self.vertex_of_role(parse_role_label(text))

    def __repr__(self) -> str:
        return f"ExtremalGraph(k={self.k})"


def build_H(k: int) -> ExtremalGraph:
    """Construct H(k). Every k >= 1 is constructible, including k = 2."""
    return ExtremalGraph(k)
