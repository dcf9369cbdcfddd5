"""Modular position arithmetic and directed segments of a fixed-orientation cycle.

Positions on a cycle of length L are 1-based; all walks traverse in the +1
direction, so the reverse of a segment is expressed by swapping endpoints.
"""

from __future__ import annotations

from dataclasses import dataclass


def mod_index(a: int, k: int) -> int:
    """The representative of a modulo k lying in [1, k]."""
    if k < 1:
        raise ValueError(f"modulus must be positive, got {k}")
    return (a - 1) % k + 1


@dataclass(frozen=True)
class CycleWalk:
    """A directed walk along consecutive positions of a cycle of length L.

    Positions are pairwise distinct: a walk never wraps past its own start.
    The empty walk is allowed (it arises from hat-segments on adjacent
    positions) but has no defined length.
    """

    cycle_length: int
    positions: tuple[int, ...]

    def __post_init__(self):
        L = self.cycle_length
        if L < 1:
            raise ValueError("cycle length must be positive")
        ps = self.positions
        if len(set(ps)) != len(ps):
            raise ValueError(f"walk positions repeat: {ps}")
        for p in ps:
            if not (1 <= p <= L):
                raise ValueError(f"position {p} outside [1,{L}]")
        for a, b in zip(ps, ps[1:]):
            if mod_index(a + 1, L) != b:
                raise ValueError(f"positions {a},{b} not consecutive mod {L}")

    @property
    def is_empty(self) -> bool:
        return not self.positions

    def length(self) -> int:
        """Number of edges; 0 for a singleton, undefined (error) for empty."""
        if self.is_empty:
            raise ValueError("empty walk has no length")
        return len(self.positions) - 1

    def contains(self, p: int) -> bool:
        if not (1 <= p <= self.cycle_length):
            raise ValueError(f"position {p} outside [1,{self.cycle_length}]")
        return p in self.positions

    def __contains__(self, p: int) -> bool:
        return self.contains(p)

    def edges(self) -> list[tuple[int, int]]:
        """Consecutive position pairs, in traversal order."""
        return list(zip(self.positions, self.positions[1:]))


def segment(
    L: int,
    a: int,
    b: int,
    include_start: bool = True,
    include_end: bool = True,
) -> CycleWalk:
    """The +1-direction walk from position a to position b on a cycle of length L.

    With both ends included and a == b the walk is the single position a.
    Excluded endpoints are dropped from the full walk, so hat variants on
    adjacent positions degrade to shorter (possibly empty) walks.
    """
    if not (1 <= a <= L and 1 <= b <= L):
        raise ValueError(f"endpoints ({a},{b}) outside [1,{L}]")
    steps = (b - a) % L
    positions = [mod_index(a + t, L) for t in range(steps + 1)]
    if not include_start:
        positions = positions[1:]
    if not include_end:
        positions = positions[:-1]
    return CycleWalk(L, tuple(positions))
