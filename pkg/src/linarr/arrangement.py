"""Linear arrangements and the predicates defined on them.

An arrangement places the vertices of a graph on positions 1..n, one vertex
per position. The cost of an arrangement is the total edge length, an edge's
length being the absolute position difference of its endpoints. Two edges
cross when their position intervals properly interleave; an edge dominates
another when the other's closed interval contains its own.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

from .errors import ValidationError
from .graph import Edge, Graph, normalize_edge


@dataclass(frozen=True, order=True)
class Arrangement:
    """A bijection vertex -> position; positions[v] is the 1-based position of v."""

    positions: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "positions", tuple(int(p) for p in self.positions))
        n = len(self.positions)
        if sorted(self.positions) != list(range(1, n + 1)):
            raise ValidationError(
                f"positions {self.positions} are not a bijection onto 1..{n}"
            )

    @classmethod
    def from_vertex_order(cls, order: Sequence[int]) -> Arrangement:
        """Build from the sequence of vertices read left to right."""
        positions = [0] * len(order)
        for i, v in enumerate(order):
            if not 0 <= v < len(order):
                raise ValidationError(f"vertex {v} out of range for order {len(order)}")
            positions[v] = i + 1
        return cls(tuple(positions))

    def __len__(self) -> int:
        return len(self.positions)

    def position(self, v: int) -> int:
        return self.positions[v]

    def vertex_order(self) -> tuple[int, ...]:
        """Vertices sorted by position, i.e. read left to right."""
        return tuple(v for _, v in sorted(zip(self.positions, range(len(self.positions)))))

    def reverse(self) -> Arrangement:
        n = len(self.positions)
        return Arrangement(tuple(n + 1 - p for p in self.positions))


def reverse(arr: Arrangement) -> Arrangement:
    """Mirror the arrangement: position p becomes n+1-p."""
    return arr.reverse()


def _interval(arr: Arrangement, e: Edge) -> tuple[int, int]:
    u, v = e
    n = len(arr)
    if v >= n or u < 0:
        raise ValidationError(f"edge ({u}, {v}) has no position in an arrangement of {n}")
    pu, pv = arr.positions[u], arr.positions[v]
    return (pu, pv) if pu < pv else (pv, pu)


def _check_arity(g: Graph, arr: Arrangement) -> None:
    if g.order != len(arr):
        raise ValidationError(
            f"arrangement of length {len(arr)} does not fit a graph of order {g.order}"
        )


def cost(g: Graph, arr: Arrangement) -> int:
    """Total edge length: sum over edges {u, v} of |pos(u) - pos(v)|."""
    _check_arity(g, arr)
    pos = arr.positions
    return sum(abs(pos[u] - pos[v]) for u, v in g.edges)


def crosses(arr: Arrangement, e1: Iterable[int], e2: Iterable[int]) -> bool:
    """True iff the position intervals of two distinct edges properly interleave.

    Edges sharing an endpoint never cross; nested or disjoint intervals do
    not cross either.
    """
    a = normalize_edge(e1)
    b = normalize_edge(e2)
    if a == b:
        raise ValidationError(f"crossing is only defined for distinct edges, got {a} twice")
    lo1, hi1 = _interval(arr, a)
    lo2, hi2 = _interval(arr, b)
    return lo1 < lo2 < hi1 < hi2 or lo2 < lo1 < hi2 < hi1


def dominates(arr: Arrangement, e1: Iterable[int], e2: Iterable[int]) -> bool:
    """True iff e2's closed position interval contains e1's (and e1 != e2).

    The dominated edge e2 is the wider one; endpoints may coincide in
    position with e1's.
    """
    a = normalize_edge(e1)
    b = normalize_edge(e2)
    if a == b:
        raise ValidationError(f"domination is only defined for distinct edges, got {a} twice")
    lo1, hi1 = _interval(arr, a)
    lo2, hi2 = _interval(arr, b)
    return lo2 <= lo1 and hi1 <= hi2


def is_planar_arrangement(g: Graph, arr: Arrangement) -> bool:
    """True iff no two distinct edges of g cross in arr (pairwise check)."""
    _check_arity(g, arr)
    pos = arr.positions
    spans = []
    for u, v in g.sorted_edges:
        pu, pv = pos[u], pos[v]
        spans.append((pu, pv) if pu < pv else (pv, pu))
    for (lo1, hi1), (lo2, hi2) in combinations(spans, 2):
        if lo1 < lo2 < hi1 < hi2 or lo2 < lo1 < hi2 < hi1:
            return False
    return True
