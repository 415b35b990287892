"""Undirected simple graphs on small vertex sets.

Vertices are the integers 0..order-1; edges are unordered pairs stored as
sorted tuples. The module also provides exhaustive isomorphism testing,
enumeration of connected graphs up to isomorphism, and outerplanarity
recognition via the two forbidden minors K4 and K2,3. Everything here is
exact and intended for orders up to about 7 (10 for the outerplanarity
test); nothing is tuned beyond that scale.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from itertools import combinations, permutations
from typing import Iterable, Iterator

from .errors import ValidationError

Edge = tuple[int, int]


def normalize_edge(e: Iterable[int]) -> Edge:
    """Return the edge as a sorted (u, v) tuple, rejecting self-loops."""
    u, v = e
    u, v = int(u), int(v)
    if u == v:
        raise ValidationError(f"self-loop on vertex {u} is not a valid edge")
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """An immutable simple graph: a vertex count plus a set of unordered edges."""

    order: int
    edges: frozenset[Edge] = field(default_factory=frozenset)

    def __post_init__(self) -> None:
        if self.order < 0:
            raise ValidationError(f"graph order must be nonnegative, got {self.order}")
        norm = set()
        for e in self.edges:
            u, v = normalize_edge(e)
            if v >= self.order or u < 0:
                raise ValidationError(
                    f"edge ({u}, {v}) has an endpoint outside 0..{self.order - 1}"
                )
            norm.add((u, v))
        object.__setattr__(self, "edges", frozenset(norm))

    @property
    def size(self) -> int:
        return len(self.edges)

    @cached_property
    def sorted_edges(self) -> tuple[Edge, ...]:
        return tuple(sorted(self.edges))

    @cached_property
    def neighbor_masks(self) -> tuple[int, ...]:
        """Adjacency as one bitmask per vertex."""
        masks = [0] * self.order
        for u, v in self.edges:
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        return tuple(masks)

    @cached_property
    def neighbors(self) -> tuple[tuple[int, ...], ...]:
        adj: list[list[int]] = [[] for _ in range(self.order)]
        for u, v in self.sorted_edges:
            adj[u].append(v)
            adj[v].append(u)
        return tuple(tuple(sorted(ns)) for ns in adj)

    @cached_property
    def degree_sequence(self) -> tuple[int, ...]:
        return tuple(sorted(len(ns) for ns in self.neighbors))

    def __repr__(self) -> str:
        return f"Graph(order={self.order}, edges={sorted(self.edges)})"


def make_graph(order: int, edges: Iterable[Iterable[int]] = ()) -> Graph:
    """Build a validated graph; duplicate edges collapse, self-loops raise."""
    return Graph(order, frozenset(normalize_edge(e) for e in edges))


def pentagon_with_chord() -> Graph:
    """The 5-cycle 0-1-2-3-4-0 plus the chord {1, 3}.

    This is the canonical gap example: its best unconstrained arrangement
    costs 9 while its best crossing-free arrangement costs 10. Conventional
    labels a..e map to vertices 0..4.
    """
    return make_graph(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (1, 3)])


def is_connected(g: Graph) -> bool:
    """True when every vertex is reachable from vertex 0 (vacuously for order 0)."""
    if g.order <= 1:
        return True
    masks = g.neighbor_masks
    seen = 1
    frontier = [0]
    while frontier:
        v = frontier.pop()
        m = masks[v] & ~seen
        while m:
            w = (m & -m).bit_length() - 1
            seen |= 1 << w
            frontier.append(w)
            m &= m - 1
    return seen == (1 << g.order) - 1


def are_isomorphic(g1: Graph, g2: Graph) -> bool:
    """Exhaustive isomorphism test: search all vertex bijections (scale n <= 8)."""
    if g1.order != g2.order or g1.size != g2.size:
        return False
    if g1.degree_sequence != g2.degree_sequence:
        return False
    edges2 = g2.edges
    edges1 = g1.sorted_edges
    for perm in permutations(range(g1.order)):
        ok = True
        for u, v in edges1:
            a, b = perm[u], perm[v]
            if ((a, b) if a < b else (b, a)) not in edges2:
                ok = False
                break
        if ok:
            return True
    return False


# ---------------------------------------------------------------------------
# Canonical forms and enumeration up to isomorphism
# ---------------------------------------------------------------------------
#
# The canonical key of a graph is the minimum, over all vertex orderings, of
# the adjacency bits read in prefix order: placing vertices one by one, each
# new vertex appends its adjacency bits to the already-placed ones. Any fixed
# linearization of the adjacency matrix works; this one lets the backtracking
# search prune an ordering as soon as its prefix exceeds the best known.


def _canonical_order(g: Graph) -> tuple[int, tuple[int, ...]]:
    """Return (canonical bits, vertex ordering achieving them)."""
    n = g.order
    if n <= 1:
        return 0, tuple(range(n))
    adj = g.neighbor_masks
    total_bits = n * (n - 1) // 2
    cum = [k * (k - 1) // 2 for k in range(n + 1)]
    best_bits: int | None = None
    best_order: tuple[int, ...] = ()

    def rec(order: list[int], prefix: int, used: int) -> None:
        nonlocal best_bits, best_order
        level = len(order)
        if level == n:
            if best_bits is None or prefix < best_bits:
                best_bits = prefix
                best_order = tuple(order)
            return
        for v in range(n):
            if used >> v & 1:
                continue
            av = adj[v]
            b = 0
            for u in order:
                b = (b << 1) | (av >> u & 1)
            new_prefix = (prefix << level) | b
            if best_bits is not None:
                if new_prefix > best_bits >> (total_bits - cum[level + 1]):
                    continue
            order.append(v)
            rec(order, new_prefix, used | 1 << v)
            order.pop()

    rec([], 0, 0)
    assert best_bits is not None
    return best_bits, best_order


def canonical_form(g: Graph) -> Graph:
    """Relabel g onto its canonical vertex ordering; equal across isomorphs."""
    _, order = _canonical_order(g)
    pos = {v: i for i, v in enumerate(order)}
    return Graph(g.order, frozenset((pos[u], pos[v]) for u, v in g.edges))


@lru_cache(maxsize=None)
def _all_graph_reps(order: int) -> tuple[Graph, ...]:
    """One canonical representative per isomorphism class of all simple graphs."""
    if order == 0:
        return (Graph(0),)
    if order == 1:
        return (Graph(1),)
    reps: dict[int, Graph] = {}
    new = order - 1
    for parent in _all_graph_reps(order - 1):
        for nbrs in range(1 << new):
            extra = frozenset((i, new) for i in range(new) if nbrs >> i & 1)
            g = Graph(order, parent.edges | extra)
            bits, vertex_order = _canonical_order(g)
            if bits not in reps:
                pos = {v: i for i, v in enumerate(vertex_order)}
                reps[bits] = Graph(order, frozenset((pos[u], pos[v]) for u, v in g.edges))
    return tuple(g for _, g in sorted(reps.items(), key=lambda kv: (len(kv[1].edges), kv[0])))


def enumerate_connected_graphs(order: int) -> Iterator[Graph]:
    """Yield one representative per isomorphism class of connected graphs.

    Deterministic across runs: representatives are canonically labeled and
    ordered by (edge count, canonical key). Intended scale is order <= 7;
    larger orders work but the class count grows steeply.
    """
    if order < 1:
        raise ValidationError(f"enumeration needs order >= 1, got {order}")
    for g in _all_graph_reps(order):
        if is_connected(g):
            yield g


# ---------------------------------------------------------------------------
# Outerplanarity via forbidden minors
# ---------------------------------------------------------------------------
#
# A graph is outerplanar iff it has neither a K4 minor nor a K2,3 minor.
# Both forbidden graphs have maximum degree 3, so minor containment
# coincides with topological containment; the search therefore looks for
# subdivisions directly: branch vertices joined by internally disjoint paths.


def _iter_paths(masks: tuple[int, ...], cur: int, target: int, blocked: int,
                internal: int) -> Iterator[int]:
    """Yield the internal-vertex mask of each simple cur->target path.

    Intermediate vertices must avoid `blocked`; `internal` accumulates the
    vertices used so far on this path.
    """
    m = masks[cur]
    if m >> target & 1:
        yield internal
    m &= ~blocked
    while m:
        w = (m & -m).bit_length() - 1
        m &= m - 1
        if w == target:
            continue
        yield from _iter_paths(masks, w, target, blocked | 1 << w, internal | 1 << w)


def _link_pairs(masks: tuple[int, ...], pairs: list[tuple[int, int]], blocked: int,
                need_internal: bool) -> bool:
    """Can all (s, t) pairs be joined by internally disjoint paths?"""
    if not pairs:
        return True
    s, t = pairs[0]
    for internal in _iter_paths(masks, s, t, blocked, 0):
        if need_internal and internal == 0:
            continue
        if _link_pairs(masks, pairs[1:], blocked | internal, need_internal):
            return True
    return False


def _has_k4_minor(g: Graph) -> bool:
    n = g.order
    if n < 4 or g.size < 6:
        return False
    masks = g.neighbor_masks
    # Quick subgraph check: four mutually adjacent vertices.
    for quad in combinations(range(n), 4):
        if all(masks[u] >> v & 1 for u, v in combinations(quad, 2)):
            return True
    for branch in combinations(range(n), 4):
        blocked = 0
        for v in branch:
            blocked |= 1 << v
        pairs = list(combinations(branch, 2))
        if _link_pairs(masks, pairs, blocked, need_internal=False):
            return True
    return False


def _has_k23_minor(g: Graph) -> bool:
    n = g.order
    if n < 5 or g.size < 6:
        return False
    masks = g.neighbor_masks
    # Quick subgraph check: two vertices with three common neighbors.
    for u, v in combinations(range(n), 2):
        if bin(masks[u] & masks[v] & ~(1 << u | 1 << v)).count("1") >= 3:
            return True
    for s, t in combinations(range(n), 2):
        pairs = [(s, t), (s, t), (s, t)]
        if _link_pairs(masks, pairs, 1 << s | 1 << t, need_internal=True):
            return True
    return False


def is_outerplanar(g: Graph) -> bool:
    """True iff g contains neither a K4 minor nor a K2,3 minor.

    Equivalently, g admits a crossing-free linear arrangement; the two
    characterizations are cross-checked in the test suite. Intended scale
    is order <= 10.
    """
    return not _has_k4_minor(g) and not _has_k23_minor(g)
