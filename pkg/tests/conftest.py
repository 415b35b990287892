"""Shared fixtures, independent brute-force oracles, and hypothesis strategies.

The oracle functions below deliberately avoid the package's solvers and
predicates: they re-derive costs, crossings and optima straight from the
definitions, so tests can compare the two code paths.
"""

from __future__ import annotations

import string
from itertools import combinations, permutations

import pytest
from hypothesis import strategies as st

from linarr import Arrangement, Graph, make_graph, pentagon_with_chord

LETTERS = "abcdefghij"


def arr_of(letters: str) -> Arrangement:
    """Build an arrangement from a letter sequence read left to right."""
    return Arrangement.from_vertex_order([LETTERS.index(c) for c in letters])


def letters_of(arr: Arrangement) -> str:
    return "".join(LETTERS[v] for v in arr.vertex_order())


@pytest.fixture
def pentagon() -> Graph:
    return pentagon_with_chord()


# ---------------------------------------------------------------------------
# Definition-level oracles
# ---------------------------------------------------------------------------


def oracle_cost(pos: tuple[int, ...], edges) -> int:
    return sum(abs(pos[u] - pos[v]) for u, v in edges)


def oracle_is_crossing_free(pos: tuple[int, ...], edges) -> bool:
    spans = [tuple(sorted((pos[u], pos[v]))) for u, v in edges]
    for (a1, b1), (a2, b2) in combinations(spans, 2):
        if a1 < a2 < b1 < b2 or a2 < a1 < b2 < b1:
            return False
    return True


def oracle_positions(n: int):
    """All position tuples indexed by vertex, i.e. all arrangements."""
    for perm in permutations(range(n)):
        pos = [0] * n
        for i, v in enumerate(perm):
            pos[v] = i + 1
        yield tuple(pos)


def oracle_minla(g: Graph) -> tuple[int, set[tuple[int, ...]]]:
    best: int | None = None
    witnesses: set[tuple[int, ...]] = set()
    for pos in oracle_positions(g.order):
        c = oracle_cost(pos, g.edges)
        if best is None or c < best:
            best, witnesses = c, {pos}
        elif c == best:
            witnesses.add(pos)
    return best if best is not None else 0, witnesses


def oracle_planar_minla(g: Graph) -> tuple[int | None, set[tuple[int, ...]]]:
    best: int | None = None
    witnesses: set[tuple[int, ...]] = set()
    for pos in oracle_positions(g.order):
        if not oracle_is_crossing_free(pos, g.edges):
            continue
        c = oracle_cost(pos, g.edges)
        if best is None or c < best:
            best, witnesses = c, {pos}
        elif c == best:
            witnesses.add(pos)
    return best, witnesses


def oracle_crossing_free_set(g: Graph) -> set[tuple[int, ...]]:
    return {
        pos for pos in oracle_positions(g.order)
        if oracle_is_crossing_free(pos, g.edges)
    }


def oracle_is_connected(n: int, edges) -> bool:
    if n <= 1:
        return True
    adj = {v: set() for v in range(n)}
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    seen = {0}
    stack = [0]
    while stack:
        for w in adj[stack.pop()]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == n


# ---------------------------------------------------------------------------
# Hypothesis strategies
# ---------------------------------------------------------------------------


@st.composite
def graphs(draw, min_order: int = 1, max_order: int = 7) -> Graph:
    n = draw(st.integers(min_order, max_order))
    pairs = list(combinations(range(n), 2))
    if pairs:
        edges = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=len(pairs)))
    else:
        edges = []
    return make_graph(n, edges)


@st.composite
def graph_and_arrangement(draw, min_order: int = 1,
                          max_order: int = 7) -> tuple[Graph, Arrangement]:
    g = draw(graphs(min_order, max_order))
    perm = draw(st.permutations(list(range(g.order))))
    return g, Arrangement.from_vertex_order(perm)


@st.composite
def arrangement_and_edge_pair(draw, min_order: int = 3, max_order: int = 7):
    """An arrangement plus two distinct vertex pairs usable as edges."""
    n = draw(st.integers(min_order, max_order))
    pairs = list(combinations(range(n), 2))
    e1 = draw(st.sampled_from(pairs))
    e2 = draw(st.sampled_from([p for p in pairs if p != e1]))
    perm = draw(st.permutations(list(range(n))))
    return Arrangement.from_vertex_order(perm), e1, e2


@st.composite
def labeled_graphs(draw, max_order: int = 7) -> tuple[Graph, tuple[str, ...]]:
    g = draw(graphs(1, max_order))
    alphabet = string.ascii_lowercase + string.digits
    labels = draw(
        st.lists(
            st.text(alphabet, min_size=1, max_size=3),
            min_size=g.order, max_size=g.order, unique=True,
        )
    )
    return g, tuple(labels)


# Frequently used small graphs.


def path_graph(n: int) -> Graph:
    return make_graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    return make_graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return make_graph(n, combinations(range(n), 2))


def complete_bipartite(a: int, b: int) -> Graph:
    return make_graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])
