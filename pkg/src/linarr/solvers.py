"""Exact solvers for the minimum linear arrangement problem and its
crossing-free variant, plus a mechanical checker for the structural claims
about dominating cycle edges in crossing-free arrangements.

All solvers enumerate arrangements of vertices onto positions 1..n and are
exact by construction; the branch-and-bound and the planar search prune
prefixes, the exhaustive solver does not. Intended scale is order <= 9.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from typing import Iterator

from .arrangement import Arrangement
from .errors import ValidationError
from .graph import Edge, Graph, normalize_edge

SOLVER_EXHAUSTIVE = "exhaustive"
SOLVER_BNB = "branch-and-bound"
SOLVER_PLANAR = "planar-prefix"


@dataclass(frozen=True)
class SolveResult:
    """Outcome of an exact solve.

    `witnesses` holds optimal arrangements sorted by position sequence;
    when `deduped_reversals` is set, each mirror pair is collapsed to its
    lexicographically smaller member. `explored` counts the complete
    arrangements whose cost was evaluated, which makes pruned and unpruned
    solvers directly comparable.
    """

    optimal_cost: int
    witnesses: tuple[Arrangement, ...]
    explored: int
    solver_id: str
    deduped_reversals: bool = False

    @property
    def best(self) -> Arrangement:
        """The lexicographically smallest optimal arrangement."""
        return self.witnesses[0]


def _finalize(optimal_cost: int, position_tuples: list[tuple[int, ...]], explored: int,
              solver_id: str, dedup_reversals: bool) -> SolveResult:
    arrs = sorted(Arrangement(p) for p in position_tuples)
    if dedup_reversals:
        kept = []
        skip: set[tuple[int, ...]] = set()
        for a in arrs:
            if a.positions in skip:
                continue
            kept.append(a)
            skip.add(a.reverse().positions)
        arrs = kept
    return SolveResult(optimal_cost, tuple(arrs), explored, solver_id, dedup_reversals)


def _trivial_result(n: int, solver_id: str, dedup_reversals: bool) -> SolveResult:
    arr = Arrangement(tuple(range(1, n + 1)))
    return SolveResult(0, (arr,), 1, solver_id, dedup_reversals)


def solve_minla_exhaustive(g: Graph, dedup_reversals: bool = False) -> SolveResult:
    """Minimize total edge length over all n! arrangements; collect every optimum."""
    n = g.order
    if n <= 1:
        return _trivial_result(n, SOLVER_EXHAUSTIVE, dedup_reversals)
    edges = g.sorted_edges
    best: int | None = None
    witnesses: list[tuple[int, ...]] = []
    explored = 0
    pos = [0] * n
    for perm in permutations(range(n)):
        for i, v in enumerate(perm):
            pos[v] = i + 1
        c = sum(abs(pos[u] - pos[v]) for u, v in edges)
        explored += 1
        if best is None or c < best:
            best = c
            witnesses = [tuple(pos)]
        elif c == best:
            witnesses.append(tuple(pos))
    assert best is not None
    return _finalize(best, witnesses, explored, SOLVER_EXHAUSTIVE, dedup_reversals)


def solve_minla_bnb(g: Graph, dedup_reversals: bool = False) -> SolveResult:
    """Branch-and-bound minimization, agreeing with the exhaustive solver.

    Vertices are placed left to right. A prefix is abandoned when
    placed cost
    + for each edge with one placed endpoint: distance from that endpoint
      to the first unused position
    + the number of fully unplaced edges
    reaches the incumbent; the bound never overestimates a completion.
    """
    n = g.order
    if n <= 1:
        return _trivial_result(n, SOLVER_BNB, dedup_reversals)
    edges = g.sorted_edges
    nbrs = g.neighbors
    incumbent: int | None = None
    witnesses: list[tuple[int, ...]] = []
    explored = 0
    pos = [0] * n

    def bound(k: int, placed_cost: int) -> int:
        b = placed_cost
        nxt = k + 1
        for u, v in edges:
            pu, pv = pos[u], pos[v]
            if pu and pv:
                continue
            if pu:
                b += nxt - pu
            elif pv:
                b += nxt - pv
            else:
                b += 1
        return b

    def rec(k: int, placed_cost: int) -> None:
        nonlocal incumbent, explored
        if k == n:
            explored += 1
            if incumbent is None or placed_cost < incumbent:
                incumbent = placed_cost
                witnesses.clear()
                witnesses.append(tuple(pos))
            return
        p = k + 1
        for v in range(n):
            if pos[v]:
                continue
            newcost = placed_cost + sum(p - pos[u] for u in nbrs[v] if pos[u])
            pos[v] = p
            if incumbent is None or bound(p, newcost) < incumbent:
                rec(p, newcost)
            pos[v] = 0

    rec(0, 0)
    assert incumbent is not None
    return _finalize(incumbent, witnesses, explored, SOLVER_BNB, dedup_reversals)


def _planar_search(g: Graph, prune_cost: bool) -> tuple[int | None, list[tuple[int, ...]], int]:
    """Prefix search over crossing-free arrangements.

    A prefix dies as soon as two fully placed edges cross, since later
    placements cannot undo a crossing. With `prune_cost`, prefixes whose
    lower bound strictly exceeds the incumbent are abandoned as well, which
    still retains every optimum.
    """
    n = g.order
    edges = g.sorted_edges
    nbrs = g.neighbors
    incumbent: int | None = None
    witnesses: list[tuple[int, ...]] = []
    explored = 0
    pos = [0] * n
    spans: list[tuple[int, int]] = []

    def bound(k: int, placed_cost: int) -> int:
        b = placed_cost
        nxt = k + 1
        for u, v in edges:
            pu, pv = pos[u], pos[v]
            if pu and pv:
                continue
            if pu:
                b += nxt - pu
            elif pv:
                b += nxt - pv
            else:
                b += 1
        return b

    def rec(k: int, placed_cost: int) -> None:
        nonlocal incumbent, explored
        if k == n:
            explored += 1
            if incumbent is None or placed_cost < incumbent:
                incumbent = placed_cost
                witnesses.clear()
                witnesses.append(tuple(pos))
            elif placed_cost == incumbent:
                witnesses.append(tuple(pos))
            return
        p = k + 1
        for v in range(n):
            if pos[v]:
                continue
            ok = True
            newcost = placed_cost
            new_spans = []
            for u in nbrs[v]:
                pu = pos[u]
                if not pu:
                    continue
                newcost += p - pu
                # The new edge ends at the rightmost position p, so it
                # crosses an existing span (lo, hi) iff lo < pu < hi.
                for lo, hi in spans:
                    if lo < pu < hi:
                        ok = False
                        break
                if not ok:
                    break
                new_spans.append((pu, p))
            if not ok:
                continue
            pos[v] = p
            if not prune_cost or incumbent is None or bound(p, newcost) <= incumbent:
                spans.extend(new_spans)
                rec(p, newcost)
                del spans[len(spans) - len(new_spans):]
            pos[v] = 0

    if n == 0:
        return 0, [()], 1
    rec(0, 0)
    return incumbent, witnesses, explored


def solve_planar_minla(g: Graph, dedup_reversals: bool = False) -> SolveResult | None:
    """Minimize total edge length over crossing-free arrangements only.

    Returns None when the graph admits no crossing-free arrangement. The
    witness set contains every crossing-free optimum (before reversal
    dedup), so it doubles as the planar-optima enumerator.
    """
    optimal, witnesses, explored = _planar_search(g, prune_cost=True)
    if optimal is None:
        return None
    return _finalize(optimal, witnesses, explored, SOLVER_PLANAR, dedup_reversals)


def enumerate_planar_optima(g: Graph) -> list[Arrangement] | None:
    """All crossing-free optima, deduplicated up to reversal; None if none exist."""
    result = solve_planar_minla(g, dedup_reversals=True)
    if result is None:
        return None
    return list(result.witnesses)


def iter_crossing_free(g: Graph) -> Iterator[Arrangement]:
    """Yield every crossing-free arrangement of g, in deterministic order.

    Uses the same prefix search as the planar solver but without cost
    pruning, so the stream is exhaustive.
    """
    n = g.order
    if n == 0:
        yield Arrangement(())
        return
    nbrs = g.neighbors
    pos = [0] * n
    spans: list[tuple[int, int]] = []

    def rec(k: int) -> Iterator[Arrangement]:
        if k == n:
            yield Arrangement(tuple(pos))
            return
        p = k + 1
        for v in range(n):
            if pos[v]:
                continue
            ok = True
            new_spans = []
            for u in nbrs[v]:
                pu = pos[u]
                if not pu:
                    continue
                for lo, hi in spans:
                    if lo < pu < hi:
                        ok = False
                        break
                if not ok:
                    break
                new_spans.append((pu, p))
            if not ok:
                continue
            pos[v] = p
            spans.extend(new_spans)
            yield from rec(p)
            del spans[len(spans) - len(new_spans):]
            pos[v] = 0

    yield from rec(0)


# ---------------------------------------------------------------------------
# Claim checking
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ClaimVerdict:
    """Outcome of one structural claim; failures carry a concrete witness."""

    holds: bool
    witness_arrangement: Arrangement | None = None
    witness_edge: Edge | None = None
    note: str = ""


@dataclass(frozen=True)
class ClaimReport:
    """Verdicts for the two dominating-edge claims, aggregated over every
    crossing-free arrangement examined."""

    arrangement_count: int
    claim1: ClaimVerdict
    claim2: ClaimVerdict

    @property
    def both_hold(self) -> bool:
        return self.claim1.holds and self.claim2.holds


def _validate_cycle(g: Graph, cycle_edges) -> tuple[Edge, ...]:
    edges = tuple(sorted(normalize_edge(e) for e in cycle_edges))
    if len(set(edges)) != len(edges):
        raise ValidationError("cycle edge set contains duplicates")
    for e in edges:
        if e not in g.edges:
            raise ValidationError(f"cycle edge {e} is not an edge of the graph")
    if len(edges) < 3:
        raise ValidationError("a simple cycle needs at least 3 edges")
    degree: dict[int, int] = {}
    adj: dict[int, list[int]] = {}
    for u, v in edges:
        degree[u] = degree.get(u, 0) + 1
        degree[v] = degree.get(v, 0) + 1
        adj.setdefault(u, []).append(v)
        adj.setdefault(v, []).append(u)
    if any(d != 2 for d in degree.values()):
        raise ValidationError("cycle edges must touch every incident vertex exactly twice")
    if len(degree) != len(edges):
        raise ValidationError("cycle edges do not form a single simple cycle")
    # Walk the cycle to rule out two disjoint cycles of equal total size.
    start = min(degree)
    prev, cur = None, start
    steps = 0
    while True:
        nxt = adj[cur][0] if adj[cur][0] != prev else adj[cur][1]
        prev, cur = cur, nxt
        steps += 1
        if cur == start:
            break
    if steps != len(edges):
        raise ValidationError("cycle edges do not form a single simple cycle")
    return edges


def check_dominating_edge_claims(g: Graph, cycle_edges) -> ClaimReport:
    """Check the two dominating-edge claims over all crossing-free arrangements.

    Claim 1: every cycle edge either has an interval containing every other
    edge's interval, or its endpoints sit at adjacent positions.
    Claim 2: exactly one cycle edge has an interval containing every other
    edge's interval. (Per the domination predicate's convention, "e contains
    all others" means every other edge dominates into e's interval.)
    """
    cyc = _validate_cycle(g, cycle_edges)
    all_edges = g.sorted_edges
    count = 0
    c1 = ClaimVerdict(True)
    c2 = ClaimVerdict(True)
    for arr in iter_crossing_free(g):
        count += 1
        pos = arr.positions
        spans = {}
        for e in all_edges:
            pu, pv = pos[e[0]], pos[e[1]]
            spans[e] = (pu, pv) if pu < pv else (pv, pu)
        dominators = []
        failing_edge = None
        for e in cyc:
            lo, hi = spans[e]
            contains_all = all(
                lo <= flo and fhi <= hi for f, (flo, fhi) in spans.items() if f != e
            )
            if contains_all:
                dominators.append(e)
            elif hi - lo != 1 and failing_edge is None:
                failing_edge = e
        if failing_edge is not None and c1.holds:
            c1 = ClaimVerdict(
                False, arr, failing_edge,
                "cycle edge neither contains all other edges nor has adjacent endpoints",
            )
        if len(dominators) != 1 and c2.holds:
            if dominators:
                edge = dominators[1]
                note = f"{len(dominators)} cycle edges contain all other edges"
            else:
                edge = failing_edge if failing_edge is not None else cyc[0]
                note = "no cycle edge contains all other edges"
            c2 = ClaimVerdict(False, arr, edge, note)
    return ClaimReport(count, c1, c2)
