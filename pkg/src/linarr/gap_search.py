"""Per-graph gap computation and the search for gap graphs.

The gap of a graph is its crossing-free optimum minus its unconstrained
optimum; graphs with no crossing-free arrangement carry no gap. The search
walks the connected-graph enumeration order by order and reports every
graph whose gap reaches a threshold.

Set LINARR_THREADS to an integer > 1 to fan the per-graph solves out over a
process pool; results are re-collected in enumeration order either way.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterator

from .arrangement import Arrangement
from .errors import ValidationError
from .graph import Graph, enumerate_connected_graphs, is_outerplanar
from .solvers import solve_minla_bnb, solve_planar_minla


@dataclass(frozen=True)
class GapReport:
    """Both optima of one graph, their difference, and one witness per variant.

    `planar_opt`, `gap` and `planar_witness` are None when the graph has no
    crossing-free arrangement.
    """

    graph: Graph
    minla_opt: int
    planar_opt: int | None
    gap: int | None
    minla_witness: Arrangement
    planar_witness: Arrangement | None
    outerplanar: bool


def compute_gap(g: Graph) -> GapReport:
    """Run both exact solvers and the outerplanarity test on one graph."""
    minla = solve_minla_bnb(g)
    planar = solve_planar_minla(g, dedup_reversals=True)
    if planar is None:
        planar_opt = None
        gap = None
        planar_witness = None
    else:
        planar_opt = planar.optimal_cost
        gap = planar_opt - minla.optimal_cost
        planar_witness = planar.best
    return GapReport(
        graph=g,
        minla_opt=minla.optimal_cost,
        planar_opt=planar_opt,
        gap=gap,
        minla_witness=minla.best,
        planar_witness=planar_witness,
        outerplanar=is_outerplanar(g),
    )


def _thread_count() -> int:
    raw = os.environ.get("LINARR_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def iter_gap_reports(max_order: int,
                     start: tuple[int, int] = (1, 0)) -> Iterator[tuple[int, int, GapReport]]:
    """Yield (order, class_index, report) for every connected class up to max_order.

    Emission is incremental and deterministic, so a long run interrupted at
    (order, index) can be resumed by passing that pair as `start`.
    """
    if max_order < 1:
        raise ValidationError(f"max_order must be >= 1, got {max_order}")
    start_order, start_index = start
    workers = _thread_count()
    for order in range(max(1, start_order), max_order + 1):
        first = start_index if order == start_order else 0
        graphs = [g for i, g in enumerate(enumerate_connected_graphs(order)) if i >= first]
        if workers > 1 and len(graphs) > 1:
            with ProcessPoolExecutor(max_workers=workers) as pool:
                reports = list(pool.map(compute_gap, graphs, chunksize=8))
        else:
            reports = [compute_gap(g) for g in graphs]
        for offset, report in enumerate(reports):
            yield order, first + offset, report


def search_gap_graphs(max_order: int, min_gap: int) -> list[GapReport]:
    """All connected graphs up to max_order whose gap is defined and >= min_gap."""
    if min_gap < 1:
        raise ValidationError(f"min_gap must be a positive integer, got {min_gap}")
    return [
        report
        for _, _, report in iter_gap_reports(max_order)
        if report.gap is not None and report.gap >= min_gap
    ]
