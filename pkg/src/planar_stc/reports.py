#!/usr/bin/env python3
"""
Reports

Machine-readable summaries that combine the lower bound from center-tail
systems, the breadth-first upper bound and, when computed, the exact value.
Every report checks lower <= exact <= upper before it is returned.
"""

import time
from dataclasses import dataclass, field
from typing import Any, Iterable, Optional, Sequence

from .congestion import edge_congestion_cuts
from .dual_bounds import (
    INFINITY,
    CenterTailSystem,
    CongestionIndicator,
    UpperBound,
    bfs_upper_bound,
    congestion_indicator,
)
from .error_handler import InvariantError, ValidationError
from .exact_search import ExactResult, SearchBudget, exact_stc
from .grids import (
    canonical_cts,
    legacy_formula,
    recognize_triangular_grid,
    theorem_value,
    triangular_grid,
)
from .plane_graph import PlaneGraph

CANONICAL_MINIMUM_K = 5


def _index(value: Any) -> Optional[int]:
    return None if value == INFINITY else int(value)


@dataclass
class Report:
    """One graph's bounds; absent quantities are None."""

    graph: dict[str, int]
    lower: Optional[int] = None
    lower_witness: Optional[dict[str, Any]] = None
    upper: Optional[int] = None
    bfs_bound: Optional[int] = None
    exact: Optional[int] = None
    optimal: Optional[bool] = None
    per_edge: dict[int, int] = field(default_factory=dict)
    timing_ms: dict[str, float] = field(default_factory=dict)

    @property
    def certified(self) -> Optional[int]:
        """s(G) when the report pins it down, else None."""
        if self.exact is not None and self.optimal:
            return self.exact
        if self.lower is not None and self.lower == self.upper:
            return self.lower
        return None

    def check_sandwich(self) -> "Report":
        values = [
            (name, value)
            for name, value in (("lower", self.lower), ("exact", self.exact), ("upper", self.upper))
            if value is not None
        ]
        for (low_name, low), (high_name, high) in zip(values, values[1:]):
            if low > high:
                raise InvariantError(
                    f"Bounds out of order: {low_name} {low} > {high_name} {high}",
                    operation="report",
                )
        return self

    def to_dict(self) -> dict[str, Any]:
        return {
            "graph": dict(self.graph),
            "lower": self.lower,
            "lower_witness": self.lower_witness,
            "upper": self.upper,
            "bfs_bound": self.bfs_bound,
            "certified": self.certified,
            "exact": self.exact,
            "optimal": self.optimal,
            "per_edge": {str(e): value for e, value in sorted(self.per_edge.items())},
            "timing_ms": {key: round(value, 1) for key, value in self.timing_ms.items()},
        }


def graph_summary(g: PlaneGraph) -> dict[str, int]:
    return {"V": g.vertex_count, "E": g.edge_count, "F": g.face_count}


def default_systems(g: PlaneGraph) -> list[CenterTailSystem]:
    """The canonical system for a generated triangular grid with k >= 5, else none."""
    k = recognize_triangular_grid(g)
    if k is None or k < CANONICAL_MINIMUM_K:
        return []
    return [canonical_cts(k)]


def _witness(index: int, indicator: CongestionIndicator) -> dict[str, Any]:
    return {
        "system": index,
        "which_minimum": indicator.which_minimum,
        "witness": list(indicator.witness),
        "minima": [_index(m) for m in indicator.minima],
    }


def _apply_bounds(
    report: Report, g: PlaneGraph, systems: Sequence[CenterTailSystem]
) -> UpperBound:
    start = time.perf_counter()
    best: Optional[tuple[int, CongestionIndicator]] = None
    for index, system in enumerate(systems):
        indicator = congestion_indicator(g, system)
        if best is None or indicator.value > best[1].value:
            best = (index, indicator)
    if best is not None:
        report.lower = _index(best[1].value)
        report.lower_witness = _witness(*best)
    report.timing_ms["lower"] = (time.perf_counter() - start) * 1000

    start = time.perf_counter()
    upper = bfs_upper_bound(g)
    report.upper = upper.ec
    report.bfs_bound = upper.bound
    report.timing_ms["upper"] = (time.perf_counter() - start) * 1000
    return upper


def build_bounds_report(
    g: PlaneGraph, systems: Optional[Sequence[CenterTailSystem]] = None
) -> Report:
    """
    Lower bound from the best system, BFS upper bound and its per-edge loads.

    With no systems given, generated triangular grids get their canonical
    system; other graphs get an upper bound only.
    """
    report = Report(graph=graph_summary(g))
    upper = _apply_bounds(report, g, default_systems(g) if systems is None else systems)
    report.per_edge = dict(upper.report.per_edge)
    return report.check_sandwich()


def build_exact_report(
    g: PlaneGraph,
    result: ExactResult,
    systems: Optional[Sequence[CenterTailSystem]] = None,
) -> Report:
    """
    Bounds plus an exact-search outcome.

    A result cut short by its budget contributes no exact value; its tree
    still tightens the upper bound.
    """
    report = Report(graph=graph_summary(g))
    upper = _apply_bounds(report, g, default_systems(g) if systems is None else systems)
    report.per_edge = dict(edge_congestion_cuts(g, result.witness).per_edge)
    report.optimal = result.optimal
    if result.optimal:
        report.exact = result.s_value
    else:
        report.upper = min(upper.ec, result.s_value)
        if report.lower is None or result.lower_bound > report.lower:
            report.lower = result.lower_bound
            report.lower_witness = {"search": result.strategy, "nodes": result.nodes}
    report.timing_ms["exact"] = result.elapsed_ms
    return report.check_sandwich()


@dataclass(frozen=True)
class TableRow:
    """One triangular grid size: closed form against computed columns."""

    k: int
    theorem: int
    legacy: int
    lower: Optional[int]
    which_minimum: Optional[int]
    upper: int
    bfs_bound: int
    exact: Optional[int]

    @property
    def agrees(self) -> bool:
        computed = [v for v in (self.lower, self.upper, self.exact) if v is not None]
        return all(v == self.theorem for v in computed)

    def to_dict(self) -> dict[str, Any]:
        return {
            "k": self.k,
            "theorem": self.theorem,
            "legacy": self.legacy,
            "lower": self.lower,
            "which_minimum": self.which_minimum,
            "upper": self.upper,
            "bfs_bound": self.bfs_bound,
            "exact": self.exact,
            "agrees": self.agrees,
        }


SUPPORTED_TABLE_FAMILIES = ("triangular",)


def triangular_table(
    sizes: Iterable[int],
    *,
    exact_up_to: int = 4,
    budget: Optional[SearchBudget] = None,
    workers: int = 1,
) -> list[TableRow]:
    """
    Rows for T_k over the given sizes.

    Sizes from 5 up get the canonical lower bound; sizes up to exact_up_to
    also get the exact value.
    """
    rows = []
    for k in sizes:
        g = triangular_grid(k)
        lower = which = None
        if k >= CANONICAL_MINIMUM_K:
            indicator = congestion_indicator(g, canonical_cts(k))
            lower, which = _index(indicator.value), indicator.which_minimum
        upper = bfs_upper_bound(g)
        exact = None
        if k <= exact_up_to:
            exact = exact_stc(g, budget, workers=workers, lower_bound=lower).s_value
        rows.append(
            TableRow(
                k=k,
                theorem=theorem_value(k),
                legacy=legacy_formula(k),
                lower=lower,
                which_minimum=which,
                upper=upper.ec,
                bfs_bound=upper.bound,
                exact=exact,
            )
        )
    return rows


def build_table(family: str, sizes: Iterable[int], **kwargs: Any) -> list[TableRow]:
    """
    Raises:
        ValidationError: the family has no table
    """
    if family not in SUPPORTED_TABLE_FAMILIES:
        raise ValidationError(
            f"No table for family '{family}'; supported: {', '.join(SUPPORTED_TABLE_FAMILIES)}",
            operation="table",
            details={"field": "family"},
        )
    return triangular_table(sizes, **kwargs)
