#!/usr/bin/env python3
"""
Dual Bounds

Lower and upper bounds on the spanning tree congestion s(G) of a plane
graph, both read off the dual graph G*:

    - index i(F, e): length of a shortest O-to-F path in G* whose first
      edge is e* (outer edge e); i(F) is the minimum over all outer edges
    - center-tail systems and their congestion indicator CI(S), a lower
      bound: s(G) >= CI(S)
    - the breadth-first dual tree rooted at O, whose complement is a
      spanning tree T with ec(G:T) <= max(i(F) + i(F') + 1) over faces
      sharing an edge

Unreachable indices are math.inf.
"""

import math
from dataclasses import dataclass
from typing import Any, Iterable, Mapping, Optional, Sequence, Union

import networkx as nx

from .congestion import (
    CongestionReport,
    SpanningTree,
    edge_congestion_cuts,
    verify_tree,
)
from .error_handler import (
    AssignmentIncompleteError,
    CenterDisconnectedError,
    CenterTailError,
    EmptySystemListError,
    InvariantError,
    NoOuterEdgesError,
    NotOuterEdgeError,
    TailNotPathError,
    TailNotReachingOuterError,
)
from .plane_graph import DualGraph, PlaneGraph, dual, interior_side, outer_edges

Index = Union[int, float]
INFINITY = math.inf


def _json_value(value: Index) -> Optional[int]:
    return None if value == INFINITY else int(value)


@dataclass(frozen=True)
class IndexTable:
    """i(F, e) for one outer edge e over all interior faces."""

    edge: int
    start_face: int
    values: Mapping[int, Index]

    def __getitem__(self, face: int) -> Index:
        return self.values[face]

    def to_dict(self) -> dict[str, Any]:
        return {
            "edge": self.edge,
            "values": {str(f): _json_value(v) for f, v in self.values.items()},
        }


@dataclass(frozen=True)
class AbsoluteIndexTable:
    """i(F) for every interior face; the outer face has index 0."""

    outer_face: int
    values: Mapping[int, int]

    def __getitem__(self, face: int) -> int:
        return 0 if face == self.outer_face else self.values[face]

    def to_dict(self) -> dict[str, Any]:
        return {str(f): v for f, v in self.values.items()}


@dataclass(frozen=True)
class CenterTailSystem:
    """A center face set, tails from the center to O, and opposite tails."""

    center: tuple[int, ...]
    tails: tuple[tuple[int, ...], ...]
    assignment: Mapping[int, int]

    def tip(self, tail_index: int) -> int:
        """Last face of a tail before it reaches O."""
        return self.tails[tail_index][-2]


@dataclass(frozen=True)
class CongestionIndicator:
    """CI(S) with the three minima and the witness of the binding one.

    Witness shapes:
        1: (F, H, f, h)      adjacent center faces and distinct outer edges
        2: (e, tip)          outer edge and the tip of its opposite tail
        3: (e, F, F', e')    outer edge, consecutive tail faces, other edge
    """

    value: Index
    which_minimum: int
    witness: tuple[int, ...]
    minima: tuple[Index, Index, Index]


@dataclass(frozen=True)
class UpperBound:
    """Spanning tree from the BFS dual tree, its congestion and the bound."""

    tree: SpanningTree
    dual_tree_edges: tuple[int, ...]
    report: CongestionReport
    bound: int

    @property
    def ec(self) -> int:
        return self.report.max_congestion


def _distances(graph: nx.MultiGraph, source: int) -> dict[int, int]:
    return dict(nx.single_source_shortest_path_length(graph, source))


def index_table(g: PlaneGraph, e: int, dual_graph: Optional[DualGraph] = None) -> IndexTable:
    """
    Compute i(F, e) for every interior face F.

    Paths are simple, so after the first step O is never visited again:
    i(F, e) = 1 + distance from F_e to F in G* - O.

    Raises:
        NotOuterEdgeError: e is not an outer edge
    """
    if e not in outer_edges(g):
        raise NotOuterEdgeError(edge=e, operation="index_table")
    dual_graph = dual_graph or dual(g)
    inner = dual_graph.to_networkx()
    inner.remove_node(dual_graph.outer_face)
    start = interior_side(g, e)
    reached = _distances(inner, start)
    values: dict[int, Index] = {
        face: reached[face] + 1 if face in reached else INFINITY
        for face in g.interior_faces()
    }
    return IndexTable(e, start, values)


def index_tables(g: PlaneGraph) -> dict[int, IndexTable]:
    """Index tables for every outer edge, keyed by edge id."""
    dual_graph = dual(g)
    return {e: index_table(g, e, dual_graph) for e in outer_edges(g)}


def side_index(g: PlaneGraph, edges: Iterable[int]) -> dict[int, Index]:
    """Per-face minimum of i(F, e) over a chosen set of outer edges."""
    tables = [index_table(g, e) for e in edges]
    if not tables:
        raise NoOuterEdgesError("No outer edges selected.", operation="side_index")
    return {
        face: min(table[face] for table in tables) for face in g.interior_faces()
    }


def absolute_index(g: PlaneGraph) -> AbsoluteIndexTable:
    """
    Compute i(F) = min over outer edges of i(F, e).

    The minimum is cross-checked against the plain BFS distance from O.

    Raises:
        NoOuterEdgesError: g is a tree
        InvariantError: the two computations disagree
    """
    tables = index_tables(g)
    if not tables:
        raise NoOuterEdgesError(operation="absolute_index")
    dual_graph = dual(g)
    distance = _distances(dual_graph.to_networkx(), dual_graph.outer_face)
    values = {}
    for face in g.interior_faces():
        best = min(table[face] for table in tables.values())
        if best != distance[face]:
            raise InvariantError(
                f"Face {face}: min index {best} differs from distance {distance[face]}.",
                operation="absolute_index",
            )
        values[face] = int(best)
    return AbsoluteIndexTable(g.outer_face, values)


def validate_cts(g: PlaneGraph, s: CenterTailSystem) -> CenterTailSystem:
    """
    Check the structure of a center-tail system.

    Raises:
        CenterDisconnectedError: empty or disconnected center
        CenterTailError: unknown faces or tail indices
        TailNotPathError: a tail is not a simple dual path from the center
        TailNotReachingOuterError: a tail does not end at O
        NotOuterEdgeError: an assigned edge is not an outer edge
        AssignmentIncompleteError: an outer edge has no opposite tail
    """
    dual_graph = dual(g)
    outer = dual_graph.outer_face
    interior = set(g.interior_faces())

    if not s.center:
        raise CenterDisconnectedError("Center is empty.", operation="validate_cts")
    unknown = [f for f in s.center if f not in interior]
    if unknown:
        raise CenterTailError(
            f"Center face {unknown[0]} is not an interior face.",
            operation="validate_cts",
        )
    center = set(s.center)
    if len(center) != len(s.center):
        raise CenterTailError("Center lists a face twice.", operation="validate_cts")
    if not nx.is_connected(dual_graph.to_networkx().subgraph(center)):
        raise CenterDisconnectedError(
            "Center does not induce a connected subgraph of G*.",
            operation="validate_cts",
        )

    if not s.tails:
        raise CenterTailError("System has no tails.", operation="validate_cts")
    adjacent = {
        frozenset((a, b)) for a, b in dual_graph.edge_faces if a != b
    }
    for index, tail in enumerate(s.tails):
        _check_tail(index, tail, center, interior, outer, adjacent)

    outer_set = set(outer_edges(g))
    for edge_id, tail_index in s.assignment.items():
        if edge_id not in outer_set:
            raise NotOuterEdgeError(edge=edge_id, operation="validate_cts")
        if not 0 <= tail_index < len(s.tails):
            raise CenterTailError(
                f"Edge {edge_id} is assigned to unknown tail {tail_index}.",
                operation="validate_cts",
            )
    missing = sorted(outer_set - set(s.assignment))
    if missing:
        raise AssignmentIncompleteError(missing=missing, operation="validate_cts")
    return s


def _check_tail(
    index: int,
    tail: Sequence[int],
    center: set[int],
    interior: set[int],
    outer: int,
    adjacent: set[frozenset[int]],
) -> None:
    if len(tail) < 2 or tail[0] not in center:
        raise TailNotPathError(
            "Tail must start at a center face.", tail=index, operation="validate_cts"
        )
    if tail[-1] != outer:
        raise TailNotReachingOuterError(tail=index, operation="validate_cts")
    body = tail[:-1]
    if any(face not in interior for face in body):
        raise TailNotPathError(
            "Tail visits O or an unknown face before its end.",
            tail=index,
            operation="validate_cts",
        )
    if len(set(body)) != len(body):
        raise TailNotPathError("Tail repeats a face.", tail=index, operation="validate_cts")
    for a, b in zip(tail, tail[1:]):
        if frozenset((a, b)) not in adjacent:
            raise TailNotPathError(
                f"Faces {a} and {b} do not share an edge.",
                tail=index,
                operation="validate_cts",
            )


def _two_best(tables: Mapping[int, IndexTable], face: int) -> list[tuple[Index, int]]:
    return sorted((table[face], e) for e, table in tables.items())[:2]


def _best_excluding(ranked: list[tuple[Index, int]], edge: int) -> tuple[Index, int]:
    for value, other in ranked:
        if other != edge:
            return value, other
    return INFINITY, -1


def congestion_indicator(g: PlaneGraph, s: CenterTailSystem) -> CongestionIndicator:
    """Compute CI(S), the minimum of three dual-path quantities."""
    validate_cts(g, s)
    tables = index_tables(g)
    ranked = {face: _two_best(tables, face) for face in g.interior_faces()}

    first: Index = INFINITY
    first_witness: tuple[int, ...] = ()
    center = set(s.center)
    pairs = sorted(
        {
            (min(a, b), max(a, b))
            for a, b in dual(g).edge_faces
            if a != b and a in center and b in center
        }
    )
    for face, other in pairs:
        (a0, f0), *rest_a = ranked[face]
        (b0, h0), *rest_b = ranked[other]
        options = []
        if f0 != h0:
            options.append((a0 + b0, f0, h0))
        else:
            if rest_b:
                options.append((a0 + rest_b[0][0], f0, rest_b[0][1]))
            if rest_a:
                options.append((rest_a[0][0] + b0, rest_a[0][1], h0))
        for total, f, h in options:
            if total + 1 < first:
                first = total + 1
                first_witness = (face, other, f, h)

    second: Index = INFINITY
    second_witness: tuple[int, ...] = ()
    for e in sorted(s.assignment):
        tip = s.tip(s.assignment[e])
        value = tables[e][tip] + 1
        if value < second:
            second = value
            second_witness = (e, tip)

    third: Index = INFINITY
    third_witness: tuple[int, ...] = ()
    for e in sorted(s.assignment):
        body = s.tails[s.assignment[e]][:-1]
        for face, following in zip(body, body[1:]):
            other_value, other_edge = _best_excluding(ranked[following], e)
            value = tables[e][face] + other_value + 1
            if value < third:
                third = value
                third_witness = (e, face, following, other_edge)

    minima = (first, second, third)
    best = min(minima)
    which = minima.index(best) + 1
    witness = (first_witness, second_witness, third_witness)[which - 1]
    return CongestionIndicator(best, which, witness, minima)


def best_lower_bound(g: PlaneGraph, systems: Sequence[CenterTailSystem]) -> int:
    """Maximum CI over the supplied systems; a certified lower bound on s(G)."""
    if not systems:
        raise EmptySystemListError(operation="best_lower_bound")
    best = max(congestion_indicator(g, s).value for s in systems)
    return int(best)


def bfs_upper_bound(g: PlaneGraph) -> UpperBound:
    """
    Spanning tree whose complement is a BFS tree of G* rooted at O.

    Among BFS parents on the previous level the smallest face id wins,
    then the smallest edge id. The returned bound is the maximum of
    i(F) + i(F') + 1 over distinct faces sharing an edge (at least 1).

    Raises:
        InvariantError: ec exceeds the bound
    """
    dual_graph = dual(g)
    outer = dual_graph.outer_face
    distance = _distances(dual_graph.to_networkx(), outer)

    dual_edges = []
    for face in range(dual_graph.face_count):
        if face == outer:
            continue
        parents = [
            (neighbor, edge_id)
            for neighbor, edge_id in dual_graph.neighbors(face)
            if distance[neighbor] == distance[face] - 1
        ]
        dual_edges.append(min(parents)[1])

    in_dual = set(dual_edges)
    tree = verify_tree(g, [e.id for e in g.edges if e.id not in in_dual])
    report = edge_congestion_cuts(g, tree)

    bound = 1
    for a, b in dual_graph.edge_faces:
        if a != b:
            bound = max(bound, distance[a] + distance[b] + 1)
    if report.max_congestion > bound:
        raise InvariantError(
            f"BFS tree congestion {report.max_congestion} exceeds bound {bound}.",
            operation="bfs_upper_bound",
        )
    return UpperBound(tree, tuple(sorted(dual_edges)), report, bound)
