#!/usr/bin/env python3
"""
Edge Congestion

Spanning trees of a plane graph, their complementary dual trees, and the
edge congestion ec(G:T) computed two independent ways:

    - cuts: every non-tree edge adds one to each tree edge on its
      fundamental cycle; a tree edge's congestion is that count plus one
    - dual: a tree edge's congestion is the length of the cycle it closes
      in the dual tree

Both must agree on every tree edge.
"""

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Any, Iterable, Mapping, Optional

from networkx.utils import UnionFind

from .error_handler import (
    ContainsCycleError,
    NotSpanningError,
    ValidationError,
    WrongCardinalityError,
)
from .plane_graph import PlaneGraph


@dataclass(frozen=True)
class RootedForest:
    """Parent pointers of a tree rooted at one node; -1 marks the root."""

    root: int
    parent: tuple[int, ...]
    parent_edge: tuple[int, ...]
    depth: tuple[int, ...]
    order: tuple[int, ...]

    def path_length(self, a: int, b: int) -> int:
        length = 0
        while a != b:
            if self.depth[a] < self.depth[b]:
                a, b = b, a
            a = self.parent[a]
            length += 1
        return length

    def path_edges(self, a: int, b: int) -> list[int]:
        edges = []
        while a != b:
            if self.depth[a] < self.depth[b]:
                a, b = b, a
            edges.append(self.parent_edge[a])
            a = self.parent[a]
        return edges


@dataclass(frozen=True)
class SpanningTree:
    """A verified spanning tree given by edge ids, rooted for path queries."""

    edge_ids: tuple[int, ...]
    rooted: RootedForest

    @cached_property
    def edge_set(self) -> frozenset[int]:
        return frozenset(self.edge_ids)

    def __contains__(self, edge_id: object) -> bool:
        return edge_id in self.edge_set


@dataclass(frozen=True)
class DualTree:
    """The complement of a spanning tree, as a spanning tree of G* rooted at O."""

    edge_ids: tuple[int, ...]
    rooted: RootedForest

    @cached_property
    def edge_set(self) -> frozenset[int]:
        return frozenset(self.edge_ids)


@dataclass(frozen=True)
class CongestionReport:
    """Per-tree-edge cut sizes and their maximum."""

    per_edge: Mapping[int, int]
    max_congestion: int
    argmax_edge: Optional[int]

    @classmethod
    def from_loads(cls, loads: Mapping[int, int]) -> "CongestionReport":
        per_edge = {e: loads[e] for e in sorted(loads)}
        if not per_edge:
            return cls(per_edge, 0, None)
        best = max(per_edge.values())
        argmax = min(e for e, value in per_edge.items() if value == best)
        return cls(per_edge, best, argmax)

    def to_dict(self) -> dict[str, Any]:
        return {
            "max": self.max_congestion,
            "argmax_edge": self.argmax_edge,
            "per_edge": {str(e): value for e, value in self.per_edge.items()},
        }

    @classmethod
    def from_dict(cls, data: Mapping[str, Any]) -> "CongestionReport":
        loads = {int(e): int(value) for e, value in data["per_edge"].items()}
        report = cls.from_loads(loads)
        if report.max_congestion != data["max"]:
            raise ValidationError(
                f"Report max {data['max']} does not match per-edge values.",
                operation="from_dict",
            )
        return report


@dataclass(frozen=True)
class BranchDecomposition:
    """Interior faces grouped by the outer edge their dual-tree path leaves through."""

    entrance: Mapping[int, int]
    branches: Mapping[int, tuple[int, ...]]

    def branch(self, edge_id: int) -> tuple[int, ...]:
        return self.branches.get(edge_id, ())


def _bfs_forest(
    node_count: int,
    root: int,
    adjacency: list[list[tuple[int, int]]],
) -> RootedForest:
    parent = [-1] * node_count
    parent_edge = [-1] * node_count
    depth = [-1] * node_count
    depth[root] = 0
    order = [root]
    queue = deque([root])
    while queue:
        node = queue.popleft()
        for neighbor, edge_id in adjacency[node]:
            if depth[neighbor] < 0:
                depth[neighbor] = depth[node] + 1
                parent[neighbor] = node
                parent_edge[neighbor] = edge_id
                order.append(neighbor)
                queue.append(neighbor)
    return RootedForest(root, tuple(parent), tuple(parent_edge), tuple(depth), tuple(order))


def verify_tree(g: PlaneGraph, edges: Iterable[int], root: int = 0) -> SpanningTree:
    """
    Check that `edges` form a spanning tree of g.

    Raises:
        ValidationError: Unknown or repeated edge ids
        WrongCardinalityError: Edge count is not V - 1
        ContainsCycleError: Some edge closes a cycle (loops included)
        NotSpanningError: Some vertex is unreached
    """
    edge_ids = list(edges)
    for edge_id in edge_ids:
        if not 0 <= edge_id < g.edge_count:
            raise ValidationError(
                f"Unknown edge id {edge_id}.", operation="verify_tree"
            )
    if len(set(edge_ids)) != len(edge_ids):
        raise ValidationError("Edge listed more than once.", operation="verify_tree")
    if len(edge_ids) != g.vertex_count - 1:
        raise WrongCardinalityError(
            expected=g.vertex_count - 1, actual=len(edge_ids), operation="verify_tree"
        )

    components = UnionFind(range(g.vertex_count))
    adjacency: list[list[tuple[int, int]]] = [[] for _ in range(g.vertex_count)]
    for edge_id in sorted(edge_ids):
        edge = g.edges[edge_id]
        if components[edge.u] == components[edge.v]:
            raise ContainsCycleError(edge=edge_id, operation="verify_tree")
        components.union(edge.u, edge.v)
        adjacency[edge.u].append((edge.v, edge_id))
        adjacency[edge.v].append((edge.u, edge_id))

    rooted = _bfs_forest(g.vertex_count, root, adjacency)
    if len(rooted.order) != g.vertex_count:
        raise NotSpanningError(operation="verify_tree")
    return SpanningTree(tuple(sorted(edge_ids)), rooted)


def dual_tree(g: PlaneGraph, t: SpanningTree) -> DualTree:
    """Complement of t through the edge bijection, rooted at the outer face."""
    complement = [e.id for e in g.edges if e.id not in t.edge_set]
    if len(complement) != g.face_count - 1:
        raise WrongCardinalityError(
            "Dual tree has the wrong number of edges.",
            expected=g.face_count - 1,
            actual=len(complement),
            operation="dual_tree",
        )
    adjacency: list[list[tuple[int, int]]] = [[] for _ in range(g.face_count)]
    for edge_id in complement:
        a, b = g.edge_faces(edge_id)
        if a == b:
            raise ContainsCycleError(
                "Dual tree contains a loop.", edge=edge_id, operation="dual_tree"
            )
        adjacency[a].append((b, edge_id))
        adjacency[b].append((a, edge_id))

    rooted = _bfs_forest(g.face_count, g.outer_face, adjacency)
    if len(rooted.order) != g.face_count:
        raise NotSpanningError("Dual tree does not span G*.", operation="dual_tree")
    return DualTree(tuple(complement), rooted)


def edge_congestion_cuts(g: PlaneGraph, t: SpanningTree) -> CongestionReport:
    """Congestion of every tree edge by fundamental-cycle path increments."""
    loads = {e: 1 for e in t.edge_ids}
    tree_edges = t.edge_set
    for edge in g.edges:
        if edge.id in tree_edges:
            continue
        for tree_edge in t.rooted.path_edges(edge.u, edge.v):
            loads[tree_edge] += 1
    return CongestionReport.from_loads(loads)


def edge_congestion_dual(g: PlaneGraph, t: SpanningTree) -> CongestionReport:
    """Congestion of every tree edge as the dual fundamental cycle length."""
    rooted = dual_tree(g, t).rooted
    loads = {}
    for edge_id in t.edge_ids:
        a, b = g.edge_faces(edge_id)
        loads[edge_id] = rooted.path_length(a, b) + 1
    return CongestionReport.from_loads(loads)


def fundamental_cut(
    g: PlaneGraph, t: SpanningTree, edge_id: int
) -> tuple[frozenset[int], tuple[int, ...]]:
    """The vertex side below a tree edge and the graph edges crossing the cut."""
    if edge_id not in t.edge_set:
        raise ValidationError(
            f"Edge {edge_id} is not a tree edge.", operation="fundamental_cut"
        )
    edge = g.edges[edge_id]
    depth = t.rooted.depth
    below = edge.u if depth[edge.u] > depth[edge.v] else edge.v

    children: dict[int, list[int]] = {}
    for vertex in t.rooted.order[1:]:
        children.setdefault(t.rooted.parent[vertex], []).append(vertex)
    side = {below}
    stack = [below]
    while stack:
        for child in children.get(stack.pop(), []):
            side.add(child)
            stack.append(child)

    crossing = tuple(e.id for e in g.edges if (e.u in side) != (e.v in side))
    return frozenset(side), crossing


def branch_decomposition(g: PlaneGraph, t: SpanningTree) -> BranchDecomposition:
    """Assign each interior face the outer edge whose dual starts its path to O."""
    rooted = dual_tree(g, t).rooted
    outer = g.outer_face
    entrance: dict[int, int] = {}
    for face in rooted.order[1:]:
        parent = rooted.parent[face]
        entrance[face] = rooted.parent_edge[face] if parent == outer else entrance[parent]

    branches: dict[int, list[int]] = {}
    for edge in g.edges:
        a, b = g.edge_faces(edge.id)
        if (a == outer) != (b == outer):
            branches[edge.id] = []
    for face in sorted(entrance):
        branches[entrance[face]].append(face)
    return BranchDecomposition(
        entrance={f: entrance[f] for f in sorted(entrance)},
        branches={e: tuple(faces) for e, faces in branches.items()},
    )
