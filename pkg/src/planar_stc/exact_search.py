#!/usr/bin/env python3
"""
Exact Spanning Tree Congestion

Branch and bound over edges in id order: each edge is either put into the
tree (joining two primal components) or left out (joining two components
of the dual forest formed by the excluded edges). Including first makes the
first tree found the lexicographically smallest one.

Pruning, for a congestion budget c:
    - loads: edges inside a primal component already cross fixed tree
      edges; any tree edge above c is fatal
    - new-edge bound: an edge joining components A and B will also carry
      min(e(L, A), e(L, B)) edges for every other component L
    - dual exactness: once both dual endpoints of a tree edge lie in one
      dual component, its congestion is the dual path length plus one
    - leaves: a vertex of degree above c cannot be a leaf

Two drivers share the engine: a decision search for c = lower bound,
lower bound + 1, ... and, for tiny graphs, a single enumeration that
tightens c whenever it finds a better tree. Both return the same value and
the same witness. The decision search can fan subtrees out to worker
processes; results are reduced in subtree order, so the outcome does not
depend on scheduling.
"""

import logging
import time
from concurrent.futures import Future, ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Optional

from .congestion import SpanningTree, verify_tree
from .dual_bounds import bfs_upper_bound
from .error_handler import BudgetExceededError, InvariantError, ValidationError
from .plane_graph import PlaneGraph

logger = logging.getLogger(__name__)

Adjacency = tuple[tuple[tuple[int, int], ...], ...]


@dataclass(frozen=True)
class SearchBudget:
    """Limits on explored search nodes and wall-clock time (None = unlimited)."""

    node_limit: Optional[int] = None
    time_limit_ms: Optional[int] = None


@dataclass(frozen=True)
class ExactResult:
    """Outcome of the exact search; optimal is False after a budget overrun."""

    s_value: int
    witness: SpanningTree
    optimal: bool
    lower_bound: int
    strategy: str
    nodes: int = field(default=0, compare=False)
    elapsed_ms: float = field(default=0.0, compare=False)


@dataclass(frozen=True)
class _SearchProblem:
    vertex_count: int
    face_count: int
    ends: tuple[tuple[int, int], ...]
    sides: tuple[tuple[int, int], ...]
    adjacency: Adjacency
    dual_adjacency: Adjacency
    degree: tuple[int, ...]

    @classmethod
    def from_graph(cls, g: PlaneGraph) -> "_SearchProblem":
        adjacency: list[list[tuple[int, int]]] = [[] for _ in range(g.vertex_count)]
        dual_adjacency: list[list[tuple[int, int]]] = [[] for _ in range(g.face_count)]
        ends = []
        sides = []
        for edge in g.edges:
            a, b = g.edge_faces(edge.id)
            ends.append((edge.u, edge.v))
            sides.append((a, b))
            if edge.u != edge.v:
                adjacency[edge.u].append((edge.v, edge.id))
                adjacency[edge.v].append((edge.u, edge.id))
            if a != b:
                dual_adjacency[a].append((b, edge.id))
                dual_adjacency[b].append((a, edge.id))
        return cls(
            vertex_count=g.vertex_count,
            face_count=g.face_count,
            ends=tuple(ends),
            sides=tuple(sides),
            adjacency=tuple(tuple(row) for row in adjacency),
            dual_adjacency=tuple(tuple(row) for row in dual_adjacency),
            degree=tuple(len(row) for row in adjacency),
        )


class _OutOfBudget(Exception):
    pass


class _TreeSearch:
    """Depth-first search state with undo records for both forests."""

    def __init__(
        self,
        problem: _SearchProblem,
        bound: int,
        improve: bool = False,
        floor: int = 0,
        node_limit: Optional[int] = None,
        deadline: Optional[float] = None,
        split_depth: Optional[int] = None,
    ):
        self.problem = problem
        self.bound = bound
        self.improve = improve
        self.floor = floor
        self.node_limit = node_limit
        self.deadline = deadline
        self.split_depth = split_depth

        vertices, faces = problem.vertex_count, problem.face_count
        self.label = list(range(vertices))
        self.members = [[v] for v in range(vertices)]
        self.forest: list[list[tuple[int, int]]] = [[] for _ in range(vertices)]
        self.dual_label = list(range(faces))
        self.dual_members = [[f] for f in range(faces)]
        self.dual_forest: list[list[tuple[int, int]]] = [[] for _ in range(faces)]
        self.load = [0] * len(problem.ends)
        self.tree_degree = [0] * vertices
        self.open_degree = list(problem.degree)

        self.chosen: list[int] = []
        self.decisions: list[bool] = []
        self.prefixes: list[tuple[bool, ...]] = []
        self.best: Optional[tuple[int, tuple[int, ...]]] = None
        self.nodes = 0
        self._undo: list[tuple[int, int, list[int]]] = []
        self._dual_undo: list[tuple[int, int, int]] = []

    def run(self, prefix: tuple[bool, ...] = ()) -> bool:
        for index, include in enumerate(prefix):
            self._decide(index)
            applied = self._include(index) if include else self._exclude(index)
            if not applied:
                return False
            self.decisions.append(include)
        return self._search(len(prefix))

    def _tick(self) -> None:
        if self.node_limit is not None and self.nodes >= self.node_limit:
            raise _OutOfBudget
        self.nodes += 1
        if (
            self.deadline is not None
            and self.nodes % 256 == 0
            and time.monotonic() > self.deadline
        ):
            raise _OutOfBudget

    def _decide(self, index: int) -> None:
        u, v = self.problem.ends[index]
        if u != v:
            self.open_degree[u] -= 1
            self.open_degree[v] -= 1

    def _reopen(self, index: int) -> None:
        u, v = self.problem.ends[index]
        if u != v:
            self.open_degree[u] += 1
            self.open_degree[v] += 1

    def _leaf_rule_holds(self, vertex: int) -> bool:
        need = 2 if self.problem.degree[vertex] > self.bound else 1
        return self.tree_degree[vertex] + self.open_degree[vertex] >= need

    def _search(self, index: int) -> bool:
        self._tick()
        if index == self.split_depth:
            self.prefixes.append(tuple(self.decisions))
            return False
        if index == len(self.problem.ends):
            return self._accept()

        u, v = self.problem.ends[index]
        a, b = self.problem.sides[index]
        self._decide(index)
        stop = False
        if self.label[u] != self.label[v] and self._include(index):
            self.decisions.append(True)
            stop = self._search(index + 1)
            self.decisions.pop()
            self._undo_include(index)
        if (
            not stop
            and self.dual_label[a] != self.dual_label[b]
            and self._leaf_rule_holds(u)
            and self._leaf_rule_holds(v)
            and self._exclude(index)
        ):
            self.decisions.append(False)
            stop = self._search(index + 1)
            self.decisions.pop()
            self._undo_exclude()
        self._reopen(index)
        return stop

    def _accept(self) -> bool:
        value = max((self.load[e] for e in self.chosen), default=0)
        if value > self.bound:
            return False
        self.best = (value, tuple(self.chosen))
        if not self.improve or value <= self.floor:
            return True
        self.bound = value - 1
        return False

    def _parents(self, root: int) -> dict[int, tuple[int, int]]:
        up: dict[int, tuple[int, int]] = {}
        seen = {root}
        stack = [root]
        while stack:
            node = stack.pop()
            for neighbor, edge_id in self.forest[node]:
                if neighbor not in seen:
                    seen.add(neighbor)
                    up[neighbor] = (node, edge_id)
                    stack.append(neighbor)
        return up

    def _dual_depths(self, root: int) -> dict[int, int]:
        depth = {root: 0}
        stack = [root]
        while stack:
            node = stack.pop()
            for neighbor, _ in self.dual_forest[node]:
                if neighbor not in depth:
                    depth[neighbor] = depth[node] + 1
                    stack.append(neighbor)
        return depth

    def _include(self, index: int) -> bool:
        u, v = self.problem.ends[index]
        label = self.label
        adjacency = self.problem.adjacency
        side_a, side_b = label[u], label[v]

        crossing = []
        toward_a: dict[int, int] = {}
        for x in self.members[side_a]:
            for y, _ in adjacency[x]:
                other = label[y]
                if other == side_b:
                    crossing.append((x, y))
                elif other != side_a:
                    toward_a[other] = toward_a.get(other, 0) + 1
        if len(crossing) > self.bound:
            return False
        if toward_a:
            toward_b: dict[int, int] = {}
            for x in self.members[side_b]:
                for y, _ in adjacency[x]:
                    other = label[y]
                    if other in toward_a:
                        toward_b[other] = toward_b.get(other, 0) + 1
            shared = sum(min(n, toward_b.get(c, 0)) for c, n in toward_a.items())
            if len(crossing) + shared > self.bound:
                return False

        up_a = self._parents(u)
        up_b = self._parents(v)
        touched: list[int] = []
        over = False
        for x, y in crossing:
            for node, up in ((x, up_a), (y, up_b)):
                while node in up:
                    node, edge_id = up[node]
                    self.load[edge_id] += 1
                    touched.append(edge_id)
                    if self.load[edge_id] > self.bound:
                        over = True
            if over:
                break
        if over:
            for edge_id in touched:
                self.load[edge_id] -= 1
            return False

        self.load[index] = len(crossing)
        small, big = (
            (side_a, side_b)
            if len(self.members[side_a]) < len(self.members[side_b])
            else (side_b, side_a)
        )
        for x in self.members[small]:
            label[x] = big
        self.members[big].extend(self.members[small])
        self.forest[u].append((v, index))
        self.forest[v].append((u, index))
        self.tree_degree[u] += 1
        self.tree_degree[v] += 1
        self.chosen.append(index)
        self._undo.append((small, big, touched))
        return True

    def _undo_include(self, index: int) -> None:
        small, big, touched = self._undo.pop()
        for edge_id in touched:
            self.load[edge_id] -= 1
        self.load[index] = 0
        u, v = self.problem.ends[index]
        self.forest[u].pop()
        self.forest[v].pop()
        self.tree_degree[u] -= 1
        self.tree_degree[v] -= 1
        moved = self.members[small]
        del self.members[big][-len(moved):]
        for x in moved:
            self.label[x] = small
        self.chosen.pop()

    def _exclude(self, index: int) -> bool:
        a, b = self.problem.sides[index]
        dual_label = self.dual_label
        side_a, side_b = dual_label[a], dual_label[b]
        depth_a = self._dual_depths(a)
        depth_b = self._dual_depths(b)
        if len(self.dual_members[side_a]) > len(self.dual_members[side_b]):
            side_a, side_b = side_b, side_a
            depth_a, depth_b = depth_b, depth_a

        for x in self.dual_members[side_a]:
            for y, edge_id in self.problem.dual_adjacency[x]:
                if edge_id != index and dual_label[y] == side_b:
                    if depth_a[x] + depth_b[y] + 2 > self.bound:
                        return False

        for x in self.dual_members[side_a]:
            dual_label[x] = side_b
        self.dual_members[side_b].extend(self.dual_members[side_a])
        self.dual_forest[a].append((b, index))
        self.dual_forest[b].append((a, index))
        self._dual_undo.append((side_a, side_b, index))
        return True

    def _undo_exclude(self) -> None:
        small, big, index = self._dual_undo.pop()
        moved = self.dual_members[small]
        del self.dual_members[big][-len(moved):]
        for x in moved:
            self.dual_label[x] = small
        a, b = self.problem.sides[index]
        self.dual_forest[a].pop()
        self.dual_forest[b].pop()


def trivial_lower_bound(g: PlaneGraph) -> int:
    """Every spanning tree has two leaves; a leaf's cut is its whole degree."""
    if g.vertex_count == 1:
        return 0
    degrees = sorted(
        sum(1 for d in g.rotation[v] if not g.edges[g.edge_of[d]].is_loop)
        for v in range(g.vertex_count)
    )
    return max(1, degrees[1])


def _run_prefix(
    problem: _SearchProblem,
    bound: int,
    prefix: tuple[bool, ...],
    node_limit: Optional[int],
    time_left_ms: Optional[float],
) -> tuple[Optional[tuple[int, ...]], int, bool]:
    deadline = None if time_left_ms is None else time.monotonic() + time_left_ms / 1000
    search = _TreeSearch(problem, bound, node_limit=node_limit, deadline=deadline)
    try:
        search.run(prefix)
    except _OutOfBudget:
        return None, search.nodes, True
    edges = search.best[1] if search.best else None
    return edges, search.nodes, False


class _Clock:
    def __init__(self, budget: SearchBudget):
        self.budget = budget
        self.start = time.monotonic()
        self.nodes = 0

    @property
    def deadline(self) -> Optional[float]:
        if self.budget.time_limit_ms is None:
            return None
        return self.start + self.budget.time_limit_ms / 1000

    def nodes_left(self) -> Optional[int]:
        if self.budget.node_limit is None:
            return None
        return max(0, self.budget.node_limit - self.nodes)

    def ms_left(self) -> Optional[float]:
        if self.budget.time_limit_ms is None:
            return None
        return max(0.0, self.budget.time_limit_ms - self.elapsed_ms())

    def elapsed_ms(self) -> float:
        return (time.monotonic() - self.start) * 1000


def _node_shares(total: Optional[int], parts: int) -> list[Optional[int]]:
    """Split a node budget over subtrees; earlier subtrees take the remainder."""
    if total is None:
        return [None] * parts
    base, extra = divmod(total, max(parts, 1))
    return [base + (1 if index < extra else 0) for index in range(parts)]


def _decide_bound(
    problem: _SearchProblem,
    bound: int,
    clock: _Clock,
    workers: int,
    split_depth: int,
) -> Optional[tuple[int, ...]]:
    """First tree (in id order) with congestion at most bound, or None."""
    if workers <= 1 or len(problem.ends) <= split_depth:
        search = _TreeSearch(
            problem, bound, node_limit=clock.nodes_left(), deadline=clock.deadline
        )
        try:
            search.run()
        finally:
            clock.nodes += search.nodes
        return search.best[1] if search.best else None

    collector = _TreeSearch(problem, bound, node_limit=clock.nodes_left(), split_depth=split_depth)
    try:
        collector.run()
    finally:
        clock.nodes += collector.nodes
    logger.debug("bound %d: %d subtrees for %d workers", bound, len(collector.prefixes), workers)

    shares = _node_shares(clock.nodes_left(), len(collector.prefixes))
    with ProcessPoolExecutor(max_workers=workers) as pool:
        futures: list[Future] = [
            pool.submit(_run_prefix, problem, bound, prefix, share, clock.ms_left())
            for prefix, share in zip(collector.prefixes, shares)
        ]
        try:
            for future in futures:
                edges, nodes, exhausted = future.result()
                clock.nodes += nodes
                if exhausted:
                    raise _OutOfBudget
                if edges is not None:
                    return edges
        finally:
            for future in futures:
                future.cancel()
    return None


def exact_stc(
    g: PlaneGraph,
    budget: Optional[SearchBudget] = None,
    *,
    workers: int = 1,
    lower_bound: Optional[int] = None,
    tiny_graph_vertices: int = 12,
    split_depth: int = 6,
) -> ExactResult:
    """
    Compute s(G) exactly with the lexicographically smallest optimal tree.

    Args:
        g: Connected plane graph
        budget: Node and time limits
        workers: Worker processes for the decision search
        lower_bound: Optional certified lower bound to start from
        tiny_graph_vertices: Graphs up to this size use single-pass enumeration
        split_depth: Decision depth at which subtrees go to workers

    Returns:
        ExactResult with optimal=True

    Raises:
        BudgetExceededError: carries the best known tree, optimal=False
        ValidationError: lower_bound exceeds a known tree's congestion
    """
    budget = budget or SearchBudget()
    clock = _Clock(budget)
    if g.vertex_count == 1:
        return ExactResult(0, verify_tree(g, []), True, 0, "trivial")

    upper = bfs_upper_bound(g)
    floor = max(trivial_lower_bound(g), lower_bound or 0)
    if floor > upper.ec:
        raise ValidationError(
            f"Lower bound {floor} exceeds the congestion {upper.ec} of a known tree.",
            operation="exact_stc",
        )
    problem = _SearchProblem.from_graph(g)

    if workers <= 1 and g.vertex_count <= tiny_graph_vertices:
        search = _TreeSearch(
            problem,
            upper.ec,
            improve=True,
            floor=floor,
            node_limit=budget.node_limit,
            deadline=clock.deadline,
        )
        try:
            search.run()
        except _OutOfBudget:
            value, edges = search.best or (upper.ec, upper.tree.edge_ids)
            raise BudgetExceededError(
                result=_result(g, value, edges, False, floor, "enumeration", search.nodes, clock),
                operation="exact_stc",
            )
        assert search.best is not None
        value, edges = search.best
        return _result(g, value, edges, True, value, "enumeration", search.nodes, clock)

    for bound in range(floor, upper.ec + 1):
        try:
            edges = _decide_bound(problem, bound, clock, workers, split_depth)
        except _OutOfBudget:
            raise BudgetExceededError(
                result=_result(
                    g, upper.ec, upper.tree.edge_ids, False, bound, "decision", clock.nodes, clock
                ),
                operation="exact_stc",
            )
        if edges is not None:
            return _result(g, bound, edges, True, bound, "decision", clock.nodes, clock)
        logger.debug("no tree with congestion <= %d (%d nodes)", bound, clock.nodes)
    raise InvariantError(
        f"No tree within the congestion {upper.ec} of the breadth-first tree.",
        operation="exact_stc",
    )


def _result(
    g: PlaneGraph,
    value: int,
    edges: tuple[int, ...],
    optimal: bool,
    lower: int,
    strategy: str,
    nodes: int,
    clock: _Clock,
) -> ExactResult:
    return ExactResult(
        s_value=value,
        witness=verify_tree(g, edges),
        optimal=optimal,
        lower_bound=lower,
        strategy=strategy,
        nodes=nodes,
        elapsed_ms=clock.elapsed_ms(),
    )
