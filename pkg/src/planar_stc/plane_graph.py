#!/usr/bin/env python3
"""
Plane Graphs

Connected plane multigraphs described by a combinatorial embedding: every
edge contributes two darts (half-edges), each vertex lists its darts in
counterclockwise order, and one designated dart lies on the exterior face.

Conventions:
    - darts are numbered 0..2E-1 and edges 0..E-1
    - edge e has darts dart_a (from u to v) and dart_b (from v to u)
    - the face of dart d lies to its right; the next dart on that face is
      the counterclockwise successor of twin(d) around head(d)
    - face ids are assigned in dart-scan order
    - the dual edge e* carries the same id as e
"""

import math
from dataclasses import dataclass, field
from typing import Iterable, Mapping, NamedTuple, Optional, Sequence

import networkx as nx
from networkx.utils import UnionFind

from .error_handler import (
    InvalidRotationError,
    NotConnectedError,
    NotPlanarEmbeddingError,
    ValidationError,
)

Point = tuple[float, float]


@dataclass(frozen=True)
class Edge:
    """An undirected edge and its two darts."""

    id: int
    dart_a: int
    dart_b: int
    u: int
    v: int

    @property
    def is_loop(self) -> bool:
        return self.u == self.v

    def other(self, vertex: int) -> int:
        return self.v if vertex == self.u else self.u


@dataclass(frozen=True)
class Face:
    """A face traced as a closed walk of darts."""

    id: int
    boundary_walk: tuple[int, ...]
    is_outer: bool


class FaceAdjacency(NamedTuple):
    """The faces on both sides of one edge (equal for a bridge)."""

    face_a: int
    face_b: int
    edge: int


@dataclass(frozen=True)
class PlaneGraph:
    """A validated connected plane multigraph.

    Instances are built through build_plane_graph(); the derived tables are
    filled once and never change.
    """

    vertex_count: int
    edges: tuple[Edge, ...]
    rotation: tuple[tuple[int, ...], ...]
    outer_dart: int
    coords: Optional[tuple[Point, ...]] = field(default=None, compare=False)

    twin: tuple[int, ...] = field(init=False, repr=False, compare=False)
    tail: tuple[int, ...] = field(init=False, repr=False, compare=False)
    edge_of: tuple[int, ...] = field(init=False, repr=False, compare=False)
    rotation_next: tuple[int, ...] = field(init=False, repr=False, compare=False)
    faces: tuple[Face, ...] = field(init=False, repr=False, compare=False)
    dart_face: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        dart_count = 2 * len(self.edges)
        twin = [0] * dart_count
        edge_of = [0] * dart_count
        for edge in self.edges:
            twin[edge.dart_a] = edge.dart_b
            twin[edge.dart_b] = edge.dart_a
            edge_of[edge.dart_a] = edge.id
            edge_of[edge.dart_b] = edge.id

        tail = [0] * dart_count
        rotation_next = [0] * dart_count
        for vertex, darts in enumerate(self.rotation):
            for position, dart in enumerate(darts):
                tail[dart] = vertex
                rotation_next[dart] = darts[(position + 1) % len(darts)]

        dart_face = [-1] * dart_count
        faces: list[Face] = []
        outer_id = -1
        for start in range(dart_count):
            if dart_face[start] >= 0:
                continue
            face_id = len(faces)
            walk = []
            dart = start
            while dart_face[dart] < 0:
                dart_face[dart] = face_id
                walk.append(dart)
                dart = rotation_next[twin[dart]]
            if self.outer_dart in walk:
                outer_id = face_id
            faces.append(Face(face_id, tuple(walk), False))
        faces = [
            Face(f.id, f.boundary_walk, f.id == outer_id) for f in faces
        ]

        object.__setattr__(self, "twin", tuple(twin))
        object.__setattr__(self, "tail", tuple(tail))
        object.__setattr__(self, "edge_of", tuple(edge_of))
        object.__setattr__(self, "rotation_next", tuple(rotation_next))
        object.__setattr__(self, "faces", tuple(faces))
        object.__setattr__(self, "dart_face", tuple(dart_face))

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @property
    def dart_count(self) -> int:
        return 2 * len(self.edges)

    @property
    def face_count(self) -> int:
        return len(self.faces)

    @property
    def outer_face(self) -> int:
        return self.dart_face[self.outer_dart]

    def head(self, dart: int) -> int:
        return self.tail[self.twin[dart]]

    def edge_faces(self, edge_id: int) -> tuple[int, int]:
        """Faces on the dart_a side and the dart_b side of an edge."""
        edge = self.edges[edge_id]
        return self.dart_face[edge.dart_a], self.dart_face[edge.dart_b]

    def face_vertices(self, face_id: int) -> tuple[int, ...]:
        return tuple(self.tail[d] for d in self.faces[face_id].boundary_walk)

    def face_edges(self, face_id: int) -> tuple[int, ...]:
        return tuple(self.edge_of[d] for d in self.faces[face_id].boundary_walk)

    def degree(self, vertex: int) -> int:
        return len(self.rotation[vertex])

    def interior_faces(self) -> list[int]:
        return [f.id for f in self.faces if not f.is_outer]


@dataclass(frozen=True)
class DualGraph:
    """The dual multigraph G*; vertex ids are face ids, edge ids are primal ids."""

    face_count: int
    outer_face: int
    edge_faces: tuple[tuple[int, int], ...]
    adjacency: tuple[tuple[tuple[int, int], ...], ...]

    @property
    def edge_count(self) -> int:
        return len(self.edge_faces)

    def endpoints(self, edge_id: int) -> tuple[int, int]:
        return self.edge_faces[edge_id]

    def neighbors(self, face: int) -> tuple[tuple[int, int], ...]:
        """(neighbor face, edge id) pairs sorted by face then edge."""
        return self.adjacency[face]

    def to_networkx(self) -> nx.MultiGraph:
        graph = nx.MultiGraph()
        graph.add_nodes_from(range(self.face_count))
        for edge_id, (a, b) in enumerate(self.edge_faces):
            graph.add_edge(a, b, key=edge_id)
        return graph


def build_plane_graph(
    vertex_count: int,
    rotation: Sequence[Sequence[int]],
    outer_dart: int,
    edges: Optional[Iterable[tuple[int, int, int, int, int]]] = None,
    coords: Optional[Sequence[Point]] = None,
) -> PlaneGraph:
    """
    Validate a rotation system and build the plane graph it describes.

    Args:
        vertex_count: Number of vertices
        rotation: Counterclockwise dart list per vertex
        outer_dart: A dart on the exterior face
        edges: (edge id, dart_a, dart_b, u, v) records; when omitted, darts
            2e and 2e+1 form edge e
        coords: Optional drawing coordinates, one point per vertex

    Returns:
        Validated PlaneGraph

    Raises:
        InvalidRotationError: Duplicate, missing or misplaced darts
        NotConnectedError: The graph is disconnected
        NotPlanarEmbeddingError: Traced faces break Euler's formula
    """
    if vertex_count < 1:
        raise InvalidRotationError("Graph needs at least one vertex.")
    if len(rotation) != vertex_count:
        raise InvalidRotationError(
            f"Expected {vertex_count} rotation lists, got {len(rotation)}."
        )

    dart_vertex: dict[int, int] = {}
    for vertex, darts in enumerate(rotation):
        for dart in darts:
            if dart in dart_vertex:
                raise InvalidRotationError(f"Dart {dart} appears twice.")
            dart_vertex[dart] = vertex

    if edges is None:
        edge_records = _default_pairing(dart_vertex)
    else:
        edge_records = sorted(edges)
    edge_list = _check_edges(edge_records, dart_vertex)

    if not edge_list:
        if vertex_count > 1:
            raise NotConnectedError(f"Graph has {vertex_count} vertices and no edges.")
        raise InvalidRotationError("Graph has no edges, so no dart can be outer.")
    if outer_dart not in dart_vertex:
        raise InvalidRotationError(f"Outer dart {outer_dart} does not exist.")

    components = UnionFind(range(vertex_count))
    for edge in edge_list:
        components.union(edge.u, edge.v)
    roots = {components[v] for v in range(vertex_count)}
    if len(roots) > 1:
        raise NotConnectedError(f"Graph has {len(roots)} connected components.")

    if coords is not None and len(coords) != vertex_count:
        raise ValidationError(
            f"Expected {vertex_count} coordinates, got {len(coords)}.",
            operation="build_plane_graph",
        )

    graph = PlaneGraph(
        vertex_count=vertex_count,
        edges=tuple(edge_list),
        rotation=tuple(tuple(darts) for darts in rotation),
        outer_dart=outer_dart,
        coords=tuple((float(x), float(y)) for x, y in coords) if coords else None,
    )
    if vertex_count - graph.edge_count + graph.face_count != 2:
        raise NotPlanarEmbeddingError(
            vertices=vertex_count, edges=graph.edge_count, faces=graph.face_count
        )
    return graph


def _default_pairing(
    dart_vertex: Mapping[int, int]
) -> list[tuple[int, int, int, int, int]]:
    records = []
    for dart in sorted(dart_vertex):
        if dart % 2:
            continue
        if dart + 1 not in dart_vertex:
            raise InvalidRotationError(f"Dart {dart} has no twin.")
        records.append(
            (dart // 2, dart, dart + 1, dart_vertex[dart], dart_vertex[dart + 1])
        )
    for dart in dart_vertex:
        if dart % 2 and dart - 1 not in dart_vertex:
            raise InvalidRotationError(f"Dart {dart} has no twin.")
    return records


def _check_edges(
    records: Sequence[tuple[int, int, int, int, int]],
    dart_vertex: Mapping[int, int],
) -> list[Edge]:
    edges = []
    used: set[int] = set()
    for position, (edge_id, dart_a, dart_b, u, v) in enumerate(records):
        if edge_id != position:
            raise InvalidRotationError(
                f"Edge ids must be 0..E-1 without gaps; found {edge_id} at {position}."
            )
        for dart, vertex in ((dart_a, u), (dart_b, v)):
            if dart in used or dart_a == dart_b:
                raise InvalidRotationError(f"Dart {dart} is paired more than once.")
            if dart not in dart_vertex:
                raise InvalidRotationError(
                    f"Dart {dart} of edge {edge_id} is missing from the rotation."
                )
            if dart_vertex[dart] != vertex:
                raise InvalidRotationError(
                    f"Dart {dart} of edge {edge_id} belongs to vertex "
                    f"{dart_vertex[dart]}, not {vertex}."
                )
            used.add(dart)
        edges.append(Edge(edge_id, dart_a, dart_b, u, v))

    dangling = sorted(set(dart_vertex) - used)
    if dangling:
        raise InvalidRotationError(f"Dart {dangling[0]} has no twin.")
    if used != set(range(2 * len(edges))):
        raise InvalidRotationError("Dart ids must be 0..2E-1 without gaps.")
    return edges


def trace_faces(g: PlaneGraph) -> list[Face]:
    """Faces of g in dart-scan order; exactly one is marked outer."""
    return list(g.faces)


def dual(g: PlaneGraph) -> DualGraph:
    """Build the dual multigraph; a bridge becomes a loop."""
    edge_faces = tuple(g.edge_faces(e.id) for e in g.edges)
    adjacency: list[list[tuple[int, int]]] = [[] for _ in range(g.face_count)]
    for edge_id, (a, b) in enumerate(edge_faces):
        adjacency[a].append((b, edge_id))
        if a != b:
            adjacency[b].append((a, edge_id))
    return DualGraph(
        face_count=g.face_count,
        outer_face=g.outer_face,
        edge_faces=edge_faces,
        adjacency=tuple(tuple(sorted(row)) for row in adjacency),
    )


def outer_edges(g: PlaneGraph) -> tuple[int, ...]:
    """Edges with the outer face on exactly one side, by id."""
    outer = g.outer_face
    result = []
    for edge in g.edges:
        a, b = g.edge_faces(edge.id)
        if (a == outer) != (b == outer):
            result.append(edge.id)
    return tuple(result)


def interior_side(g: PlaneGraph, edge_id: int) -> int:
    """The interior face F_e bordering an outer edge."""
    a, b = g.edge_faces(edge_id)
    return b if a == g.outer_face else a


def face_adjacency(g: PlaneGraph) -> list[FaceAdjacency]:
    return [FaceAdjacency(*g.edge_faces(e.id), e.id) for e in g.edges]


def from_drawing(
    coords: Sequence[Point],
    edges: Sequence[tuple[int, int]],
) -> PlaneGraph:
    """
    Build a plane graph from a straight-line drawing.

    Edge i runs from edges[i][0] to edges[i][1] and gets darts 2i, 2i+1.
    Darts around a vertex are ordered by angle; the outer dart leaves the
    lowest (then leftmost) vertex toward its neighbor with the smallest angle,
    so the exterior lies on its right.
    Loops and parallel edges cannot be drawn straight and are rejected.
    """
    vertex_count = len(coords)
    seen: set[tuple[int, int]] = set()
    incident: list[list[tuple[float, int]]] = [[] for _ in range(vertex_count)]
    for index, (u, v) in enumerate(edges):
        key = (min(u, v), max(u, v))
        if u == v or key in seen:
            raise ValidationError(
                f"Edge {index} ({u}, {v}) is a loop or a parallel edge.",
                operation="from_drawing",
            )
        seen.add(key)
        incident[u].append((_angle(coords[u], coords[v]), 2 * index))
        incident[v].append((_angle(coords[v], coords[u]), 2 * index + 1))

    rotation = [[dart for _, dart in sorted(darts)] for darts in incident]
    lowest = min(range(vertex_count), key=lambda v: (coords[v][1], coords[v][0]))
    outer = min(incident[lowest])[1] if incident[lowest] else 0
    return build_plane_graph(vertex_count, rotation, outer, coords=coords)


def _angle(origin: Point, target: Point) -> float:
    return math.atan2(target[1] - origin[1], target[0] - origin[0]) % (2 * math.pi)


def from_planar_embedding(
    embedding: nx.PlanarEmbedding,
    outer: Optional[tuple[int, int]] = None,
) -> PlaneGraph:
    """
    Convert a networkx PlanarEmbedding on nodes 0..V-1.

    Edges are numbered by sorted endpoint pair. The outer face is the one to
    the right of the half-edge `outer` (default: the first edge's dart_a).
    """
    nodes = sorted(embedding.nodes)
    if nodes != list(range(len(nodes))):
        raise ValidationError(
            "Embedding nodes must be 0..V-1.", operation="from_planar_embedding"
        )
    pairs = sorted({(min(u, v), max(u, v)) for u, v in embedding.edges()})
    dart_of: dict[tuple[int, int], int] = {}
    for index, (u, v) in enumerate(pairs):
        dart_of[(u, v)] = 2 * index
        dart_of[(v, u)] = 2 * index + 1

    rotation = [
        [dart_of[(v, w)] for w in reversed(list(embedding.neighbors_cw_order(v)))]
        for v in nodes
    ]
    outer_dart = dart_of[outer] if outer is not None else 0
    return build_plane_graph(len(nodes), rotation, outer_dart)


def relabel_faces(g: PlaneGraph, order: Sequence[int]) -> PlaneGraph:
    """
    Renumber darts so that dart-scan face ids follow `order`.

    `order` lists the current face ids in the desired new order. Edge ids,
    endpoints and the embedding are unchanged.
    """
    if sorted(order) != list(range(g.face_count)):
        raise ValidationError(
            "Face order must be a permutation of the face ids.",
            operation="relabel_faces",
        )
    new_id: dict[int, int] = {}
    for face_id in order:
        for dart in g.faces[face_id].boundary_walk:
            new_id[dart] = len(new_id)

    rotation = [[new_id[d] for d in darts] for darts in g.rotation]
    records = [
        (e.id, new_id[e.dart_a], new_id[e.dart_b], e.u, e.v) for e in g.edges
    ]
    return build_plane_graph(
        g.vertex_count,
        rotation,
        new_id[g.outer_dart],
        edges=records,
        coords=g.coords,
    )
