#!/usr/bin/env python3
"""
Graph Families

Deterministic generators with straight-line drawings:

    - triangular grids T_k (k vertices per side), face ids in
      (row, position) order with the outer face last
    - canonical center-tail systems S_k for T_k, k >= 5
    - rectangular m x n grids
    - hexagonal grids of radius r (r rings of cells)
    - spiderwebs: n concentric k-cycles joined by k spokes, with the
      low-congestion spanning tree cut in the opposite sector

Triangular grid vertices are (r, c) with 0 <= c <= r < k, counted from the
apex; vertex (r, c) has id r(r+1)/2 + c. Upward face up(r, c) has corners
(r, c), (r+1, c), (r+1, c+1); downward face down(r, c) has corners
(r, c), (r, c+1), (r+1, c+1).
"""

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

from .congestion import SpanningTree, verify_tree
from .dual_bounds import CenterTailSystem
from .validators import validate_dimension, validate_grid_size
from .plane_graph import PlaneGraph, from_drawing, relabel_faces

SQRT3_2 = math.sqrt(3) / 2
SIDES = ("bottom", "right", "left")


@dataclass(frozen=True, order=True)
class TriangularGridFace:
    """Interior face of T_k: row 1..k-1 from the apex, position 1..2*row-1."""

    row: int
    position: int

    @property
    def is_upward(self) -> bool:
        return self.position % 2 == 1

    @property
    def face_id(self) -> int:
        return (self.row - 1) ** 2 + self.position - 1

    @classmethod
    def from_face_id(cls, face_id: int) -> "TriangularGridFace":
        row = math.isqrt(face_id) + 1
        return cls(row, face_id - (row - 1) ** 2 + 1)

    def corners(self) -> tuple[tuple[int, int], ...]:
        r = self.row - 1
        if self.is_upward:
            c = (self.position - 1) // 2
            return ((r, c), (r + 1, c), (r + 1, c + 1))
        c = (self.position - 2) // 2
        return ((r, c), (r, c + 1), (r + 1, c + 1))


@dataclass(frozen=True)
class TriangularSymmetry:
    """The 120 degree counterclockwise rotation of T_k as id permutations."""

    vertex: tuple[int, ...]
    edge: tuple[int, ...]
    face: tuple[int, ...]


def tri_vertex(r: int, c: int) -> int:
    return r * (r + 1) // 2 + c


def up_face(r: int, c: int) -> int:
    return TriangularGridFace(r + 1, 2 * c + 1).face_id


def down_face(r: int, c: int) -> int:
    return TriangularGridFace(r + 1, 2 * c + 2).face_id


@lru_cache(maxsize=64)
def triangular_grid(k: int) -> PlaneGraph:
    """
    Build T_k: k(k+1)/2 vertices, 3k(k-1)/2 edges, (k-1)^2 interior faces.

    Raises:
        ValidationError: k < 2
    """
    k = validate_grid_size(k, name="k")
    coords = [(c - r / 2, -r * SQRT3_2) for r in range(k) for c in range(r + 1)]
    edges = []
    for r in range(k):
        for c in range(r + 1):
            if c < r:
                edges.append((tri_vertex(r, c), tri_vertex(r, c + 1)))
            if r < k - 1:
                edges.append((tri_vertex(r, c), tri_vertex(r + 1, c)))
                edges.append((tri_vertex(r, c), tri_vertex(r + 1, c + 1)))
    drawn = from_drawing(coords, edges)

    by_corners = {
        frozenset(drawn.face_vertices(f)): f for f in drawn.interior_faces()
    }
    order = [
        by_corners[frozenset(tri_vertex(r, c) for r, c in face.corners())]
        for face in triangular_faces(k)
    ]
    return relabel_faces(drawn, order + [drawn.outer_face])


def triangular_faces(k: int) -> list[TriangularGridFace]:
    return [
        TriangularGridFace(row, position)
        for row in range(1, k)
        for position in range(1, 2 * row)
    ]


def _edge_lookup(g: PlaneGraph) -> dict[frozenset[int], int]:
    return {frozenset((e.u, e.v)): e.id for e in g.edges}


def triangular_sides(k: int) -> dict[str, tuple[int, ...]]:
    """Outer edges of T_k per side, each side ordered along its length."""
    g = triangular_grid(k)
    lookup = _edge_lookup(g)
    last = k - 1
    return {
        "bottom": tuple(
            lookup[frozenset((tri_vertex(last, c), tri_vertex(last, c + 1)))]
            for c in range(last)
        ),
        "right": tuple(
            lookup[frozenset((tri_vertex(r, r), tri_vertex(r + 1, r + 1)))]
            for r in range(last)
        ),
        "left": tuple(
            lookup[frozenset((tri_vertex(r, 0), tri_vertex(r + 1, 0)))]
            for r in range(last)
        ),
    }


@lru_cache(maxsize=64)
def triangular_symmetry(k: int) -> TriangularSymmetry:
    """Rotation (r, c) -> (k-1-c, r-c): bottom side to right, right to left."""
    g = triangular_grid(k)
    vertex = [0] * g.vertex_count
    for r in range(k):
        for c in range(r + 1):
            vertex[tri_vertex(r, c)] = tri_vertex(k - 1 - c, r - c)

    lookup = _edge_lookup(g)
    edge = tuple(lookup[frozenset((vertex[e.u], vertex[e.v]))] for e in g.edges)

    by_corners = {frozenset(g.face_vertices(f)): f for f in g.interior_faces()}
    face = [0] * g.face_count
    face[g.outer_face] = g.outer_face
    for f in g.interior_faces():
        face[f] = by_corners[frozenset(vertex[v] for v in g.face_vertices(f))]
    return TriangularSymmetry(tuple(vertex), edge, tuple(face))


def recognize_triangular_grid(g: PlaneGraph) -> Optional[int]:
    """Return k when g is exactly the generated T_k, else None."""
    k = (math.isqrt(8 * g.vertex_count + 1) - 1) // 2
    if k < 2 or k * (k + 1) // 2 != g.vertex_count:
        return None
    if g.edge_count != 3 * k * (k - 1) // 2:
        return None
    return k if g == triangular_grid(k) else None


def theorem_value(k: int) -> int:
    """Closed form of s(T_k): 4n for k = 3n or 3n+1, 4n+2 for k = 3n+2."""
    k = validate_grid_size(k, name="k")
    n, rest = divmod(k, 3)
    return 4 * n + 2 if rest == 2 else 4 * n


def legacy_formula(m: int) -> int:
    """Earlier published closed form 2(floor((m-1)/3) + floor(m/3)); 4 at m = 5."""
    return 2 * ((m - 1) // 3 + m // 3)


def canonical_cts(k: int) -> CenterTailSystem:
    """
    Canonical center-tail system S_k on T_k.

    The first tail starts in the center and climbs toward the right side
    in a zigzag of upward and downward faces along one column; it is the
    opposite tail of every bottom edge. The other two tails and their
    edges are its images under the 120 degree rotation.

    Raises:
        ValidationError: k < 5
    """
    k = validate_grid_size(k, minimum=5, name="k")
    g = triangular_grid(k)
    n, rest = divmod(k, 3)

    if rest == 2:
        center = [up_face(2 * n, n)]
        route = []
        for step in range(n):
            route += [up_face(2 * n - step, n), down_face(2 * n - step, n)]
        route.append(up_face(n, n))
    else:
        if rest == 0:
            center = [down_face(2 * n - 1, n - 1)]
        else:
            center = [
                up_face(2 * n, n),
                up_face(2 * n - 1, n - 1),
                up_face(2 * n - 1, n),
                down_face(2 * n - 1, n - 1),
                down_face(2 * n, n - 1),
                down_face(2 * n, n),
            ]
        route = [down_face(2 * n - 1, n - 1)]
        for step in range(n - 1):
            route += [up_face(2 * n - 2 - step, n - 1), down_face(2 * n - 2 - step, n - 1)]
        route.append(up_face(n - 1, n - 1))

    symmetry = triangular_symmetry(k)
    outer = g.outer_face
    tails = [tuple(route) + (outer,)]
    for _ in range(2):
        tails.append(tuple(symmetry.face[f] for f in tails[-1]))

    assignment = {}
    for e in triangular_sides(k)["bottom"]:
        assignment[e] = 0
        assignment[symmetry.edge[e]] = 1
        assignment[symmetry.edge[symmetry.edge[e]]] = 2
    return CenterTailSystem(
        center=tuple(sorted(center)),
        tails=tuple(tails),
        assignment={e: assignment[e] for e in sorted(assignment)},
    )


def rectangular_grid(m: int, n: int) -> PlaneGraph:
    """m x n grid; vertex (i, j) has id i*n + j and sits at (j, i)."""
    m = validate_dimension(m, "m")
    n = validate_dimension(n, "n")
    coords = [(float(j), float(i)) for i in range(m) for j in range(n)]
    edges = []
    for i in range(m):
        for j in range(n):
            if j + 1 < n:
                edges.append((i * n + j, i * n + j + 1))
            if i + 1 < m:
                edges.append((i * n + j, (i + 1) * n + j))
    return from_drawing(coords, edges)


_HEX_CORNERS = ((1, 0), (0, 1), (-1, 1), (-1, 0), (0, -1), (1, -1))


def hexagonal_grid(r: int) -> PlaneGraph:
    """
    Hexagonal grid of radius r: cells (a, b) with max(|a|, |b|, |a+b|) < r.

    Cell (a, b) is centered at lattice point (a + 2b, a - b) of the
    triangular lattice; its corners are the six lattice neighbors.
    Vertices are numbered bottom-up, then left to right.
    """
    r = validate_dimension(r, "r", minimum=1)
    cells = [
        (a, b)
        for a in range(-r + 1, r)
        for b in range(-r + 1, r)
        if max(abs(a), abs(b), abs(a + b)) < r
    ]
    hexagons = []
    for a, b in cells:
        u, v = a + 2 * b, a - b
        hexagons.append([(u + du, v + dv) for du, dv in _HEX_CORNERS])

    points = sorted({p for corners in hexagons for p in corners}, key=lambda p: (p[1], p[0]))
    index = {p: i for i, p in enumerate(points)}
    pairs = set()
    for corners in hexagons:
        for p, q in zip(corners, corners[1:] + corners[:1]):
            pairs.add((min(index[p], index[q]), max(index[p], index[q])))
    coords = [(u + v / 2, v * SQRT3_2) for u, v in points]
    return from_drawing(coords, sorted(pairs))


def spiderweb_vertex(ring: int, sector: int, spokes: int) -> int:
    """Vertex id on ring 1..n at spoke 0..k-1; the center is 0."""
    return 1 + (ring - 1) * spokes + sector


def spiderweb_graph(n: int, k: int) -> PlaneGraph:
    """
    n concentric k-cycles around a center vertex, joined by k spokes.

    Per ring i (base 2k(i-1)): spoke edges into ring i come first, then the
    ring edges from sector s to s+1.
    """
    n = validate_dimension(n, "n", minimum=1)
    k = validate_dimension(k, "k", minimum=3)
    coords = [(0.0, 0.0)]
    for ring in range(1, n + 1):
        for sector in range(k):
            angle = 2 * math.pi * sector / k
            coords.append((ring * math.cos(angle), ring * math.sin(angle)))
    edges = []
    for ring in range(1, n + 1):
        for sector in range(k):
            inner = 0 if ring == 1 else spiderweb_vertex(ring - 1, sector, k)
            edges.append((inner, spiderweb_vertex(ring, sector, k)))
        for sector in range(k):
            edges.append(
                (
                    spiderweb_vertex(ring, sector, k),
                    spiderweb_vertex(ring, (sector + 1) % k, k),
                )
            )
    return from_drawing(coords, edges)


def _spiderweb_tree(g: PlaneGraph, n: int, k: int, cut_sector: int) -> SpanningTree:
    edges = []
    for ring in range(1, n + 1):
        base = 2 * k * (ring - 1)
        edges.append(base)
        edges.extend(base + k + s for s in range(k) if s != cut_sector)
    return verify_tree(g, edges)


def spiderweb(n: int, k: int) -> tuple[PlaneGraph, SpanningTree]:
    """
    Spiderweb graph and its low-congestion tree.

    The tree keeps spoke 0 whole and every ring except the edge leaving
    sector k//2, so each detached ring arc has at most k//2 vertices:
    ec <= k + 2.
    """
    g = spiderweb_graph(n, k)
    return g, _spiderweb_tree(g, n, k, k // 2)


def spiderweb_naive_tree(n: int, k: int) -> tuple[PlaneGraph, SpanningTree]:
    """Spoke 0 plus every ring cut next to it: ec <= 2k."""
    g = spiderweb_graph(n, k)
    return g, _spiderweb_tree(g, n, k, 0)


def spiderweb_inner_faces(g: PlaneGraph) -> list[int]:
    """The k faces incident to the center vertex."""
    return sorted(
        {g.dart_face[d] for d in g.rotation[0]} - {g.outer_face}
    )
