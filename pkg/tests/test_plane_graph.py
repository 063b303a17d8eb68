"""Tests for plane_graph module."""

import networkx as nx
import pytest

from planar_stc import (
    InvalidRotationError,
    NotConnectedError,
    NotPlanarEmbeddingError,
    ValidationError,
    build_plane_graph,
    dual,
    face_adjacency,
    from_drawing,
    from_planar_embedding,
    interior_side,
    outer_edges,
    relabel_faces,
    trace_faces,
)


def theta(planar=True):
    """Two vertices joined by three parallel edges."""
    rotation = [[0, 2, 4], [5, 3, 1] if planar else [1, 3, 5]]
    return build_plane_graph(2, rotation, 0)


class TestBuildPlaneGraph:
    """Tests for build_plane_graph validation."""

    def test_triangle_counts(self, k3):
        assert (k3.vertex_count, k3.edge_count, k3.face_count) == (3, 3, 2)
        assert k3.dart_count == 6

    def test_parallel_edges(self):
        """Test a multigraph with three parallel edges has three faces."""
        g = theta()
        assert g.face_count == 3
        assert sorted(len(f.boundary_walk) for f in g.faces) == [2, 2, 2]

    def test_single_loop(self):
        """Test a loop splits the plane into two faces."""
        g = build_plane_graph(1, [[0, 1]], 0)
        assert g.edges[0].is_loop
        assert g.face_count == 2

    def test_non_planar_rotation_rejected(self):
        with pytest.raises(NotPlanarEmbeddingError, match="V - E \\+ F"):
            theta(planar=False)

    def test_duplicate_dart(self):
        with pytest.raises(InvalidRotationError, match="appears twice"):
            build_plane_graph(2, [[0, 1], [1]], 0)

    def test_dangling_twin(self):
        with pytest.raises(InvalidRotationError, match="no twin"):
            build_plane_graph(2, [[0], [2]], 0)

    def test_disconnected(self):
        rotation = [[0], [1], [2], [3]]
        with pytest.raises(NotConnectedError):
            build_plane_graph(4, rotation, 0)

    def test_isolated_vertices(self):
        with pytest.raises(NotConnectedError):
            build_plane_graph(2, [[], []], 0)

    def test_missing_outer_dart(self):
        with pytest.raises(InvalidRotationError, match="Outer dart"):
            build_plane_graph(2, [[0], [1]], 7)

    def test_wrong_rotation_count(self):
        with pytest.raises(InvalidRotationError, match="rotation lists"):
            build_plane_graph(3, [[0], [1]], 0)

    def test_edge_ids_with_gap(self):
        """Test explicit edge records must be numbered without gaps."""
        with pytest.raises(InvalidRotationError, match="without gaps"):
            build_plane_graph(2, [[0], [1]], 0, edges=[(1, 0, 1, 0, 1)])

    def test_edge_record_wrong_vertex(self):
        with pytest.raises(InvalidRotationError, match="belongs to vertex"):
            build_plane_graph(2, [[0], [1]], 0, edges=[(0, 0, 1, 1, 0)])

    def test_coordinate_count(self):
        with pytest.raises(ValidationError, match="coordinates"):
            build_plane_graph(2, [[0], [1]], 0, coords=[(0.0, 0.0)])

    def test_explicit_edges_match_default_pairing(self, k3):
        records = [(e.id, e.dart_a, e.dart_b, e.u, e.v) for e in k3.edges]
        rebuilt = build_plane_graph(3, k3.rotation, k3.outer_dart, edges=records)
        assert rebuilt == k3


class TestFaces:
    """Tests for face tracing."""

    def test_every_dart_on_one_face(self, t5):
        darts = [d for face in t5.faces for d in face.boundary_walk]
        assert sorted(darts) == list(range(t5.dart_count))

    def test_exactly_one_outer_face(self, k4):
        assert [f.is_outer for f in trace_faces(k4)].count(True) == 1
        assert k4.faces[k4.outer_face].is_outer

    def test_face_ids_follow_dart_scan(self, k3):
        assert k3.dart_face[0] == 0
        assert [f.id for f in k3.faces] == list(range(k3.face_count))

    def test_next_dart_rule(self, k4):
        """Test consecutive walk darts follow rotation_next of the twin."""
        for face in k4.faces:
            walk = face.boundary_walk
            for d, following in zip(walk, walk[1:] + walk[:1]):
                assert following == k4.rotation_next[k4.twin[d]]
                assert k4.tail[following] == k4.head(d)

    def test_triangle_faces(self, k3):
        inner = k3.interior_faces()
        assert len(inner) == 1
        assert sorted(k3.face_vertices(inner[0])) == [0, 1, 2]
        assert sorted(k3.face_edges(inner[0])) == [0, 1, 2]

    def test_tree_has_only_outer_face(self, path3):
        assert path3.face_count == 1
        assert path3.interior_faces() == []
        assert len(path3.faces[0].boundary_walk) == 4


class TestDual:
    """Tests for dual graph construction."""

    def test_edge_bijection(self, k4):
        d = dual(k4)
        assert d.edge_count == k4.edge_count
        assert d.face_count == k4.face_count
        for e in k4.edges:
            assert d.endpoints(e.id) == k4.edge_faces(e.id)

    def test_triangle_dual_parallel_edges(self, k3):
        d = dual(k3)
        graph = d.to_networkx()
        inner = k3.interior_faces()[0]
        assert graph.number_of_edges(inner, k3.outer_face) == 3

    def test_bridge_becomes_loop(self, pendant_triangle):
        a, b = pendant_triangle.edge_faces(3)
        assert a == b == pendant_triangle.outer_face
        d = dual(pendant_triangle)
        assert (pendant_triangle.outer_face, 3) in d.neighbors(pendant_triangle.outer_face)

    def test_tree_dual_is_loops(self, path3):
        d = dual(path3)
        assert d.face_count == 1
        assert d.edge_faces == ((0, 0), (0, 0))

    def test_neighbors_sorted(self, t4):
        d = dual(t4)
        for face in range(d.face_count):
            assert list(d.neighbors(face)) == sorted(d.neighbors(face))


class TestOuterEdges:
    """Tests for outer edge detection."""

    def test_triangle(self, k3):
        assert outer_edges(k3) == (0, 1, 2)

    def test_bridge_excluded(self, pendant_triangle):
        assert outer_edges(pendant_triangle) == (0, 1, 2)

    def test_tree_has_none(self, path3):
        assert outer_edges(path3) == ()

    def test_k4_inner_spokes_not_outer(self, k4):
        assert outer_edges(k4) == (0, 1, 2)

    def test_interior_side(self, k4):
        for e in outer_edges(k4):
            face = interior_side(k4, e)
            assert face != k4.outer_face
            assert e in k4.face_edges(face)

    def test_face_adjacency(self, k4):
        triples = face_adjacency(k4)
        assert len(triples) == k4.edge_count
        assert all(t.face_a != t.face_b for t in triples)


class TestFromDrawing:
    """Tests for from_drawing."""

    def test_outer_face_is_unbounded(self, k4):
        assert sorted(k4.face_vertices(k4.outer_face)) == [0, 1, 2]

    def test_square_with_diagonal(self):
        g = from_drawing(
            [(0, 0), (1, 0), (1, 1), (0, 1)],
            [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)],
        )
        assert g.face_count == 3
        assert len(g.faces[g.outer_face].boundary_walk) == 4
        assert sorted(g.face_vertices(g.outer_face)) == [0, 1, 2, 3]
        assert all(len(g.face_edges(f)) == 3 for f in g.interior_faces())

    def test_rejects_parallel_edge(self):
        with pytest.raises(ValidationError, match="parallel"):
            from_drawing([(0, 0), (1, 0)], [(0, 1), (1, 0)])

    def test_rejects_loop(self):
        with pytest.raises(ValidationError):
            from_drawing([(0, 0), (1, 0)], [(0, 1), (1, 1)])

    def test_keeps_coordinates(self, k3):
        assert k3.coords == ((0.0, 0.0), (2.0, 0.0), (1.0, 2.0))


class TestFromPlanarEmbedding:
    """Tests for from_planar_embedding."""

    def test_k4(self):
        _, embedding = nx.check_planarity(nx.complete_graph(4))
        g = from_planar_embedding(embedding)
        assert (g.vertex_count, g.edge_count, g.face_count) == (4, 6, 4)

    def test_outer_choice(self):
        _, embedding = nx.check_planarity(nx.cycle_graph(5))
        g = from_planar_embedding(embedding, outer=(1, 2))
        assert g.face_count == 2
        assert (g.edges[2].u, g.edges[2].v) == (1, 2)
        assert g.outer_dart == g.edges[2].dart_a == 4

    def test_rejects_sparse_labels(self):
        graph = nx.Graph([(0, 5), (5, 7)])
        _, embedding = nx.check_planarity(graph)
        with pytest.raises(ValidationError):
            from_planar_embedding(embedding)


class TestRelabelFaces:
    """Tests for relabel_faces."""

    def test_reverses_face_order(self, k4):
        order = list(reversed(range(k4.face_count)))
        relabeled = relabel_faces(k4, order)
        for new_id, old_id in enumerate(order):
            assert sorted(relabeled.face_vertices(new_id)) == sorted(
                k4.face_vertices(old_id)
            )

    def test_keeps_edges(self, k4):
        relabeled = relabel_faces(k4, list(reversed(range(k4.face_count))))
        assert [(e.u, e.v) for e in relabeled.edges] == [(e.u, e.v) for e in k4.edges]
        assert relabeled.coords == k4.coords

    def test_rejects_non_permutation(self, k4):
        with pytest.raises(ValidationError, match="permutation"):
            relabel_faces(k4, [0, 0, 1, 2])
