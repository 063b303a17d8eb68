"""Tests for render module."""

import pytest

from planar_stc import (
    Labels,
    ValidationError,
    build_labels,
    build_plane_graph,
    face_centroid,
    render,
    render_dot,
    render_svg,
    verify_tree,
)


@pytest.fixture
def theta():
    """Parallel edges, no coordinates."""
    return build_plane_graph(2, [[0, 2, 4], [5, 3, 1]], 0)


class TestBuildLabels:
    """Tests for build_labels."""

    def test_none(self, k3):
        labels = build_labels(k3, "none")
        assert labels.faces == {}
        assert labels.edges == {}

    def test_absolute_index(self, t5):
        labels = build_labels(t5, "absolute-index")
        assert len(labels.faces) == 16
        assert labels.faces[6] == "3"
        assert t5.outer_face not in labels.faces

    def test_ibot(self, t5):
        labels = build_labels(t5, "ibot", "bottom")
        assert labels.faces[0] == "7"
        assert labels.faces[15] == "1"

    def test_ibot_needs_triangular_grid(self, k4):
        with pytest.raises(ValidationError, match="triangular grid"):
            build_labels(k4, "ibot", "bottom")

    def test_ibot_unknown_side(self, t5):
        with pytest.raises(ValidationError, match="Unknown side 'top'"):
            build_labels(t5, "ibot", "top")

    def test_congestion(self, k3):
        tree = verify_tree(k3, [0, 1])
        labels = build_labels(k3, "congestion", tree=tree)
        assert labels.edges == {0: "2", 1: "2"}
        assert labels.tree is tree

    def test_congestion_needs_tree(self, k3):
        with pytest.raises(ValidationError, match="spanning tree"):
            build_labels(k3, "congestion")

    def test_unknown_mode(self, k3):
        with pytest.raises(ValidationError, match="Unknown label mode"):
            build_labels(k3, "heat")


class TestRenderDot:
    """Tests for render_dot."""

    def test_pinned_positions(self, k3):
        dot = render_dot(k3)
        assert dot.startswith("graph G {\n    layout=neato;\n")
        assert '    v1 [pos="120.00,0.00!"];' in dot
        assert "    v0 -- v1;" in dot
        assert dot.endswith("}\n")

    def test_tree_and_edge_labels(self, k3):
        labels = build_labels(k3, "congestion", tree=verify_tree(k3, [0, 1]))
        dot = render_dot(k3, labels)
        assert '    v0 -- v1 [penwidth=3,label="2"];' in dot
        assert dot.count("penwidth=3") == 2

    def test_face_labels_at_centroid(self, k3):
        face = k3.interior_faces()[0]
        dot = render_dot(k3, Labels(faces={face: "1"}))
        assert f'f{face} [shape=plaintext' in dot
        assert 'pos="60.00,40.00!"' in dot

    def test_without_coordinates(self, theta):
        dot = render_dot(theta, build_labels(theta, "absolute-index"))
        assert "layout=neato" not in dot
        assert "    v0;" in dot
        assert "    // face 1: 1" in dot
        assert "    // face 2: 1" in dot

    def test_byte_identical(self, t5):
        labels = build_labels(t5, "absolute-index")
        assert render_dot(t5, labels) == render_dot(t5, labels)


class TestRenderSvg:
    """Tests for render_svg."""

    def test_size(self, k3):
        svg = render_svg(k3)
        assert svg.startswith('<svg xmlns="http://www.w3.org/2000/svg" width="160.00" height="160.00"')
        assert svg.count("<circle") == 3
        assert svg.endswith("</svg>\n")

    def test_tree_edges_bold(self, k3):
        svg = render_svg(k3, Labels(tree=verify_tree(k3, [0, 1])))
        assert svg.count('stroke-width="3"') == 2
        assert svg.count('stroke-width="1"') == 1

    def test_labels_escaped(self, k3):
        face = k3.interior_faces()[0]
        svg = render_svg(k3, Labels(faces={face: "<1>"}))
        assert "&lt;1&gt;" in svg

    def test_needs_coordinates(self, theta):
        with pytest.raises(ValidationError, match="coordinates"):
            render_svg(theta)


class TestRender:
    def test_dispatch(self, k3):
        assert render(k3, output_format="dot") == render_dot(k3)
        assert render(k3, output_format="svg") == render_svg(k3)

    def test_unknown_format(self, k3):
        with pytest.raises(ValidationError, match="png"):
            render(k3, output_format="png")

    def test_centroid(self, k3):
        x, y = face_centroid(k3, k3.interior_faces()[0])
        assert x == pytest.approx(1.0)
        assert y == pytest.approx(2 / 3)
