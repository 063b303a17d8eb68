"""Tests for graph_io module."""

import json

import pytest

from planar_stc import (
    ContainsCycleError,
    InvalidRotationError,
    ParseError,
    canonical_cts,
    format_cts,
    format_pg,
    parse_cts,
    parse_pg,
    parse_tree,
    read_cts,
    read_pg,
    read_tree,
    verify_tree,
    write_cts,
    write_json,
    write_pg,
    write_tree,
)

THETA = """\
# two vertices, three parallel edges
pg 2 3
outer 0
rot 0: 0 2 4
rot 1: 5 3 1
edge 0 0 1 0 1
edge 1 2 3 0 1
edge 2 4 5 0 1
"""


class TestParsePg:
    """Tests for parse_pg."""

    def test_theta(self):
        g = parse_pg(THETA)
        assert (g.vertex_count, g.edge_count, g.face_count) == (2, 3, 3)
        assert g.coords is None

    def test_comments_and_blank_lines(self):
        g = parse_pg("\n\n" + THETA.replace("outer 0", "outer 0   # first dart"))
        assert g.outer_dart == 0

    def test_format_is_parseable(self, t5):
        assert parse_pg(format_pg(t5)) == t5

    def test_format_keeps_coordinates(self, k4):
        text = format_pg(k4)
        assert "coord 3 2.0 1.5" in text
        assert parse_pg(text).coords == k4.coords

    def test_missing_header(self):
        with pytest.raises(ParseError, match="pg <V> <E>") as exc_info:
            parse_pg("outer 0\n", path="g.pg")
        assert exc_info.value.path == "g.pg"
        assert exc_info.value.line == 1

    def test_empty(self):
        with pytest.raises(ParseError, match="Missing 'pg' header"):
            parse_pg("# nothing\n")

    def test_bad_integer_reports_line(self):
        text = THETA.replace("outer 0", "outer x")
        with pytest.raises(ParseError, match="integer") as exc_info:
            parse_pg(text, path="theta.pg")
        assert exc_info.value.line == 3
        assert "theta.pg:3" in str(exc_info.value)

    def test_unknown_keyword(self):
        with pytest.raises(ParseError, match="Unrecognized"):
            parse_pg(THETA + "face 0 1 2\n")

    def test_duplicate_edge(self):
        with pytest.raises(ParseError, match="Duplicate edge 2"):
            parse_pg(THETA + "edge 2 4 5 0 1\n")

    def test_edge_count_mismatch(self):
        with pytest.raises(ParseError, match="Expected 3 edges, found 2"):
            parse_pg(THETA.replace("edge 2 4 5 0 1\n", ""))

    def test_missing_rotation(self):
        with pytest.raises(ParseError, match="rotations"):
            parse_pg(THETA.replace("rot 1: 5 3 1\n", ""))

    def test_partial_coordinates(self):
        with pytest.raises(ParseError, match="every vertex"):
            parse_pg(THETA + "coord 0 0 0\n")

    def test_invalid_rotation_passes_through(self):
        text = THETA.replace("edge 0 0 1 0 1", "edge 0 0 1 1 0")
        with pytest.raises(InvalidRotationError):
            parse_pg(text)


class TestCts:
    """Tests for center-tail system files."""

    def test_format_uses_outer_token(self, t5):
        text = format_cts(t5, canonical_cts(5))
        assert "center 6\n" in text
        assert "tail 0: 6 7 3 O\n" in text

    def test_parse_formatted(self, t5):
        s = canonical_cts(5)
        assert parse_cts(format_cts(t5, s), t5) == s

    def test_parse_is_not_validated(self, t5):
        s = parse_cts("center 0 15\ntail 0: 0 O\n", t5)
        assert s.center == (0, 15)
        assert s.tails == ((0, t5.outer_face),)
        assert s.assignment == {}

    def test_missing_center(self, t5):
        with pytest.raises(ParseError, match="center"):
            parse_cts("tail 0: 6 O\n", t5)

    def test_tail_numbering_gap(self, t5):
        with pytest.raises(ParseError, match="numbered"):
            parse_cts("center 6\ntail 1: 6 O\n", t5)

    def test_assigned_twice(self, t5):
        with pytest.raises(ParseError, match="assigned twice") as exc_info:
            parse_cts("center 6\ntail 0: 6 O\nassign 3 0\nassign 3 0\n", t5)
        assert exc_info.value.line == 4


class TestTree:
    """Tests for tree files."""

    def test_parse(self, k3):
        assert parse_tree("1\n0\n", k3).edge_ids == (0, 1)

    def test_one_id_per_line(self, k3):
        with pytest.raises(ParseError, match="one edge id"):
            parse_tree("0 1\n", k3)

    def test_verified(self, k4):
        with pytest.raises(ContainsCycleError):
            parse_tree("0\n1\n2\n", k4)


class TestFiles:
    """Tests for the read_* and write_* helpers."""

    def test_graph_file(self, tmp_path, t4):
        path = write_pg(t4, tmp_path / "graphs" / "t4.pg")
        assert path.exists()
        assert read_pg(path) == t4

    def test_cts_file(self, tmp_path, t5):
        s = canonical_cts(5)
        path = write_cts(t5, s, tmp_path / "s5.cts")
        assert read_cts(path, t5) == s

    def test_tree_file(self, tmp_path, k4):
        t = verify_tree(k4, [3, 4, 5])
        path = write_tree(t, tmp_path / "tree.txt")
        assert path.read_text() == "3\n4\n5\n"
        assert read_tree(path, k4).edge_ids == t.edge_ids

    def test_json_file(self, tmp_path):
        path = write_json({"s": 6}, tmp_path / "out" / "report.json")
        assert json.loads(path.read_text()) == {"s": 6}

    def test_missing_file(self, tmp_path):
        with pytest.raises(ParseError, match="Cannot read file") as exc_info:
            read_pg(tmp_path / "absent.pg")
        assert exc_info.value.path.endswith("absent.pg")
