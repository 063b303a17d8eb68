#!/usr/bin/env python3
"""
Graph, System and Tree Files

Plain-text formats, whitespace separated, '#' starts a comment:

    .pg    pg <V> <E>
           outer <dart>
           rot <v>: <dart> ...          (counterclockwise, one line per vertex)
           edge <e> <dart_a> <dart_b> <u> <v>
           coord <v> <x> <y>            (optional, all or none)

    .cts   center <face> ...
           tail <i>: <face> ... O
           assign <edge> <tail>

    tree   one edge id per line

Reports and index tables are written as JSON.
"""

from pathlib import Path
from typing import Any, Iterator, Optional, Union

from assistant_skills_lib.formatters import format_json

from .congestion import SpanningTree, verify_tree
from .dual_bounds import CenterTailSystem
from .error_handler import ParseError
from .plane_graph import PlaneGraph, build_plane_graph

PathLike = Union[str, Path]
OUTER_TOKEN = "O"


def _lines(text: str) -> Iterator[tuple[int, list[str]]]:
    for number, raw in enumerate(text.splitlines(), 1):
        tokens = raw.split("#", 1)[0].split()
        if tokens:
            yield number, tokens


def _int(token: str, path: Optional[str], line: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise ParseError(f"Expected an integer, got '{token}'", path=path, line=line)


def _float(token: str, path: Optional[str], line: int) -> float:
    try:
        return float(token)
    except ValueError:
        raise ParseError(f"Expected a number, got '{token}'", path=path, line=line)


def format_pg(g: PlaneGraph) -> str:
    lines = [f"pg {g.vertex_count} {g.edge_count}", f"outer {g.outer_dart}"]
    for vertex, darts in enumerate(g.rotation):
        lines.append(f"rot {vertex}: " + " ".join(map(str, darts)))
    for e in g.edges:
        lines.append(f"edge {e.id} {e.dart_a} {e.dart_b} {e.u} {e.v}")
    if g.coords is not None:
        for vertex, (x, y) in enumerate(g.coords):
            lines.append(f"coord {vertex} {x!r} {y!r}")
    return "\n".join(lines) + "\n"


def parse_pg(text: str, path: Optional[str] = None) -> PlaneGraph:
    """
    Parse a plane graph; the result is validated by build_plane_graph.

    Raises:
        ParseError: Malformed lines, counts or duplicate records
        PlaneGraphError: The rotation system itself is invalid
    """
    header: Optional[tuple[int, int]] = None
    outer: Optional[int] = None
    rotation: dict[int, list[int]] = {}
    edges: dict[int, tuple[int, int, int, int, int]] = {}
    coords: dict[int, tuple[float, float]] = {}

    for number, tokens in _lines(text):
        keyword, args = tokens[0], tokens[1:]
        if header is None:
            if keyword != "pg" or len(args) != 2:
                raise ParseError("First line must be 'pg <V> <E>'", path=path, line=number)
            header = (_int(args[0], path, number), _int(args[1], path, number))
        elif keyword == "outer" and len(args) == 1:
            if outer is not None:
                raise ParseError("Duplicate 'outer' line", path=path, line=number)
            outer = _int(args[0], path, number)
        elif keyword == "rot" and args and args[0].endswith(":"):
            vertex = _int(args[0][:-1], path, number)
            if vertex in rotation:
                raise ParseError(f"Duplicate rotation for vertex {vertex}", path=path, line=number)
            rotation[vertex] = [_int(t, path, number) for t in args[1:]]
        elif keyword == "edge" and len(args) == 5:
            record = tuple(_int(t, path, number) for t in args)
            if record[0] in edges:
                raise ParseError(f"Duplicate edge {record[0]}", path=path, line=number)
            edges[record[0]] = record  # type: ignore[assignment]
        elif keyword == "coord" and len(args) == 3:
            vertex = _int(args[0], path, number)
            coords[vertex] = (_float(args[1], path, number), _float(args[2], path, number))
        else:
            raise ParseError(f"Unrecognized line '{' '.join(tokens)}'", path=path, line=number)

    if header is None:
        raise ParseError("Missing 'pg' header", path=path)
    vertex_count, edge_count = header
    if outer is None:
        raise ParseError("Missing 'outer' line", path=path)
    if sorted(rotation) != list(range(vertex_count)):
        raise ParseError(f"Expected rotations for vertices 0..{vertex_count - 1}", path=path)
    if len(edges) != edge_count:
        raise ParseError(f"Expected {edge_count} edges, found {len(edges)}", path=path)
    if coords and sorted(coords) != list(range(vertex_count)):
        raise ParseError("Coordinates must cover every vertex", path=path)

    return build_plane_graph(
        vertex_count,
        [rotation[v] for v in range(vertex_count)],
        outer,
        edges=list(edges.values()),
        coords=[coords[v] for v in range(vertex_count)] if coords else None,
    )


def format_cts(g: PlaneGraph, s: CenterTailSystem) -> str:
    def face(f: int) -> str:
        return OUTER_TOKEN if f == g.outer_face else str(f)

    lines = ["center " + " ".join(map(str, s.center))]
    for index, tail in enumerate(s.tails):
        lines.append(f"tail {index}: " + " ".join(face(f) for f in tail))
    for edge_id in sorted(s.assignment):
        lines.append(f"assign {edge_id} {s.assignment[edge_id]}")
    return "\n".join(lines) + "\n"


def parse_cts(text: str, g: PlaneGraph, path: Optional[str] = None) -> CenterTailSystem:
    """Parse a center-tail system; 'O' names the outer face of g. Not validated."""
    center: Optional[tuple[int, ...]] = None
    tails: dict[int, tuple[int, ...]] = {}
    assignment: dict[int, int] = {}

    def face(token: str, number: int) -> int:
        return g.outer_face if token == OUTER_TOKEN else _int(token, path, number)

    for number, tokens in _lines(text):
        keyword, args = tokens[0], tokens[1:]
        if keyword == "center":
            if center is not None:
                raise ParseError("Duplicate 'center' line", path=path, line=number)
            center = tuple(_int(t, path, number) for t in args)
        elif keyword == "tail" and args and args[0].endswith(":"):
            index = _int(args[0][:-1], path, number)
            if index in tails:
                raise ParseError(f"Duplicate tail {index}", path=path, line=number)
            tails[index] = tuple(face(t, number) for t in args[1:])
        elif keyword == "assign" and len(args) == 2:
            edge_id = _int(args[0], path, number)
            if edge_id in assignment:
                raise ParseError(f"Edge {edge_id} assigned twice", path=path, line=number)
            assignment[edge_id] = _int(args[1], path, number)
        else:
            raise ParseError(f"Unrecognized line '{' '.join(tokens)}'", path=path, line=number)

    if center is None:
        raise ParseError("Missing 'center' line", path=path)
    if sorted(tails) != list(range(len(tails))):
        raise ParseError("Tails must be numbered 0..n-1", path=path)
    return CenterTailSystem(
        center=center,
        tails=tuple(tails[i] for i in range(len(tails))),
        assignment={e: assignment[e] for e in sorted(assignment)},
    )


def format_tree(t: SpanningTree) -> str:
    return "".join(f"{e}\n" for e in t.edge_ids)


def parse_tree(text: str, g: PlaneGraph, path: Optional[str] = None) -> SpanningTree:
    """Parse edge ids and verify they form a spanning tree of g."""
    edges = []
    for number, tokens in _lines(text):
        if len(tokens) != 1:
            raise ParseError("Expected one edge id per line", path=path, line=number)
        edges.append(_int(tokens[0], path, number))
    return verify_tree(g, edges)


def _read(path: PathLike) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise ParseError(f"Cannot read file: {e.strerror}", path=str(path))


def _write(path: PathLike, text: str) -> Path:
    target = Path(path)
    target.parent.mkdir(parents=True, exist_ok=True)
    target.write_text(text, encoding="utf-8")
    return target


def read_pg(path: PathLike) -> PlaneGraph:
    return parse_pg(_read(path), str(path))


def write_pg(g: PlaneGraph, path: PathLike) -> Path:
    return _write(path, format_pg(g))


def read_cts(path: PathLike, g: PlaneGraph) -> CenterTailSystem:
    return parse_cts(_read(path), g, str(path))


def write_cts(g: PlaneGraph, s: CenterTailSystem, path: PathLike) -> Path:
    return _write(path, format_cts(g, s))


def read_tree(path: PathLike, g: PlaneGraph) -> SpanningTree:
    return parse_tree(_read(path), g, str(path))


def write_tree(t: SpanningTree, path: PathLike) -> Path:
    return _write(path, format_tree(t))


def write_json(data: Any, path: PathLike) -> Path:
    return _write(path, format_json(data) + "\n")
