#!/usr/bin/env python3
"""
Figure Rendering

DOT and SVG output for plane graphs with per-face labels placed at face
centroids and an optional spanning tree drawn bold. Label modes:

    none             no face labels
    absolute-index   i(F) for every interior face
    ibot:<side>      min of i(F, e) over the outer edges of one side of a
                     triangular grid (bottom, right or left)
    congestion       per-edge congestion of a spanning tree, on tree edges

Output depends only on the graph, the labels and the scale, so repeated
renders are byte-identical.
"""

from dataclasses import dataclass, field
from html import escape
from typing import Mapping, Optional

from .congestion import SpanningTree, edge_congestion_cuts
from .dual_bounds import INFINITY, Index, absolute_index, side_index
from .error_handler import ValidationError
from .grids import recognize_triangular_grid, triangular_sides
from .plane_graph import PlaneGraph

LABEL_KINDS = ("none", "absolute-index", "ibot", "congestion")
MARGIN = 20.0


@dataclass(frozen=True)
class Labels:
    """Text to draw on faces and edges, and the tree to draw bold."""

    faces: Mapping[int, str] = field(default_factory=dict)
    edges: Mapping[int, str] = field(default_factory=dict)
    tree: Optional[SpanningTree] = None


def _index_text(value: Index) -> str:
    return "inf" if value == INFINITY else str(int(value))


def build_labels(
    g: PlaneGraph,
    kind: str,
    argument: Optional[str] = None,
    tree: Optional[SpanningTree] = None,
) -> Labels:
    """
    Compute labels for one label mode.

    Raises:
        ValidationError: unknown mode, ibot on a graph that is not a
            generated triangular grid, or congestion without a tree
    """
    if kind == "none":
        return Labels(tree=tree)
    if kind == "absolute-index":
        table = absolute_index(g)
        return Labels(
            faces={f: str(table[f]) for f in g.interior_faces()}, tree=tree
        )
    if kind == "ibot":
        k = recognize_triangular_grid(g)
        if k is None:
            raise ValidationError(
                "ibot labels need a generated triangular grid",
                operation="render",
                details={"field": "labels"},
            )
        sides = triangular_sides(k)
        if argument not in sides:
            raise ValidationError(
                f"Unknown side '{argument}'; expected one of {', '.join(sides)}",
                operation="render",
                details={"field": "labels"},
            )
        values = side_index(g, sides[argument])
        return Labels(faces={f: _index_text(v) for f, v in values.items()}, tree=tree)
    if kind == "congestion":
        if tree is None:
            raise ValidationError(
                "congestion labels need a spanning tree",
                operation="render",
                details={"field": "labels"},
            )
        report = edge_congestion_cuts(g, tree)
        return Labels(
            edges={e: str(value) for e, value in report.per_edge.items()}, tree=tree
        )
    raise ValidationError(
        f"Unknown label mode '{kind}'",
        operation="render",
        details={"field": "labels"},
    )


def face_centroid(g: PlaneGraph, face_id: int) -> tuple[float, float]:
    """Mean of the distinct boundary vertex coordinates of a face."""
    if g.coords is None:
        raise ValidationError("Graph has no coordinates", operation="render")
    vertices = sorted(set(g.face_vertices(face_id)))
    x = sum(g.coords[v][0] for v in vertices) / len(vertices)
    y = sum(g.coords[v][1] for v in vertices) / len(vertices)
    return x, y


def _number(value: float) -> str:
    text = f"{value:.2f}"
    return "0.00" if text == "-0.00" else text


def render_dot(g: PlaneGraph, labels: Optional[Labels] = None, scale: float = 60.0) -> str:
    """Graphviz source; positions are pinned for neato when coordinates exist."""
    labels = labels or Labels()
    tree_edges = labels.tree.edge_set if labels.tree else frozenset()
    pinned = g.coords is not None
    result = ["graph G {"]
    if pinned:
        result.append("    layout=neato;")
    result.append("    node [shape=circle, width=0.12, fixedsize=true, label=\"\"];")

    for vertex in range(g.vertex_count):
        line = f"    v{vertex}"
        if g.coords is not None:
            x, y = g.coords[vertex]
            line += f' [pos="{_number(x * scale)},{_number(y * scale)}!"]'
        result.append(line + ";")

    for edge in g.edges:
        attributes = []
        if edge.id in tree_edges:
            attributes.append("penwidth=3")
        if edge.id in labels.edges:
            attributes.append(f'label="{labels.edges[edge.id]}"')
        line = f"    v{edge.u} -- v{edge.v}"
        if attributes:
            line += f" [{','.join(attributes)}]"
        result.append(line + ";")

    for face in sorted(labels.faces):
        text = labels.faces[face]
        if pinned:
            x, y = face_centroid(g, face)
            result.append(
                f'    f{face} [shape=plaintext, width=0, fixedsize=false, label="{text}", '
                f'pos="{_number(x * scale)},{_number(y * scale)}!"];'
            )
        else:
            result.append(f"    // face {face}: {text}")

    result.append("}")
    return "\n".join(result) + "\n"


def render_svg(g: PlaneGraph, labels: Optional[Labels] = None, scale: float = 60.0) -> str:
    """
    Standalone SVG drawing at the graph's own coordinates.

    Raises:
        ValidationError: the graph has no coordinates
    """
    if g.coords is None:
        raise ValidationError(
            "SVG output needs vertex coordinates; use DOT instead",
            operation="render",
            details={"field": "format"},
        )
    labels = labels or Labels()
    tree_edges = labels.tree.edge_set if labels.tree else frozenset()
    xs = [x for x, _ in g.coords]
    ys = [y for _, y in g.coords]
    left, top = min(xs), max(ys)
    width = (max(xs) - left) * scale + 2 * MARGIN
    height = (top - min(ys)) * scale + 2 * MARGIN

    def point(x: float, y: float) -> tuple[str, str]:
        return _number((x - left) * scale + MARGIN), _number((top - y) * scale + MARGIN)

    result = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_number(width)}" '
        f'height="{_number(height)}" viewBox="0 0 {_number(width)} {_number(height)}">',
        '  <g stroke="black" stroke-linecap="round">',
    ]
    for edge in g.edges:
        x1, y1 = point(*g.coords[edge.u])
        x2, y2 = point(*g.coords[edge.v])
        stroke = 3 if edge.id in tree_edges else 1
        result.append(
            f'    <line x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}" stroke-width="{stroke}"/>'
        )
    result.append("  </g>")

    result.append('  <g fill="black">')
    for vertex in range(g.vertex_count):
        cx, cy = point(*g.coords[vertex])
        result.append(f'    <circle cx="{cx}" cy="{cy}" r="3"/>')
    result.append("  </g>")

    if labels.faces or labels.edges:
        result.append('  <g font-family="sans-serif" font-size="12" text-anchor="middle">')
        for face in sorted(labels.faces):
            x, y = point(*face_centroid(g, face))
            result.append(f'    <text x="{x}" y="{y}">{escape(labels.faces[face])}</text>')
        for edge_id in sorted(labels.edges):
            edge = g.edges[edge_id]
            (ux, uy), (vx, vy) = g.coords[edge.u], g.coords[edge.v]
            x, y = point((ux + vx) / 2, (uy + vy) / 2)
            result.append(
                f'    <text x="{x}" y="{y}" fill="blue">{escape(labels.edges[edge_id])}</text>'
            )
        result.append("  </g>")

    result.append("</svg>")
    return "\n".join(result) + "\n"


def render(
    g: PlaneGraph,
    labels: Optional[Labels] = None,
    output_format: str = "dot",
    scale: float = 60.0,
) -> str:
    if output_format == "dot":
        return render_dot(g, labels, scale)
    if output_format == "svg":
        return render_svg(g, labels, scale)
    raise ValidationError(
        f"Unknown render format '{output_format}'",
        operation="render",
        details={"field": "format"},
    )
