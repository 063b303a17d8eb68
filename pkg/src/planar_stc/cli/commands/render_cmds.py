"""Figure rendering command for Planar STC CLI."""

from __future__ import annotations

import click

from planar_stc import build_labels, get_render_defaults, read_pg, read_tree
from planar_stc import render as render_figure

from ..cli_utils import handle_cli_errors, validate_label_mode_callback, write_or_echo


@click.command()
@click.argument("graph", type=click.Path(dir_okay=False))
@click.option(
    "--labels",
    "-l",
    "label_mode",
    default="none",
    show_default=True,
    callback=validate_label_mode_callback,
    help="none, absolute-index, ibot:<side> or congestion:<tree file>.",
)
@click.option(
    "--tree",
    "tree_path",
    default=None,
    type=click.Path(dir_okay=False),
    help="Spanning tree to draw bold.",
)
@click.option(
    "--format",
    "-f",
    "output_format",
    type=click.Choice(["dot", "svg"]),
    default=None,
    help="Figure format (default from config, dot).",
)
@click.option("--scale", type=float, default=None, help="Units per coordinate step.")
@click.option("--out", default=None, help="Write the figure to a file.")
@click.pass_context
@handle_cli_errors
def render(
    ctx: click.Context,
    graph: str,
    label_mode: tuple[str, str | None],
    tree_path: str | None,
    output_format: str | None,
    scale: float | None,
    out: str | None,
) -> None:
    """Render a graph as DOT or SVG with labeled faces.

    Example:
        planar-stc render graphs/T_5.pg --labels absolute-index

        planar-stc render graphs/T_5.pg --labels ibot:bottom --format svg --out t5.svg

        planar-stc render graphs/W_3_4.pg --labels congestion:graphs/W_3_4.tree
    """
    defaults = get_render_defaults()
    g = read_pg(graph)
    kind, argument = label_mode
    if kind == "congestion":
        tree_path = argument
    tree = read_tree(tree_path, g) if tree_path else None
    labels = build_labels(g, kind, argument, tree)
    figure = render_figure(
        g,
        labels,
        output_format or defaults.get("format", "dot"),
        scale if scale is not None else float(defaults.get("scale", 60.0)),
    )
    write_or_echo(figure, out)
