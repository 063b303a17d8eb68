"""Lower and upper bound command for Planar STC CLI."""

from __future__ import annotations

import click

from planar_stc import (
    PlaneGraph,
    absolute_index,
    build_bounds_report,
    format_index_triangle,
    format_report_text,
    print_info,
    read_cts,
    read_pg,
    recognize_triangular_grid,
    validate_cts,
)

from ..cli_utils import handle_cli_errors, is_verbose, output_results, resolve_output_format


@click.command()
@click.argument("graph", type=click.Path(dir_okay=False))
@click.option(
    "--cts",
    "cts_paths",
    multiple=True,
    type=click.Path(dir_okay=False),
    help="Center-tail system file (repeatable; the best one wins).",
)
@click.option(
    "--format",
    "-f",
    "output_format",
    type=click.Choice(["json", "text"]),
    default=None,
    help="Output format.",
)
@click.option("--out", default=None, help="Write the report to a file.")
@click.pass_context
@handle_cli_errors
def bounds(
    ctx: click.Context,
    graph: str,
    cts_paths: tuple[str, ...],
    output_format: str | None,
    out: str | None,
) -> None:
    """Certify s(G) between a center-tail lower bound and the BFS upper bound.

    Without --cts, generated triangular grids (k >= 5) use their canonical
    system; other graphs report the upper bound only.

    Example:
        planar-stc bounds graphs/T_5.pg

        planar-stc bounds mesh.pg --cts mesh.cts --format text
    """
    g = read_pg(graph)
    systems = [validate_cts(g, read_cts(path, g)) for path in cts_paths] or None
    if is_verbose(ctx):
        print_info(
            f"{graph}: V={g.vertex_count} E={g.edge_count} F={g.face_count}, "
            f"{len(cts_paths)} system file(s)"
        )
    report = build_bounds_report(g, systems).to_dict()
    output_results(
        report,
        resolve_output_format(ctx, output_format),
        text=_report_text(g, report),
        out=out,
    )


def _report_text(g: PlaneGraph, report: dict) -> str:
    """Report lines, plus the absolute index triangle for triangular grids."""
    text = format_report_text(report)
    k = recognize_triangular_grid(g)
    if k is None:
        return text
    table = absolute_index(g)
    values = {face: table[face] for face in g.interior_faces()}
    return f"{text}\nAbsolute index:\n{format_index_triangle(k, values)}"
