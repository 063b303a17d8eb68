"""Exact spanning tree congestion command for Planar STC CLI."""

from __future__ import annotations

from pathlib import Path

import click

from planar_stc import (
    BudgetExceededError,
    best_lower_bound,
    build_exact_report,
    default_systems,
    exact_stc,
    format_report_text,
    print_info,
    print_success,
    read_cts,
    read_pg,
    validate_cts,
    write_tree,
)

from ..cli_utils import (
    get_search_settings,
    handle_cli_errors,
    is_quiet,
    is_verbose,
    output_results,
    resolve_output_format,
    with_search_options,
)


@click.command()
@click.argument("graph", type=click.Path(dir_okay=False))
@click.option(
    "--cts",
    "cts_paths",
    multiple=True,
    type=click.Path(dir_okay=False),
    help="Center-tail system whose bound seeds the search (repeatable).",
)
@with_search_options
@click.option(
    "--tree-out",
    default=None,
    help="Witness tree file (default: <graph>.witness.tree next to the graph).",
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
def exact(
    ctx: click.Context,
    graph: str,
    cts_paths: tuple[str, ...],
    workers: int | None,
    limit_ms: int | None,
    limit_nodes: int | None,
    tree_out: str | None,
    output_format: str | None,
    out: str | None,
) -> None:
    """Compute s(G) exactly and write the witness tree.

    The search starts from the best certified lower bound available
    (supplied systems, or the canonical system of a triangular grid).
    On a budget overrun the report carries the best bounds found and
    the command exits with status 3.

    Example:
        planar-stc exact graphs/T_4.pg

        planar-stc exact graphs/T_9.pg --limit-ms 500
    """
    g = read_pg(graph)
    systems = [validate_cts(g, read_cts(path, g)) for path in cts_paths] or default_systems(g)
    hint = best_lower_bound(g, systems) if systems else None
    budget, options = get_search_settings(workers, limit_ms, limit_nodes)
    output_format = resolve_output_format(ctx, output_format)
    if is_verbose(ctx):
        print_info(
            f"{graph}: V={g.vertex_count} E={g.edge_count}, start bound {hint}, "
            f"workers {options['workers']}"
        )

    try:
        result = exact_stc(g, budget, lower_bound=hint, **options)
    except BudgetExceededError as e:
        if e.result is not None:
            report = build_exact_report(g, e.result, systems).to_dict()
            output_results(report, output_format, text=format_report_text(report), out=out)
        raise

    source = Path(graph)
    target = Path(tree_out) if tree_out else source.with_name(f"{source.stem}.witness.tree")
    write_tree(result.witness, target)
    report = build_exact_report(g, result, systems).to_dict()
    output_results(report, output_format, text=format_report_text(report), out=out)
    if is_verbose(ctx):
        print_info(f"{result.strategy} search, {result.nodes} nodes")
    if not is_quiet(ctx) and output_format == "text":
        print_success(f"Witness tree written to {target}")
