"""Size table command for Planar STC CLI."""

from __future__ import annotations

import sys

import click

from planar_stc import (
    build_table,
    format_table_rows,
    parse_size_range,
    print_info,
    print_success,
    print_warning,
)

from ..cli_utils import (
    EXIT_DISAGREEMENT,
    get_search_settings,
    handle_cli_errors,
    is_quiet,
    is_verbose,
    output_results,
    resolve_output_format,
    with_search_options,
)


@click.command()
@click.option("--family", "-f", default="triangular", show_default=True, help="Graph family.")
@click.option("--range", "size_range", required=True, help="Sizes as a..b (inclusive).")
@click.option(
    "--exact-up-to",
    type=int,
    default=4,
    show_default=True,
    help="Also compute s(G) exactly for sizes up to this one.",
)
@with_search_options
@click.option(
    "--format",
    "output_format",
    type=click.Choice(["json", "text"]),
    default=None,
    help="Output format.",
)
@click.option("--out", default=None, help="Write the table to a file.")
@click.pass_context
@handle_cli_errors
def table(
    ctx: click.Context,
    family: str,
    size_range: str,
    exact_up_to: int,
    workers: int | None,
    limit_ms: int | None,
    limit_nodes: int | None,
    output_format: str | None,
    out: str | None,
) -> None:
    """Compare the closed-form values with computed bounds per size.

    Each row lists the closed form, the older formula, the center-tail
    lower bound, the BFS upper bound and (for small sizes) the exact
    value. Exits with status 2 if any row disagrees.

    Example:
        planar-stc table --family triangular --range 5..14

        planar-stc table --range 2..4 --format text
    """
    sizes = parse_size_range(size_range)
    budget, options = get_search_settings(workers, limit_ms, limit_nodes)
    if is_verbose(ctx):
        print_info(f"{family}: sizes {sizes.start}..{sizes.stop - 1}")
    rows = build_table(
        family, sizes, exact_up_to=exact_up_to, budget=budget, workers=options["workers"]
    )
    data = [row.to_dict() for row in rows]
    output_results(
        data,
        resolve_output_format(ctx, output_format),
        text=format_table_rows(data),
        out=out,
    )

    failures = [row.k for row in rows if not row.agrees]
    if failures:
        print_warning(f"Disagreement at size(s): {', '.join(map(str, failures))}")
        sys.exit(EXIT_DISAGREEMENT)
    if not is_quiet(ctx):
        print_success(f"All {len(rows)} row(s) agree")
