"""Planar STC CLI - Main entry point."""

import logging

import click

from planar_stc import __version__


@click.group(invoke_without_command=True)
@click.version_option(version=__version__, prog_name="planar-stc")
@click.option(
    "--output",
    "-o",
    type=click.Choice(["json", "text"]),
    default=None,
    help="Output format (default from config, json).",
)
@click.option("--verbose", "-v", is_flag=True, help="Enable verbose output.")
@click.option("--quiet", "-q", is_flag=True, help="Suppress non-essential output.")
@click.pass_context
def cli(ctx: click.Context, output: str | None, verbose: bool, quiet: bool) -> None:
    """Spanning tree congestion of plane graphs.

    Generate grid families, certify lower bounds with center-tail
    systems, compute breadth-first upper bounds and exact values, and
    render labeled figures.

    Configure via environment variables:
        STC_WORKERS, STC_LIMIT_MS, STC_LIMIT_NODES, STC_REPORT_FORMAT

    Examples:

        planar-stc gen --family triangular --size 5 --out graphs/

        planar-stc bounds graphs/T_5.pg

        planar-stc table --family triangular --range 5..14
    """
    ctx.ensure_object(dict)
    ctx.obj["output"] = output
    ctx.obj["verbose"] = verbose
    ctx.obj["quiet"] = quiet

    if verbose:
        handler = logging.StreamHandler()
        handler.setFormatter(logging.Formatter("%(name)s: %(message)s"))
        logger = logging.getLogger("planar_stc")
        logger.addHandler(handler)
        logger.setLevel(logging.DEBUG)

    if ctx.invoked_subcommand is None:
        click.echo(ctx.get_help())


def register_commands() -> None:
    """Register all commands with the CLI."""
    from .commands.bounds_cmds import bounds
    from .commands.config_cmds import config
    from .commands.exact_cmds import exact
    from .commands.gen_cmds import gen
    from .commands.render_cmds import render
    from .commands.table_cmds import table

    cli.add_command(gen)
    cli.add_command(bounds)
    cli.add_command(exact)
    cli.add_command(table)
    cli.add_command(render)
    cli.add_command(config)


# Register commands when module is loaded
register_commands()


if __name__ == "__main__":
    cli()
