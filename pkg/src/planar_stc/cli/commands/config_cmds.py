"""Configuration commands for Planar STC CLI."""

from __future__ import annotations

import os
import sys

import click

from planar_stc import format_json, get_config, get_config_manager, print_error, print_success

ENV_VARS = [
    "STC_WORKERS",
    "STC_LIMIT_MS",
    "STC_LIMIT_NODES",
    "STC_TINY_GRAPH_VERTICES",
    "STC_REPORT_FORMAT",
]


@click.group()
def config() -> None:
    """Configuration management.

    View and validate solver, report and render settings.
    """
    pass


@config.command()
@click.option(
    "--output",
    "-o",
    type=click.Choice(["text", "json"]),
    default="text",
    help="Output format.",
)
def show(output: str) -> None:
    """Show current configuration.

    Displays the active configuration from all sources
    (environment variables, config files, defaults).

    Example:
        planar-stc config show
    """
    cfg = get_config()
    if output == "json":
        click.echo(format_json(cfg))
        return
    click.echo("Current Configuration:")
    click.echo("-" * 40)
    for section, values in sorted(cfg.items()):
        if isinstance(values, dict):
            click.echo(f"  {section}:")
            for key, value in sorted(values.items()):
                click.echo(f"    {key}: {value}")
        else:
            click.echo(f"  {section}: {values}")


@config.command()
@click.option("--verbose", "-v", is_flag=True, help="Show environment overrides.")
def validate(verbose: bool) -> None:
    """Validate current configuration.

    Example:
        planar-stc config validate
        planar-stc config validate --verbose
    """
    errors = get_config_manager().validate_config()

    if verbose:
        click.echo("Environment Overrides:")
        click.echo("-" * 40)
        for var in ENV_VARS:
            value = os.environ.get(var)
            click.echo(f"  {var}: {value if value else '(not set)'}")
        click.echo()

    if errors:
        for error in errors:
            print_error(error)
        click.echo()
        click.echo("Configuration is INVALID")
        sys.exit(1)
    print_success("Configuration is valid")


@config.command()
def sources() -> None:
    """Show configuration file locations.

    Example:
        planar-stc config sources
    """
    click.echo("Configuration Sources (highest priority first):")
    click.echo("-" * 50)

    sources_list = [
        ("Environment Variables", "STC_* environment variables"),
        (".claude/settings.local.json", "Personal settings (gitignored), key 'stc'"),
        (".claude/settings.json", "Team/project settings, key 'stc'"),
        ("Built-in defaults", "Library defaults"),
    ]

    for i, (source, description) in enumerate(sources_list, 1):
        if source.endswith(".json"):
            status = "✓ exists" if os.path.exists(source) else "✗ not found"
            click.echo(f"  {i}. {source} - {status}")
        else:
            click.echo(f"  {i}. {source}")
        click.echo(f"     {description}")
        click.echo()
