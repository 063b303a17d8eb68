"""CLI utility functions for Planar STC."""

from __future__ import annotations

import functools
import sys
from pathlib import Path
from typing import Any, Callable, TypeVar

import click
from assistant_skills_lib.error_handler import ValidationError as BaseValidationError

from planar_stc import (
    BudgetExceededError,
    InvariantError,
    SearchBudget,
    StcError,
    ValidationError,
    get_report_format,
    get_search_budget,
    get_search_defaults,
    print_error,
    validate_label_mode,
    validate_limit,
    validate_output_format,
    validate_workers,
    write_json,
)

F = TypeVar("F", bound=Callable[..., Any])

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_DISAGREEMENT = 2
EXIT_BUDGET = 3
EXIT_INPUT = 4
EXIT_INTERRUPTED = 130


def handle_cli_errors(func: F) -> F:
    """Decorator to handle exceptions in CLI commands.

    Catches planar-stc exceptions and prints user-friendly error messages,
    then exits with appropriate exit codes.
    """

    @functools.wraps(func)
    def wrapper(*args: Any, **kwargs: Any) -> Any:
        try:
            return func(*args, **kwargs)
        except click.ClickException:
            raise
        except BudgetExceededError as e:
            print_error(f"Budget exceeded: {e}")
            sys.exit(EXIT_BUDGET)
        except BaseValidationError as e:
            print_error(f"Input error: {e}")
            sys.exit(EXIT_INPUT)
        except OSError as e:
            print_error(f"File error: {e}")
            sys.exit(EXIT_INPUT)
        except InvariantError as e:
            print_error(f"Internal check failed: {e}")
            sys.exit(EXIT_ERROR)
        except StcError as e:
            print_error(f"Error: {e}")
            sys.exit(EXIT_ERROR)
        except KeyboardInterrupt:
            print_error("Interrupted by user")
            sys.exit(EXIT_INTERRUPTED)
        except Exception as e:
            print_error(f"Unexpected error: {e}")
            sys.exit(EXIT_ERROR)

    return wrapper  # type: ignore[return-value]


def validate_workers_callback(
    ctx: click.Context, param: click.Parameter, value: int | None
) -> int | None:
    """Click callback to validate --workers."""
    if value is None:
        return None
    try:
        return validate_workers(value)
    except BaseValidationError as e:
        raise click.BadParameter(str(e))


def validate_limit_callback(
    ctx: click.Context, param: click.Parameter, value: int | None
) -> int | None:
    """Click callback to validate an optional search limit (None means unlimited)."""
    try:
        return validate_limit(value, param.name if param is not None and param.name else "limit")
    except BaseValidationError as e:
        raise click.BadParameter(str(e))


def validate_label_mode_callback(
    ctx: click.Context, param: click.Parameter, value: str
) -> tuple[str, str | None]:
    """Click callback to parse a --labels mode.

    Raises:
        click.BadParameter: If the mode is unknown
    """
    try:
        return validate_label_mode(value)
    except BaseValidationError as e:
        raise click.BadParameter(str(e))


def resolve_output_format(ctx: click.Context, output_format: str | None) -> str:
    """Command flag, then the global --output, then configuration."""
    if output_format:
        return output_format
    ctx.ensure_object(dict)
    return validate_output_format(ctx.obj.get("output") or get_report_format())


def is_verbose(ctx: click.Context) -> bool:
    ctx.ensure_object(dict)
    return bool(ctx.obj.get("verbose")) and not ctx.obj.get("quiet")


def is_quiet(ctx: click.Context) -> bool:
    ctx.ensure_object(dict)
    return bool(ctx.obj.get("quiet"))


def with_search_options(func: F) -> F:
    """Decorator to add --workers, --limit-ms and --limit-nodes to a command.

    Example:
        @click.command()
        @with_search_options
        @click.pass_context
        def exact(ctx, workers, limit_ms, limit_nodes):
            budget, workers = get_search_settings(workers, limit_ms, limit_nodes)
    """
    func = click.option(
        "--limit-nodes",
        type=int,
        default=None,
        callback=validate_limit_callback,
        help="Search node limit. Default from config (unlimited).",
    )(func)
    func = click.option(
        "--limit-ms",
        type=int,
        default=None,
        callback=validate_limit_callback,
        help="Search time limit in milliseconds. Default from config (unlimited).",
    )(func)
    func = click.option(
        "--workers",
        "-w",
        type=int,
        default=None,
        callback=validate_workers_callback,
        help="Worker processes for the exact search. Default from config (1).",
    )(func)
    return func


def get_search_settings(
    workers: int | None, limit_ms: int | None, limit_nodes: int | None
) -> tuple[SearchBudget, dict[str, int]]:
    """Budget and solver keyword arguments with configuration defaults applied."""
    defaults = get_search_defaults()
    budget = get_search_budget(node_limit=limit_nodes, time_limit_ms=limit_ms)
    options = {
        "workers": workers if workers is not None else int(defaults.get("workers", 1)),
        "tiny_graph_vertices": int(defaults.get("tiny_graph_vertices", 12)),
        "split_depth": int(defaults.get("split_depth", 6)),
    }
    return budget, options


def write_or_echo(text: str, out: str | None) -> Path | None:
    """Write text to a file when --out is given, else print it."""
    if out is None:
        click.echo(text, nl=not text.endswith("\n"))
        return None
    target = Path(out)
    target.parent.mkdir(parents=True, exist_ok=True)
    target.write_text(text, encoding="utf-8")
    return target


def output_results(
    data: Any,
    output_format: str = "json",
    text: str | None = None,
    out: str | None = None,
    success_msg: str | None = None,
) -> None:
    """Output results in the specified format.

    Args:
        data: JSON-ready results (dict or list)
        output_format: "json" or "text"
        text: Pre-formatted text rendering for text output
        out: Optional file to write instead of stdout
        success_msg: Optional success message for text output
    """
    from planar_stc import format_json, print_success

    if output_format == "json" or text is None:
        if out is not None:
            write_json(data, out)
        else:
            write_or_echo(format_json(data) + "\n", None)
    else:
        write_or_echo(text + "\n", out)
        if success_msg:
            print_success(success_msg)


def require(value: Any, flag: str, family: str) -> Any:
    """Raise an input error when a family-specific flag is missing."""
    if value is None:
        raise ValidationError(
            f"{flag} is required for family '{family}'",
            operation="validation",
            details={"field": flag},
        )
    return value
