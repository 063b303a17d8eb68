#!/usr/bin/env python3
"""
Input Validators

Validation functions for generator parameters, label modes and solver
limits. All validators return the validated value or raise ValidationError.
"""

from typing import Optional, Union, cast

from assistant_skills_lib.validators import validate_choice, validate_int, validate_required

from .error_handler import ValidationError

FAMILIES = ("triangular", "rectangular", "hexagonal", "spiderweb")
SIDES = ("bottom", "right", "left")
LABEL_MODES = ("none", "absolute-index", "ibot:<side>", "congestion:<tree>")
OUTPUT_FORMATS = ("json", "text")


def validate_grid_size(k: Union[int, str], minimum: int = 2, name: str = "size") -> int:
    """Validate a grid size such as k for T_k."""
    return cast(int, validate_int(k, name, min_value=minimum))


def validate_dimension(value: Union[int, str], name: str, minimum: int = 2) -> int:
    """Validate one dimension of a generated family (rows, spokes, radius...)."""
    return cast(int, validate_int(value, name, min_value=minimum))


def validate_family(family: str) -> str:
    return cast(str, validate_choice(family, list(FAMILIES), "family"))


def validate_side(side: str) -> str:
    return cast(str, validate_choice(side, list(SIDES), "side"))


def validate_output_format(output_format: str) -> str:
    return cast(str, validate_choice(output_format, list(OUTPUT_FORMATS), "format"))


def validate_workers(workers: Union[int, str]) -> int:
    return cast(int, validate_int(workers, "workers", min_value=1))


def validate_limit(value: Optional[Union[int, str]], name: str) -> Optional[int]:
    """Validate an optional positive search limit."""
    if value is None:
        return None
    return cast(int, validate_int(value, name, min_value=1))


def validate_label_mode(mode: str) -> tuple[str, Optional[str]]:
    """
    Parse a label mode into (kind, argument).

    Examples:
        "none" -> ("none", None)
        "ibot:bottom" -> ("ibot", "bottom")
        "congestion:tree.txt" -> ("congestion", "tree.txt")
    """
    mode = validate_required(mode, "labels")
    kind, _, argument = mode.partition(":")
    if kind in ("none", "absolute-index") and not argument:
        return kind, None
    if kind == "ibot" and argument:
        return kind, validate_side(argument)
    if kind == "congestion" and argument:
        return kind, argument
    raise ValidationError(
        f"Unknown label mode '{mode}'; expected one of {', '.join(LABEL_MODES)}",
        operation="validation",
        details={"field": "labels"},
    )


def parse_size_range(value: str) -> range:
    """
    Parse 'a..b' (inclusive) or a single size.

    Raises:
        ValidationError: malformed or empty range
    """
    value = validate_required(value, "range")
    low_text, separator, high_text = value.partition("..")
    try:
        low = int(low_text)
        high = int(high_text) if separator else low
    except ValueError:
        raise ValidationError(
            f"Invalid range '{value}'; expected a..b",
            operation="validation",
            details={"field": "range"},
        )
    if low > high:
        raise ValidationError(
            f"Empty range '{value}'",
            operation="validation",
            details={"field": "range"},
        )
    return range(low, high + 1)
