#!/usr/bin/env python3
"""
Planar STC Output Formatters

Text layouts for reports, size tables and per-face values, on top of the
generic formatters from the base library.
"""

from typing import Any, Dict, List, Mapping, Optional, Sequence, cast

from assistant_skills_lib.formatters import (
    Colors,
    _colorize,
    _supports_color,
    format_json,
    format_table,
)
from assistant_skills_lib.formatters import (
    print_error,
    print_info,
    print_success,
    print_warning,
)

colorize = _colorize
supports_color = _supports_color

TABLE_COLUMNS = ["k", "theorem", "legacy", "lower", "upper", "bfs_bound", "exact", "agrees"]


def _value(value: Any) -> str:
    return "-" if value is None else str(value)


def format_report_text(report: Mapping[str, Any]) -> str:
    """
    Format a report dictionary for display.
    """
    graph = report.get("graph", {})
    certified = report.get("certified")
    lines = [
        f"Graph:      V={graph.get('V')} E={graph.get('E')} F={graph.get('F')}",
        f"Lower:      {_value(report.get('lower'))}",
        f"Upper:      {_value(report.get('upper'))} (bound {_value(report.get('bfs_bound'))})",
        f"Exact:      {_value(report.get('exact'))}",
    ]
    if certified is not None:
        lines.append(f"Certified:  {_colorize(str(certified), Colors.GREEN)}")
    else:
        lines.append(f"Certified:  {_colorize('no', Colors.YELLOW)}")

    witness = report.get("lower_witness")
    if witness and "which_minimum" in witness:
        lines.append(
            f"Binding:    minimum {witness['which_minimum']} of system {witness['system']}"
        )
    timing = report.get("timing_ms", {})
    if timing:
        parts = [f"{name} {format_duration(ms / 1000)}" for name, ms in timing.items()]
        lines.append(f"Timing:     {', '.join(parts)}")
    return "\n".join(lines)


def format_table_rows(rows: Sequence[Mapping[str, Any]]) -> str:
    """Size table with disagreeing rows highlighted."""
    display: List[Dict[str, Any]] = []
    for row in rows:
        entry = {column: _value(row.get(column)) for column in TABLE_COLUMNS}
        entry["agrees"] = (
            _colorize("yes", Colors.GREEN) if row.get("agrees") else _colorize("NO", Colors.RED)
        )
        display.append(entry)
    return cast(str, format_table(display, columns=TABLE_COLUMNS))


def format_index_triangle(k: int, values: Mapping[int, Any], width: Optional[int] = None) -> str:
    """
    Lay out per-face values of T_k row by row from the apex.

    Row r holds faces (r-1)^2 .. r^2 - 1, alternating upward and downward
    triangles, centred under the apex.
    """
    rows = []
    for row in range(1, k):
        first = (row - 1) ** 2
        rows.append([_value(values.get(first + offset)) for offset in range(2 * row - 1)])
    cell = width or max((len(text) for row in rows for text in row), default=1)
    lines = []
    for index, row in enumerate(rows):
        indent = " " * ((len(rows) - 1 - index) * (cell + 1))
        lines.append(indent + " ".join(text.rjust(cell) for text in row))
    return "\n".join(lines)


def format_duration(seconds: float) -> str:
    """
    Format duration in human-readable format.
    """
    if seconds < 1:
        return f"{seconds * 1000:.0f}ms"
    if seconds < 60:
        return f"{seconds:.1f}s"
    if seconds < 3600:
        return f"{seconds / 60:.1f}m"
    return f"{seconds / 3600:.1f}h"


__all__ = [
    "Colors",
    "colorize",
    "supports_color",
    "format_json",
    "format_table",
    "format_report_text",
    "format_table_rows",
    "format_index_triangle",
    "format_duration",
    "print_error",
    "print_info",
    "print_success",
    "print_warning",
]
