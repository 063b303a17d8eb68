#!/usr/bin/env python3
"""
Configuration Manager for Planar STC

Provides configuration management from environment variables and config files.
Configuration priority (highest to lowest):
    1. Environment variables
    2. .claude/settings.local.json (personal, gitignored)
    3. .claude/settings.json (team defaults)
    4. Built-in defaults

Environment Variables:
    STC_WORKERS - Worker processes for the exact search (default: 1)
    STC_LIMIT_MS - Exact search time limit in milliseconds
    STC_LIMIT_NODES - Exact search node limit
    STC_TINY_GRAPH_VERTICES - Largest graph solved by single-pass enumeration
    STC_REPORT_FORMAT - Report output format (json or text)
"""

import threading
from typing import Any, Dict, Optional, cast

from assistant_skills_lib.config_manager import BaseConfigManager

from .exact_search import SearchBudget

REPORT_FORMATS = ("json", "text")
RENDER_FORMATS = ("dot", "svg")

_INT_OVERRIDES = {
    "WORKERS": "workers",
    "LIMIT_MS": "time_limit_ms",
    "LIMIT_NODES": "node_limit",
    "TINY_GRAPH_VERTICES": "tiny_graph_vertices",
}


class ConfigManager(BaseConfigManager):
    """Manages solver, report and render settings."""

    def __init__(self) -> None:
        """Initialize the configuration manager."""
        super().__init__()

    def get_service_name(self) -> str:
        """Returns the name of the service, which is 'stc'."""
        return "stc"

    def get_default_config(self) -> Dict[str, Any]:
        """Returns the default configuration dictionary."""
        return {
            "search": {
                "node_limit": None,
                "time_limit_ms": None,
                "workers": 1,
                "tiny_graph_vertices": 12,
                "split_depth": 6,
            },
            "report": {
                "format": "json",
            },
            "render": {
                "format": "dot",
                "scale": 60.0,
            },
        }

    def get_stc_config(self) -> Dict[str, Any]:
        """
        Get configuration merged with environment variable overrides.

        Returns:
            Configuration dictionary
        """
        defaults = self.get_default_config()
        file_config = self.config.get(self.service_name, {})
        merged = self._deep_merge(defaults, file_config)
        final_config = self._deep_merge(merged, self._get_env_overrides())
        return cast(Dict[str, Any], final_config)

    def _get_env_overrides(self) -> Dict[str, Any]:
        """Get configuration overrides from environment variables."""
        search: Dict[str, Any] = {}
        for env_name, key in _INT_OVERRIDES.items():
            if value := self.get_credential_from_env(env_name):
                try:
                    search[key] = int(value)
                except ValueError:
                    pass

        overrides: Dict[str, Any] = {}
        if search:
            overrides["search"] = search
        if report_format := self.get_credential_from_env("REPORT_FORMAT"):
            overrides["report"] = {"format": report_format.lower()}
        return overrides

    def validate_config(self) -> list:
        """Validate configuration and return list of issues."""
        errors = []
        config = self.get_stc_config()
        search = config.get("search", {})

        for key in ("node_limit", "time_limit_ms"):
            value = search.get(key)
            if value is not None and (not isinstance(value, int) or value <= 0):
                errors.append(f"search.{key} must be a positive integer or null, got {value!r}")
        for key, minimum in (("workers", 1), ("tiny_graph_vertices", 0), ("split_depth", 0)):
            value = search.get(key)
            if not isinstance(value, int) or value < minimum:
                errors.append(f"search.{key} must be an integer >= {minimum}, got {value!r}")

        report_format = config.get("report", {}).get("format")
        if report_format not in REPORT_FORMATS:
            errors.append(
                f"report.format must be one of {', '.join(REPORT_FORMATS)}, got {report_format!r}"
            )
        render = config.get("render", {})
        if render.get("format") not in RENDER_FORMATS:
            errors.append(
                f"render.format must be one of {', '.join(RENDER_FORMATS)}, "
                f"got {render.get('format')!r}"
            )
        scale = render.get("scale")
        if not isinstance(scale, (int, float)) or scale <= 0:
            errors.append(f"render.scale must be a positive number, got {scale!r}")

        return errors


# Global config manager instance with thread-safe initialization
_config_manager: Optional[ConfigManager] = None
_config_manager_lock = threading.Lock()


def get_config_manager() -> ConfigManager:
    """Get or create global ConfigManager instance.

    Thread-safe singleton access using double-checked locking pattern.
    """
    global _config_manager
    if _config_manager is None:
        with _config_manager_lock:
            if _config_manager is None:
                _config_manager = ConfigManager()
    return _config_manager


def get_config() -> Dict[str, Any]:
    """Get the merged configuration."""
    return get_config_manager().get_stc_config()


def get_search_defaults() -> Dict[str, Any]:
    """Get exact search settings."""
    return cast(Dict[str, Any], get_config().get("search", {}))


def get_render_defaults() -> Dict[str, Any]:
    """Get render settings."""
    return cast(Dict[str, Any], get_config().get("render", {}))


def get_report_format() -> str:
    return cast(str, get_config().get("report", {}).get("format", "json"))


def get_search_budget(
    node_limit: Optional[int] = None, time_limit_ms: Optional[int] = None
) -> SearchBudget:
    """Search budget from explicit limits, falling back to configuration."""
    defaults = get_search_defaults()
    return SearchBudget(
        node_limit=node_limit if node_limit is not None else defaults.get("node_limit"),
        time_limit_ms=(
            time_limit_ms if time_limit_ms is not None else defaults.get("time_limit_ms")
        ),
    )
