"""Tests for config_manager module."""

import os
import threading
from unittest.mock import MagicMock, patch

from planar_stc.config_manager import (
    RENDER_FORMATS,
    REPORT_FORMATS,
    ConfigManager,
    get_config,
    get_config_manager,
    get_render_defaults,
    get_report_format,
    get_search_budget,
    get_search_defaults,
)
from planar_stc.exact_search import SearchBudget


def _valid_config():
    return {
        "search": {
            "node_limit": None,
            "time_limit_ms": None,
            "workers": 1,
            "tiny_graph_vertices": 12,
            "split_depth": 6,
        },
        "report": {"format": "json"},
        "render": {"format": "dot", "scale": 60.0},
    }


class TestConfigManagerConstants:
    def test_formats(self):
        assert REPORT_FORMATS == ("json", "text")
        assert RENDER_FORMATS == ("dot", "svg")


class TestConfigManager:
    """Tests for ConfigManager class."""

    @patch.object(ConfigManager, "__init__", lambda x: None)
    def test_get_service_name(self):
        """Test get_service_name returns 'stc'."""
        manager = ConfigManager.__new__(ConfigManager)
        assert manager.get_service_name() == "stc"

    @patch.object(ConfigManager, "__init__", lambda x: None)
    def test_get_default_config_structure(self):
        manager = ConfigManager.__new__(ConfigManager)
        defaults = manager.get_default_config()
        assert set(defaults) == {"search", "report", "render"}

    @patch.object(ConfigManager, "__init__", lambda x: None)
    def test_get_default_config_values(self):
        """Test unlimited budgets and a single worker by default."""
        manager = ConfigManager.__new__(ConfigManager)
        defaults = manager.get_default_config()

        assert defaults["search"]["node_limit"] is None
        assert defaults["search"]["time_limit_ms"] is None
        assert defaults["search"]["workers"] == 1
        assert defaults["search"]["tiny_graph_vertices"] == 12
        assert defaults["report"]["format"] == "json"
        assert defaults["render"] == {"format": "dot", "scale": 60.0}


class TestGetEnvOverrides:
    """Tests for _get_env_overrides method."""

    def _setup_manager(self):
        """Helper to create properly configured manager for testing."""
        manager = ConfigManager.__new__(ConfigManager)
        manager.service_name = "stc"
        manager.env_prefix = "STC"
        return manager

    @patch.dict(os.environ, {}, clear=True)
    def test_no_overrides(self):
        with patch.object(ConfigManager, "__init__", lambda x: None):
            manager = self._setup_manager()
            assert manager._get_env_overrides() == {}

    @patch.dict(os.environ, {"STC_WORKERS": "4"}, clear=True)
    def test_workers_override(self):
        with patch.object(ConfigManager, "__init__", lambda x: None):
            manager = self._setup_manager()
            overrides = manager._get_env_overrides()
            assert overrides == {"search": {"workers": 4}}

    @patch.dict(
        os.environ,
        {"STC_LIMIT_MS": "5000", "STC_LIMIT_NODES": "100000"},
        clear=True,
    )
    def test_budget_override(self):
        """Test both search limits land under 'search'."""
        with patch.object(ConfigManager, "__init__", lambda x: None):
            manager = self._setup_manager()
            search = manager._get_env_overrides()["search"]
            assert search["time_limit_ms"] == 5000
            assert search["node_limit"] == 100000

    @patch.dict(os.environ, {"STC_TINY_GRAPH_VERTICES": "0"}, clear=True)
    def test_tiny_graph_override(self):
        with patch.object(ConfigManager, "__init__", lambda x: None):
            manager = self._setup_manager()
            overrides = manager._get_env_overrides()
            assert overrides["search"]["tiny_graph_vertices"] == 0

    @patch.dict(os.environ, {"STC_WORKERS": "many"}, clear=True)
    def test_invalid_integer_ignored(self):
        """Test non-integer values are ignored."""
        with patch.object(ConfigManager, "__init__", lambda x: None):
            manager = self._setup_manager()
            assert "search" not in manager._get_env_overrides()

    @patch.dict(os.environ, {"STC_REPORT_FORMAT": "TEXT"}, clear=True)
    def test_report_format_override(self):
        with patch.object(ConfigManager, "__init__", lambda x: None):
            manager = self._setup_manager()
            overrides = manager._get_env_overrides()
            assert overrides["report"] == {"format": "text"}


class TestValidateConfig:
    """Tests for validate_config method."""

    def _validate(self, config):
        with patch.object(ConfigManager, "__init__", lambda x: None):
            manager = ConfigManager.__new__(ConfigManager)
            manager.get_stc_config = MagicMock(return_value=config)
            return manager.validate_config()

    def test_validate_defaults(self):
        assert self._validate(_valid_config()) == []

    def test_validate_workers(self):
        config = _valid_config()
        config["search"]["workers"] = 0
        errors = self._validate(config)
        assert len(errors) == 1
        assert errors[0].startswith("search.workers must be an integer >= 1")

    def test_validate_limits(self):
        config = _valid_config()
        config["search"]["node_limit"] = -5
        config["search"]["time_limit_ms"] = "soon"
        errors = self._validate(config)
        assert len(errors) == 2
        assert all("positive integer or null" in e for e in errors)

    def test_validate_report_format(self):
        config = _valid_config()
        config["report"]["format"] = "yaml"
        errors = self._validate(config)
        assert errors == ["report.format must be one of json, text, got 'yaml'"]

    def test_validate_render(self):
        config = _valid_config()
        config["render"] = {"format": "png", "scale": 0}
        errors = self._validate(config)
        assert any(e.startswith("render.format") for e in errors)
        assert any(e.startswith("render.scale") for e in errors)


class TestGlobalFunctions:
    """Tests for global configuration functions."""

    def test_get_config_manager_creates_singleton(self):
        """Test get_config_manager creates singleton."""
        import planar_stc.config_manager as cm

        with cm._config_manager_lock:
            cm._config_manager = None

        result1 = get_config_manager()
        result2 = get_config_manager()

        assert result1 is result2
        assert isinstance(result1, ConfigManager)

    @patch("planar_stc.config_manager.get_config_manager")
    def test_get_config(self, mock_get_manager):
        mock_manager = MagicMock()
        mock_manager.get_stc_config.return_value = _valid_config()
        mock_get_manager.return_value = mock_manager

        assert get_config() == _valid_config()
        mock_manager.get_stc_config.assert_called_once()

    @patch("planar_stc.config_manager.get_config")
    def test_section_helpers(self, mock_get_config):
        mock_get_config.return_value = _valid_config()

        assert get_search_defaults()["workers"] == 1
        assert get_render_defaults()["scale"] == 60.0
        assert get_report_format() == "json"

    @patch("planar_stc.config_manager.get_config")
    def test_report_format_fallback(self, mock_get_config):
        mock_get_config.return_value = {}
        assert get_report_format() == "json"

    @patch("planar_stc.config_manager.get_search_defaults")
    def test_search_budget_from_config(self, mock_defaults):
        mock_defaults.return_value = {"node_limit": 1000, "time_limit_ms": 250}
        assert get_search_budget() == SearchBudget(node_limit=1000, time_limit_ms=250)

    @patch("planar_stc.config_manager.get_search_defaults")
    def test_search_budget_explicit_wins(self, mock_defaults):
        """Test explicit limits take precedence over configuration."""
        mock_defaults.return_value = {"node_limit": 1000, "time_limit_ms": 250}
        budget = get_search_budget(node_limit=5)
        assert budget.node_limit == 5
        assert budget.time_limit_ms == 250


class TestThreadSafety:
    """Tests for thread-safe singleton access."""

    def test_concurrent_access(self):
        """Test concurrent access to get_config_manager."""
        import planar_stc.config_manager as cm

        with cm._config_manager_lock:
            cm._config_manager = None

        results = []
        errors = []

        def get_manager():
            try:
                results.append(get_config_manager())
            except Exception as e:
                errors.append(e)

        threads = [threading.Thread(target=get_manager) for _ in range(10)]
        for t in threads:
            t.start()
        for t in threads:
            t.join()

        assert len(errors) == 0
        assert all(r is results[0] for r in results)
