#!/usr/bin/env python3
"""Unit tests for validators module."""

import pytest
from assistant_skills_lib.error_handler import ValidationError

from planar_stc.validators import (
    parse_size_range,
    validate_dimension,
    validate_family,
    validate_grid_size,
    validate_label_mode,
    validate_limit,
    validate_output_format,
    validate_side,
    validate_workers,
)


class TestValidateGridSize:
    """Tests for validate_grid_size."""

    def test_valid(self):
        assert validate_grid_size(5) == 5

    def test_string(self):
        assert validate_grid_size("14") == 14

    def test_too_small_raises(self):
        with pytest.raises(ValidationError):
            validate_grid_size(1)

    def test_custom_minimum(self):
        assert validate_grid_size(5, minimum=5) == 5
        with pytest.raises(ValidationError):
            validate_grid_size(4, minimum=5)


class TestValidateDimension:
    def test_valid(self):
        assert validate_dimension(3, "spokes", minimum=3) == 3

    def test_invalid_raises(self):
        with pytest.raises(ValidationError):
            validate_dimension("many", "rows")


class TestValidateChoices:
    """Tests for family, side and format choices."""

    @pytest.mark.parametrize("family", ["triangular", "rectangular", "hexagonal", "spiderweb"])
    def test_families(self, family):
        assert validate_family(family) == family

    def test_unknown_family_raises(self):
        with pytest.raises(ValidationError):
            validate_family("square")

    def test_sides(self):
        assert validate_side("bottom") == "bottom"
        with pytest.raises(ValidationError):
            validate_side("top")

    def test_output_format(self):
        assert validate_output_format("text") == "text"
        with pytest.raises(ValidationError):
            validate_output_format("csv")


class TestValidateLimits:
    def test_workers(self):
        assert validate_workers(4) == 4
        with pytest.raises(ValidationError):
            validate_workers(0)

    def test_limit_none(self):
        """Test a missing limit means unlimited."""
        assert validate_limit(None, "limit_ms") is None

    def test_limit(self):
        assert validate_limit("250", "limit_ms") == 250
        with pytest.raises(ValidationError):
            validate_limit(0, "limit_nodes")


class TestValidateLabelMode:
    """Tests for validate_label_mode."""

    def test_none(self):
        assert validate_label_mode("none") == ("none", None)

    def test_absolute_index(self):
        assert validate_label_mode("absolute-index") == ("absolute-index", None)

    def test_ibot(self):
        assert validate_label_mode("ibot:bottom") == ("ibot", "bottom")

    def test_ibot_bad_side_raises(self):
        with pytest.raises(ValidationError):
            validate_label_mode("ibot:top")

    def test_congestion(self):
        assert validate_label_mode("congestion:out/tree.txt") == (
            "congestion",
            "out/tree.txt",
        )

    def test_missing_argument_raises(self):
        with pytest.raises(ValidationError, match="Unknown label mode"):
            validate_label_mode("congestion")

    def test_unknown_raises(self):
        with pytest.raises(ValidationError, match="Unknown label mode"):
            validate_label_mode("heat")

    def test_empty_raises(self):
        with pytest.raises(ValidationError):
            validate_label_mode("")


class TestParseSizeRange:
    """Tests for parse_size_range."""

    def test_range(self):
        assert parse_size_range("5..14") == range(5, 15)

    def test_single(self):
        assert parse_size_range("7") == range(7, 8)

    def test_malformed_raises(self):
        with pytest.raises(ValidationError, match="expected a..b"):
            parse_size_range("5-14")

    def test_empty_raises(self):
        with pytest.raises(ValidationError, match="Empty range"):
            parse_size_range("9..5")
