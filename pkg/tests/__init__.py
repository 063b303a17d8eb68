"""Tests for planar-stc."""
