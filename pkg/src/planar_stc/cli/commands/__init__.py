"""Planar STC CLI commands."""
