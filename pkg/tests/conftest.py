#!/usr/bin/env python3
"""
Shared pytest fixtures for planar-stc tests.

This root conftest.py centralizes:
- pytest hooks (configure)
- Small hand-drawn plane graphs
- Generated grid fixtures
"""

import math

import pytest

from planar_stc import from_drawing, triangular_grid

# =============================================================================
# PYTEST HOOKS
# =============================================================================


def pytest_configure(config):
    """Configure pytest with custom markers."""
    config.addinivalue_line("markers", "unit: Unit tests (fast, no external calls)")
    config.addinivalue_line("markers", "slow: Slow running tests")
    config.addinivalue_line("markers", "property: Randomized property suites")
    config.addinivalue_line("markers", "cli: Command-line tests")


# =============================================================================
# SMALL GRAPHS
# =============================================================================


def polygon(n):
    """Cycle C_n drawn as a regular polygon."""
    coords = [
        (math.cos(2 * math.pi * i / n), math.sin(2 * math.pi * i / n)) for i in range(n)
    ]
    return from_drawing(coords, [(i, (i + 1) % n) for i in range(n)])


@pytest.fixture
def k3():
    """Triangle: one interior face, three outer edges."""
    return from_drawing([(0, 0), (2, 0), (1, 2)], [(0, 1), (1, 2), (2, 0)])


@pytest.fixture
def k4():
    """K4 drawn as a triangle around a center vertex."""
    return from_drawing(
        [(0, 0), (4, 0), (2, 4), (2, 1.5)],
        [(0, 1), (1, 2), (2, 0), (0, 3), (1, 3), (2, 3)],
    )


@pytest.fixture
def c8():
    return polygon(8)


@pytest.fixture
def path3():
    """A tree: the only face is the outer one."""
    return from_drawing([(0, 0), (1, 0), (2, 0)], [(0, 1), (1, 2)])


@pytest.fixture
def pendant_triangle():
    """Triangle with a pendant vertex; edge 3 is a bridge."""
    return from_drawing(
        [(0, 0), (2, 0), (1, 2), (-1, -1)],
        [(0, 1), (1, 2), (2, 0), (0, 3)],
    )


# =============================================================================
# GRID FIXTURES
# =============================================================================


@pytest.fixture
def t4():
    return triangular_grid(4)


@pytest.fixture
def t5():
    return triangular_grid(5)
