#!/usr/bin/env python3
"""
Planar STC Error Handling

Exception hierarchy for plane-graph construction, spanning tree checks,
center-tail systems and the exact solver, plus the shared error printer.
"""

from typing import TYPE_CHECKING, Any, Optional

from assistant_skills_lib.error_handler import BaseAPIError
from assistant_skills_lib.error_handler import ValidationError as BaseValidationError
from assistant_skills_lib.error_handler import print_error as base_print_error

if TYPE_CHECKING:
    from .exact_search import ExactResult


class StcError(BaseAPIError):
    """Base exception for all planar-stc errors."""

    pass


class ValidationError(BaseValidationError, StcError):
    """Raised for invalid input values or malformed files."""

    def __init__(
        self,
        message: str = "Invalid input.",
        field: Optional[str] = None,
        **kwargs: Any,
    ):
        self.field = field
        if field:
            message = f"Invalid value for '{field}': {message}"
        super().__init__(message, **kwargs)


class ParseError(ValidationError):
    """Raised when a graph, system or tree file cannot be parsed."""

    def __init__(
        self,
        message: str = "Could not parse input.",
        path: Optional[str] = None,
        line: Optional[int] = None,
        **kwargs: Any,
    ):
        self.path = path
        self.line = line
        if path and line:
            message = f"{path}:{line}: {message}"
        elif path:
            message = f"{path}: {message}"
        elif line:
            message = f"line {line}: {message}"
        super().__init__(message, **kwargs)


# Plane graph construction


class PlaneGraphError(ValidationError):
    """Raised when a rotation system does not describe a connected plane graph."""

    pass


class NotConnectedError(PlaneGraphError):
    """Raised when the underlying graph is disconnected."""

    def __init__(self, message: str = "Graph is not connected.", **kwargs: Any):
        super().__init__(message, **kwargs)


class InvalidRotationError(PlaneGraphError):
    """Raised for duplicate, missing or misplaced darts."""

    def __init__(self, message: str = "Invalid rotation system.", **kwargs: Any):
        super().__init__(message, **kwargs)


class NotPlanarEmbeddingError(PlaneGraphError):
    """Raised when traced faces violate Euler's formula."""

    def __init__(
        self,
        message: str = "Rotation system is not a planar embedding.",
        vertices: Optional[int] = None,
        edges: Optional[int] = None,
        faces: Optional[int] = None,
        **kwargs: Any,
    ):
        if vertices is not None and edges is not None and faces is not None:
            message = f"{message} V - E + F = {vertices} - {edges} + {faces} != 2"
        super().__init__(message, **kwargs)


# Spanning trees


class NotSpanningTreeError(ValidationError):
    """Raised when an edge set is not a spanning tree."""

    pass


class WrongCardinalityError(NotSpanningTreeError):
    """Raised when the edge count differs from V - 1."""

    def __init__(
        self,
        message: str = "Wrong number of tree edges.",
        expected: Optional[int] = None,
        actual: Optional[int] = None,
        **kwargs: Any,
    ):
        if expected is not None and actual is not None:
            message = f"{message} Expected {expected}, got {actual}."
        super().__init__(message, **kwargs)


class ContainsCycleError(NotSpanningTreeError):
    """Raised when the edge set closes a cycle."""

    def __init__(
        self,
        message: str = "Edge set contains a cycle.",
        edge: Optional[int] = None,
        **kwargs: Any,
    ):
        self.edge = edge
        if edge is not None:
            message = f"{message} Edge {edge} closes it."
        super().__init__(message, **kwargs)


class NotSpanningError(NotSpanningTreeError):
    """Raised when the edge set leaves vertices unreached."""

    def __init__(self, message: str = "Edge set does not span.", **kwargs: Any):
        super().__init__(message, **kwargs)


# Outer edges and center-tail systems


class NotOuterEdgeError(ValidationError):
    """Raised when an index table is requested for a non-outer edge."""

    def __init__(
        self,
        message: str = "Edge is not an outer edge.",
        edge: Optional[int] = None,
        **kwargs: Any,
    ):
        if edge is not None:
            message = f"Edge {edge} is not an outer edge."
        super().__init__(message, **kwargs)


class NoOuterEdgesError(ValidationError):
    """Raised when a graph has no outer edges (it is a tree)."""

    def __init__(self, message: str = "Graph has no outer edges.", **kwargs: Any):
        super().__init__(message, **kwargs)


class CenterTailError(ValidationError):
    """Base class for center-tail system violations."""

    pass


class CenterDisconnectedError(CenterTailError):
    """Raised when the center is empty or does not induce a connected subgraph."""

    def __init__(
        self, message: str = "Center is empty or disconnected.", **kwargs: Any
    ):
        super().__init__(message, **kwargs)


class TailNotPathError(CenterTailError):
    """Raised when a tail is not a simple path starting in the center."""

    def __init__(
        self,
        message: str = "Tail is not a simple path.",
        tail: Optional[int] = None,
        **kwargs: Any,
    ):
        self.tail = tail
        if tail is not None:
            message = f"Tail {tail}: {message}"
        super().__init__(message, **kwargs)


class TailNotReachingOuterError(CenterTailError):
    """Raised when a tail does not end at the outer face."""

    def __init__(
        self,
        message: str = "Tail does not end at the outer face.",
        tail: Optional[int] = None,
        **kwargs: Any,
    ):
        self.tail = tail
        if tail is not None:
            message = f"Tail {tail}: {message}"
        super().__init__(message, **kwargs)


class AssignmentIncompleteError(CenterTailError):
    """Raised when some outer edge has no opposite tail."""

    def __init__(
        self,
        message: str = "Opposite-tail assignment is incomplete.",
        missing: Optional[list[int]] = None,
        **kwargs: Any,
    ):
        self.missing = missing or []
        if missing:
            message = f"{message} Missing outer edges: {', '.join(map(str, missing))}"
        super().__init__(message, **kwargs)


class EmptySystemListError(ValidationError):
    """Raised when no center-tail systems are supplied."""

    def __init__(
        self, message: str = "At least one center-tail system is required.", **kwargs: Any
    ):
        super().__init__(message, **kwargs)


# Search and internal checks


class BudgetExceededError(StcError):
    """Raised when the exact search runs out of nodes or time.

    Carries the best result known at the moment the budget ran out, flagged
    as non-optimal.
    """

    def __init__(
        self,
        message: str = "Search budget exceeded.",
        result: Optional["ExactResult"] = None,
        **kwargs: Any,
    ):
        self.result = result
        if result is not None:
            message = (
                f"{message} Best known: {result.s_value} "
                f"(lower bound {result.lower_bound})"
            )
        super().__init__(message, **kwargs)


class InvariantError(StcError):
    """Raised when two independent computations disagree."""

    pass


def print_error(message: str, include_traceback: bool = False) -> None:
    """
    Print error message to stderr with formatting.
    """
    base_print_error(message, show_traceback=include_traceback)
