"""Exception types. Each maps to its own CLI exit code."""


class GraphPolyError(Exception):
    exit_code = 1


class Graph6Error(GraphPolyError, ValueError):
    """Malformed graph6 input."""

    exit_code = 3


class PropertyParseError(GraphPolyError, ValueError):
    """Unknown or malformed property DSL string."""

    exit_code = 4


class CeilingError(GraphPolyError, ValueError):
    """Input exceeds a documented size ceiling."""

    exit_code = 5


class HypothesisError(GraphPolyError, ValueError):
    """Experiment refused because its property violates a theorem hypothesis."""

    exit_code = 6


class PolynomialParseError(GraphPolyError, ValueError):
    exit_code = 7
