"""Exact generating polynomials of graph properties."""

__version__ = "0.1.0"

from ._backend import BACKEND  # noqa: E402
