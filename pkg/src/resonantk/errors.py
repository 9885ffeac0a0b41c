"""Exception types shared across the package."""

from __future__ import annotations


class GraphError(ValueError):
    """Malformed input or a violated structural invariant.

    The message always names the invariant that failed (non-cubic vertex,
    asymmetric adjacency, Euler formula, overlapping faces, ...).
    """


class NotFullereneError(GraphError):
    """A valid plane cubic graph that is not a fullerene graph."""


class GuardExceeded(RuntimeError):
    """A size guard or enumeration cap was exceeded before completion."""
