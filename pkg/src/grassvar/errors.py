"""Shared exception types.

ResourceLimitError and its subclasses signal that a computation was cut off
by an explicit budget or size cap, as opposed to an invalid input (ValueError).
The CLI maps ResourceLimitError to exit code 2 and input errors to exit code 1.
"""

from __future__ import annotations


class ResourceLimitError(RuntimeError):
    """A configured budget or size cap was exceeded."""


class GroebnerBudgetError(ResourceLimitError):
    """Buchberger pair-reduction budget exceeded."""


class MinorLimitError(ResourceLimitError):
    """Determinantal-ideal size cap exceeded (matrix too large or minors too big)."""


class SubspaceLimitError(ResourceLimitError):
    """Subspace enumeration cap exceeded (too many rational subspaces)."""


class SyzygyLimitError(ResourceLimitError):
    """Syzygy dimension cap exceeded while building a resolution."""
