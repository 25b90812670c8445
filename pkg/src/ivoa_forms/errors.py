"""Exception hierarchy shared by the library and the command line.

The CLI maps the two families onto exit codes: input problems exit with 1,
failed library properties exit with 2.
"""

from __future__ import annotations

from typing import Any


class IvoaError(Exception):
    """Base class for every error raised by :mod:`ivoa_forms`."""

    exit_code: int = 1


# ---------------------------------------------------------------------------
# Input errors (exit 1)
# ---------------------------------------------------------------------------


class InvalidInputError(IvoaError, ValueError):
    """Malformed or out-of-range input (lattice, bound, norm, file)."""


class ContainmentError(IvoaError):
    """A module expected to lie inside another one does not."""

    def __init__(self, message: str, witness: Any | None = None) -> None:
        super().__init__(message)
        self.witness = witness


class InvarianceError(IvoaError):
    """A group element does not leave a graded form invariant."""

    def __init__(
        self, message: str, *, element: int, degree: int, witness: Any | None = None
    ) -> None:
        super().__init__(message)
        self.element = element
        self.degree = degree
        self.witness = witness


# ---------------------------------------------------------------------------
# Property failures (exit 2)
# ---------------------------------------------------------------------------


class StructuralError(IvoaError):
    """The eigen-structure of an Ising vector falls outside {0, 1/2, 1/16} + Z."""

    exit_code = 2


class PropertyViolation(IvoaError):
    """A library invariant (integrality, duality, Ising equations) failed."""

    exit_code = 2
