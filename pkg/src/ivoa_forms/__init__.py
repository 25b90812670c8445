"""Exact integral forms of lattice vertex operator algebras."""

from importlib.metadata import PackageNotFoundError, version

# -- Errors and settings -----------------------------------------------------
from .errors import (
    ContainmentError,
    InvalidInputError,
    InvarianceError,
    IvoaError,
    PropertyViolation,
    StructuralError,
)
from .config import Settings, get_settings

# -- Core objects ------------------------------------------------------------
from .core import AbelianInvariants, Bound, EvenLattice, catalog
from .voa import GradedZForm, PairingForm, VoaElement, standard_form, voa_basis

try:
    __version__ = version("ivoa-forms")
except PackageNotFoundError:
    __version__ = "0.0.0"

__all__ = [
    "__version__",
    # Errors and settings
    "ContainmentError",
    "InvalidInputError",
    "InvarianceError",
    "IvoaError",
    "PropertyViolation",
    "StructuralError",
    "Settings",
    "get_settings",
    # Core objects
    "AbelianInvariants",
    "Bound",
    "EvenLattice",
    "catalog",
    "GradedZForm",
    "PairingForm",
    "VoaElement",
    "standard_form",
    "voa_basis",
]
