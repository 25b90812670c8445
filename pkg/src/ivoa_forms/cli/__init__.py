"""The ``ivoa`` command line built with typer."""

# -- Application -------------------------------------------------------------
from .commands import app

# -- Input files -------------------------------------------------------------
from .parsing import read_isometry_file, read_lattice_file, resolve_lattice

# -- Output ------------------------------------------------------------------
from .output import console, finish, handled, setup_logging

__all__ = [
    # Application
    "app",
    # Input files
    "read_isometry_file",
    "read_lattice_file",
    "resolve_lattice",
    # Output
    "console",
    "finish",
    "handled",
    "setup_logging",
]
