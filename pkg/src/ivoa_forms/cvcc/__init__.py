# -- Ising vectors -----------------------------------------------------------
from .ising import IsingType, IsingVector, cvcc_aa1, cvcc_ee8, ising_check, virasoro_bracket_defects

# -- Miyamoto involutions ----------------------------------------------------
from .miyamoto import (
    MiyamotoData,
    StabilizationRecord,
    automorphism_defects,
    e1_matrix,
    miyamoto,
    stabilization_check,
)

__all__ = [
    # Ising vectors
    "IsingType",
    "IsingVector",
    "cvcc_aa1",
    "cvcc_ee8",
    "ising_check",
    "virasoro_bracket_defects",
    # Miyamoto
    "MiyamotoData",
    "StabilizationRecord",
    "automorphism_defects",
    "e1_matrix",
    "miyamoto",
    "stabilization_check",
]
