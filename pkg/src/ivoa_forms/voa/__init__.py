# -- Elements ----------------------------------------------------------------
from .element import VoaElement, VoaKey, add_charges, combine, half_norm, heisenberg_mode, negate
from .cocycle import Cocycle, make_cocycle, quadratic_sign, symmetric_mod2

# -- Bases -------------------------------------------------------------------
from .basis import GradedBasis, dual_form_basis, graded_basis, voa_basis

# -- Pairings ----------------------------------------------------------------
from .pairing import PairingForm, fock_pair, graded_gram, pair, pair_genfun

# -- Graded forms ------------------------------------------------------------
from .forms import (
    GradedForms,
    GradedZForm,
    GramBlock,
    dual_form,
    form_index,
    intersect_forms,
    quotient_invariants,
    restrict,
    schur_form,
    standard_form,
    sum_forms,
)

__all__ = [
    # Elements
    "VoaElement",
    "VoaKey",
    "add_charges",
    "combine",
    "half_norm",
    "heisenberg_mode",
    "negate",
    "Cocycle",
    "make_cocycle",
    "quadratic_sign",
    "symmetric_mod2",
    # Bases
    "GradedBasis",
    "dual_form_basis",
    "graded_basis",
    "voa_basis",
    # Pairings
    "PairingForm",
    "fock_pair",
    "graded_gram",
    "pair",
    "pair_genfun",
    # Forms
    "GradedForms",
    "GradedZForm",
    "GramBlock",
    "dual_form",
    "form_index",
    "intersect_forms",
    "quotient_invariants",
    "restrict",
    "schur_form",
    "standard_form",
    "sum_forms",
]
