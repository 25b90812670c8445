# -- Modes -------------------------------------------------------------------
from .modes import ModeRequest, vertex_mode

# -- Virasoro ----------------------------------------------------------------
from .virasoro import VirasoroConfig, is_quasi_primary, omega, omega_multiplier, virasoro_config, virasoro_mode

# -- Closure -----------------------------------------------------------------
from .closure import generated_form, module_product_span

# -- Identities and the invariant form --------------------------------------
from .adjoint import (
    IdentityCheck,
    InvarianceReport,
    TraceFormReport,
    generating_identity_check,
    invariance_check,
    pair_adjoint_check,
    skew_symmetry_check,
    trace_form,
)

__all__ = [
    # Modes
    "ModeRequest",
    "vertex_mode",
    # Virasoro
    "VirasoroConfig",
    "is_quasi_primary",
    "omega",
    "omega_multiplier",
    "virasoro_config",
    "virasoro_mode",
    # Closure
    "generated_form",
    "module_product_span",
    # Identities
    "IdentityCheck",
    "InvarianceReport",
    "TraceFormReport",
    "generating_identity_check",
    "invariance_check",
    "pair_adjoint_check",
    "skew_symmetry_check",
    "trace_form",
]
