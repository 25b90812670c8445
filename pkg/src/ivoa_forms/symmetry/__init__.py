# -- Lifted isometries -------------------------------------------------------
from .isometry import (
    LiftedIsometry,
    generate_group,
    identity_lift,
    lift_isometry,
    representation_matrix,
    theta,
    transform_form,
)

# -- Surgery on graded forms -------------------------------------------------
from .surgery import (
    OrbitRecord,
    PlusGenerationRecord,
    embed_tensor,
    fixed_form,
    forms_through,
    invariant_matrices,
    orbit_intersection,
    orbit_sum,
    plus_generation_check,
    tensor_form,
    transform_forms,
)

# -- Eigenmodules and extensions ---------------------------------------------
from .eigen import CharacterSplit, FormSplit, eigen_split, form_eigen_split, split_coordinates
from .extension import Containments, ExtensionForms, extension_forms

__all__ = [
    # Isometries
    "LiftedIsometry",
    "generate_group",
    "identity_lift",
    "lift_isometry",
    "representation_matrix",
    "theta",
    "transform_form",
    # Surgery
    "OrbitRecord",
    "PlusGenerationRecord",
    "embed_tensor",
    "fixed_form",
    "forms_through",
    "invariant_matrices",
    "orbit_intersection",
    "orbit_sum",
    "plus_generation_check",
    "tensor_form",
    "transform_forms",
    # Eigen
    "CharacterSplit",
    "FormSplit",
    "eigen_split",
    "form_eigen_split",
    "split_coordinates",
    # Extensions
    "Containments",
    "ExtensionForms",
    "extension_forms",
]
