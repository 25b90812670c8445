# -- Value types -----------------------------------------------------------
from .types import AbelianInvariants, Bound, IntMatrix, LatticeVector, RatMatrix

# -- Matrices and modules --------------------------------------------------
from .matrices import (
    cokernel,
    coupled_blocks,
    determinant,
    hnf,
    integer_kernel,
    rational_inverse,
    rational_rank,
    snf,
)
from .modules import IntegerModule, index_of, module_index, module_quotient

# -- Lattices --------------------------------------------------------------
from .lattice import (
    EvenLattice,
    catalog,
    discriminant_group,
    lattice_dual,
    orthogonal_sum,
    rank_one,
    type_a,
    type_d,
)
from .enumeration import lattice_vectors, lll_gram, min_norm, short_vectors, vectors_of_norm

__all__ = [
    # Types
    "AbelianInvariants",
    "Bound",
    "IntMatrix",
    "LatticeVector",
    "RatMatrix",
    # Matrices
    "cokernel",
    "coupled_blocks",
    "determinant",
    "hnf",
    "integer_kernel",
    "rational_inverse",
    "rational_rank",
    "snf",
    # Modules
    "IntegerModule",
    "index_of",
    "module_index",
    "module_quotient",
    # Lattices
    "EvenLattice",
    "catalog",
    "discriminant_group",
    "lattice_dual",
    "orthogonal_sum",
    "rank_one",
    "type_a",
    "type_d",
    # Enumeration
    "lattice_vectors",
    "lll_gram",
    "min_norm",
    "short_vectors",
    "vectors_of_norm",
]
