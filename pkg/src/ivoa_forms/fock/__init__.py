# -- Partitions --------------------------------------------------------------
from .partitions import Partition, colored_partitions, partition_tuples, partitions

# -- Creation algebra --------------------------------------------------------
from .polynomial import (
    VACUUM_MONOMIAL,
    FockMonomial,
    FockPolynomial,
    contract,
    contract_monomial,
    fock_mul,
    inner_with_basis,
)

# -- E^- coefficients and Schur elements -------------------------------------
from .schur import e_minus_series, m1z_basis, s_coefficient, schur_basis, schur_element

__all__ = [
    # Partitions
    "Partition",
    "colored_partitions",
    "partition_tuples",
    "partitions",
    # Creation algebra
    "VACUUM_MONOMIAL",
    "FockMonomial",
    "FockPolynomial",
    "contract",
    "contract_monomial",
    "fock_mul",
    "inner_with_basis",
    # Schur
    "e_minus_series",
    "m1z_basis",
    "s_coefficient",
    "schur_basis",
    "schur_element",
]
