"""The dual form ``U`` against the standard form ``R``.

For every degree the report carries the invariants of ``U_n / R_n``, whether
the dual-Schur basis pairs with the primal Schur basis to the identity
matrix, and whether ``U_n`` is the dual module of ``R_n``.  Under the
bilinear form the dual-Schur elements are taken with ``-beta_i`` and charge
``-alpha``.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import NamedTuple

from ..core.lattice import EvenLattice, discriminant_group
from ..core.types import AbelianInvariants
from ..errors import InvalidInputError
from ..fock.schur import schur_basis
from ..validation import ValidationResult, equals, is_true
from ..voa.basis import dual_form_basis, graded_basis
from ..voa.element import VoaElement, half_norm, negate
from ..voa.forms import dual_form, quotient_invariants, standard_form
from ..voa.pairing import PairingForm, pair

logger = logging.getLogger(__name__)


class DualityRecord(NamedTuple):
    degree: int
    invariants: AbelianInvariants
    schur_identity: bool
    dual_matches: bool


@dataclass
class DualityReport:
    lattice: str
    pairing: PairingForm
    records: list[DualityRecord] = field(default_factory=list)
    checks: ValidationResult = field(default_factory=ValidationResult)

    @property
    def passed(self) -> bool:
        return not self.checks.has_errors


def dual_schur_elements(lattice: EvenLattice, degree: int, pairing: PairingForm) -> list[VoaElement]:
    """The partners of :func:`dual_form_basis` (primal) under ``pairing``, in the same order."""
    if pairing is PairingForm.HERMITIAN:
        return dual_form_basis(lattice, degree, dual=True)
    vectors = [tuple(-x for x in row) for row in lattice.dual_gram]
    out = []
    for charge in graded_basis(lattice, degree).sectors:
        for poly in schur_basis(vectors, degree - half_norm(lattice, charge)):
            out.append(VoaElement.from_fock(lattice, poly, negate(charge)))
    return out


def schur_pairing_is_identity(lattice: EvenLattice, degree: int, pairing: PairingForm) -> bool:
    """Sector by sector; terms of different charge sectors pair to zero."""
    primal = dual_form_basis(lattice, degree)
    dual = dual_schur_elements(lattice, degree, pairing)
    for positions in graded_basis(lattice, degree).sectors.values():
        for i in positions:
            for j in positions:
                if pair(dual[i], primal[j], pairing) != int(i == j):
                    logger.debug("schur duality fails at (%d, %d) in degree %d", i, j, degree)
                    return False
    return True


def duality_check(
    lattice: EvenLattice, max_degree: int, pairing: PairingForm = PairingForm.HERMITIAN
) -> DualityReport:
    if max_degree < 0:
        raise InvalidInputError(f"Degree must be >= 0, got {max_degree}")
    report = DualityReport(lattice.label, pairing)
    for n in range(max_degree + 1):
        r, u = standard_form(lattice, n), dual_form(lattice, n)
        record = DualityRecord(
            degree=n,
            invariants=quotient_invariants(r, u),
            schur_identity=schur_pairing_is_identity(lattice, n, pairing),
            dual_matches=r.dual(pairing) == u,
        )
        report.records.append(record)
        key = f"degree{n}"
        report.checks.check(f"{key}.schur", is_true("dual Schur pairing is not the identity"), record.schur_identity)
        report.checks.check(f"{key}.dual", is_true("U_n is not the dual of R_n"), record.dual_matches)
        if n == 1:
            report.checks.check(
                f"{key}.discriminant", equals(discriminant_group(lattice), "U_1/R_1"), record.invariants
            )
        logger.debug("duality %s degree %d: U/R = %s", lattice, n, record.invariants)
    return report
