"""The conformal vector of ``V_L`` and its modes.

Example::

    a1 = catalog("A1")
    config = virasoro_config(a1)
    config.central_charge, config.multiplier        # (Fraction(1, 1), 4)
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cache

from ..core.lattice import EvenLattice
from ..core.matrices import common_denominator
from ..errors import StructuralError
from ..fock.polynomial import FockMonomial, FockPolynomial
from ..fock.schur import m1z_basis
from ..voa.element import VoaElement
from ..voa.forms import GradedZForm
from .modes import vertex_mode


@cache
def omega(lattice: EvenLattice) -> VoaElement:
    """``1/2 sum_ij (G^-1)_ij g_i(-1) g_j(-1) vac``."""
    inverse = lattice.dual_gram
    d = lattice.rank
    terms: dict[FockMonomial, Fraction] = {}
    for i in range(d):
        for j in range(d):
            if inverse[i][j]:
                mono = FockMonomial(((i, 1), (j, 1)))
                terms[mono] = terms.get(mono, 0) + Fraction(inverse[i][j]) / 2
    return VoaElement.from_fock(lattice, FockPolynomial(terms))


def virasoro_mode(n: int, v: VoaElement) -> VoaElement:
    """``L(n) v = omega_{n+1} v``."""
    return vertex_mode(omega(v.lattice), n + 1, v)


def is_quasi_primary(v: VoaElement) -> bool:
    return not virasoro_mode(1, v)


def omega_multiplier(lattice: EvenLattice) -> int:
    """Least ``s > 0`` with ``s * omega`` in the integral form of degree 2."""
    charge_zero = [VoaElement.from_fock(lattice, p) for p in m1z_basis(lattice, 2)]
    form = GradedZForm.from_elements(lattice, 2, charge_zero)
    coords = form.coordinates(omega(lattice))
    if coords is None:
        raise StructuralError("omega is outside the rational span of the degree 2 Heisenberg form")
    return common_denominator(coords.values())


@dataclass(frozen=True, slots=True)
class VirasoroConfig:
    lattice: EvenLattice
    omega: VoaElement
    central_charge: Fraction
    multiplier: int


@cache
def virasoro_config(lattice: EvenLattice) -> VirasoroConfig:
    return VirasoroConfig(
        lattice, omega(lattice), Fraction(lattice.rank), omega_multiplier(lattice)
    )
