"""Graded monomial bases of ``V_L`` and the integral bases built on them.

Every degree ``n`` piece is indexed by keys ``(M, alpha)``: charges
``alpha`` with ``(alpha, alpha) <= 2n`` in ``(norm, coordinates)`` order,
then the Fock monomials of degree ``n - (alpha, alpha)/2`` in colored
partition order.  All Gram matrices and Hermite forms use this order.

Example::

    basis = graded_basis(catalog("E8"), 1)
    basis.dimension                          # 248
    len(voa_basis(catalog("E8"), 2))         # 4124
"""

from __future__ import annotations

import logging
from collections.abc import Mapping, Sequence
from fractions import Fraction
from functools import lru_cache

from ..core.enumeration import lattice_vectors
from ..core.lattice import EvenLattice
from ..core.matrices import rational_inverse
from ..core.types import LatticeVector, RatMatrix
from ..errors import InvalidInputError
from ..fock.partitions import colored_partitions
from ..fock.polynomial import Coefficient, FockMonomial
from ..fock.schur import m1z_basis, schur_basis
from .element import VoaElement, VoaKey, half_norm

logger = logging.getLogger(__name__)

# ---------------------------------------------------------------------------
# GradedBasis
# ---------------------------------------------------------------------------


class GradedBasis:
    """Monomial basis of ``(V_L)_degree`` with coordinate lookup."""

    __slots__ = ("lattice", "degree", "keys", "index", "sectors")

    def __init__(self, lattice: EvenLattice, degree: int) -> None:
        if degree < 0:
            raise InvalidInputError(f"Degree must be >= 0, got {degree}")
        self.lattice = lattice
        self.degree = degree
        keys: list[VoaKey] = []
        sectors: dict[LatticeVector, range] = {}
        for charge in lattice_vectors(lattice, 2 * degree):
            start = len(keys)
            rest = degree - half_norm(lattice, charge)
            for shape in colored_partitions(lattice.rank, rest):
                keys.append((FockMonomial._trusted(shape), charge))
            sectors[charge] = range(start, len(keys))
        self.keys: tuple[VoaKey, ...] = tuple(keys)
        self.index: dict[VoaKey, int] = {key: i for i, key in enumerate(keys)}
        self.sectors = sectors
        logger.debug(
            "graded basis %s degree %d: %d charges, dimension %d",
            lattice, degree, len(sectors), len(keys),
        )

    @property
    def dimension(self) -> int:
        return len(self.keys)

    @property
    def charges(self) -> list[LatticeVector]:
        return list(self.sectors)

    def coordinates(self, v: VoaElement) -> dict[int, Fraction]:
        """Sparse coordinates of ``v`` in this basis."""
        out: dict[int, Fraction] = {}
        for key, coef in v.terms.items():
            position = self.index.get(key)
            if position is None:
                raise InvalidInputError(f"Term {key} is not of weight {self.degree}")
            out[position] = coef
        return out

    def dense(self, v: VoaElement) -> list[Fraction]:
        row = [Fraction(0)] * self.dimension
        for position, coef in self.coordinates(v).items():
            row[position] = coef
        return row

    def element(self, coords: Mapping[int, Coefficient] | Sequence[Coefficient]) -> VoaElement:
        items = coords.items() if isinstance(coords, Mapping) else enumerate(coords)
        return VoaElement(self.lattice, {self.keys[c]: v for c, v in items if v})

    def label(self, position: int) -> str:
        mono, charge = self.keys[position]
        parts = [str(mono)] if mono else []
        if any(charge):
            parts.append(f"e^{list(charge)}")
        return "*".join(parts) or "vac"

    def labels(self) -> list[str]:
        return [self.label(i) for i in range(self.dimension)]

    def integral_coordinates(self, v: VoaElement) -> dict[int, Fraction]:
        """Coordinates of ``v`` in :func:`voa_basis` order (integers iff ``v`` lies in the
        standard integral form)."""
        coords = self.coordinates(v)
        out: dict[int, Fraction] = {}
        for charge, positions in self.sectors.items():
            values = [coords.get(p, Fraction(0)) for p in positions]
            if not any(values):
                continue
            inverse = _sector_inverse(self.lattice, self.degree, charge)
            for j, column in enumerate(zip(*inverse)):
                x = sum((a * b for a, b in zip(values, column) if a), Fraction(0))
                if x:
                    out[positions.start + j] = x
        return out


@lru_cache(maxsize=128)
def graded_basis(lattice: EvenLattice, degree: int) -> GradedBasis:
    return GradedBasis(lattice, degree)


# ---------------------------------------------------------------------------
# Integral bases
# ---------------------------------------------------------------------------


@lru_cache(maxsize=1024)
def _sector_inverse(lattice: EvenLattice, degree: int, charge: LatticeVector) -> RatMatrix:
    basis = graded_basis(lattice, degree)
    positions = basis.sectors[charge]
    rows = []
    for poly in m1z_basis(lattice, degree - half_norm(lattice, charge)):
        coords = basis.coordinates(VoaElement.from_fock(lattice, poly, charge))
        rows.append([coords.get(p, Fraction(0)) for p in positions])
    return rational_inverse(rows)


def voa_basis(lattice: EvenLattice, degree: int) -> list[VoaElement]:
    """``s_{g_i1,n1} ... s_{g_ik,nk} e^alpha`` of weight ``degree``."""
    basis = graded_basis(lattice, degree)
    out = []
    for charge in basis.sectors:
        for poly in m1z_basis(lattice, degree - half_norm(lattice, charge)):
            out.append(VoaElement.from_fock(lattice, poly, charge))
    return out


def dual_form_basis(lattice: EvenLattice, degree: int, *, dual: bool = False) -> list[VoaElement]:
    """Schur elements ``s_l1(v_1) ... s_ld(v_d) e^alpha`` of weight ``degree``.

    ``v_i = g_i`` for the primal Schur basis; ``v_i = beta_i`` (rows of the
    inverse Gram matrix) when ``dual`` is set.
    """
    d = lattice.rank
    if dual:
        vectors = [tuple(row) for row in lattice.dual_gram]
    else:
        vectors = [tuple(int(i == j) for j in range(d)) for i in range(d)]
    basis = graded_basis(lattice, degree)
    out = []
    for charge in basis.sectors:
        for poly in schur_basis(vectors, degree - half_norm(lattice, charge)):
            out.append(VoaElement.from_fock(lattice, poly, charge))
    return out
