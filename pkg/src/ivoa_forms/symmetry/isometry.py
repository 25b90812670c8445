"""Lifts of lattice isometries to automorphisms of ``V_L``.

A lift is fixed by an isometry ``sigma`` (integer matrix acting on
coordinate columns, ``sigma^t G sigma = G``) and a sign ``eta_i`` for every
basis vector.  On exponentials

    e^a  ->  eta(a) e^(sigma a),     eta(a) = prod_i eta_i^(a_i) * (-1)^Q(a)

where ``Q`` is the quadratic form whose polarization is
``C + sigma^t C sigma`` for the cocycle exponents ``C``; this is exactly
what keeps ``e^a e^b = eps(a, b) e^(a+b)`` intact.  Oscillators map by
``h(-n) -> (sigma h)(-n)``.

Example::

    a2 = catalog("A2")
    rotation = lift_isometry(a2, [[0, -1], [1, -1]])
    rotation(VoaElement.exponential(a2, (1, 0)))      # 1*e^[0, 1]
    len(generate_group([rotation]))                    # 3
"""

from __future__ import annotations

import logging
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from ..core.lattice import EvenLattice
from ..core.matrices import identity, matmul, transpose
from ..core.types import IntMatrix, LatticeVector
from ..errors import InvalidInputError
from ..fock.polynomial import FockMonomial, FockPolynomial
from ..voa.basis import graded_basis
from ..voa.cocycle import make_cocycle, quadratic_sign
from ..voa.element import VoaElement, VoaKey
from ..voa.forms import GradedZForm

logger = logging.getLogger(__name__)

type Signs = tuple[int, ...]
type SigmaMatrix = tuple[tuple[int, ...], ...]

# ---------------------------------------------------------------------------
# LiftedIsometry
# ---------------------------------------------------------------------------


@dataclass(frozen=True, slots=True)
class LiftedIsometry:
    lattice: EvenLattice
    sigma: SigmaMatrix
    signs: Signs
    _polarization: SigmaMatrix = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        d = self.lattice.rank
        if len(self.sigma) != d or any(len(row) != d for row in self.sigma):
            raise InvalidInputError(f"Isometry must be a {d}x{d} matrix")
        if len(self.signs) != d or any(s not in (1, -1) for s in self.signs):
            raise InvalidInputError(f"Expected {d} signs from {{+1, -1}}, got {self.signs}")
        gram = [list(row) for row in self.lattice.gram]
        if matmul(matmul(transpose(self.sigma), gram), self.sigma) != gram:
            raise InvalidInputError(f"Matrix {self.sigma} is not an isometry of {self.lattice}")
        c = make_cocycle(self.lattice).exponents
        twisted = matmul(matmul(transpose(self.sigma), c), self.sigma)
        polarization = tuple(
            tuple((c[i][j] + twisted[i][j]) % 2 for j in range(d)) for i in range(d)
        )
        object.__setattr__(self, "_polarization", polarization)

    @property
    def rank(self) -> int:
        return self.lattice.rank

    @property
    def is_identity(self) -> bool:
        return self.sigma == tuple(map(tuple, identity(self.rank))) and all(s == 1 for s in self.signs)

    def image(self, alpha: Sequence[int]) -> LatticeVector:
        """``sigma alpha`` in coordinates."""
        return tuple(sum(row[i] * a for i, a in enumerate(alpha)) for row in self.sigma)

    def eta(self, alpha: Sequence[int]) -> int:
        """Sign with ``g(e^alpha) = eta(alpha) e^(sigma alpha)``."""
        sign = quadratic_sign(self._polarization, alpha)
        for s, a in zip(self.signs, alpha):
            if s < 0 and a % 2:
                sign = -sign
        return sign

    def apply(self, u: VoaElement) -> VoaElement:
        if u.lattice != self.lattice:
            raise InvalidInputError(f"Isometry of {self.lattice} applied to an element of {u.lattice}")
        out: dict[VoaKey, Fraction] = {}
        for (mono, charge), coef in u.terms.items():
            target = self.image(charge)
            sign = self.eta(charge)
            for image, value in _monomial_image(self, mono).items():
                key = (image, target)
                out[key] = out.get(key, 0) + sign * coef * value
        return VoaElement(self.lattice, out)

    __call__ = apply

    def compose(self, other: LiftedIsometry) -> LiftedIsometry:
        """``self . other`` (``other`` acts first)."""
        if other.lattice != self.lattice:
            raise InvalidInputError("Cannot compose isometries of different lattices")
        sigma = matmul(self.sigma, other.sigma)
        signs = tuple(
            other.signs[i] * self.eta(other.image(self.lattice.basis_vector(i)))
            for i in range(self.rank)
        )
        return LiftedIsometry(self.lattice, _freeze(sigma), signs)

    def __matmul__(self, other: LiftedIsometry) -> LiftedIsometry:
        return self.compose(other)

    def inverse(self) -> LiftedIsometry:
        gram = self.lattice.gram
        # sigma^-1 = G^-1 sigma^t G, integral for an isometry
        inverse = matmul(matmul(self.lattice.dual_gram, transpose(self.sigma)), [list(r) for r in gram])
        sigma = _freeze(inverse)
        signs = tuple(
            self.eta(tuple(row[i] for row in sigma)) for i in range(self.rank)
        )
        return LiftedIsometry(self.lattice, sigma, signs)

    def matrix(self, degree: int) -> list[dict[int, Fraction]]:
        """Sparse rows: row ``i`` holds the coordinates of ``g(b_i)``."""
        basis = graded_basis(self.lattice, degree)
        return [basis.coordinates(self.apply(basis.element({i: 1}))) for i in range(basis.dimension)]

    def __repr__(self) -> str:
        return f"LiftedIsometry({self.lattice}, sigma={[list(r) for r in self.sigma]}, signs={list(self.signs)})"


def _freeze(matrix: Iterable[Iterable[Fraction | int]]) -> SigmaMatrix:
    rows = []
    for row in matrix:
        values = [Fraction(x) for x in row]
        if any(x.denominator != 1 for x in values):
            raise InvalidInputError("Isometry matrix is not integral")
        rows.append(tuple(int(x) for x in values))
    return tuple(rows)


@lru_cache(maxsize=1 << 16)
def _monomial_image(g: LiftedIsometry, mono: FockMonomial) -> FockPolynomial:
    result = FockPolynomial.one()
    for i, mode in mono:
        column = [row[i] for row in g.sigma]
        result = result * FockPolynomial.oscillator(column, mode)
    return result


# ---------------------------------------------------------------------------
# Constructors
# ---------------------------------------------------------------------------


def lift_isometry(
    lattice: EvenLattice, sigma: Sequence[Sequence[int]], signs: Sequence[int] | None = None
) -> LiftedIsometry:
    """Lift ``sigma`` with signs ``eta_i`` (all ``+1`` by default)."""
    signs = tuple(signs) if signs is not None else (1,) * lattice.rank
    return LiftedIsometry(lattice, _freeze(sigma), signs)


def theta(lattice: EvenLattice) -> LiftedIsometry:
    """The involution ``e^a <-> e^-a``, ``h(-n) -> -h(-n)``."""
    d = lattice.rank
    return lift_isometry(lattice, [[-int(i == j) for j in range(d)] for i in range(d)])


def identity_lift(lattice: EvenLattice) -> LiftedIsometry:
    return lift_isometry(lattice, identity(lattice.rank))


def generate_group(generators: Sequence[LiftedIsometry], *, limit: int = 4096) -> list[LiftedIsometry]:
    """All products of ``generators``, identity first, in discovery order."""
    if not generators:
        raise InvalidInputError("generate_group needs at least one generator")
    group = [identity_lift(generators[0].lattice)]
    seen = set(group)
    frontier = list(group)
    while frontier:
        found = []
        for g in frontier:
            for s in generators:
                h = s.compose(g)
                if h not in seen:
                    seen.add(h)
                    found.append(h)
                    if len(seen) > limit:
                        raise InvalidInputError(f"Generated group exceeds {limit} elements")
        group.extend(found)
        frontier = found
    logger.debug("generated group of order %d from %d generators", len(group), len(generators))
    return group


# ---------------------------------------------------------------------------
# Action on forms
# ---------------------------------------------------------------------------


def transform_form(g: LiftedIsometry, form: GradedZForm) -> GradedZForm:
    """``g R`` for a graded form ``R``."""
    images = [g.apply(e) for e in form.elements()]
    return GradedZForm.from_elements(form.lattice, form.degree, images)


def representation_matrix(g: LiftedIsometry, form: GradedZForm) -> list[list[Fraction]] | None:
    """Matrix ``T`` with ``g(r_i) = sum_j T_ij r_j`` on the generators of
    ``form``; ``None`` when ``g`` leaves its rational span."""
    rows = []
    for e in form.elements():
        coords = form.coordinates(g.apply(e))
        if coords is None:
            return None
        rows.append([coords.get(j, Fraction(0)) for j in range(form.rank)])
    return rows


def is_integral_matrix(matrix: Sequence[Sequence[Fraction | int]]) -> bool:
    return all(Fraction(x).denominator == 1 for row in matrix for x in row)


def as_int_matrix(matrix: Sequence[Sequence[Fraction | int]]) -> IntMatrix:
    return [[int(x) for x in row] for row in matrix]
