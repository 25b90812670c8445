"""Conformal vectors of central charge 1/2 and their Ising checks.

Two families are built:

* ``AA1``: ``1/16 a(-1)^2 +- 1/4 (e^a + e^-a)`` for ``(a, a) = 4``;
* ``EE8``: ``1/32 sum_ij (G_E^-1)_ij b_i(-1) b_j(-1)
  + 1/32 sum_{a in E(4)/+-} phi(a) f(a) (e^a + e^-a)`` for a sublattice
  ``E = span(b_i)`` isometric to ``sqrt2 E8``.  ``f`` untwists the cocycle
  of ``L`` on ``E``, so ``e^a e^b = e^(a+b)`` there; both coefficients are
  pinned by ``e_3 e = 1/4 vac``.

Example::

    lattice = catalog("RANK1(4)")
    e = cvcc_aa1(lattice, (1,))
    ising_check(e).has_errors      # False
"""

from __future__ import annotations

import logging
from collections.abc import Sequence
from dataclasses import dataclass
from enum import StrEnum, auto
from fractions import Fraction

from ..core.enumeration import min_norm, vectors_of_norm
from ..core.lattice import E8_CARTAN, EvenLattice
from ..core.matrices import determinant, matmul, rational_inverse, transpose
from ..core.types import Bound, LatticeVector
from ..errors import InvalidInputError
from ..fock.polynomial import FockPolynomial
from ..validation import ValidationResult, equals, is_zero
from ..voa.basis import graded_basis
from ..voa.cocycle import make_cocycle, quadratic_sign
from ..voa.element import VoaElement, combine
from ..vertex.modes import vertex_mode

logger = logging.getLogger(__name__)

# ---------------------------------------------------------------------------
# Ising vectors
# ---------------------------------------------------------------------------


class IsingType(StrEnum):
    AA1 = auto()
    EE8 = auto()


@dataclass(frozen=True, slots=True)
class IsingVector:
    element: VoaElement
    kind: IsingType
    provenance: tuple

    @property
    def lattice(self) -> EvenLattice:
        return self.element.lattice

    def mode(self, k: int, v: VoaElement) -> VoaElement:
        """``e_k v``."""
        return vertex_mode(self.element, k, v)


def _pair(lattice: EvenLattice, alpha: LatticeVector, coef: Fraction) -> VoaElement:
    minus = tuple(-x for x in alpha)
    return VoaElement.exponential(lattice, alpha, coef) + VoaElement.exponential(lattice, minus, coef)


def cvcc_aa1(lattice: EvenLattice, alpha: Sequence[int], sign: int = 1) -> IsingVector:
    alpha = tuple(int(x) for x in alpha)
    if len(alpha) != lattice.rank:
        raise InvalidInputError(f"Vector {alpha} does not match rank {lattice.rank}")
    if lattice.norm(alpha) != 4:
        raise InvalidInputError(f"AA1 vectors need a norm 4 vector, {alpha} has norm {lattice.norm(alpha)}")
    if sign not in (1, -1):
        raise InvalidInputError(f"Sign must be +1 or -1, got {sign}")
    square = FockPolynomial.oscillator(alpha, 1) * FockPolynomial.oscillator(alpha, 1)
    element = VoaElement.from_fock(lattice, square.scaled(Fraction(1, 16)))
    element = element + _pair(lattice, alpha, Fraction(sign, 4))
    return IsingVector(element, IsingType.AA1, (alpha, sign))


def _check_ee8(gram: list[list[int]]) -> None:
    if len(gram) != 8:
        raise InvalidInputError(f"EE8 embeddings need 8 generators, got {len(gram)}")
    det = determinant(gram)
    expected = 2**8 * determinant(E8_CARTAN)
    if det != expected:
        raise InvalidInputError(f"Embedding has determinant {det}, expected {expected} for sqrt2 E8")
    shortest, _ = min_norm(gram, 2)
    if shortest is not Bound.NONE_BELOW_BOUND:
        raise InvalidInputError(f"Embedding has vectors of norm {shortest} < 4")


def cvcc_ee8(
    lattice: EvenLattice, embedding: Sequence[Sequence[int]], phi: Sequence[int] | None = None
) -> IsingVector:
    """EE8-type vector for ``E`` spanned by the rows of ``embedding`` and the
    character ``phi`` given by its signs on those rows."""
    basis = [tuple(int(x) for x in row) for row in embedding]
    if any(len(row) != lattice.rank for row in basis):
        raise InvalidInputError(f"Embedding rows must have length {lattice.rank}")
    gram = matmul(matmul(basis, [list(r) for r in lattice.gram]), transpose(basis))
    _check_ee8(gram)
    phi = tuple(phi) if phi is not None else (1,) * 8
    if len(phi) != 8 or any(s not in (1, -1) for s in phi):
        raise InvalidInputError(f"phi needs 8 signs from {{+1, -1}}, got {phi}")

    sub = EvenLattice.from_rows(gram, "E")
    inverse = rational_inverse(gram)
    heisenberg = FockPolynomial()
    for i in range(8):
        for j in range(8):
            if inverse[i][j]:
                term = FockPolynomial.oscillator(basis[i], 1) * FockPolynomial.oscillator(basis[j], 1)
                heisenberg = heisenberg + term.scaled(inverse[i][j] / 32)

    c = make_cocycle(lattice).exponents
    restricted = [[x % 2 for x in row] for row in matmul(matmul(basis, c), transpose(basis))]
    parts = [(1, VoaElement.from_fock(lattice, heisenberg))]
    for coords in vectors_of_norm(sub, 4):
        if coords <= tuple(-x for x in coords):
            continue
        sign = quadratic_sign(restricted, coords)
        for s, a in zip(phi, coords):
            if s < 0 and a % 2:
                sign = -sign
        alpha = tuple(sum(a * row[k] for a, row in zip(coords, basis)) for k in range(lattice.rank))
        parts.append((1, _pair(lattice, alpha, Fraction(sign, 32))))
    return IsingVector(combine(lattice, parts), IsingType.EE8, (tuple(basis), phi))


# ---------------------------------------------------------------------------
# Checks
# ---------------------------------------------------------------------------


def _test_vectors(lattice: EvenLattice, max_degree: int) -> list[VoaElement]:
    vectors = []
    for n in range(max_degree + 1):
        basis = graded_basis(lattice, n)
        vectors.extend(basis.element({i: 1}) for i in range(basis.dimension))
    return vectors


def virasoro_bracket_defects(
    e: IsingVector, max_degree: int, modes: Sequence[int] = (-2, -1, 0, 1, 2)
) -> list[tuple[int, int, VoaElement]]:
    """``(m, n, v)`` where ``[L(m), L(n)] v`` misses the central charge 1/2 value."""
    c = Fraction(1, 2)

    def L(n: int, v: VoaElement) -> VoaElement:
        return e.mode(n + 1, v)

    defects = []
    for v in _test_vectors(e.lattice, max_degree):
        for m in modes:
            for n in modes:
                if n >= m:
                    continue
                lhs = L(m, L(n, v)) - L(n, L(m, v))
                rhs = L(m + n, v).scaled(m - n)
                if m + n == 0:
                    rhs = rhs + v.scaled(c * (m**3 - m) / 12)
                if lhs != rhs:
                    defects.append((m, n, v))
    return defects


def ising_check(e: IsingVector, *, bracket_degree: int = 2) -> ValidationResult:
    """The mode equations ``e_1 e = 2e``, ``e_2 e = 0``, ``e_3 e = 1/4 vac``,
    ``e_k e = 0`` (k >= 4), and the Virasoro bracket with ``c = 1/2`` on
    every graded piece up to ``bracket_degree``."""
    result = ValidationResult()
    x = e.element
    vac = VoaElement.vacuum(e.lattice)
    result.check("e1e", equals(x.scaled(2), "e_1 e"), e.mode(1, x))
    result.check("e2e", is_zero, e.mode(2, x))
    result.check("e3e", equals(vac.scaled(Fraction(1, 4)), "e_3 e"), e.mode(3, x))
    for k in (4, 5):
        result.check(f"e{k}e", is_zero, e.mode(k, x))
    if bracket_degree >= 0:
        result.check("virasoro", is_zero, virasoro_bracket_defects(e, bracket_degree))
    logger.debug("ising_check %s: %d issues, errors=%s", e.kind, len(result.issues), result.has_errors)
    return result
