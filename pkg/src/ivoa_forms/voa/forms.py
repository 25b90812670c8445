"""Integral forms of a single graded piece ``(V_L)_n``.

A :class:`GradedZForm` is ``(1/denominator) * module`` where ``module`` is an
integer row module in the monomial coordinates of :func:`graded_basis`.  The
pair is kept canonical (Hermite rows, no common factor shared with the
denominator), so equality of forms is equality of fields.

Example::

    r1 = standard_form(catalog("A2"), 1)
    u1 = dual_form(catalog("A2"), 1)
    quotient_invariants(r1, u1)       # AbelianInvariants(divisors=(3,))
"""

from __future__ import annotations

import logging
from collections.abc import Iterable, Mapping, Sequence
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import NamedTuple

from ..core.lattice import EvenLattice
from ..core.matrices import common_denominator, coupled_blocks, determinant, rational_inverse
from ..core.modules import IntegerModule, module_index, module_quotient
from ..core.types import AbelianInvariants, Bound, LatticeVector, RatMatrix
from ..errors import InvalidInputError, StructuralError
from .basis import GradedBasis, dual_form_basis, graded_basis, voa_basis
from .element import VoaElement, negate
from .pairing import PairingForm, fock_pair

logger = logging.getLogger(__name__)

type GradedForms = dict[int, GradedZForm]

# ---------------------------------------------------------------------------
# GradedZForm
# ---------------------------------------------------------------------------


@dataclass(frozen=True, slots=True)
class GradedZForm:
    """A free abelian subgroup of ``(V_L)_degree`` (not necessarily of full rank)."""

    lattice: EvenLattice
    degree: int
    module: IntegerModule
    denominator: int = 1

    def __post_init__(self) -> None:
        if self.denominator <= 0:
            raise InvalidInputError(f"Denominator must be positive, got {self.denominator}")
        common = gcd(self.module.content, self.denominator)
        if common > 1:
            object.__setattr__(self, "module", self.module.divided(common))
            object.__setattr__(self, "denominator", self.denominator // common)
        if not self.module.rank:
            object.__setattr__(self, "denominator", 1)

    # -- constructors --------------------------------------------------------

    @classmethod
    def from_vectors(
        cls,
        lattice: EvenLattice,
        degree: int,
        vectors: Iterable[Mapping[int, Fraction | int]],
    ) -> GradedZForm:
        """Integer span of rational coordinate vectors."""
        vectors = [dict(v) for v in vectors]
        denominator = common_denominator(c for v in vectors for c in v.values())
        rows = [{c: int(x * denominator) for c, x in v.items() if x} for v in vectors]
        dimension = graded_basis(lattice, degree).dimension
        return cls(lattice, degree, IntegerModule.span(dimension, rows), denominator)

    @classmethod
    def from_elements(
        cls, lattice: EvenLattice, degree: int, elements: Iterable[VoaElement]
    ) -> GradedZForm:
        basis = graded_basis(lattice, degree)
        return cls.from_vectors(lattice, degree, (basis.coordinates(e) for e in elements))

    @classmethod
    def zero(cls, lattice: EvenLattice, degree: int) -> GradedZForm:
        return cls(lattice, degree, IntegerModule(graded_basis(lattice, degree).dimension))

    # -- inspection ----------------------------------------------------------

    @property
    def basis(self) -> GradedBasis:
        return graded_basis(self.lattice, self.degree)

    @property
    def rank(self) -> int:
        return self.module.rank

    @property
    def dimension(self) -> int:
        return self.module.dimension

    @property
    def is_full(self) -> bool:
        return self.rank == self.dimension

    def rows(self) -> list[dict[int, Fraction]]:
        """Generators as rational coordinate vectors."""
        return [
            {c: Fraction(v, self.denominator) for c, v in row} for row in self.module.rows
        ]

    def elements(self) -> list[VoaElement]:
        basis = self.basis
        return [basis.element(row) for row in self.rows()]

    def coordinates(self, v: VoaElement | Mapping[int, Fraction | int]) -> dict[int, Fraction] | None:
        """Rational coordinates in :meth:`rows`, ``None`` outside the span."""
        coords = self.basis.coordinates(v) if isinstance(v, VoaElement) else dict(v)
        return self.module.coordinates({c: x * self.denominator for c, x in coords.items()})

    def contains(self, v: VoaElement | Mapping[int, Fraction | int]) -> bool:
        coords = self.coordinates(v)
        return coords is not None and all(x.denominator == 1 for x in coords.values())

    def spans(self, v: VoaElement | Mapping[int, Fraction | int]) -> bool:
        """Membership in the rational span."""
        return self.coordinates(v) is not None

    def charges(self) -> set[LatticeVector]:
        keys = self.basis.keys
        return {keys[c][1] for row in self.module.rows for c, _ in row}

    # -- module algebra ------------------------------------------------------

    def _check(self, other: GradedZForm) -> None:
        if self.lattice != other.lattice or self.degree != other.degree:
            raise InvalidInputError(
                f"Ambient mismatch: {self.lattice} degree {self.degree} vs "
                f"{other.lattice} degree {other.degree}"
            )

    def rescaled(self, denominator: int) -> IntegerModule:
        """The module written over a multiple of :attr:`denominator`."""
        if denominator % self.denominator:
            raise InvalidInputError(f"{denominator} is not a multiple of {self.denominator}")
        return self.module.scaled(denominator // self.denominator)

    def __add__(self, other: GradedZForm) -> GradedZForm:
        return sum_forms([self, other])

    def __and__(self, other: GradedZForm) -> GradedZForm:
        return intersect_forms([self, other])

    def __le__(self, other: GradedZForm) -> bool:
        self._check(other)
        return all(other.contains(row) for row in self.rows())

    def scaled(self, factor: Fraction | int) -> GradedZForm:
        factor = Fraction(factor)
        return GradedZForm(
            self.lattice,
            self.degree,
            self.module.scaled(factor.numerator),
            self.denominator * factor.denominator,
        )

    # -- pairings ------------------------------------------------------------

    def gram_blocks(self, form: PairingForm, *, threads: int = 1) -> list[GramBlock]:
        return gram_blocks(self, form, threads=threads)

    def gram(self, form: PairingForm) -> RatMatrix:
        """Dense Gram matrix of the generators (block entries scattered)."""
        n = self.rank
        matrix = [[Fraction(0)] * n for _ in range(n)]
        for block in gram_blocks(self, form):
            for a, i in enumerate(block.rows):
                for b, j in enumerate(block.rows):
                    matrix[i][j] = block.gram[a][b]
        return matrix

    def scale(self, form: PairingForm = PairingForm.HERMITIAN) -> int:
        """``d(n)``: least positive integer making the Gram matrix integral."""
        values = (x for block in gram_blocks(self, form) for row in block.gram for x in row)
        return common_denominator(values)

    def rescaled_gram(self, form: PairingForm = PairingForm.HERMITIAN) -> list[list[int]]:
        d = self.scale(form)
        return [[int(d * x) for x in row] for row in self.gram(form)]

    def dual(self, form: PairingForm = PairingForm.HERMITIAN) -> GradedZForm:
        """``{x in span : (x, self) <= Z}`` inside the rational span."""
        vectors: list[dict[int, Fraction]] = []
        rows = self.rows()
        for block in gram_blocks(self, form):
            if determinant(block.gram) == 0:
                raise StructuralError(
                    f"Pairing is degenerate on the block with charges {block.charges[:3]}..."
                )
            inverse = rational_inverse(block.gram)
            for line in inverse:
                vec: dict[int, Fraction] = {}
                for coef, position in zip(line, block.rows):
                    if coef:
                        for c, x in rows[position].items():
                            vec[c] = vec.get(c, 0) + coef * x
                vectors.append({c: x for c, x in vec.items() if x})
        return GradedZForm.from_vectors(self.lattice, self.degree, vectors)

    def restrict(self, columns: Iterable[int]) -> GradedZForm:
        return GradedZForm(self.lattice, self.degree, self.module.restrict(columns), self.denominator)

    def __repr__(self) -> str:
        return (
            f"GradedZForm({self.lattice}, degree={self.degree}, rank={self.rank}, "
            f"denominator={self.denominator})"
        )


# ---------------------------------------------------------------------------
# Gram blocks
# ---------------------------------------------------------------------------


class GramBlock(NamedTuple):
    charges: tuple[LatticeVector, ...]
    rows: tuple[int, ...]
    gram: RatMatrix


def _charge_classes(form: GradedZForm, pairing: PairingForm) -> list[tuple[list[LatticeVector], list[int]]]:
    keys = form.basis.keys
    row_charges = [sorted({keys[c][1] for c, _ in row}) for row in form.module.rows]
    supports: list[list[LatticeVector]] = [list(cs) for cs in row_charges]
    if pairing is PairingForm.BILINEAR:
        for cs in row_charges:
            supports.extend([c, negate(c)] for c in cs)
    position = {charge: i for i, charge in enumerate(form.basis.sectors)}
    blocks = coupled_blocks([position[c] for c in cs] for cs in supports)
    charges = list(form.basis.sectors)
    block_of = {c: b for b, block in enumerate(blocks) for c in block}
    grouped: list[list[int]] = [[] for _ in blocks]
    for r, cs in enumerate(row_charges):
        grouped[block_of[position[cs[0]]]].append(r)
    return [
        ([charges[c] for c in block], rows) for block, rows in zip(blocks, grouped) if rows
    ]


def _row_pair(
    form: GradedZForm, left: Sequence[tuple[int, int]], right: Sequence[tuple[int, int]], pairing: PairingForm
) -> Fraction:
    keys = form.basis.keys
    gram = form.lattice.gram
    by_charge: dict[LatticeVector, list[tuple[int, int]]] = {}
    for c, v in right:
        by_charge.setdefault(keys[c][1], []).append((c, v))
    total = 0
    for c1, v1 in left:
        m1, a = keys[c1]
        target = a if pairing is PairingForm.HERMITIAN else negate(a)
        bucket = by_charge.get(target)
        if not bucket:
            continue
        sign = -1 if pairing is PairingForm.BILINEAR and len(m1) % 2 else 1
        for c2, v2 in bucket:
            value = fock_pair(gram, m1, keys[c2][0])
            if value:
                total += sign * value * v1 * v2
    return Fraction(total, form.denominator**2)


def gram_blocks(form: GradedZForm, pairing: PairingForm, *, threads: int = 1) -> list[GramBlock]:
    """Gram matrix of the generators split into mutually orthogonal blocks.

    Rows fall into classes of charges linked through a common row (and, for
    the bilinear form, through ``a ~ -a``); rows in different classes pair
    to zero.
    """
    classes = _charge_classes(form, pairing)
    rows = form.module.rows

    def build(item: tuple[list[LatticeVector], list[int]]) -> GramBlock:
        charges, members = item
        size = len(members)
        gram = [[Fraction(0)] * size for _ in range(size)]
        for a in range(size):
            for b in range(a, size):
                value = _row_pair(form, rows[members[a]], rows[members[b]], pairing)
                gram[a][b] = gram[b][a] = value
        return GramBlock(tuple(charges), tuple(members), gram)

    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            blocks = list(pool.map(build, classes))
    else:
        blocks = [build(item) for item in classes]
    logger.debug("gram_blocks: %s degree %d, %d blocks", form.lattice, form.degree, len(blocks))
    return blocks


# ---------------------------------------------------------------------------
# Standard forms and surgery on one degree
# ---------------------------------------------------------------------------


def standard_form(lattice: EvenLattice, degree: int) -> GradedZForm:
    """``R_n``: the integer span of :func:`voa_basis`."""
    return GradedZForm.from_elements(lattice, degree, voa_basis(lattice, degree))


def dual_form(lattice: EvenLattice, degree: int) -> GradedZForm:
    """``U_n``: the integer span of the dual Schur basis."""
    return GradedZForm.from_elements(lattice, degree, dual_form_basis(lattice, degree, dual=True))


def schur_form(lattice: EvenLattice, degree: int) -> GradedZForm:
    return GradedZForm.from_elements(lattice, degree, dual_form_basis(lattice, degree))


def _common(forms: Sequence[GradedZForm]) -> tuple[int, list[IntegerModule]]:
    if not forms:
        raise InvalidInputError("Need at least one form")
    for other in forms[1:]:
        forms[0]._check(other)
    denominator = lcm(*(f.denominator for f in forms))
    return denominator, [f.rescaled(denominator) for f in forms]


def intersect_forms(forms: Sequence[GradedZForm]) -> GradedZForm:
    denominator, modules = _common(forms)
    result = modules[0]
    for m in modules[1:]:
        result = result & m
    return GradedZForm(forms[0].lattice, forms[0].degree, result, denominator)


def sum_forms(forms: Sequence[GradedZForm]) -> GradedZForm:
    denominator, modules = _common(forms)
    result = modules[0]
    for m in modules[1:]:
        result = result + m
    return GradedZForm(forms[0].lattice, forms[0].degree, result, denominator)


def quotient_invariants(sub: GradedZForm, sup: GradedZForm) -> AbelianInvariants:
    """Invariants of ``sup / sub``; raises :class:`ContainmentError` when
    ``sub`` is not contained in ``sup``."""
    _, (small, big) = _common([sub, sup])
    return module_quotient(small, big)


def form_index(sub: GradedZForm, sup: GradedZForm) -> int | Bound:
    """``|sup : sub|`` (``Bound.INFINITE`` on rank drop, :class:`ContainmentError`
    when ``sub`` is not inside ``sup``)."""
    _, (small, big) = _common([sub, sup])
    return module_index(small, big)


def restrict(form: GradedZForm, columns: Iterable[int]) -> GradedZForm:
    return form.restrict(columns)
