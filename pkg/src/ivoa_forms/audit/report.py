"""Per-degree audits of graded integral forms.

A :class:`DegreeRecord` collects the invariants of one ``GradedZForm`` under
a pairing: rank, Gram determinant, parity, discriminant invariants of the
``d(n)``-rescaled Gram matrix and the block structure.  Blocks group the
mutually orthogonal Gram pieces by the norm of their charges; the zero
charge block is called ``J``, the others ``norm2``, ``norm4``, ...

Example::

    report = e8_audit(2)
    report.records[-1].block("J").min_norm       # Fraction(3, 1)
    report.records[-1].glue.index                # 256
"""

from __future__ import annotations

import logging
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field
from enum import StrEnum, auto
from fractions import Fraction
from math import prod
from typing import NamedTuple

from ..core.enumeration import min_norm
from ..core.lattice import EvenLattice, catalog
from ..core.matrices import cokernel, common_denominator, determinant
from ..core.types import AbelianInvariants, Bound, RatMatrix
from ..errors import InvalidInputError
from ..validation import ValidationResult, equals, is_true
from ..voa.element import negate
from ..voa.forms import GradedZForm, GramBlock, dual_form, form_index, schur_form, standard_form, sum_forms
from ..voa.pairing import PairingForm, graded_gram

logger = logging.getLogger(__name__)

#: Forms up to this rank get their determinant recomputed from a dense Gram
#: matrix built with :func:`graded_gram`.
DENSE_CHECK_RANK = 64

ZERO_BLOCK = "J"

# ---------------------------------------------------------------------------
# Records
# ---------------------------------------------------------------------------


class Parity(StrEnum):
    EVEN = auto()
    ODD = auto()


class FormKind(StrEnum):
    """Which graded form an audit runs on."""

    STANDARD = auto()
    DUAL = auto()
    SCHUR = auto()

    def build(self, lattice: EvenLattice, degree: int) -> GradedZForm:
        match self:
            case FormKind.STANDARD:
                return standard_form(lattice, degree)
            case FormKind.DUAL:
                return dual_form(lattice, degree)
            case FormKind.SCHUR:
                return schur_form(lattice, degree)


class BlockRecord(NamedTuple):
    name: str
    rank: int
    pieces: int
    piece_rank: int | None
    det: Fraction
    parity: Parity
    invariants: AbelianInvariants
    min_norm: Fraction | Bound | None

    @property
    def is_square(self) -> bool:
        """The block is an orthonormal (``I_k``) lattice."""
        return self.pieces == self.rank and self.det == 1 and self.min_norm in (None, 1)


class GlueRecord(NamedTuple):
    """``J`` against ``J1 + J2`` with ``J1`` the part built from first modes only."""

    block: str
    ranks: tuple[int, int]
    index: int | Bound
    det: Fraction


@dataclass(frozen=True, slots=True)
class DegreeRecord:
    degree: int
    rank: int
    dimension: int
    det: Fraction
    parity: Parity
    invariants: AbelianInvariants
    scale: int
    blocks: tuple[BlockRecord, ...]
    glue: GlueRecord | None = None

    def block(self, name: str) -> BlockRecord:
        for b in self.blocks:
            if b.name == name:
                return b
        raise InvalidInputError(f"No block named {name!r} in degree {self.degree}")

    @property
    def min_norm(self) -> Fraction | Bound | None:
        return next((b.min_norm for b in self.blocks if b.min_norm is not None), None)


@dataclass
class AuditReport:
    lattice: str
    pairing: PairingForm
    module: FormKind
    records: list[DegreeRecord] = field(default_factory=list)
    checks: ValidationResult = field(default_factory=ValidationResult)

    @property
    def passed(self) -> bool:
        return not self.checks.has_errors


# ---------------------------------------------------------------------------
# Auditing one form
# ---------------------------------------------------------------------------


def _rescaled(gram: RatMatrix, scale: int) -> list[list[int]]:
    return [[int(scale * x) for x in row] for row in gram]


def block_name(norm: int) -> str:
    return ZERO_BLOCK if norm == 0 else f"norm{norm}"


def _piece_min(gram: list[list[int]]) -> Fraction | Bound:
    bound = min(row[i] for i, row in enumerate(gram))
    value, _ = min_norm(gram, bound)
    return value


def _block_record(name: str, pieces: Sequence[GramBlock], scale: int, with_min: bool) -> BlockRecord:
    grams = [_rescaled(p.gram, scale) for p in pieces]
    ranks = {len(p.rows) for p in pieces}
    invariants = AbelianInvariants()
    for g in grams:
        invariants = invariants + cokernel(g, len(g))
    even = all(row[i] % 2 == 0 for g in grams for i, row in enumerate(g))
    shortest: Fraction | Bound | None = None
    if with_min:
        values = [_piece_min(g) for g in grams]
        found = [v for v in values if v is not Bound.NONE_BELOW_BOUND]
        shortest = Fraction(min(found), scale) if found else Bound.NONE_BELOW_BOUND
    return BlockRecord(
        name=name,
        rank=sum(len(p.rows) for p in pieces),
        pieces=len(pieces),
        piece_rank=ranks.pop() if len(ranks) == 1 else None,
        det=prod((determinant(p.gram) for p in pieces), start=Fraction(1)),
        parity=Parity.EVEN if even else Parity.ODD,
        invariants=invariants,
        min_norm=shortest,
    )


def _orthogonal(blocks: Iterable[GramBlock], pairing: PairingForm) -> bool:
    seen: set = set()
    for block in blocks:
        charges = set(block.charges)
        if pairing is PairingForm.BILINEAR:
            charges |= {negate(c) for c in block.charges}
        if charges & seen:
            return False
        seen |= charges
    return True


def _zero_columns(form: GradedZForm) -> tuple[list[int], list[int]]:
    """Zero charge columns split into first-mode-only monomials and the rest."""
    basis = form.basis
    zero = (0,) * form.lattice.rank
    first, rest = [], []
    for c in basis.sectors.get(zero, ()):
        mono, _ = basis.keys[c]
        (first if all(mode == 1 for _, mode in mono) else rest).append(c)
    return first, rest


def glue_record(form: GradedZForm, pairing: PairingForm = PairingForm.HERMITIAN) -> GlueRecord | None:
    """``|J : J1 + J2|`` for the zero charge part ``J`` of ``form``; ``None``
    when either part is empty."""
    first, rest = _zero_columns(form)
    if not first or not rest:
        return None
    j = form.restrict(first + rest)
    j1, j2 = j.restrict(first), j.restrict(rest)
    if not j1.rank or not j2.rank:
        return None
    det = determinant(j1.gram(pairing)) * determinant(j2.gram(pairing))
    return GlueRecord(ZERO_BLOCK, (j1.rank, j2.rank), form_index(sum_forms([j1, j2]), j), det)


def audit_form(
    form: GradedZForm,
    pairing: PairingForm = PairingForm.HERMITIAN,
    *,
    min_norm_block: str | None = None,
    threads: int = 1,
    result: ValidationResult | None = None,
) -> DegreeRecord:
    """Audit one graded form.

    ``min_norm_block`` names the block whose minimum norm is enumerated (the
    minimum over its orthogonal pieces).  Orthogonality of the pieces and,
    for small ranks, the determinant product are verified into ``result``.
    """
    if min_norm_block is not None and pairing is not PairingForm.HERMITIAN:
        raise InvalidInputError("Minimum norms need the positive definite hermitian form")
    result = result if result is not None else ValidationResult()
    blocks = form.gram_blocks(pairing, threads=threads)
    scale = common_denominator(x for b in blocks for row in b.gram for x in row)

    by_norm: dict[int, list[GramBlock]] = {}
    for b in blocks:
        by_norm.setdefault(int(form.lattice.norm(b.charges[0])), []).append(b)
    grouped = {block_name(norm): by_norm[norm] for norm in sorted(by_norm)}
    if min_norm_block is not None and min_norm_block not in grouped:
        raise InvalidInputError(
            f"No block {min_norm_block!r} in degree {form.degree}; blocks are {sorted(grouped)}"
        )
    records = tuple(
        _block_record(name, pieces, scale, name == min_norm_block)
        for name, pieces in grouped.items()
    )
    det = prod((b.det for b in records), start=Fraction(1))
    invariants = AbelianInvariants()
    for b in records:
        invariants = invariants + b.invariants
    parity = Parity.ODD if any(b.parity is Parity.ODD for b in records) else Parity.EVEN

    key = f"degree{form.degree}"
    result.check(f"{key}.orthogonal", is_true("Gram pieces share charge sectors"), _orthogonal(blocks, pairing))
    if 0 < form.rank <= DENSE_CHECK_RANK:
        dense = determinant(graded_gram(form.elements(), pairing, threads=threads))
        result.check(f"{key}.determinant", equals(det, "product of block determinants"), dense)

    glue = glue_record(form, pairing) if form.degree >= 2 else None
    record = DegreeRecord(
        degree=form.degree,
        rank=form.rank,
        dimension=form.dimension,
        det=det,
        parity=parity,
        invariants=invariants,
        scale=scale,
        blocks=records,
        glue=glue,
    )
    logger.info(
        "audit %s degree %d: rank %d, det %s, %s, d(n)=%d",
        form.lattice, form.degree, record.rank, record.det, record.parity, record.scale,
    )
    return record


def audit(
    lattice: EvenLattice,
    degrees: Iterable[int],
    pairing: PairingForm = PairingForm.HERMITIAN,
    *,
    module: FormKind = FormKind.STANDARD,
    min_norm_block: str | None = None,
    threads: int = 1,
) -> AuditReport:
    report = AuditReport(lattice.label, pairing, module)
    for n in degrees:
        form = module.build(lattice, n)
        report.records.append(
            audit_form(form, pairing, min_norm_block=min_norm_block, threads=threads, result=report.checks)
        )
    return report


# ---------------------------------------------------------------------------
# E8 in degrees 1 and 2
# ---------------------------------------------------------------------------


def _check_degree_one(record: DegreeRecord, result: ValidationResult) -> None:
    result.check("degree1.rank", equals(248, "rank"), record.rank)
    result.check("degree1.det", equals(1, "det"), record.det)
    result.check("degree1.parity", equals(Parity.ODD, "parity"), record.parity)
    j = record.block(ZERO_BLOCK)
    result.check("degree1.J", is_true("J is not E8"), (j.rank, j.det, j.parity) == (8, 1, Parity.EVEN))
    result.check("degree1.norm2", is_true("norm2 block is not I_240"), record.block("norm2").is_square)


def _check_degree_two(record: DegreeRecord, result: ValidationResult) -> None:
    result.check("degree2.rank", equals(4124, "rank"), record.rank)
    result.check("degree2.det", equals(1, "det"), record.det)
    s = record.block("norm4")
    result.check("degree2.S", is_true("norm4 block is not I_2160"), s.rank == 2160 and s.is_square)
    middle = record.block("norm2")
    result.check(
        "degree2.E8xQ",
        is_true("norm2 block is not 240 copies of E8"),
        (middle.pieces, middle.piece_rank, middle.det, middle.parity) == (240, 8, 1, Parity.EVEN),
    )
    j = record.block(ZERO_BLOCK)
    result.check("degree2.J.rank", equals(44, "rank(J)"), j.rank)
    result.check("degree2.J.det", equals(1, "det(J)"), j.det)
    result.check("degree2.J.parity", equals(Parity.ODD, "parity(J)"), j.parity)
    if j.min_norm is not None:
        result.check("degree2.J.min", equals(3, "min(J)"), j.min_norm)
    glue = record.glue
    result.check("degree2.glue.index", equals(2**8, "|J : J1+J2|"), glue.index if glue else None)
    result.check("degree2.glue.det", equals(2**16, "det(J1+J2)"), glue.det if glue else None)


def e8_audit(max_degree: int = 2, *, min_norm: bool = True, threads: int = 1) -> AuditReport:
    """Hermitian audit of ``R_1`` and ``R_2`` for ``V_E8`` with the expected
    block structure checked: ``R_1 = E8 + Q`` and ``R_2 = J + E8 (x) Q + S``."""
    if max_degree not in (1, 2):
        raise InvalidInputError(f"e8_audit covers degrees 1 and 2, got {max_degree}")
    lattice = catalog("E8")
    report = AuditReport(lattice.label, PairingForm.HERMITIAN, FormKind.STANDARD)
    checks = (_check_degree_one, _check_degree_two)
    for n in range(1, max_degree + 1):
        record = audit_form(
            standard_form(lattice, n),
            min_norm_block=ZERO_BLOCK if min_norm and n == 2 else None,
            threads=threads,
            result=report.checks,
        )
        report.records.append(record)
        checks[n - 1](record, report.checks)
    logger.info("e8_audit through degree %d: %d errors", max_degree, len(report.checks.errors))
    return report
