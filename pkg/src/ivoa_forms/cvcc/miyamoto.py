"""Miyamoto involutions of Ising vectors on graded pieces.

``e_1`` acts on ``(V_L)_n``; for an Ising vector it is diagonalizable with
eigenvalues in ``{0, 1/2, 1/16} + Z_{>=0}``.  The involution ``t(e)`` is
``-1`` on the ``1/16 + Z`` eigenspaces and ``+1`` elsewhere.  The matrix of
``e_1`` splits into blocks along the columns it couples, and every block is
decomposed separately.
"""

from __future__ import annotations

import logging
from collections import Counter
from collections.abc import Mapping, Sequence
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from ..core.matrices import coupled_blocks, rational_inverse, rational_nullspace, transpose
from ..core.types import Bound
from ..errors import InvalidInputError, StructuralError
from ..voa.basis import graded_basis
from ..voa.element import VoaElement
from ..voa.forms import GradedForms, GradedZForm, form_index, intersect_forms
from ..vertex.modes import vertex_mode
from .ising import IsingVector

logger = logging.getLogger(__name__)

type SparseMatrix = list[dict[int, Fraction]]

FAMILY = (Fraction(0), Fraction(1, 2), Fraction(1, 16))


@dataclass(frozen=True, slots=True)
class MiyamotoData:
    degree: int
    e1: SparseMatrix
    eigenvalues: dict[Fraction, int]
    involution: SparseMatrix

    @property
    def dimension(self) -> int:
        return len(self.e1)

    @property
    def has_sixteenth(self) -> bool:
        return any(_is_sixteenth(value) for value in self.eigenvalues)

    @property
    def is_identity(self) -> bool:
        return all(row == {i: 1} for i, row in enumerate(self.involution))

    def apply(self, vec: Mapping[int, Fraction | int]) -> dict[int, Fraction]:
        """Row vector times the involution."""
        return apply_sparse(self.involution, vec)

    def squares_to_identity(self) -> bool:
        return all(
            self.apply(row) == {i: 1} for i, row in enumerate(self.involution)
        )


def _is_sixteenth(value: Fraction) -> bool:
    return (value - FAMILY[2]).denominator == 1


def apply_sparse(matrix: SparseMatrix, vec: Mapping[int, Fraction | int]) -> dict[int, Fraction]:
    out: dict[int, Fraction] = {}
    for i, coef in vec.items():
        if not coef:
            continue
        for j, x in matrix[i].items():
            out[j] = out.get(j, 0) + coef * x
    return {j: x for j, x in out.items() if x}


def _candidates(degree: int) -> list[Fraction]:
    return [base + m for m in range(degree + 2) for base in FAMILY]


def _decompose(
    block: list[int], rows: SparseMatrix, degree: int
) -> tuple[Counter[Fraction], list[list[Fraction]]]:
    position = {c: i for i, c in enumerate(block)}
    p = len(block)
    local = [[Fraction(0)] * p for _ in range(p)]
    for a, c in enumerate(block):
        for j, x in rows[c].items():
            local[a][position[j]] = x
    columns = transpose(local)
    vectors: list[list[Fraction]] = []
    signs: list[int] = []
    found: Counter[Fraction] = Counter()
    for value in _candidates(degree):
        shifted = [[x - value * int(i == j) for j, x in enumerate(row)] for i, row in enumerate(columns)]
        space = rational_nullspace(shifted)
        for vec in space:
            vectors.append(list(vec))
            signs.append(-1 if _is_sixteenth(value) else 1)
        if space:
            found[value] += len(space)
        if len(vectors) == p:
            break
    if len(vectors) != p:
        raise StructuralError(
            f"e_1 is not diagonalizable with eigenvalues in {{0, 1/2, 1/16}} + Z on a block of size {p} "
            f"in degree {degree} (found {len(vectors)} eigenvectors)"
        )
    if all(s == 1 for s in signs):
        return found, [[Fraction(int(i == j)) for j in range(p)] for i in range(p)]
    inverse = rational_inverse(vectors)
    # t = V^-1 D V in the row convention
    t = [
        [sum((inverse[i][k] * signs[k] * vectors[k][j] for k in range(p)), Fraction(0)) for j in range(p)]
        for i in range(p)
    ]
    return found, t


def e1_matrix(e: IsingVector, degree: int) -> SparseMatrix:
    """Row ``i`` holds the coordinates of ``e_1 b_i``."""
    basis = graded_basis(e.lattice, degree)
    return [basis.coordinates(e.mode(1, basis.element({i: 1}))) for i in range(basis.dimension)]


def miyamoto(e: IsingVector, degree: int) -> MiyamotoData:
    rows = e1_matrix(e, degree)
    blocks = coupled_blocks([i, *row] for i, row in enumerate(rows))
    eigenvalues: Counter[Fraction] = Counter()
    involution: SparseMatrix = [{} for _ in rows]
    for block in blocks:
        found, t = _decompose(block, rows, degree)
        eigenvalues.update(found)
        for a, c in enumerate(block):
            involution[c] = {block[b]: x for b, x in enumerate(t[a]) if x}
    logger.debug(
        "miyamoto degree %d: %d blocks, eigenvalues %s", degree, len(blocks), dict(sorted(eigenvalues.items()))
    )
    return MiyamotoData(degree, rows, dict(sorted(eigenvalues.items())), involution)


def automorphism_defects(
    e: IsingVector, pairs: Sequence[tuple[VoaElement, int, VoaElement]], data: Mapping[int, MiyamotoData]
) -> list[tuple[VoaElement, int, VoaElement]]:
    """Sampled ``t(u_k v) = (t u)_k (t v)``; ``data`` must cover every degree involved."""

    def act(x: VoaElement) -> VoaElement:
        out = VoaElement.zero(x.lattice)
        for n in sorted(x.weights()):
            basis = graded_basis(x.lattice, n)
            out = out + basis.element(data[n].apply(basis.coordinates(x.component(n))))
        return out

    defects = []
    for u, k, v in pairs:
        if act(vertex_mode(u, k, v)) != vertex_mode(act(u), k, act(v)):
            defects.append((u, k, v))
    return defects


# ---------------------------------------------------------------------------
# Stabilization of a rational form
# ---------------------------------------------------------------------------


class StabilizationRecord(NamedTuple):
    degree: int
    span_preserved: bool
    form_preserved: bool
    index: int | Bound | None


def stabilization_check(e: IsingVector, forms: GradedForms, max_degree: int) -> list[StabilizationRecord]:
    """Whether ``t(e)`` maps the rational span of each ``R_n`` to itself, and
    ``|R_n : R_n & t(e) R_n|``."""
    weight_two = forms.get(2)
    if weight_two is None or not weight_two.spans(e.element):
        raise InvalidInputError("The Ising vector is outside the rational span of the degree 2 form")
    records = []
    for n in range(max_degree + 1):
        form = forms[n]
        data = miyamoto(e, n)
        images = [data.apply(row) for row in form.rows()]
        preserved = all(form.spans(image) for image in images)
        moved = GradedZForm.from_vectors(form.lattice, n, images)
        index = form_index(intersect_forms([form, moved]), form) if preserved else None
        records.append(StabilizationRecord(n, preserved, moved == form, index))
    return records
