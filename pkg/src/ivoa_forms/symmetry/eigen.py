"""Eigenmodules of commuting involutions on free abelian groups.

For an elementary abelian 2-group ``E = <t_1, ..., t_r>`` acting on ``A`` the
eigenmodule of a character ``chi`` (a sign per generator) is
``{a : a t_i = chi_i a}``; their sum ``Tel(E, A)`` has index annihilated by
``|E|``.  For one involution the index is ``2^r`` with ``r`` the number of
2x2 Jordan blocks of ``t`` mod 2, i.e. the mod 2 rank of ``t - 1``.

Example::

    swap = [[0, 1], [1, 0]]
    split = eigen_split(IntegerModule.full(2), [swap])
    split.quotient, split.jordan_blocks        # (Z/2, 1)
"""

from __future__ import annotations

import logging
from collections.abc import Sequence
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import NamedTuple

from ..core.matrices import identity, integer_kernel, matmul, mod2_rank
from ..core.modules import IntegerModule, module_quotient
from ..core.types import AbelianInvariants, IntMatrix, IntRows
from ..errors import InvalidInputError
from ..voa.forms import GradedZForm
from .isometry import LiftedIsometry
from .surgery import invariant_matrices

logger = logging.getLogger(__name__)

type Character = tuple[int, ...]


@dataclass(frozen=True, slots=True)
class CharacterSplit:
    module: IntegerModule
    characters: tuple[Character, ...]
    eigenmodules: tuple[IntegerModule, ...]
    quotient: AbelianInvariants
    jordan_blocks: int | None

    @property
    def order(self) -> int:
        """``|E|``."""
        return 2 ** len(self.characters[0]) if self.characters else 1

    @property
    def total(self) -> IntegerModule:
        result = IntegerModule(self.module.dimension)
        for m in self.eigenmodules:
            result = result + m
        return result

    def eigenmodule(self, character: Character) -> IntegerModule:
        return self.eigenmodules[self.characters.index(tuple(character))]

    @property
    def support(self) -> list[Character]:
        """Characters with a nonzero eigenmodule."""
        return [c for c, m in zip(self.characters, self.eigenmodules) if m.rank]


def _local_matrix(module: IntegerModule, basis: IntMatrix, t: IntRows) -> IntMatrix:
    images = matmul(basis, t)
    matrix = []
    for row in images:
        coords = module.coordinates(row)
        if coords is None or any(x.denominator != 1 for x in coords.values()):
            raise InvalidInputError("Involution does not leave the module invariant")
        matrix.append([int(coords.get(j, 0)) for j in range(module.rank)])
    return matrix


def _check_involutions(matrices: Sequence[IntMatrix], k: int) -> None:
    one = identity(k)
    for i, m in enumerate(matrices):
        if matmul(m, m) != one:
            raise InvalidInputError(f"Action {i} is not an involution")
        for j in range(i):
            if matmul(m, matrices[j]) != matmul(matrices[j], m):
                raise InvalidInputError(f"Actions {j} and {i} do not commute")


def split_coordinates(matrices: Sequence[IntMatrix], k: int) -> dict[Character, IntMatrix]:
    """Eigenmodule bases (as coefficient rows) for every character of the
    group generated by the ``k x k`` integer involutions ``matrices``."""
    _check_involutions(matrices, k)
    if not matrices:
        return {(): identity(k)}
    out = {}
    for chi in product((1, -1), repeat=len(matrices)):
        stacked = [
            [x for m, s in zip(matrices, chi) for x in (m[a][b] - s * int(a == b) for b in range(k))]
            for a in range(k)
        ]
        out[chi] = integer_kernel(stacked)
    return out


def eigen_split(
    module: IntegerModule | IntRows, involutions: Sequence[IntRows]
) -> CharacterSplit:
    """Eigenmodules of ``module`` (row vectors, acted on by ``x -> x t``)."""
    if not isinstance(module, IntegerModule):
        if not module:
            raise InvalidInputError("eigen_split needs a nonempty module basis")
        module = IntegerModule.span(len(module[0]), module)
    for t in involutions:
        if len(t) != module.dimension or any(len(row) != module.dimension for row in t):
            raise InvalidInputError(f"Involutions must be {module.dimension}x{module.dimension}")
    basis = module.dense_rows()
    k = module.rank
    local = [_local_matrix(module, basis, t) for t in involutions]
    coords = split_coordinates(local, k)
    characters = tuple(coords)
    eigenmodules = tuple(
        IntegerModule.span(module.dimension, (matmul([combo], basis)[0] for combo in coords[chi]))
        for chi in characters
    )
    total = IntegerModule(module.dimension)
    for m in eigenmodules:
        total = total + m
    jordan = None
    if len(local) == 1:
        jordan = mod2_rank([[x - int(a == b) for b, x in enumerate(row)] for a, row in enumerate(local[0])])
    split = CharacterSplit(module, characters, eigenmodules, module_quotient(total, module), jordan)
    logger.debug(
        "eigen_split: rank %d, %d characters, quotient %s", k, len(characters), split.quotient
    )
    return split


# ---------------------------------------------------------------------------
# Graded forms
# ---------------------------------------------------------------------------


class FormSplit(NamedTuple):
    split: CharacterSplit
    forms: dict[Character, GradedZForm]


def form_eigen_split(form: GradedZForm, involutions: Sequence[LiftedIsometry]) -> FormSplit:
    """Eigenforms of commuting lifted involutions leaving ``form`` invariant."""
    matrices = invariant_matrices(form, involutions)
    split = eigen_split(IntegerModule.full(form.rank), matrices)
    rows = form.rows()
    forms: dict[Character, GradedZForm] = {}
    for chi, eigen in zip(split.characters, split.eigenmodules):
        vectors = []
        for combo in eigen.rows:
            vec: dict[int, Fraction] = {}
            for j, coef in combo:
                for c, x in rows[j].items():
                    vec[c] = vec.get(c, 0) + coef * x
            vectors.append(vec)
        forms[chi] = GradedZForm.from_vectors(form.lattice, form.degree, vectors)
    return FormSplit(split, forms)
