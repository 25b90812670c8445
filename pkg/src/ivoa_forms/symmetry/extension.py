"""Extending an integral form from a fixed-point subalgebra.

Given graded forms ``A`` (invariant under commuting involutions generating
``E``) and a finite group ``N`` normalizing ``E``:

* ``A_chi`` are the eigenforms of ``E`` on ``A``;
* ``A'_chi = cap_{g in N_chi} g A_chi`` and ``A''_chi = sum_{g in N_chi} g A_chi``,
  with ``N_chi`` the stabilizer of the character;
* ``A' = sum_{g in N} g A'_chi`` and ``A'' = sum_{g in N} g A''_chi`` over all
  characters, so the transports to the characters missing from ``A`` are
  included.

The products ``A'.A'`` and ``A'.A''`` then sit in the chain
``A' <= A'.A' <= A'.A'' <= A''``.
"""

from __future__ import annotations

import logging
from collections.abc import Sequence
from dataclasses import dataclass
from typing import NamedTuple

from ..errors import InvalidInputError
from ..voa.element import VoaElement
from ..voa.forms import GradedForms, GradedZForm, intersect_forms, sum_forms
from ..vertex.closure import module_product_span
from .eigen import Character, form_eigen_split
from .isometry import LiftedIsometry, transform_form

logger = logging.getLogger(__name__)


class Containments(NamedTuple):
    degree: int
    a_prime_in_square: bool
    square_in_product: bool
    product_in_double: bool

    @property
    def holds(self) -> bool:
        return self.a_prime_in_square and self.square_in_product and self.product_in_double


@dataclass(frozen=True, slots=True)
class ExtensionForms:
    a_prime: GradedForms
    a_double: GradedForms
    square: GradedForms
    product: GradedForms
    containments: tuple[Containments, ...]

    @property
    def holds(self) -> bool:
        return all(c.holds for c in self.containments)


def _character_of(element: VoaElement, involutions: Sequence[LiftedIsometry]) -> Character | None:
    signs = []
    for t in involutions:
        image = t.apply(element)
        if image == element:
            signs.append(1)
        elif image == -element:
            signs.append(-1)
        else:
            return None
    return tuple(signs)


def _stabilizer(
    form: GradedZForm, character: Character, involutions: Sequence[LiftedIsometry], group: Sequence[LiftedIsometry]
) -> list[LiftedIsometry]:
    sample = form.elements()[0]
    return [g for g in group if _character_of(g.apply(sample), involutions) == character]


def _degree_pieces(
    form: GradedZForm, involutions: Sequence[LiftedIsometry], group: Sequence[LiftedIsometry]
) -> tuple[GradedZForm, GradedZForm]:
    eigen = form_eigen_split(form, involutions).forms
    primes = [GradedZForm.zero(form.lattice, form.degree)]
    doubles = [GradedZForm.zero(form.lattice, form.degree)]
    for chi, piece in eigen.items():
        if not piece.rank:
            continue
        stabilizer = _stabilizer(piece, chi, involutions, group)
        moved = [transform_form(g, piece) for g in stabilizer]
        prime = intersect_forms(moved)
        double = sum_forms(moved)
        primes.extend(transform_form(g, prime) for g in group)
        doubles.extend(transform_form(g, double) for g in group)
    return sum_forms(primes), sum_forms(doubles)


def extension_forms(
    forms: GradedForms,
    involutions: Sequence[LiftedIsometry],
    group: Sequence[LiftedIsometry],
    max_degree: int,
) -> ExtensionForms:
    """``A'``, ``A''``, ``A'.A'`` and ``A'.A''`` through ``max_degree``.

    ``group`` must list every element of ``N`` (see
    :func:`~ivoa_forms.symmetry.isometry.generate_group`).
    """
    if not group:
        raise InvalidInputError("extension_forms needs the elements of N")
    missing = [n for n in range(max_degree + 1) if n not in forms]
    if missing:
        raise InvalidInputError(f"Forms are missing degrees {missing}")
    a_prime: GradedForms = {}
    a_double: GradedForms = {}
    for n in range(max_degree + 1):
        a_prime[n], a_double[n] = _degree_pieces(forms[n], involutions, group)
        logger.debug("extension_forms degree %d: rank A' %d, rank A'' %d", n, a_prime[n].rank, a_double[n].rank)
    square = module_product_span(a_prime, a_prime, max_degree)
    product = module_product_span(a_prime, a_double, max_degree)
    containments = tuple(
        Containments(
            n,
            a_prime[n] <= square[n],
            square[n] <= product[n],
            product[n] <= a_double[n],
        )
        for n in range(max_degree + 1)
    )
    return ExtensionForms(a_prime, a_double, square, product, containments)
