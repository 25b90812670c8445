"""Integer spans closed under the vertex products, degree by degree.

Example::

    a1 = catalog("A1")
    gens = [VoaElement.exponential(a1, (1,)), VoaElement.exponential(a1, (-1,))]
    forms = generated_form(a1, gens, 2)
    forms[1].rank        # 3
"""

from __future__ import annotations

import logging
from collections import defaultdict
from collections.abc import Iterable, Mapping
from fractions import Fraction

from ..core.lattice import EvenLattice
from ..errors import InvalidInputError
from ..voa.basis import graded_basis
from ..voa.element import VoaElement
from ..voa.forms import GradedForms, GradedZForm, sum_forms
from .modes import vertex_mode

logger = logging.getLogger(__name__)


def _empty(lattice: EvenLattice, max_degree: int) -> GradedForms:
    return {n: GradedZForm.zero(lattice, n) for n in range(max_degree + 1)}


def _products(
    left: Mapping[int, list[VoaElement]],
    right: Mapping[int, list[VoaElement]],
    max_degree: int,
    pairs: Iterable[tuple[int, int]],
) -> dict[int, list[dict[int, Fraction]]]:
    found: dict[int, list[dict[int, Fraction]]] = defaultdict(list)
    for i, j in pairs:
        for x in left.get(i, ()):
            for y in right.get(j, ()):
                for k in range(i + j - 1 - max_degree, i + j):
                    product = vertex_mode(x, k, y)
                    if product:
                        degree = i + j - k - 1
                        found[degree].append(graded_basis(x.lattice, degree).coordinates(product))
    return found


def _extend(forms: GradedForms, found: Mapping[int, list[dict[int, Fraction]]]) -> set[int]:
    changed = set()
    for degree, vectors in found.items():
        current = forms[degree]
        extra = GradedZForm.from_vectors(current.lattice, degree, vectors)
        updated = sum_forms([current, extra])
        if updated != current:
            forms[degree] = updated
            changed.add(degree)
    return changed


def generated_form(
    lattice: EvenLattice, generators: Iterable[VoaElement], max_degree: int
) -> GradedForms:
    """Smallest integer span through degree ``max_degree`` containing
    ``vac`` and ``generators`` and closed under all products ``u_k v``
    whose inputs and output stay within the range."""
    forms = _empty(lattice, max_degree)
    seeds: dict[int, list[dict[int, Fraction]]] = defaultdict(list)
    for g in [VoaElement.vacuum(lattice), *generators]:
        if not g:
            continue
        if not g.is_homogeneous:
            raise InvalidInputError(f"Generator is not homogeneous: {g!r}")
        if g.weight > max_degree:
            raise InvalidInputError(f"Generator weight {g.weight} exceeds max degree {max_degree}")
        seeds[g.weight].append(graded_basis(lattice, g.weight).coordinates(g))
    frontier = _extend(forms, seeds)
    rounds = 0
    while frontier:
        rounds += 1
        elements = {n: f.elements() for n, f in forms.items() if f.rank}
        degrees = sorted(elements)
        pairs = [(i, j) for i in degrees for j in degrees if i in frontier or j in frontier]
        found = _products(elements, elements, max_degree, pairs)
        frontier = _extend(forms, found)
        logger.debug(
            "generated_form round %d: ranks %s, changed %s",
            rounds, [forms[n].rank for n in sorted(forms)], sorted(frontier),
        )
    return forms


def module_product_span(x: GradedForms, y: GradedForms, max_degree: int) -> GradedForms:
    """``X . Y``: integer span of all ``x_k y`` landing in degrees ``<= max_degree``."""
    lattice = next(iter(x.values())).lattice
    forms = _empty(lattice, max_degree)
    left = {n: f.elements() for n, f in x.items() if n <= max_degree and f.rank}
    right = {n: f.elements() for n, f in y.items() if n <= max_degree and f.rank}
    pairs = [(i, j) for i in sorted(left) for j in sorted(right)]
    _extend(forms, _products(left, right, max_degree, pairs))
    return forms
