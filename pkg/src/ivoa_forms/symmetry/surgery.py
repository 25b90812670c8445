"""Group-equivariant surgery on graded forms.

All functions take and return :data:`~ivoa_forms.voa.forms.GradedForms`,
one :class:`GradedZForm` per degree.

Example::

    a1 = catalog("A1")
    forms = {n: standard_form(a1, n) for n in range(3)}
    fixed = fixed_form(forms, [theta(a1)])
    fixed[1].rank        # 1   (spanned by e^g + e^-g)
"""

from __future__ import annotations

import logging
from collections.abc import Sequence
from fractions import Fraction
from typing import NamedTuple

from ..core.enumeration import min_norm, vectors_of_norm
from ..core.lattice import EvenLattice, orthogonal_sum
from ..core.matrices import identity, integer_kernel, rational_rank
from ..core.types import Bound
from ..errors import InvalidInputError, InvarianceError
from ..fock.polynomial import FockMonomial
from ..voa.element import VoaElement, VoaKey
from ..voa.forms import GradedForms, GradedZForm, form_index, intersect_forms, standard_form, sum_forms
from ..vertex.closure import generated_form
from .isometry import LiftedIsometry, as_int_matrix, is_integral_matrix, representation_matrix, theta, transform_form

logger = logging.getLogger(__name__)

# ---------------------------------------------------------------------------
# Invariance and fixed points
# ---------------------------------------------------------------------------


def _witness(g: LiftedIsometry, form: GradedZForm) -> str:
    for e in form.elements():
        if not form.contains(g.apply(e)):
            return repr(e)
    return ""


def invariant_matrices(form: GradedZForm, group: Sequence[LiftedIsometry]) -> list[list[list[int]]]:
    """Integer matrices of ``group`` on the generators of ``form``; raises
    :class:`InvarianceError` for the first element that moves the form."""
    matrices = []
    for index, g in enumerate(group):
        matrix = representation_matrix(g, form)
        if matrix is None or not is_integral_matrix(matrix):
            raise InvarianceError(
                f"Group element {index} does not leave the degree {form.degree} form invariant",
                element=index,
                degree=form.degree,
                witness=_witness(g, form),
            )
        matrices.append(as_int_matrix(matrix))
    return matrices


def _fixed(form: GradedZForm, group: Sequence[LiftedIsometry]) -> GradedZForm:
    if not form.rank:
        return form
    k = form.rank
    one = identity(k)
    matrices = invariant_matrices(form, group)
    moving = [m for m in matrices if m != one]
    if not moving:
        return form
    stacked = [[x for m in moving for x in (m[a][b] - one[a][b] for b in range(k))] for a in range(k)]
    rows = form.rows()
    vectors = []
    for combo in integer_kernel(stacked):
        vec: dict[int, Fraction] = {}
        for coef, row in zip(combo, rows):
            if coef:
                for c, x in row.items():
                    vec[c] = vec.get(c, 0) + coef * x
        vectors.append(vec)
    return GradedZForm.from_vectors(form.lattice, form.degree, vectors)


def fixed_form(forms: GradedForms, group: Sequence[LiftedIsometry]) -> GradedForms:
    """Per degree, the points of ``R_n`` fixed by every element of ``group``."""
    return {n: _fixed(form, group) for n, form in sorted(forms.items())}


def transform_forms(g: LiftedIsometry, forms: GradedForms) -> GradedForms:
    return {n: transform_form(g, form) for n, form in sorted(forms.items())}


# ---------------------------------------------------------------------------
# Orbit intersections and sums
# ---------------------------------------------------------------------------


class OrbitRecord(NamedTuple):
    degree: int
    form: GradedZForm
    index: int | Bound
    history: tuple[int | Bound, ...]
    invariant: bool


def orbit_intersection(
    forms: GradedForms, group: Sequence[LiftedIsometry]
) -> dict[int, OrbitRecord]:
    """``S_n = cap_{g in group} g R_n`` with ``|R_n : S_n|``.

    ``history`` records the index after each successive group element, so
    a caller with only a subgroup can see where the intersection stabilizes.
    """
    records = {}
    for n, form in sorted(forms.items()):
        current = form
        history = []
        for g in group:
            current = intersect_forms([current, transform_form(g, form)])
            history.append(form_index(current, form))
        invariant = all(transform_form(g, current) == current for g in group)
        records[n] = OrbitRecord(n, current, form_index(current, form), tuple(history), invariant)
        logger.debug("orbit_intersection degree %d: index history %s", n, history)
    return records


def orbit_sum(forms: GradedForms, group: Sequence[LiftedIsometry]) -> GradedForms:
    return {
        n: sum_forms([form, *(transform_form(g, form) for g in group)])
        for n, form in sorted(forms.items())
    }


# ---------------------------------------------------------------------------
# Tensor products
# ---------------------------------------------------------------------------


def embed_tensor(total: EvenLattice, u: VoaElement, v: VoaElement) -> VoaElement:
    """``u (x) v`` as an element of ``V_{L+M}``."""
    shift = u.lattice.rank
    out: dict[VoaKey, Fraction] = {}
    for (m1, a), c1 in u.terms.items():
        for (m2, b), c2 in v.terms.items():
            mono = m1.times(FockMonomial._trusted((i + shift, n) for i, n in m2))
            key = (mono, a + b)
            out[key] = out.get(key, 0) + c1 * c2
    return VoaElement(total, out)


def tensor_form(a: GradedForms, b: GradedForms) -> GradedForms:
    """``(A (x) B)_n = sum_{i+j=n} A_i (x) B_j`` inside ``V_{L+M}``."""
    if not a or not b:
        raise InvalidInputError("tensor_form needs two nonempty graded forms")
    left = next(iter(a.values())).lattice
    right = next(iter(b.values())).lattice
    total = orthogonal_sum(left, right)
    top = min(max(a), max(b))
    left_elements = {i: f.elements() for i, f in a.items()}
    right_elements = {j: f.elements() for j, f in b.items()}
    out: GradedForms = {}
    for n in range(top + 1):
        products = [
            embed_tensor(total, x, y)
            for i in range(n + 1)
            for x in left_elements.get(i, ())
            for y in right_elements.get(n - i, ())
        ]
        out[n] = GradedZForm.from_elements(total, n, products)
    return out


# ---------------------------------------------------------------------------
# Generation of the theta-fixed part by e^a + e^-a
# ---------------------------------------------------------------------------


class PlusGenerationRecord(NamedTuple):
    degree: int
    generated_rank: int
    fixed_rank: int
    rational_ranks_agree: bool
    contained: bool
    index: int | Bound | None


def plus_generation_check(lattice: EvenLattice, max_degree: int) -> list[PlusGenerationRecord]:
    """For a rootless lattice spanned by norm 4 vectors: the form generated
    by ``e^a + e^-a`` ((a, a) = 4) against the theta-fixed standard form."""
    shortest, _ = min_norm(lattice.gram, 2)
    if shortest is not Bound.NONE_BELOW_BOUND:
        raise InvalidInputError(f"{lattice} has roots; the plus generation check needs a rootless lattice")
    vectors = vectors_of_norm(lattice, 4)
    if rational_rank([list(v) for v in vectors]) < lattice.rank:
        raise InvalidInputError(f"The norm 4 vectors of {lattice} do not span it rationally")
    representatives = [v for v in vectors if v > tuple(-x for x in v)]
    generators = [
        VoaElement.exponential(lattice, v) + VoaElement.exponential(lattice, tuple(-x for x in v))
        for v in representatives
    ]
    top = max(max_degree, 2)
    generated = generated_form(lattice, generators, top)
    fixed = fixed_form({n: standard_form(lattice, n) for n in range(top + 1)}, [theta(lattice)])
    records = []
    for n in range(max_degree + 1):
        g, f = generated[n], fixed[n]
        combined = sum_forms([g, f])
        agree, contained = g.rank == f.rank == combined.rank, g <= f
        if not contained:
            index = None
        else:
            index = form_index(g, f) if agree else Bound.INFINITE
        records.append(
            PlusGenerationRecord(
                degree=n,
                generated_rank=g.rank,
                fixed_rank=f.rank,
                rational_ranks_agree=agree,
                contained=contained,
                index=index,
            )
        )
    return records


def forms_through(lattice: EvenLattice, max_degree: int) -> GradedForms:
    """The standard forms ``R_0 .. R_max_degree``."""
    return {n: standard_form(lattice, n) for n in range(max_degree + 1)}

