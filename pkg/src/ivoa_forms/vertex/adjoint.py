"""Consistency checks tying the modes to the invariant form.

The invariant bilinear form is the vacuum coefficient of a residue:

    (u, v) = (-1)^m sum_j 1/j! (L(1)^j u)_{2m-j-1} v        (wt u = m)

:func:`invariance_check` reports that sum and its integrality,
:func:`pair_adjoint_check` returns the signed residue itself, and
:func:`trace_form` builds ``f_m(a, b) = tr(ad a ad b)`` with
``ad(c) x = c_{m-1} x`` on a graded piece.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial
from typing import NamedTuple

from ..core.lattice import EvenLattice
from ..core.matrices import rational_rank, snf
from ..core.types import AbelianInvariants, LatticeVector, RatMatrix
from ..errors import InvalidInputError, StructuralError
from ..fock.schur import s_coefficient
from ..voa.cocycle import make_cocycle
from ..voa.element import VoaElement, add_charges, combine
from ..voa.forms import GradedZForm, standard_form
from ..voa.pairing import PairingForm, generalized_binomial
from .modes import vertex_mode
from .virasoro import virasoro_mode

# ---------------------------------------------------------------------------
# Residue of the adjoint vertex operator
# ---------------------------------------------------------------------------


def _residue(u: VoaElement, v: VoaElement) -> Fraction:
    m = u.weight
    total = Fraction(0)
    current = u
    for j in range(m + 1):
        if not current:
            break
        total += vertex_mode(current, 2 * m - j - 1, v).vacuum_coefficient() / factorial(j)
        current = virasoro_mode(1, current)
    return total


class InvarianceReport(NamedTuple):
    weight: int
    value: Fraction
    pairing: Fraction
    scale: int
    integral: bool


def invariance_check(u: VoaElement, v: VoaElement, *, scale: int | None = None) -> InvarianceReport:
    """Vacuum coefficient of the residue sum for ``u, v`` of one weight.

    ``integral`` records membership of the value in ``(1/scale) Z``; the
    scale defaults to ``d(m)`` of the standard form.
    """
    if not (u and v) or not (u.is_homogeneous and v.is_homogeneous):
        raise InvalidInputError("invariance_check needs nonzero homogeneous elements")
    m = u.weight
    if v.weight != m:
        raise InvalidInputError(f"invariance_check needs equal weights, got {m} and {v.weight}")
    value = _residue(u, v)
    if scale is None:
        scale = standard_form(u.lattice, m).scale(PairingForm.BILINEAR)
    return InvarianceReport(
        weight=m,
        value=value,
        pairing=value if m % 2 == 0 else -value,
        scale=scale,
        integral=(value * scale).denominator == 1,
    )


def pair_adjoint_check(u: VoaElement, v: VoaElement) -> Fraction:
    """``Res_z z^-1 (vac, Y(e^{zL(1)} (-z^-2)^{L(0)} u, z^-1) v)``."""
    if not u:
        return Fraction(0)
    if not u.is_homogeneous:
        raise InvalidInputError("pair_adjoint_check needs a homogeneous left argument")
    value = _residue(u, v)
    return value if u.weight % 2 == 0 else -value


# ---------------------------------------------------------------------------
# Internal identities
# ---------------------------------------------------------------------------


class IdentityCheck(NamedTuple):
    lhs: VoaElement
    rhs: VoaElement

    @property
    def holds(self) -> bool:
        return self.lhs == self.rhs


def skew_symmetry_check(u: VoaElement, k: int, v: VoaElement) -> IdentityCheck:
    """``u_k v`` against ``sum_j (-1)^(k+j+1)/j! L(-1)^j (v_{k+j} u)``."""
    lhs = vertex_mode(u, k, v)
    top = u.weight + v.weight - k - 1
    parts = []
    for j in range(max(top, -1) + 1):
        term = vertex_mode(v, k + j, u)
        for _ in range(j):
            term = virasoro_mode(-1, term)
        parts.append((Fraction((-1) ** (k + j + 1), factorial(j)), term))
    return IdentityCheck(lhs, combine(u.lattice, parts))


def generating_identity_check(
    lattice: EvenLattice, alpha: LatticeVector, beta: LatticeVector, m: int, n: int, k: int
) -> IdentityCheck:
    """``(s_{a,m} e^a)_k (s_{b,n} e^b)`` against the coefficient of
    ``w^m x^n z^(-k-1)`` in ``eps(a,b) (z+w-x)^(a,b) E^-(a, z+w) E^-(b, x) e^(a+b)``."""
    alpha, beta = tuple(alpha), tuple(beta)
    u = VoaElement.from_fock(lattice, s_coefficient(alpha, m), alpha)
    v = VoaElement.from_fock(lattice, s_coefficient(beta, n), beta)
    lhs = vertex_mode(u, k, v)

    e = int(lattice.inner(alpha, beta))
    sign = make_cocycle(lattice)(alpha, beta)
    charge = add_charges(alpha, beta)
    parts = []
    for r in range(m + n + 1):
        c_r = generalized_binomial(e, r)
        if not c_r:
            continue
        for p in range(min(r, m) + 1):
            q, b = m - p, n - r + p
            a = -k - 1 - e + r + q
            if b < 0 or a < q:
                continue
            coef = sign * c_r * generalized_binomial(r, p) * (-1) ** (r - p) * generalized_binomial(a, q)
            if not coef:
                continue
            product = s_coefficient(alpha, a) * s_coefficient(beta, b)
            parts.append((coef, VoaElement.from_fock(lattice, product, charge)))
    return IdentityCheck(lhs, combine(lattice, parts))


# ---------------------------------------------------------------------------
# Trace form
# ---------------------------------------------------------------------------


class TraceFormReport(NamedTuple):
    degree: int
    matrix: RatMatrix
    integral: bool
    rank: int
    invariants: AbelianInvariants | None


def _ad_matrix(c: VoaElement, form: GradedZForm, elements: list[VoaElement]) -> RatMatrix:
    n = len(elements)
    columns = []
    for x in elements:
        image = vertex_mode(c, form.degree - 1, x)
        coords = form.coordinates(image) if image else {}
        if coords is None:
            raise StructuralError(f"ad(c) leaves the span of degree {form.degree}")
        columns.append([coords.get(i, Fraction(0)) for i in range(n)])
    return [[columns[j][i] for j in range(n)] for i in range(n)]


def trace_form(lattice: EvenLattice, m: int, form: GradedZForm | None = None) -> TraceFormReport:
    """``f_m(a, b) = tr(ad(a) ad(b))`` on the generators of ``form``
    (the standard form of degree ``m`` by default)."""
    form = standard_form(lattice, m) if form is None else form
    if form.degree != m:
        raise InvalidInputError(f"Form has degree {form.degree}, expected {m}")
    elements = form.elements()
    mats = [_ad_matrix(c, form, elements) for c in elements]
    n = len(elements)
    matrix = [
        [sum((mats[a][i][j] * mats[b][j][i] for i in range(n) for j in range(n)), Fraction(0)) for b in range(n)]
        for a in range(n)
    ]
    integral = all(x.denominator == 1 for row in matrix for x in row)
    invariants = snf([[int(x) for x in row] for row in matrix])[0] if integral else None
    return TraceFormReport(m, matrix, integral, rational_rank(matrix), invariants)
