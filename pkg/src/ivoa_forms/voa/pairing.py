"""The invariant bilinear form and the positive hermitian form on ``V_L``.

Both forms are computed by contraction: creation factors on the left move
across as annihilators using ``[g_i(m), g_j(-n)] = m (g_i, g_j) delta_mn``,
so monomials pair through a permanent of Gram entries per mode.  The
bilinear form adds a sign ``(-1)`` per moved factor and pairs ``e^a`` with
``e^-a``; the hermitian form pairs ``e^a`` with ``e^a``.

:func:`pair_genfun` is an independent second implementation: it reads the
pairing of products of ``E^-`` coefficients off the generating function
``prod (1 - w_i x_j)^(+-(a_i, b_j))``.

Example::

    a1 = catalog("A1")
    s2 = voa_basis(a1, 2)[0]
    pair(s2, s2, PairingForm.HERMITIAN)      # Fraction(3, 1)
"""

from __future__ import annotations

import logging
from collections import defaultdict
from collections.abc import Iterator, Sequence
from concurrent.futures import ThreadPoolExecutor
from enum import StrEnum, auto
from fractions import Fraction
from functools import lru_cache
from math import factorial

from ..core.lattice import EvenLattice
from ..core.types import LatticeVector, RatMatrix
from ..fock.polynomial import FockMonomial
from .element import VoaElement, negate

logger = logging.getLogger(__name__)


class PairingForm(StrEnum):
    BILINEAR = auto()
    HERMITIAN = auto()


# ---------------------------------------------------------------------------
# Monomial contraction
# ---------------------------------------------------------------------------


def _permanent(matrix: Sequence[Sequence[int]]) -> int:
    """Permanent by dynamic programming over column subsets."""
    k = len(matrix)
    if k == 0:
        return 1
    table = {0: 1}
    for row in matrix:
        updated: dict[int, int] = defaultdict(int)
        for mask, value in table.items():
            for col in range(k):
                if not mask & (1 << col) and row[col]:
                    updated[mask | (1 << col)] += value * row[col]
        table = updated
    return table.get((1 << k) - 1, 0)


@lru_cache(maxsize=262144)
def fock_pair(gram: tuple[tuple[int, ...], ...], left: FockMonomial, right: FockMonomial) -> int:
    """Hermitian contraction of two Fock monomials.

    Per mode ``n`` the factor counts must agree; the value is
    ``n^k perm(G[I][J])`` for the index lists ``I`` and ``J`` of that mode.
    """
    if len(left) != len(right):
        return 0
    by_mode_left: dict[int, list[int]] = defaultdict(list)
    by_mode_right: dict[int, list[int]] = defaultdict(list)
    for i, n in left:
        by_mode_left[n].append(i)
    for j, n in right:
        by_mode_right[n].append(j)
    if {n: len(v) for n, v in by_mode_left.items()} != {n: len(v) for n, v in by_mode_right.items()}:
        return 0
    value = 1
    for n, rows in by_mode_left.items():
        cols = by_mode_right[n]
        perm = _permanent([[gram[i][j] for j in cols] for i in rows])
        if not perm:
            return 0
        value *= n ** len(rows) * perm
    return value


def partner(charge: LatticeVector, form: PairingForm) -> LatticeVector:
    """The charge a term of ``charge`` pairs against."""
    return charge if form is PairingForm.HERMITIAN else negate(charge)


def pair(u: VoaElement, v: VoaElement, form: PairingForm) -> Fraction:
    """``(u, v)`` (bilinear) or ``(u | v)`` (hermitian); rational coefficients
    make the hermitian form symmetric bilinear as well."""
    u._check(v)
    gram = u.lattice.gram
    right = v.by_charge()
    total = Fraction(0)
    for (m1, a), c1 in u.terms.items():
        bucket = right.get(partner(a, form))
        if not bucket:
            continue
        sign = -1 if form is PairingForm.BILINEAR and len(m1) % 2 else 1
        for m2, c2 in bucket.items():
            value = fock_pair(gram, m1, m2)
            if value:
                total += sign * value * c1 * c2
    return total


# ---------------------------------------------------------------------------
# Generating-function oracle
# ---------------------------------------------------------------------------


def generalized_binomial(top: Fraction | int, k: int) -> Fraction:
    value = Fraction(1)
    for t in range(k):
        value *= Fraction(top) - t
    return value / factorial(k)


def _tables(rows: Sequence[int], cols: Sequence[int]) -> Iterator[list[list[int]]]:
    """Non-negative integer matrices with the given row and column sums."""
    k, l = len(rows), len(cols)
    cells = [(i, j) for i in range(k) for j in range(l)]
    table = [[0] * l for _ in range(k)]
    row_left = list(rows)
    col_left = list(cols)

    def fill(position: int) -> Iterator[list[list[int]]]:
        if position == len(cells):
            if not any(row_left) and not any(col_left):
                yield [r[:] for r in table]
            return
        i, j = cells[position]
        last_in_row = j == l - 1
        top = min(row_left[i], col_left[j])
        low = row_left[i] if last_in_row else 0
        if low > top:
            return
        for value in range(low, top + 1):
            table[i][j] = value
            row_left[i] -= value
            col_left[j] -= value
            yield from fill(position + 1)
            row_left[i] += value
            col_left[j] += value
        table[i][j] = 0

    yield from fill(0)


def pair_genfun(
    lattice: EvenLattice,
    alphas: Sequence[Sequence[int]],
    ms: Sequence[int],
    betas: Sequence[Sequence[int]],
    ns: Sequence[int],
    alpha: Sequence[int],
    beta: Sequence[int],
    form: PairingForm,
) -> Fraction:
    """Pairing of ``s_{a_1,m_1} ... e^alpha`` with ``s_{b_1,n_1} ... e^beta``.

    This is the coefficient of ``w^m x^n`` in ``prod_ij (1 - w_i x_j)^(e_ij)``
    where ``e_ij = (a_i, b_j)`` for the bilinear form (which also needs
    ``alpha = -beta``) and ``e_ij = -(a_i, b_j)`` for the hermitian form
    (``alpha = beta``).
    """
    alpha, beta = tuple(alpha), tuple(beta)
    if form is PairingForm.BILINEAR and alpha != negate(beta):
        return Fraction(0)
    if form is PairingForm.HERMITIAN and alpha != beta:
        return Fraction(0)
    if sum(ms) != sum(ns):
        return Fraction(0)
    sign = 1 if form is PairingForm.BILINEAR else -1
    exponents = [[sign * lattice.inner(a, b) for b in betas] for a in alphas]
    total = Fraction(0)
    for table in _tables(ms, ns):
        term = Fraction(1)
        for i, row in enumerate(table):
            for j, k in enumerate(row):
                if k:
                    term *= generalized_binomial(exponents[i][j], k) * (-1) ** k
                    if not term:
                        break
            if not term:
                break
        total += term
    return total


# ---------------------------------------------------------------------------
# Gram matrices
# ---------------------------------------------------------------------------


def graded_gram(
    elements: Sequence[VoaElement], form: PairingForm, *, threads: int = 1
) -> RatMatrix:
    """Matrix of pairwise values; entries between incompatible charges are
    skipped without evaluation."""
    n = len(elements)
    if n == 0:
        return []
    charges = [frozenset(e.charges()) for e in elements]
    partners = [frozenset(partner(c, form) for c in cs) for cs in charges]
    by_charge: dict[LatticeVector, list[int]] = defaultdict(list)
    for j, cs in enumerate(charges):
        for c in cs:
            by_charge[c].append(j)

    def row(i: int) -> list[Fraction]:
        values = [Fraction(0)] * n
        candidates = sorted({j for c in partners[i] for j in by_charge.get(c, ())})
        for j in candidates:
            values[j] = pair(elements[i], elements[j], form)
        return values

    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            rows = list(pool.map(row, range(n)))
    else:
        rows = [row(i) for i in range(n)]
    logger.debug("graded_gram: %d x %d (%s)", n, n, form)
    return rows
