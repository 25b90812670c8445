"""Exact lattice reduction and short-vector enumeration on Gram matrices.

Everything runs on :class:`fractions.Fraction`; reduction only speeds up
the search and never changes an answer.  The enumeration is the classical
Fincke-Pohst recursion over the quadratic form written as
``sum_i q_ii (x_i + sum_{j>i} q_ij x_j)^2``.

Example::

    norm, witness = min_norm(catalog("E8").gram, 4)     # norm == 2
"""

from __future__ import annotations

import logging
from collections.abc import Iterator
from fractions import Fraction
from math import ceil, floor, isqrt

from ..errors import InvalidInputError
from .lattice import EvenLattice
from .matrices import identity
from .types import Bound, LatticeVector, RatRows

logger = logging.getLogger(__name__)

type GramRows = RatRows


# ---------------------------------------------------------------------------
# LLL on a Gram matrix
# ---------------------------------------------------------------------------


def lll_gram(
    gram: GramRows, delta: Fraction = Fraction(3, 4)
) -> tuple[list[list[Fraction]], list[list[int]]]:
    """LLL-reduce the basis behind ``gram``.

    Returns ``(G', T)`` with ``G' = T G T^t`` and ``T`` unimodular; row ``i``
    of ``T`` expresses reduced vector ``i`` in the input basis.
    """
    n = len(gram)
    g = [[Fraction(x) for x in row] for row in gram]
    t = identity(n)
    if n <= 1:
        return g, t
    mu = [[Fraction(0)] * n for _ in range(n)]
    b = [Fraction(0)] * n
    b[0] = g[0][0]

    def reduce(k: int, l: int) -> None:
        if abs(mu[k][l]) <= Fraction(1, 2):
            return
        q = round(mu[k][l])
        t[k] = [x - q * y for x, y in zip(t[k], t[l])]
        g[k] = [x - q * y for x, y in zip(g[k], g[l])]
        for row in g:
            row[k] -= q * row[l]
        mu[k][l] -= q
        for i in range(l):
            mu[k][i] -= q * mu[l][i]

    def swap(k: int, kmax: int) -> None:
        t[k], t[k - 1] = t[k - 1], t[k]
        g[k], g[k - 1] = g[k - 1], g[k]
        for row in g:
            row[k], row[k - 1] = row[k - 1], row[k]
        for j in range(k - 1):
            mu[k][j], mu[k - 1][j] = mu[k - 1][j], mu[k][j]
        m = mu[k][k - 1]
        big = b[k] + m * m * b[k - 1]
        mu[k][k - 1] = m * b[k - 1] / big
        b[k] = b[k - 1] * b[k] / big
        b[k - 1] = big
        for i in range(k + 1, kmax + 1):
            tmp = mu[i][k]
            mu[i][k] = mu[i][k - 1] - m * tmp
            mu[i][k - 1] = tmp + mu[k][k - 1] * mu[i][k]

    k, kmax = 1, 0
    while k < n:
        if k > kmax:
            kmax = k
            for j in range(k):
                mu[k][j] = (g[k][j] - sum(mu[j][i] * mu[k][i] * b[i] for i in range(j))) / b[j]
            b[k] = g[k][k] - sum(mu[k][j] ** 2 * b[j] for j in range(k))
        reduce(k, k - 1)
        if b[k] < (delta - mu[k][k - 1] ** 2) * b[k - 1]:
            swap(k, kmax)
            k = max(1, k - 1)
        else:
            for l in range(k - 2, -1, -1):
                reduce(k, l)
            k += 1
    return g, t


# ---------------------------------------------------------------------------
# Fincke-Pohst
# ---------------------------------------------------------------------------


def _quadratic_form(gram: GramRows) -> list[list[Fraction]]:
    n = len(gram)
    q = [[Fraction(x) for x in row] for row in gram]
    for i in range(n):
        if q[i][i] <= 0:
            raise InvalidInputError("Gram matrix is not positive definite")
        for j in range(i + 1, n):
            q[j][i] = q[i][j]
            q[i][j] = q[i][j] / q[i][i]
        for k in range(i + 1, n):
            for l in range(k, n):
                q[k][l] -= q[k][i] * q[i][l]
    return q


def _sqrt_floor(value: Fraction) -> int:
    return isqrt(value.numerator * value.denominator) // value.denominator


def _candidates(q_ii: Fraction, center: Fraction, room: Fraction, strict: bool) -> list[int]:
    """Integers ``t`` with ``q_ii (t + center)^2 <= room`` (``<`` if strict)."""
    if room < 0 or (strict and room == 0):
        return []
    r = _sqrt_floor(room / q_ii)
    lo, hi = floor(-center) - r - 1, ceil(-center) + r + 1
    out = []
    for t in range(lo, hi + 1):
        value = q_ii * (t + center) ** 2
        if value < room or (not strict and value == room):
            out.append(t)
    return out


def short_vectors(
    gram: GramRows, bound: Fraction | int, *, include_zero: bool = False
) -> Iterator[tuple[Fraction, tuple[int, ...]]]:
    """Yield ``(norm, x)`` for every coordinate vector with norm ``<= bound``."""
    q = _quadratic_form(gram)
    n = len(q)
    bound = Fraction(bound)
    x = [0] * n

    def search(i: int, partial: Fraction) -> Iterator[tuple[Fraction, tuple[int, ...]]]:
        center = sum((q[i][j] * x[j] for j in range(i + 1, n)), Fraction(0))
        for t in _candidates(q[i][i], center, bound - partial, strict=False):
            x[i] = t
            value = partial + q[i][i] * (t + center) ** 2
            if i == 0:
                if include_zero or any(x):
                    yield value, tuple(x)
            else:
                yield from search(i - 1, value)
        x[i] = 0

    if n:
        yield from search(n - 1, Fraction(0))


def min_norm(
    gram: GramRows, bound: Fraction | int
) -> tuple[Fraction | Bound, tuple[int, ...] | None]:
    """Exact minimum norm of nonzero vectors when it is ``<= bound``.

    The basis is LLL-reduced first; the reduced diagonal seeds the search
    bound and the enumeration then looks only for strictly shorter vectors.
    Returns ``(Bound.NONE_BELOW_BOUND, None)`` when nothing is short enough.
    """
    bound = Fraction(bound)
    if bound <= 0:
        raise InvalidInputError(f"min_norm bound must be positive, got {bound}")
    reduced, transform = lll_gram(gram)
    n = len(reduced)
    best: Fraction | None = None
    best_x: list[int] | None = None
    for i in range(n):
        if reduced[i][i] <= bound and (best is None or reduced[i][i] < best):
            best = reduced[i][i]
            best_x = [int(i == j) for j in range(n)]
    logger.debug("min_norm: rank %d, seeded bound %s", n, best)

    q = _quadratic_form(reduced)
    x = [0] * n

    def search(i: int, partial: Fraction) -> None:
        nonlocal best, best_x
        center = sum((q[i][j] * x[j] for j in range(i + 1, n)), Fraction(0))
        limit = bound if best is None else best
        for t in _candidates(q[i][i], center, limit - partial, strict=best is not None):
            x[i] = t
            value = partial + q[i][i] * (t + center) ** 2
            limit = bound if best is None else best
            if value > limit or (best is not None and value == limit):
                continue
            if i == 0:
                if any(x):
                    best, best_x = value, list(x)
                    logger.debug("min_norm: improved to %s", value)
            else:
                search(i - 1, value)
        x[i] = 0

    if n:
        search(n - 1, Fraction(0))
    if best is None or best_x is None:
        return Bound.NONE_BELOW_BOUND, None
    witness = tuple(
        sum(best_x[i] * transform[i][j] for i in range(n)) for j in range(n)
    )
    return best, witness


# ---------------------------------------------------------------------------
# Lattice vectors by norm
# ---------------------------------------------------------------------------


def lattice_vectors(lattice: EvenLattice, max_norm: int) -> list[LatticeVector]:
    """All vectors of norm ``<= max_norm`` (zero included), sorted by
    ``(norm, coordinates)``."""
    if max_norm < 0:
        return []
    reduced, transform = lll_gram(lattice.gram)
    d = lattice.rank
    found: list[tuple[int, LatticeVector]] = []
    for norm, x in short_vectors(reduced, max_norm, include_zero=True):
        coords = tuple(sum(x[i] * transform[i][j] for i in range(d)) for j in range(d))
        found.append((int(norm), coords))
    found.sort()
    logger.debug("lattice_vectors(%s, %d): %d vectors", lattice, max_norm, len(found))
    return [coords for _, coords in found]


def vectors_of_norm(lattice: EvenLattice, norm: int) -> list[LatticeVector]:
    return [v for v in lattice_vectors(lattice, norm) if lattice.norm(v) == norm]
