"""Coefficients of ``E^-(alpha, z)`` and the Jacobi-Trudi elements built on them.

``s_{alpha,n}`` is the ``z^n`` coefficient of ``exp(sum_k alpha(-k)/k z^k)``;
it is computed as a product of one truncated exponential per mode ``k``,
taken in increasing ``k``.  Vectors are given in basis coordinates and may be
rational (dual basis vectors).

Example::

    s = e_minus_series((1,), 2)
    s[2]         # 1/2*g0(-1)^2 + 1/2*g0(-2)
    schur_element((1,), Partition((1, 1)))   # 1/2*g0(-1)^2 - 1/2*g0(-2)
"""

from __future__ import annotations

import logging
from collections.abc import Sequence
from fractions import Fraction
from functools import lru_cache

from ..core.lattice import EvenLattice
from ..errors import InvalidInputError
from .partitions import Partition, colored_partitions, partition_tuples
from .polynomial import Coefficient, FockPolynomial, fock_mul

logger = logging.getLogger(__name__)

type Vector = tuple[Fraction, ...]

# ---------------------------------------------------------------------------
# E^- series
# ---------------------------------------------------------------------------


def _vector(vec: Sequence[Coefficient]) -> Vector:
    return tuple(Fraction(v) for v in vec)


def _series_length(n: int) -> int:
    size = 4
    while size < n:
        size *= 2
    return size


@lru_cache(maxsize=4096)
def _series(vec: Vector, top: int) -> tuple[FockPolynomial, ...]:
    series = [FockPolynomial.one()] + [FockPolynomial() for _ in range(top)]
    if not any(vec):
        return tuple(series)
    for k in range(1, top + 1):
        x = FockPolynomial.oscillator(vec, k).scaled(Fraction(1, k))
        factor = {0: FockPolynomial.one()}
        power = FockPolynomial.one()
        for m in range(1, top // k + 1):
            power = fock_mul(power, x).scaled(Fraction(1, m))
            factor[m * k] = power
        updated = []
        for n in range(top + 1):
            total = FockPolynomial()
            for shift, piece in factor.items():
                if shift <= n and series[n - shift]:
                    total = total + fock_mul(series[n - shift], piece)
            updated.append(total)
        series = updated
    logger.debug("E^- series for %s up to z^%d", vec, top)
    return tuple(series)


def e_minus_series(vec: Sequence[Coefficient], n: int) -> list[FockPolynomial]:
    """``[s_{vec,0}, ..., s_{vec,n}]``."""
    if n < 0:
        raise InvalidInputError(f"e_minus_series needs n >= 0, got {n}")
    return list(_series(_vector(vec), _series_length(n))[: n + 1])


def s_coefficient(vec: Sequence[Coefficient], n: int) -> FockPolynomial:
    """``s_{vec,n}``, zero for negative ``n``."""
    if n < 0:
        return FockPolynomial()
    return _series(_vector(vec), _series_length(n))[n]


# ---------------------------------------------------------------------------
# Jacobi-Trudi elements
# ---------------------------------------------------------------------------


def schur_element(vec: Sequence[Coefficient], partition: Partition) -> FockPolynomial:
    """``det(s_{vec, lambda_i + j - i})`` expanded along the first row."""
    parts = partition.parts
    k = len(parts)
    if k == 0:
        return FockPolynomial.one()
    entries = [[s_coefficient(vec, parts[i] + j - i) for j in range(k)] for i in range(k)]
    memo: dict[tuple[int, tuple[int, ...]], FockPolynomial] = {}

    def minor(row: int, columns: tuple[int, ...]) -> FockPolynomial:
        if row == k:
            return FockPolynomial.one()
        key = (row, columns)
        if key in memo:
            return memo[key]
        total = FockPolynomial()
        for position, col in enumerate(columns):
            entry = entries[row][col]
            if not entry:
                continue
            rest = minor(row + 1, columns[:position] + columns[position + 1 :])
            term = fock_mul(entry, rest)
            total = total - term if position % 2 else total + term
        memo[key] = total
        return total

    return minor(0, tuple(range(k)))


# ---------------------------------------------------------------------------
# Bases of the Heisenberg form
# ---------------------------------------------------------------------------


def m1z_basis(lattice: EvenLattice, degree: int) -> list[FockPolynomial]:
    """Products ``s_{g_i1,n1} ... s_{g_ik,nk}`` of total degree ``degree``,
    one per colored partition (colors are basis indices)."""
    d = lattice.rank
    unit = [tuple(int(i == j) for j in range(d)) for i in range(d)]
    basis = []
    for shape in colored_partitions(d, degree):
        element = FockPolynomial.one()
        for i, n in shape:
            element = fock_mul(element, s_coefficient(unit[i], n))
        basis.append(element)
    return basis


def schur_basis(vectors: Sequence[Sequence[Coefficient]], degree: int) -> list[FockPolynomial]:
    """Products ``s_{lambda_1}(v_1) ... s_{lambda_d}(v_d)`` of total weight
    ``degree``, one per tuple of partitions."""
    basis = []
    for shape in partition_tuples(len(vectors), degree):
        element = FockPolynomial.one()
        for vec, partition in zip(vectors, shape):
            if partition.parts:
                element = fock_mul(element, schur_element(vec, partition))
        basis.append(element)
    return basis
