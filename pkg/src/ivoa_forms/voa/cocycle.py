"""The bimultiplicative sign cocycle on an even lattice.

``eps(a, b) = (-1)^(a^t C b)`` for an exponent matrix ``C`` over ``Z/2`` with
``C_ij = 0`` above the diagonal, ``(g_i, g_j)`` below it and ``(g_i, g_i)/2``
on it; this gives ``eps(a, a) = (-1)^((a,a)/2)`` and
``eps(a, b) eps(b, a) = (-1)^(a,b)``.

Example::

    eps = make_cocycle(catalog("A2"))
    eps((1, 0), (0, 1)) * eps((0, 1), (1, 0))     # -1
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass, field
from functools import cache

from ..core.lattice import EvenLattice
from ..errors import InvalidInputError

type Exponents = tuple[tuple[int, ...], ...]


@dataclass(frozen=True, slots=True)
class Cocycle:
    """Sign function ``eps(a, b)`` on lattice coordinates."""

    lattice: EvenLattice
    exponents: Exponents
    _pairs: tuple[tuple[int, int], ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        pairs = tuple(
            (i, j)
            for i, row in enumerate(self.exponents)
            for j, c in enumerate(row)
            if c % 2
        )
        object.__setattr__(self, "_pairs", pairs)

    def parity(self, a: Sequence[int], b: Sequence[int]) -> int:
        return sum(a[i] * b[j] for i, j in self._pairs) % 2

    def __call__(self, a: Sequence[int], b: Sequence[int]) -> int:
        return -1 if self.parity(a, b) else 1

    def table(self) -> list[list[int]]:
        """``eps(g_i, g_j)`` on the basis."""
        d = self.lattice.rank
        unit = [self.lattice.basis_vector(i) for i in range(d)]
        return [[self(unit[i], unit[j]) for j in range(d)] for i in range(d)]


@cache
def make_cocycle(lattice: EvenLattice) -> Cocycle:
    g = lattice.gram
    d = lattice.rank
    exponents = tuple(
        tuple(0 if i < j else (g[i][i] // 2) % 2 if i == j else g[i][j] % 2 for j in range(d))
        for i in range(d)
    )
    return Cocycle(lattice, exponents)


# ---------------------------------------------------------------------------
# Quadratic refinements
# ---------------------------------------------------------------------------


def symmetric_mod2(matrix: Sequence[Sequence[int]]) -> bool:
    return all(
        (matrix[i][j] - matrix[j][i]) % 2 == 0 for i in range(len(matrix)) for j in range(i)
    )


def quadratic_sign(exponents: Sequence[Sequence[int]], a: Sequence[int]) -> int:
    """``(-1)^Q(a)`` with ``Q(a+b) - Q(a) - Q(b) = a^t R b (mod 2)``.

    ``R`` must be symmetric mod 2;
    ``Q(a) = sum_{i<j} a_i a_j R_ij + sum_i C(a_i, 2) R_ii``.
    """
    if not symmetric_mod2(exponents):
        raise InvalidInputError("Sign form is not symmetric mod 2; no consistent lift exists")
    d = len(a)
    total = 0
    for i in range(d):
        if not a[i]:
            continue
        total += a[i] * (a[i] - 1) // 2 * exponents[i][i]
        for j in range(i + 1, d):
            total += a[i] * a[j] * exponents[i][j]
    return -1 if total % 2 else 1
