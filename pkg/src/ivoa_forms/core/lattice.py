"""Positive definite even lattices and the catalog used throughout.

Example::

    from ivoa_forms.core import catalog, discriminant_group

    e8 = catalog("E8")
    discriminant_group(e8).is_trivial      # True
    discriminant_group(catalog("A2"))      # AbelianInvariants(divisors=(3,))
"""

from __future__ import annotations

import re
from collections.abc import Callable, Sequence
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property

from ..errors import InvalidInputError
from .matrices import determinant, rational_inverse, snf
from .types import AbelianInvariants, LatticeVector, RatMatrix

# ---------------------------------------------------------------------------
# EvenLattice
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class EvenLattice:
    """An even lattice given by the Gram matrix of a basis ``gamma_i``.

    Construction checks symmetry, even diagonal and positive definiteness
    (all leading principal minors positive).  Instances hash by Gram matrix
    so they can key caches.
    """

    gram: tuple[tuple[int, ...], ...]
    name: str | None = field(default=None, compare=False)

    def __post_init__(self) -> None:
        gram = tuple(tuple(int(x) for x in row) for row in self.gram)
        object.__setattr__(self, "gram", gram)
        d = len(gram)
        if d == 0:
            raise InvalidInputError("A lattice needs rank at least 1")
        if any(len(row) != d for row in gram):
            raise InvalidInputError(f"Gram matrix must be square, got rows {[len(r) for r in gram]}")
        for i in range(d):
            if gram[i][i] % 2:
                raise InvalidInputError(f"Gram diagonal entry {i} is odd: {gram[i][i]}")
            for j in range(i):
                if gram[i][j] != gram[j][i]:
                    raise InvalidInputError(f"Gram matrix is not symmetric at ({i}, {j})")
        for k in range(1, d + 1):
            if determinant([row[:k] for row in gram[:k]]) <= 0:
                raise InvalidInputError(
                    f"Gram matrix is not positive definite (leading minor {k})"
                )

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], name: str | None = None) -> EvenLattice:
        return cls(tuple(tuple(r) for r in rows), name)

    @property
    def rank(self) -> int:
        return len(self.gram)

    @property
    def label(self) -> str:
        return self.name or f"L{self.gram}"

    @cached_property
    def det(self) -> int:
        return int(determinant(self.gram))

    @cached_property
    def dual_gram(self) -> RatMatrix:
        return rational_inverse(self.gram)

    def inner(self, a: Sequence[Fraction | int], b: Sequence[Fraction | int]) -> Fraction | int:
        return sum(
            a[i] * self.gram[i][j] * b[j]
            for i in range(self.rank)
            if a[i]
            for j in range(self.rank)
            if b[j]
        )

    def norm(self, a: Sequence[Fraction | int]) -> Fraction | int:
        return self.inner(a, a)

    def basis_vector(self, i: int) -> LatticeVector:
        return tuple(int(i == j) for j in range(self.rank))

    def dual_basis_vector(self, i: int) -> tuple[Fraction, ...]:
        """Coordinates of ``beta_i`` (with ``(beta_i, gamma_j) = delta_ij``)."""
        return tuple(self.dual_gram[i])

    def __hash__(self) -> int:
        return hash(self.gram)

    def __str__(self) -> str:
        return self.label


# ---------------------------------------------------------------------------
# Operations
# ---------------------------------------------------------------------------


def lattice_dual(lattice: EvenLattice) -> RatMatrix:
    """Gram matrix of the dual basis, i.e. ``gram^-1``."""
    return [list(row) for row in lattice.dual_gram]


def discriminant_group(lattice: EvenLattice) -> AbelianInvariants:
    invariants, _ = snf(lattice.gram)
    return invariants


def orthogonal_sum(*lattices: EvenLattice) -> EvenLattice:
    size = sum(l.rank for l in lattices)
    rows = [[0] * size for _ in range(size)]
    offset = 0
    for l in lattices:
        for i in range(l.rank):
            for j in range(l.rank):
                rows[offset + i][offset + j] = l.gram[i][j]
        offset += l.rank
    name = "+".join(l.label for l in lattices)
    return EvenLattice.from_rows(rows, name)


def scaled(lattice: EvenLattice, factor: int, name: str | None = None) -> EvenLattice:
    return EvenLattice.from_rows([[factor * x for x in row] for row in lattice.gram], name)


# ---------------------------------------------------------------------------
# Catalog
# ---------------------------------------------------------------------------

E8_CARTAN: tuple[tuple[int, ...], ...] = (
    (2, 0, -1, 0, 0, 0, 0, 0),
    (0, 2, 0, -1, 0, 0, 0, 0),
    (-1, 0, 2, -1, 0, 0, 0, 0),
    (0, -1, -1, 2, -1, 0, 0, 0),
    (0, 0, 0, -1, 2, -1, 0, 0),
    (0, 0, 0, 0, -1, 2, -1, 0),
    (0, 0, 0, 0, 0, -1, 2, -1),
    (0, 0, 0, 0, 0, 0, -1, 2),
)


def type_a(n: int) -> EvenLattice:
    if n < 1:
        raise InvalidInputError(f"A(n) needs n >= 1, got {n}")
    rows = [[2 if i == j else -1 if abs(i - j) == 1 else 0 for j in range(n)] for i in range(n)]
    return EvenLattice.from_rows(rows, f"A{n}")


def type_d(n: int) -> EvenLattice:
    if n < 3:
        raise InvalidInputError(f"D(n) needs n >= 3, got {n}")
    rows = [[0] * n for _ in range(n)]
    edges = [(i, i + 1) for i in range(n - 2)] + [(n - 3, n - 1)]
    for i in range(n):
        rows[i][i] = 2
    for i, j in edges:
        rows[i][j] = rows[j][i] = -1
    return EvenLattice.from_rows(rows, f"D{n}")


def rank_one(norm: int) -> EvenLattice:
    if norm <= 0 or norm % 2:
        raise InvalidInputError(f"RANK1(n) needs a positive even norm, got {norm}")
    return EvenLattice.from_rows([[norm]], f"RANK1({norm})")


_PATTERNS: tuple[tuple[re.Pattern[str], Callable[[re.Match[str]], EvenLattice]], ...] = (
    (re.compile(r"^A\(?(\d+)\)?$"), lambda m: type_a(int(m[1]))),
    (re.compile(r"^D\(?(\d+)\)?$"), lambda m: type_d(int(m[1]))),
    (re.compile(r"^E8$"), lambda m: EvenLattice(E8_CARTAN, "E8")),
    (re.compile(r"^EE8$"), lambda m: scaled(EvenLattice(E8_CARTAN), 2, "EE8")),
    (re.compile(r"^RANK1\((\d+)\)$"), lambda m: rank_one(int(m[1]))),
)


def catalog(name: str) -> EvenLattice:
    """Resolve ``A1``, ``A(n)``, ``D(n)``, ``E8``, ``EE8``, ``RANK1(2k)`` and
    ``+``-joined orthogonal sums such as ``A1+A1``."""
    parts = [p.strip().upper() for p in name.split("+")]
    if len(parts) > 1:
        return orthogonal_sum(*(catalog(p) for p in parts))
    key = parts[0]
    for pattern, build in _PATTERNS:
        match = pattern.match(key)
        if match:
            return build(match)
    raise InvalidInputError(f"Unknown lattice name: {name!r}")
