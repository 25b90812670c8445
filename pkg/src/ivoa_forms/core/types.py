"""Plain value types shared across the package."""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass
from enum import StrEnum, auto
from fractions import Fraction
from math import prod

from sympy import factorint

# ---------------------------------------------------------------------------
# Aliases
# ---------------------------------------------------------------------------

type IntMatrix = list[list[int]]
type RatMatrix = list[list[Fraction]]
type IntRows = Sequence[Sequence[int]]
type RatRows = Sequence[Sequence[Fraction | int]]

type LatticeVector = tuple[int, ...]
"""Integer coordinates in the lattice basis ``(gamma_1, ..., gamma_d)``."""


class Bound(StrEnum):
    """Non-numeric outcomes of exact searches and index computations."""

    INFINITE = auto()
    NONE_BELOW_BOUND = auto()


# ---------------------------------------------------------------------------
# Abelian invariants
# ---------------------------------------------------------------------------


@dataclass(frozen=True, slots=True)
class AbelianInvariants:
    """Elementary divisors ``> 1`` of a finitely generated abelian group.

    ``free_rank`` counts the infinite cyclic summands; it is zero for the
    finite quotients that appear in lattice and form comparisons.
    """

    divisors: tuple[int, ...] = ()
    free_rank: int = 0

    def __post_init__(self) -> None:
        for a, b in zip(self.divisors, self.divisors[1:]):
            if a <= 1 or b % a:
                raise ValueError(f"Not a divisibility chain: {self.divisors}")
        if self.divisors and self.divisors[-1] <= 1:
            raise ValueError(f"Divisors must exceed 1: {self.divisors}")

    @classmethod
    def from_cyclic_orders(
        cls, orders: Sequence[int], free_rank: int = 0
    ) -> AbelianInvariants:
        """Invariant factors of ``Z/o_1 + Z/o_2 + ...`` (any orders, any order)."""
        powers: dict[int, list[int]] = {}
        for order in orders:
            if abs(order) <= 1:
                continue
            for p, e in factorint(abs(order)).items():
                powers.setdefault(p, []).append(p**e)
        length = max((len(v) for v in powers.values()), default=0)
        factors = [1] * length
        for values in powers.values():
            values.sort()
            for i, q in enumerate(values):
                factors[length - len(values) + i] *= q
        return cls(tuple(factors), free_rank)

    def __add__(self, other: AbelianInvariants) -> AbelianInvariants:
        return AbelianInvariants.from_cyclic_orders(
            self.divisors + other.divisors, self.free_rank + other.free_rank
        )

    @property
    def order(self) -> int | Bound:
        if self.free_rank:
            return Bound.INFINITE
        return prod(self.divisors)

    @property
    def is_trivial(self) -> bool:
        return not self.divisors and not self.free_rank

    def __str__(self) -> str:
        parts = [f"Z/{d}" for d in self.divisors] + ["Z"] * self.free_rank
        return " + ".join(parts) if parts else "0"
