"""Integer partitions and their colored variants.

Colored partitions of ``n`` with ``d`` colors index the monomial basis of the
degree ``n`` piece of a rank ``d`` Heisenberg Fock space.

Example::

    [p.parts for p in partitions(4)]
    # [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
"""

from __future__ import annotations

from collections.abc import Iterator
from dataclasses import dataclass
from functools import cache
from itertools import combinations_with_replacement, groupby, product

from ..errors import InvalidInputError

# ---------------------------------------------------------------------------
# Partition
# ---------------------------------------------------------------------------


@dataclass(frozen=True, slots=True, order=True)
class Partition:
    parts: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        parts = tuple(int(p) for p in self.parts)
        if any(p <= 0 for p in parts):
            raise InvalidInputError(f"Partition parts must be positive: {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise InvalidInputError(f"Partition parts must be weakly decreasing: {parts}")
        object.__setattr__(self, "parts", parts)

    @property
    def weight(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.parts)) + ")"


def _descending(n: int, largest: int) -> Iterator[tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _descending(n - first, first):
            yield (first, *rest)


@cache
def _partitions(n: int) -> tuple[Partition, ...]:
    return tuple(Partition(p) for p in _descending(n, n))


def partitions(n: int) -> list[Partition]:
    """All partitions of ``n`` in reverse lexicographic order."""
    if n < 0:
        raise InvalidInputError(f"partitions(n) needs n >= 0, got {n}")
    return list(_partitions(n))


# ---------------------------------------------------------------------------
# Colored partitions
# ---------------------------------------------------------------------------

type ColoredPart = tuple[int, int]
"""``(color, part)``; for Fock monomials the color is a basis index."""


@cache
def _colored(colors: int, n: int) -> tuple[tuple[ColoredPart, ...], ...]:
    out: list[tuple[ColoredPart, ...]] = []
    for partition in _partitions(n):
        groups = [(part, len(list(run))) for part, run in groupby(partition.parts)]
        choices = [
            [tuple((c, part) for c in combo) for combo in combinations_with_replacement(range(colors), size)]
            for part, size in groups
        ]
        for pick in product(*choices):
            out.append(tuple(sorted(item for chunk in pick for item in chunk)))
    return tuple(out)


def colored_partitions(colors: int, n: int) -> list[tuple[ColoredPart, ...]]:
    """Multisets of ``(color, part)`` with parts summing to ``n``.

    The outer order follows :func:`partitions`; within one shape colors are
    assigned in lexicographic order.  Each multiset comes out sorted.
    """
    if colors < 1 or n < 0:
        raise InvalidInputError(f"colored_partitions needs colors >= 1 and n >= 0, got {colors}, {n}")
    return list(_colored(colors, n))


def partition_tuples(colors: int, n: int) -> list[tuple[Partition, ...]]:
    """Tuples ``(lambda_1, ..., lambda_colors)`` with total weight ``n``."""
    if colors < 1 or n < 0:
        raise InvalidInputError(f"partition_tuples needs colors >= 1 and n >= 0, got {colors}, {n}")
    return list(_tuples(colors, n))


@cache
def _tuples(colors: int, n: int) -> tuple[tuple[Partition, ...], ...]:
    if colors == 1:
        return tuple((p,) for p in _partitions(n))
    out = []
    for first in range(n, -1, -1):
        for head in _partitions(first):
            for tail in _tuples(colors - 1, n - first):
                out.append((head, *tail))
    return tuple(out)
