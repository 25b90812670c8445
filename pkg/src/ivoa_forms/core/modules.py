"""Sparse integer row modules kept in canonical Hermite normal form.

Vectors are inserted one at a time in the manner of an incremental Hermite
reduction: a new vector is cleared against existing pivots and either
becomes a pivot row itself or is absorbed through an extended-gcd step.
Columns that never share a row decouple into independent blocks, and every
operation here runs block by block.

Example::

    m = IntegerModule.span(3, [[2, 0, 0], [0, 2, 2], [1, 1, 1]])
    m.rows          # (((0, 1), (1, 1), (2, 1)), ((1, 2), (2, 2)))
    m.contains({1: 2, 2: 2})   # True
"""

from __future__ import annotations

from collections.abc import Iterable, Mapping, Sequence
from fractions import Fraction
from math import gcd

from ..errors import ContainmentError, InvalidInputError
from .matrices import SparseRow, coupled_blocks, determinant, integer_kernel, snf, sparse, xgcd
from .types import AbelianInvariants, Bound, IntMatrix

type SparseItems = tuple[tuple[int, int], ...]


# ---------------------------------------------------------------------------
# Row arithmetic
# ---------------------------------------------------------------------------


def _combine(a: int, x: SparseRow, b: int, y: SparseRow) -> SparseRow:
    out: SparseRow = {}
    for c in x.keys() | y.keys():
        v = a * x.get(c, 0) + b * y.get(c, 0)
        if v:
            out[c] = v
    return out


def _insert(pivots: dict[int, SparseRow], vec: SparseRow) -> None:
    while vec:
        j = min(vec)
        row = pivots.get(j)
        if row is None:
            pivots[j] = vec
            return
        a, b = row[j], vec[j]
        if b % a == 0:
            vec = _combine(1, vec, -(b // a), row)
        elif a % b == 0:
            pivots[j] = vec
            vec = _combine(1, row, -(a // b), vec)
        else:
            x, y, g = xgcd(a, b)
            pivots[j] = _combine(x, row, y, vec)
            vec = _combine(-(b // g), row, a // g, vec)


def _hermite(vectors: Iterable[SparseRow]) -> list[SparseItems]:
    pivots: dict[int, SparseRow] = {}
    for vec in vectors:
        _insert(pivots, dict(vec))
    order = sorted(pivots)
    for k, p in enumerate(order):
        row = pivots[p]
        if row[p] < 0:
            row = pivots[p] = {c: -v for c, v in row.items()}
        for q in order[:k]:
            upper = pivots[q]
            factor = upper.get(p, 0) // row[p]
            if factor:
                pivots[q] = _combine(1, upper, -factor, row)
    return [tuple(sorted(pivots[p].items())) for p in order]


def _dense(row: Mapping[int, int] | SparseItems, columns: Sequence[int]) -> list[int]:
    lookup = dict(row)
    return [lookup.get(c, 0) for c in columns]


# ---------------------------------------------------------------------------
# IntegerModule
# ---------------------------------------------------------------------------


class IntegerModule:
    """A submodule of ``Z^dimension`` given by its canonical HNF rows.

    Rows are stored sparsely as ``((column, value), ...)`` sorted by pivot
    column; two modules are equal exactly when their rows are.
    """

    __slots__ = ("dimension", "rows", "_by_pivot")

    def __init__(self, dimension: int, rows: Iterable[SparseItems] = ()) -> None:
        self.dimension = dimension
        self.rows: tuple[SparseItems, ...] = tuple(rows)
        self._by_pivot: dict[int, SparseRow] = {row[0][0]: dict(row) for row in self.rows}

    @classmethod
    def span(
        cls, dimension: int, vectors: Iterable[Sequence[int] | Mapping[int, int]]
    ) -> IntegerModule:
        rows = [r for r in map(sparse, vectors) if r]
        for r in rows:
            if max(r) >= dimension or min(r) < 0:
                raise InvalidInputError(
                    f"Vector support {sorted(r)} outside ambient dimension {dimension}"
                )
        canonical: list[SparseItems] = []
        for group in _group_by_block(rows):
            canonical.extend(_hermite(group))
        canonical.sort(key=lambda row: row[0][0])
        return cls(dimension, canonical)

    @classmethod
    def full(cls, dimension: int) -> IntegerModule:
        return cls(dimension, (((i, 1),) for i in range(dimension)))

    # -- basic properties ----------------------------------------------------

    @property
    def rank(self) -> int:
        return len(self.rows)

    @property
    def pivots(self) -> tuple[int, ...]:
        return tuple(row[0][0] for row in self.rows)

    @property
    def content(self) -> int:
        """gcd of all entries (0 for the zero module)."""
        return gcd(*(v for row in self.rows for _, v in row))

    def dense_rows(self) -> IntMatrix:
        columns = range(self.dimension)
        return [_dense(row, columns) for row in self.rows]

    def support(self) -> set[int]:
        return {c for row in self.rows for c, _ in row}

    # -- membership ----------------------------------------------------------

    def contains(self, vec: Sequence[int] | Mapping[int, int]) -> bool:
        coords = self.coordinates(vec)
        return coords is not None and all(v.denominator == 1 for v in coords.values())

    def coordinates(
        self, vec: Sequence[Fraction | int] | Mapping[int, Fraction | int]
    ) -> dict[int, Fraction] | None:
        """Rational coordinates with respect to :attr:`rows` (keyed by row
        position), or ``None`` when ``vec`` is outside the rational span."""
        items = vec.items() if isinstance(vec, Mapping) else enumerate(vec)
        rest = {int(c): Fraction(v) for c, v in items if v}
        position = {p: i for i, p in enumerate(self.pivots)}
        coords: dict[int, Fraction] = {}
        while rest:
            j = min(rest)
            row = self._by_pivot.get(j)
            if row is None:
                return None
            q = rest[j] / row[j]
            coords[position[j]] = q
            for c, v in row.items():
                value = rest.get(c, 0) - q * v
                if value:
                    rest[c] = value
                else:
                    rest.pop(c, None)
        return coords

    # -- constructions -------------------------------------------------------

    def __add__(self, other: IntegerModule) -> IntegerModule:
        self._check_ambient(other)
        return IntegerModule.span(self.dimension, [dict(r) for r in self.rows + other.rows])

    def scaled(self, factor: int) -> IntegerModule:
        if factor == 0:
            return IntegerModule(self.dimension)
        return IntegerModule.span(
            self.dimension, [{c: factor * v for c, v in row} for row in self.rows]
        )

    def divided(self, factor: int) -> IntegerModule:
        if any(v % factor for row in self.rows for _, v in row):
            raise ValueError(f"Module entries are not all divisible by {factor}")
        return IntegerModule(
            self.dimension, (tuple((c, v // factor) for c, v in row) for row in self.rows)
        )

    def intersection(self, other: IntegerModule) -> IntegerModule:
        """``self & other`` through the integer kernel of the stacked rows."""
        self._check_ambient(other)
        own = [dict(r) for r in self.rows]
        theirs = [dict(r) for r in other.rows]
        result: list[SparseRow] = []
        for columns, mine, yours in _paired_blocks(own, theirs):
            if not mine or not yours:
                continue
            stacked = [_dense(r, columns) for r in mine + yours]
            for combo in integer_kernel(stacked):
                vec: SparseRow = {}
                for coef, r in zip(combo, mine):
                    if coef:
                        vec = _combine(1, vec, coef, r)
                result.append(vec)
        return IntegerModule.span(self.dimension, result)

    __and__ = intersection

    def restrict(self, columns: Iterable[int]) -> IntegerModule:
        """Elements supported inside ``columns`` (intersection with a
        coordinate subspace)."""
        allowed = set(columns)
        result: list[SparseRow] = []
        for group in _group_by_block([dict(r) for r in self.rows]):
            outside = sorted({c for r in group for c in r} - allowed)
            if not outside:
                result.extend(group)
                continue
            projected = [_dense(r, outside) for r in group]
            for combo in integer_kernel(projected):
                vec: SparseRow = {}
                for coef, r in zip(combo, group):
                    if coef:
                        vec = _combine(1, vec, coef, r)
                result.append(vec)
        return IntegerModule.span(self.dimension, result)

    # -- dunder --------------------------------------------------------------

    def _check_ambient(self, other: IntegerModule) -> None:
        if self.dimension != other.dimension:
            raise InvalidInputError(
                f"Ambient mismatch: dimension {self.dimension} vs {other.dimension}"
            )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, IntegerModule):
            return NotImplemented
        return self.dimension == other.dimension and self.rows == other.rows

    def __hash__(self) -> int:
        return hash((self.dimension, self.rows))

    def __le__(self, other: IntegerModule) -> bool:
        self._check_ambient(other)
        return all(other.contains(dict(r)) for r in self.rows)

    def __repr__(self) -> str:
        return f"IntegerModule(dimension={self.dimension}, rank={self.rank})"


# ---------------------------------------------------------------------------
# Block bookkeeping
# ---------------------------------------------------------------------------


def _group_by_block(rows: list[SparseRow]) -> list[list[SparseRow]]:
    blocks = coupled_blocks(r.keys() for r in rows)
    block_of = {c: i for i, block in enumerate(blocks) for c in block}
    grouped: list[list[SparseRow]] = [[] for _ in blocks]
    for r in rows:
        grouped[block_of[min(r)]].append(r)
    return grouped


def _paired_blocks(
    first: list[SparseRow], second: list[SparseRow]
) -> list[tuple[list[int], list[SparseRow], list[SparseRow]]]:
    blocks = coupled_blocks(r.keys() for r in first + second)
    block_of = {c: i for i, block in enumerate(blocks) for c in block}
    out = [(block, [], []) for block in blocks]
    for r in first:
        out[block_of[min(r)]][1].append(r)
    for r in second:
        out[block_of[min(r)]][2].append(r)
    return out


def _coordinate_blocks(
    sub: IntegerModule, sup: IntegerModule
) -> list[tuple[list[list[Fraction]], int, int]]:
    """Per coupled block: coordinates of ``sub`` rows in ``sup`` rows."""
    sub._check_ambient(sup)
    blocks = []
    for _, mine, theirs in _paired_blocks(
        [dict(r) for r in sub.rows], [dict(r) for r in sup.rows]
    ):
        local = IntegerModule(sup.dimension, (tuple(sorted(r.items())) for r in theirs))
        matrix = []
        for r in mine:
            coords = local.coordinates(r)
            if coords is None:
                raise ContainmentError(
                    "Row is not in the rational span of the larger module",
                    witness=tuple(sorted(r.items())),
                )
            matrix.append([coords.get(i, Fraction(0)) for i in range(local.rank)])
        blocks.append((matrix, len(mine), local.rank))
    return blocks


# ---------------------------------------------------------------------------
# Index and quotients
# ---------------------------------------------------------------------------


def module_index(sub: IntegerModule, sup: IntegerModule) -> int | Bound:
    """``|sup : sub|`` for ``sub`` contained in ``sup``; ``Bound.INFINITE`` on
    rank drop.

    Raises :class:`ContainmentError` when ``sub`` lies only in the rational
    span of ``sup``.
    """
    blocks = _coordinate_blocks(sub, sup)
    if any(v.denominator != 1 for matrix, _, _ in blocks for row in matrix for v in row):
        raise ContainmentError("Submodule is not contained in the larger module")
    if sub.rank != sup.rank:
        return Bound.INFINITE
    index = 1
    for matrix, _, _ in blocks:
        index *= abs(int(determinant(matrix)))
    return index


def index_of(sub: Sequence[Sequence[int]], sup: Sequence[Sequence[int]]) -> int | Bound:
    """Index of the row module of ``sub`` in the row module of ``sup``."""
    dimension = len(sup[0]) if sup else (len(sub[0]) if sub else 0)
    return module_index(IntegerModule.span(dimension, sub), IntegerModule.span(dimension, sup))


def module_quotient(sub: IntegerModule, sup: IntegerModule) -> AbelianInvariants:
    """Invariants of ``sup / sub``; ``sub`` must be contained in ``sup``."""
    total = AbelianInvariants(free_rank=sup.rank - sub.rank)
    for matrix, _, _ in _coordinate_blocks(sub, sup):
        if not matrix:
            continue
        if any(v.denominator != 1 for row in matrix for v in row):
            raise ContainmentError("Submodule is not contained in the larger module")
        invariants, _ = snf([[int(v) for v in row] for row in matrix])
        total = total + invariants
    return total
