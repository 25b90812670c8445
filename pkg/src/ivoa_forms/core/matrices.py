"""Exact integer and rational matrix kernels.

Dense helpers work on ``list[list[int]]``; anything heavier than row
operations (Smith form, ranks, inverses, determinants) is delegated to
:class:`sympy.polys.matrices.DomainMatrix` over ``ZZ`` / ``QQ``.

Example::

    H, U = hnf([[1, 1], [1, 1]])      # H == [[1, 1], [0, 0]]
    invariants, rank = snf([[2, -1], [-1, 2]])
    invariants.divisors                # (3,)
"""

from __future__ import annotations

from collections.abc import Iterable, Mapping, Sequence
from fractions import Fraction
from math import lcm

from sympy import GF, QQ, ZZ
from sympy.polys.matrices import DomainMatrix
from sympy.polys.matrices.normalforms import invariant_factors

from .types import AbelianInvariants, IntMatrix, IntRows, RatMatrix, RatRows

# ---------------------------------------------------------------------------
# Conversions
# ---------------------------------------------------------------------------


def integer_domain_matrix(rows: IntRows, cols: int | None = None) -> DomainMatrix:
    ncols = len(rows[0]) if rows else (cols or 0)
    return DomainMatrix([[ZZ(int(x)) for x in row] for row in rows], (len(rows), ncols), ZZ)


def rational_domain_matrix(rows: RatRows, cols: int | None = None) -> DomainMatrix:
    ncols = len(rows[0]) if rows else (cols or 0)
    data = []
    for row in rows:
        data.append([QQ(Fraction(x).numerator, Fraction(x).denominator) for x in row])
    return DomainMatrix(data, (len(rows), ncols), QQ)


def mod2_domain_matrix(rows: IntRows) -> DomainMatrix:
    field = GF(2)
    return DomainMatrix(
        [[field(int(x) % 2) for x in row] for row in rows], (len(rows), len(rows[0])), field
    )


def to_fraction(value: object) -> Fraction:
    numerator = getattr(value, "numerator", value)
    denominator = getattr(value, "denominator", 1)
    return Fraction(int(numerator), int(denominator))


def to_rational_rows(matrix: DomainMatrix) -> RatMatrix:
    return [[to_fraction(x) for x in row] for row in matrix.to_list()]


# ---------------------------------------------------------------------------
# Small helpers
# ---------------------------------------------------------------------------


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return ``(x, y, g)`` with ``x*a + y*b == g == +-gcd(a, b)``."""
    x, next_x = 1, 0
    y, next_y = 0, 1
    g, next_g = a, b
    while next_g:
        q = g // next_g
        x, next_x = next_x, x - q * next_x
        y, next_y = next_y, y - q * next_y
        g, next_g = next_g, g - q * next_g
    return x, y, g


def identity(n: int) -> IntMatrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def transpose[T](rows: Sequence[Sequence[T]]) -> list[list[T]]:
    return [list(col) for col in zip(*rows)]


def matmul(a: Sequence[Sequence[Fraction | int]], b: Sequence[Sequence[Fraction | int]]) -> list[list]:
    bt = transpose(b)
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def is_zero_row(row: Sequence[Fraction | int]) -> bool:
    return not any(row)


# ---------------------------------------------------------------------------
# Hermite normal form
# ---------------------------------------------------------------------------


def hnf(matrix: IntRows) -> tuple[IntMatrix, IntMatrix]:
    """Row Hermite normal form with its unimodular transform.

    Returns ``(H, U)`` with ``H == U @ M``: ``H`` is upper triangular in
    echelon form, pivots are positive, entries above a pivot lie in
    ``[0, pivot)`` and zero rows come last.
    """
    h = [[int(x) for x in row] for row in matrix]
    m = len(h)
    n = len(h[0]) if h else 0
    u = identity(m)
    r = 0
    for c in range(n):
        if r == m:
            break
        for i in range(r + 1, m):
            b = h[i][c]
            if b == 0:
                continue
            a = h[r][c]
            if a == 0:
                h[r], h[i] = h[i], h[r]
                u[r], u[i] = u[i], u[r]
                continue
            x, y, g = xgcd(a, b)
            ag, bg = a // g, b // g
            for mat in (h, u):
                top, bottom = mat[r], mat[i]
                mat[r] = [x * p + y * q for p, q in zip(top, bottom)]
                mat[i] = [-bg * p + ag * q for p, q in zip(top, bottom)]
        pivot = h[r][c]
        if pivot == 0:
            continue
        if pivot < 0:
            h[r] = [-x for x in h[r]]
            u[r] = [-x for x in u[r]]
            pivot = -pivot
        for i in range(r):
            q = h[i][c] // pivot
            if q:
                h[i] = [p - q * s for p, s in zip(h[i], h[r])]
                u[i] = [p - q * s for p, s in zip(u[i], u[r])]
        r += 1
    return h, u


def integer_kernel(matrix: IntRows) -> IntMatrix:
    """HNF basis of the integer left kernel ``{x : x @ M == 0}``."""
    if not matrix:
        return []
    h, u = hnf(matrix)
    kernel = [u[i] for i, row in enumerate(h) if is_zero_row(row)]
    if not kernel:
        return []
    reduced, _ = hnf(kernel)
    return [row for row in reduced if not is_zero_row(row)]


# ---------------------------------------------------------------------------
# Smith form and rational invariants
# ---------------------------------------------------------------------------


def snf(matrix: IntRows) -> tuple[AbelianInvariants, int]:
    """Elementary divisors ``!= 1`` and the rational rank of ``M``.

    The returned invariants describe the torsion of ``Z^cols / rowspace(M)``;
    use :func:`cokernel` when the free part matters too.
    """
    if not matrix or not matrix[0]:
        return AbelianInvariants(), 0
    factors = [abs(int(x)) for x in invariant_factors(integer_domain_matrix(matrix))]
    rank = sum(1 for f in factors if f)
    return AbelianInvariants.from_cyclic_orders([f for f in factors if f]), rank


def cokernel(matrix: IntRows, cols: int) -> AbelianInvariants:
    """Invariants of ``Z^cols / rowspace(M)`` including its free rank."""
    if not matrix:
        return AbelianInvariants(free_rank=cols)
    invariants, rank = snf(matrix)
    return AbelianInvariants(invariants.divisors, cols - rank)


def rational_rank(rows: RatRows, cols: int | None = None) -> int:
    if not rows:
        return 0
    return rational_domain_matrix(rows, cols).rank()


def rational_inverse(rows: RatRows) -> RatMatrix:
    return to_rational_rows(rational_domain_matrix(rows).inv())


def determinant(rows: RatRows) -> Fraction:
    if not rows:
        return Fraction(1)
    return to_fraction(rational_domain_matrix(rows).det())


def rational_nullspace(rows: RatRows) -> RatMatrix:
    """Basis of ``{x : M @ x == 0}`` over the rationals."""
    return to_rational_rows(rational_domain_matrix(rows).nullspace())


def mod2_rank(rows: IntRows) -> int:
    if not rows:
        return 0
    return mod2_domain_matrix(rows).rank()


def common_denominator(values: Iterable[Fraction | int]) -> int:
    return lcm(1, *(Fraction(v).denominator for v in values))


# ---------------------------------------------------------------------------
# Sparse rows
# ---------------------------------------------------------------------------

type SparseRow = dict[int, int]


def sparse(row: Sequence[int] | Mapping[int, int]) -> SparseRow:
    if isinstance(row, Mapping):
        return {int(c): int(v) for c, v in row.items() if v}
    return {c: int(v) for c, v in enumerate(row) if v}


def coupled_blocks(supports: Iterable[Iterable[int]]) -> list[list[int]]:
    """Partition columns into classes joined by a common support.

    Each support is a set of columns touched by one row (or one row together
    with its image); columns linked through any chain of supports end up in
    the same block.  Blocks and their members come out sorted.
    """
    parent: dict[int, int] = {}

    def find(c: int) -> int:
        root = c
        while parent[root] != root:
            root = parent[root]
        while parent[c] != root:
            parent[c], c = root, parent[c]
        return root

    for support in supports:
        cols = list(support)
        for c in cols:
            parent.setdefault(c, c)
        for c in cols[1:]:
            a, b = find(cols[0]), find(c)
            if a != b:
                parent[max(a, b)] = min(a, b)
    blocks: dict[int, list[int]] = {}
    for c in sorted(parent):
        blocks.setdefault(find(c), []).append(c)
    return sorted(blocks.values())
