"""The commutative algebra of Heisenberg creation operators.

A :class:`FockMonomial` is a product ``g_i1(-n1) g_i2(-n2) ...`` of creation
operators attached to lattice basis vectors; a :class:`FockPolynomial` is a
rational combination of them.  Annihilators act by contraction against the
Gram matrix, ``[g_i(m), g_j(-m)] = m (g_i, g_j)``.

Example::

    x = FockPolynomial.oscillator((1,), 1)          # g0(-1)
    fock_mul(x, x)                                   # g0(-1)^2
    contract(fock_mul(x, x), (1,), 1, ((2,),))      # 4 g0(-1)
"""

from __future__ import annotations

from collections import Counter
from collections.abc import Iterable, Iterator, Mapping, Sequence
from fractions import Fraction
from heapq import merge

from ..errors import InvalidInputError

type Coefficient = Fraction | int
type Factor = tuple[int, int]

# ---------------------------------------------------------------------------
# FockMonomial
# ---------------------------------------------------------------------------


class FockMonomial(tuple[Factor, ...]):
    """Sorted multiset of ``(basis_index, mode)`` creation factors.

    The empty monomial is the vacuum factor; ``degree`` is the sum of modes.
    """

    __slots__ = ()

    def __new__(cls, factors: Iterable[Factor] = ()) -> FockMonomial:
        items = tuple(sorted((int(i), int(n)) for i, n in factors))
        for i, n in items:
            if i < 0 or n < 1:
                raise InvalidInputError(f"Creation factor needs index >= 0 and mode >= 1, got {(i, n)}")
        return super().__new__(cls, items)

    @classmethod
    def _trusted(cls, items: Iterable[Factor]) -> FockMonomial:
        return tuple.__new__(cls, tuple(items))

    @property
    def degree(self) -> int:
        return sum(n for _, n in self)

    def times(self, other: Sequence[Factor]) -> FockMonomial:
        if not other:
            return self
        if not self:
            return other if isinstance(other, FockMonomial) else FockMonomial(other)
        return FockMonomial._trusted(merge(self, other))

    def with_factor(self, factor: Factor) -> FockMonomial:
        return self.times((factor,))

    def without(self, factor: Factor) -> FockMonomial:
        position = self.index(factor)
        return FockMonomial._trusted(self[:position] + self[position + 1 :])

    def multiplicities(self) -> Counter[Factor]:
        return Counter(self)

    def __repr__(self) -> str:
        if not self:
            return "1"
        chunks = []
        for factor, count in sorted(Counter(self).items()):
            i, n = factor
            chunks.append(f"g{i}(-{n})" + (f"^{count}" if count > 1 else ""))
        return "".join(chunks)

    __str__ = __repr__


VACUUM_MONOMIAL = FockMonomial()


# ---------------------------------------------------------------------------
# FockPolynomial
# ---------------------------------------------------------------------------


class FockPolynomial:
    """Rational combination of :class:`FockMonomial`, zero terms dropped."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[FockMonomial, Coefficient] | None = None) -> None:
        self.terms: dict[FockMonomial, Fraction] = {}
        for mono, coef in (terms or {}).items():
            if coef:
                self.terms[mono] = Fraction(coef)

    @classmethod
    def one(cls) -> FockPolynomial:
        return cls({VACUUM_MONOMIAL: 1})

    @classmethod
    def monomial(cls, mono: FockMonomial, coef: Coefficient = 1) -> FockPolynomial:
        return cls({mono: coef})

    @classmethod
    def oscillator(cls, vec: Sequence[Coefficient], mode: int) -> FockPolynomial:
        """``h(-mode)`` for ``h = sum_i vec[i] g_i``."""
        if mode < 1:
            raise InvalidInputError(f"Creation mode must be >= 1, got {mode}")
        return cls({FockMonomial._trusted(((i, mode),)): c for i, c in enumerate(vec) if c})

    # -- inspection ----------------------------------------------------------

    def items(self) -> Iterable[tuple[FockMonomial, Fraction]]:
        return self.terms.items()

    def __iter__(self) -> Iterator[FockMonomial]:
        return iter(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __getitem__(self, mono: FockMonomial) -> Fraction:
        return self.terms.get(mono, Fraction(0))

    def degrees(self) -> set[int]:
        return {m.degree for m in self.terms}

    def component(self, degree: int) -> FockPolynomial:
        return FockPolynomial({m: c for m, c in self.terms.items() if m.degree == degree})

    # -- arithmetic ----------------------------------------------------------

    def _accumulate(self, other: FockPolynomial, sign: int) -> FockPolynomial:
        out = dict(self.terms)
        for mono, coef in other.terms.items():
            value = out.get(mono, 0) + sign * coef
            if value:
                out[mono] = value
            else:
                out.pop(mono, None)
        return FockPolynomial(out)

    def __add__(self, other: FockPolynomial) -> FockPolynomial:
        return self._accumulate(other, 1)

    def __sub__(self, other: FockPolynomial) -> FockPolynomial:
        return self._accumulate(other, -1)

    def __neg__(self) -> FockPolynomial:
        return FockPolynomial({m: -c for m, c in self.terms.items()})

    def scaled(self, factor: Coefficient) -> FockPolynomial:
        if not factor:
            return FockPolynomial()
        return FockPolynomial({m: factor * c for m, c in self.terms.items()})

    def __mul__(self, other: FockPolynomial | Coefficient) -> FockPolynomial:
        if isinstance(other, FockPolynomial):
            return fock_mul(self, other)
        return self.scaled(other)

    def __rmul__(self, other: Coefficient) -> FockPolynomial:
        return self.scaled(other)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FockPolynomial):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(f"{c}*{m}" for m, c in sorted(self.terms.items()))


def fock_mul(p: FockPolynomial, q: FockPolynomial) -> FockPolynomial:
    """Product in the (commutative) creation algebra."""
    out: dict[FockMonomial, Fraction] = {}
    for m1, c1 in p.terms.items():
        for m2, c2 in q.terms.items():
            mono = m1.times(m2)
            out[mono] = out.get(mono, 0) + c1 * c2
    return FockPolynomial(out)


# ---------------------------------------------------------------------------
# Annihilation
# ---------------------------------------------------------------------------


def contract_monomial(
    mono: FockMonomial, weights: Sequence[Coefficient], mode: int
) -> Iterator[tuple[FockMonomial, Fraction]]:
    """``h(mode)`` on one monomial, ``mode >= 1``.

    ``weights[j]`` must be ``(h, g_j)``; each distinct factor ``g_j(-mode)``
    of multiplicity ``c`` contributes ``c * mode * weights[j]``.
    """
    for (j, n), count in Counter(mono).items():
        if n != mode or not weights[j]:
            continue
        yield mono.without((j, n)), Fraction(count * mode) * weights[j]


def inner_with_basis(vec: Sequence[Coefficient], gram: Sequence[Sequence[int]]) -> list[Fraction]:
    """``[(h, g_j) for j]`` with ``h = sum_i vec[i] g_i``."""
    d = len(gram)
    return [sum((Fraction(vec[i]) * gram[i][j] for i in range(d) if vec[i]), Fraction(0)) for j in range(d)]


def contract(
    poly: FockPolynomial, vec: Sequence[Coefficient], mode: int, gram: Sequence[Sequence[int]]
) -> FockPolynomial:
    """Apply the annihilator ``h(mode)`` (``mode >= 1``) to ``poly``."""
    if mode < 1:
        raise InvalidInputError(f"Annihilation mode must be >= 1, got {mode}")
    weights = inner_with_basis(vec, gram)
    out: dict[FockMonomial, Fraction] = {}
    for mono, coef in poly.terms.items():
        for image, value in contract_monomial(mono, weights, mode):
            out[image] = out.get(image, 0) + coef * value
    return FockPolynomial(out)
