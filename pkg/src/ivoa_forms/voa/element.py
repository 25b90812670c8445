"""Elements of the lattice vertex operator algebra over the rationals.

A :class:`VoaElement` is a finite combination of terms ``M (x) e^alpha``
with ``M`` a :class:`~ivoa_forms.fock.FockMonomial` and ``alpha`` a lattice
vector in basis coordinates.  The weight of a term is
``deg M + (alpha, alpha)/2``.

Example::

    a1 = catalog("A1")
    v = VoaElement.exponential(a1, (1,)) + VoaElement.oscillator(a1, (1,), 1)
    v.weight            # 1
"""

from __future__ import annotations

from collections import defaultdict
from collections.abc import Iterable, Iterator, Mapping, Sequence
from fractions import Fraction
from functools import lru_cache

from ..core.lattice import EvenLattice
from ..core.types import LatticeVector
from ..errors import InvalidInputError
from ..fock.polynomial import (
    VACUUM_MONOMIAL,
    Coefficient,
    FockMonomial,
    FockPolynomial,
    contract_monomial,
    inner_with_basis,
)

type VoaKey = tuple[FockMonomial, LatticeVector]


@lru_cache(maxsize=65536)
def half_norm(lattice: EvenLattice, charge: LatticeVector) -> int:
    return int(lattice.norm(charge)) // 2


def key_weight(lattice: EvenLattice, key: VoaKey) -> int:
    mono, charge = key
    return mono.degree + half_norm(lattice, charge)


def add_charges(a: LatticeVector, b: LatticeVector) -> LatticeVector:
    return tuple(x + y for x, y in zip(a, b))


def negate(a: LatticeVector) -> LatticeVector:
    return tuple(-x for x in a)


# ---------------------------------------------------------------------------
# VoaElement
# ---------------------------------------------------------------------------


class VoaElement:
    __slots__ = ("lattice", "terms")

    def __init__(
        self, lattice: EvenLattice, terms: Mapping[VoaKey, Coefficient] | None = None
    ) -> None:
        self.lattice = lattice
        self.terms: dict[VoaKey, Fraction] = {}
        for key, coef in (terms or {}).items():
            if coef:
                self.terms[key] = Fraction(coef)

    # -- constructors --------------------------------------------------------

    @classmethod
    def zero(cls, lattice: EvenLattice) -> VoaElement:
        return cls(lattice)

    @classmethod
    def vacuum(cls, lattice: EvenLattice) -> VoaElement:
        return cls(lattice, {(VACUUM_MONOMIAL, (0,) * lattice.rank): 1})

    @classmethod
    def exponential(
        cls, lattice: EvenLattice, charge: Sequence[int], coef: Coefficient = 1
    ) -> VoaElement:
        """``coef * e^charge``."""
        charge = tuple(int(x) for x in charge)
        if len(charge) != lattice.rank:
            raise InvalidInputError(f"Charge {charge} does not match rank {lattice.rank}")
        return cls(lattice, {(VACUUM_MONOMIAL, charge): coef})

    @classmethod
    def from_fock(
        cls, lattice: EvenLattice, poly: FockPolynomial, charge: Sequence[int] | None = None
    ) -> VoaElement:
        """``poly (x) e^charge`` (charge ``0`` by default)."""
        charge = tuple(int(x) for x in charge) if charge is not None else (0,) * lattice.rank
        return cls(lattice, {(mono, charge): coef for mono, coef in poly.items()})

    @classmethod
    def oscillator(cls, lattice: EvenLattice, vec: Sequence[Coefficient], mode: int) -> VoaElement:
        """``h(-mode) vac`` for ``h = sum_i vec[i] g_i``."""
        return cls.from_fock(lattice, FockPolynomial.oscillator(vec, mode))

    # -- inspection ----------------------------------------------------------

    def items(self) -> Iterable[tuple[VoaKey, Fraction]]:
        return self.terms.items()

    def __iter__(self) -> Iterator[VoaKey]:
        return iter(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __getitem__(self, key: VoaKey) -> Fraction:
        return self.terms.get(key, Fraction(0))

    def weights(self) -> set[int]:
        return {key_weight(self.lattice, key) for key in self.terms}

    @property
    def is_homogeneous(self) -> bool:
        return len(self.weights()) <= 1

    @property
    def weight(self) -> int:
        """Weight of a nonzero homogeneous element."""
        weights = self.weights()
        if len(weights) != 1:
            raise InvalidInputError(f"Element is not homogeneous of a single weight: {sorted(weights)}")
        return weights.pop()

    def component(self, weight: int) -> VoaElement:
        return VoaElement(
            self.lattice,
            {k: c for k, c in self.terms.items() if key_weight(self.lattice, k) == weight},
        )

    def charges(self) -> set[LatticeVector]:
        return {charge for _, charge in self.terms}

    def by_charge(self) -> dict[LatticeVector, dict[FockMonomial, Fraction]]:
        grouped: dict[LatticeVector, dict[FockMonomial, Fraction]] = defaultdict(dict)
        for (mono, charge), coef in self.terms.items():
            grouped[charge][mono] = coef
        return dict(grouped)

    def vacuum_coefficient(self) -> Fraction:
        return self[(VACUUM_MONOMIAL, (0,) * self.lattice.rank)]

    # -- arithmetic ----------------------------------------------------------

    def _check(self, other: VoaElement) -> None:
        if self.lattice != other.lattice:
            raise InvalidInputError(f"Elements live on different lattices: {self.lattice} vs {other.lattice}")

    def _accumulate(self, other: VoaElement, sign: int) -> VoaElement:
        self._check(other)
        out = dict(self.terms)
        for key, coef in other.terms.items():
            value = out.get(key, 0) + sign * coef
            if value:
                out[key] = value
            else:
                out.pop(key, None)
        return VoaElement(self.lattice, out)

    def __add__(self, other: VoaElement) -> VoaElement:
        return self._accumulate(other, 1)

    def __sub__(self, other: VoaElement) -> VoaElement:
        return self._accumulate(other, -1)

    def __neg__(self) -> VoaElement:
        return self.scaled(-1)

    def scaled(self, factor: Coefficient) -> VoaElement:
        if not factor:
            return VoaElement(self.lattice)
        return VoaElement(self.lattice, {k: factor * c for k, c in self.terms.items()})

    def __mul__(self, factor: Coefficient) -> VoaElement:
        return self.scaled(factor)

    __rmul__ = __mul__

    def times_fock(self, poly: FockPolynomial) -> VoaElement:
        """Multiply the Heisenberg part by a creation polynomial."""
        out: dict[VoaKey, Fraction] = {}
        for (mono, charge), coef in self.terms.items():
            for factor, value in poly.items():
                key = (mono.times(factor), charge)
                out[key] = out.get(key, 0) + coef * value
        return VoaElement(self.lattice, out)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, VoaElement):
            return NotImplemented
        return self.lattice == other.lattice and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.lattice, frozenset(self.terms.items())))

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        chunks = []
        for (mono, charge), coef in sorted(self.terms.items(), key=lambda kv: (kv[0][1], kv[0][0])):
            exp = "" if not any(charge) else f"e^{list(charge)}"
            body = "*".join(p for p in (str(mono) if mono else "", exp) if p) or "vac"
            chunks.append(f"{coef}*{body}")
        return " + ".join(chunks)


def combine(lattice: EvenLattice, parts: Iterable[tuple[Coefficient, VoaElement]]) -> VoaElement:
    out: dict[VoaKey, Fraction] = {}
    for factor, element in parts:
        if not factor:
            continue
        for key, coef in element.terms.items():
            out[key] = out.get(key, 0) + factor * coef
    return VoaElement(lattice, out)


# ---------------------------------------------------------------------------
# Heisenberg modes
# ---------------------------------------------------------------------------


def heisenberg_mode(vec: Sequence[Coefficient], mode: int, v: VoaElement) -> VoaElement:
    """``h(mode) v`` for ``h = sum_i vec[i] g_i`` and any integer ``mode``."""
    lattice = v.lattice
    if mode < 0:
        return v.times_fock(FockPolynomial.oscillator(vec, -mode))
    weights = inner_with_basis(vec, lattice.gram)
    if mode == 0:
        out: dict[VoaKey, Fraction] = {}
        for (mono, charge), coef in v.terms.items():
            value = sum((w * c for w, c in zip(weights, charge) if c), Fraction(0))
            if value:
                out[(mono, charge)] = coef * value
        return VoaElement(lattice, out)
    out = {}
    for (mono, charge), coef in v.terms.items():
        for image, value in contract_monomial(mono, weights, mode):
            key = (image, charge)
            out[key] = out.get(key, 0) + coef * value
    return VoaElement(lattice, out)
