"""Exact modes ``u_k v`` of the lattice vertex operator algebra.

Exponentials are the base case: ``Y(e^a, z)`` is the normal-ordered product
of the creation series ``E^-(a, z)``, the annihilation series, the cocycle
sign and ``z^(a, b)``, so

    (e^a)_k (N e^b) = eps(a, b) sum_m s_{a, m-k-1-(a,b)} P_m(N) e^(a+b)

where ``P_m`` is ``s_{-a,m}`` with every ``g_i(-n)`` turned into the
annihilator ``g_i(n)``.  A creation factor in front is peeled off by the
iterate formula

    (g_i(-n) w)_k v = sum_j C(n+j-1, j) [ g_i(-n-j) (w_{k+j} v)
                                          - (-1)^n w_{k-n-j} (g_i(j) v) ]

which terminates because both sums hit weights below the charge floor.

Example::

    a1 = catalog("A1")
    plus, minus = VoaElement.exponential(a1, (1,)), VoaElement.exponential(a1, (-1,))
    vertex_mode(plus, 1, minus)       # -1*vac   (eps(g, -g) = -1 on A1)
"""

from __future__ import annotations

from collections.abc import Sequence
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import NamedTuple

from ..core.lattice import EvenLattice
from ..core.types import LatticeVector
from ..fock.polynomial import FockMonomial, contract_monomial
from ..fock.schur import s_coefficient
from ..voa.cocycle import make_cocycle
from ..voa.element import VoaElement, VoaKey, add_charges, half_norm, negate

type ModeTerms = tuple[tuple[VoaKey, Fraction], ...]

# ---------------------------------------------------------------------------
# Exponential base case
# ---------------------------------------------------------------------------


def _annihilate(
    gram: Sequence[Sequence[int]], factors: FockMonomial, state: dict[FockMonomial, Fraction]
) -> dict[FockMonomial, Fraction]:
    for i, n in factors:
        updated: dict[FockMonomial, Fraction] = {}
        for mono, coef in state.items():
            for image, value in contract_monomial(mono, gram[i], n):
                updated[image] = updated.get(image, 0) + coef * value
        state = {m: c for m, c in updated.items() if c}
        if not state:
            break
    return state


@lru_cache(maxsize=1 << 18)
def _exponential_mode(
    lattice: EvenLattice, alpha: LatticeVector, k: int, mono: FockMonomial, beta: LatticeVector
) -> ModeTerms:
    ab = int(lattice.inner(alpha, beta))
    sign = make_cocycle(lattice)(alpha, beta)
    charge = add_charges(alpha, beta)
    minus = negate(alpha)
    out: dict[VoaKey, Fraction] = {}
    for m in range(mono.degree + 1):
        a = m - k - 1 - ab
        if a < 0:
            continue
        creation = s_coefficient(alpha, a)
        if not creation:
            continue
        reduced: dict[FockMonomial, Fraction] = {}
        for factors, coef in s_coefficient(minus, m).items():
            for image, value in _annihilate(lattice.gram, factors, {mono: Fraction(1)}).items():
                reduced[image] = reduced.get(image, 0) + coef * value
        for image, value in reduced.items():
            if not value:
                continue
            for factors, coef in creation.items():
                key = (factors.times(image), charge)
                out[key] = out.get(key, 0) + sign * coef * value
    return tuple((key, value) for key, value in out.items() if value)


# ---------------------------------------------------------------------------
# Iterate recursion
# ---------------------------------------------------------------------------


@lru_cache(maxsize=1 << 18)
def _mode(
    lattice: EvenLattice,
    left: FockMonomial,
    alpha: LatticeVector,
    k: int,
    right: FockMonomial,
    beta: LatticeVector,
) -> ModeTerms:
    floor = half_norm(lattice, add_charges(alpha, beta))
    weight_v = right.degree + half_norm(lattice, beta)
    if left.degree + half_norm(lattice, alpha) + weight_v - k - 1 < floor:
        return ()
    if not left:
        return _exponential_mode(lattice, alpha, k, right, beta)

    i, n = left[0]
    rest = FockMonomial._trusted(left[1:])
    weight_w = rest.degree + half_norm(lattice, alpha)
    gram = lattice.gram
    out: dict[VoaKey, Fraction] = {}

    def add(terms: ModeTerms, factor: Fraction | int, creation: int | None = None) -> None:
        for (mono, charge), value in terms:
            key = (mono.with_factor((i, creation)) if creation else mono, charge)
            out[key] = out.get(key, 0) + factor * value

    for j in range(weight_w + weight_v - k - floor):
        add(_mode(lattice, rest, alpha, k + j, right, beta), comb(n + j - 1, j), n + j)

    sign = 1 if n % 2 else -1
    pairing = sum(gram[i][b] * x for b, x in enumerate(beta) if x)
    if pairing:
        add(_mode(lattice, rest, alpha, k - n, right, beta), sign * pairing)
    for j in sorted({m for _, m in right}):
        for image, value in contract_monomial(right, gram[i], j):
            add(_mode(lattice, rest, alpha, k - n - j, image, beta), sign * comb(n + j - 1, j) * value)
    return tuple((key, value) for key, value in out.items() if value)


def vertex_mode(u: VoaElement, k: int, v: VoaElement) -> VoaElement:
    """The ``k``-th product ``u_k v``."""
    u._check(v)
    lattice = u.lattice
    out: dict[VoaKey, Fraction] = {}
    for (m1, a), c1 in u.terms.items():
        for (m2, b), c2 in v.terms.items():
            for key, value in _mode(lattice, m1, a, k, m2, b):
                out[key] = out.get(key, 0) + c1 * c2 * value
    return VoaElement(lattice, out)


class ModeRequest(NamedTuple):
    u: VoaElement
    k: int
    v: VoaElement

    @property
    def expected_weight(self) -> int:
        return self.u.weight + self.v.weight - self.k - 1

    def evaluate(self) -> VoaElement:
        return vertex_mode(self.u, self.k, self.v)
