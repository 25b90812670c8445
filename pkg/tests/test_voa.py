from fractions import Fraction
from itertools import product

import pytest

from ivoa_forms.core import AbelianInvariants, catalog, discriminant_group, lattice_vectors, vectors_of_norm
from ivoa_forms.core.matrices import determinant
from ivoa_forms.errors import ContainmentError, InvalidInputError
from ivoa_forms.fock import FockPolynomial, colored_partitions, s_coefficient
from ivoa_forms.voa import (
    GradedZForm,
    PairingForm,
    VoaElement,
    dual_form,
    form_index,
    graded_basis,
    graded_gram,
    half_norm,
    intersect_forms,
    make_cocycle,
    pair,
    pair_genfun,
    quotient_invariants,
    schur_form,
    standard_form,
    sum_forms,
    voa_basis,
)

BOTH = [PairingForm.HERMITIAN, PairingForm.BILINEAR]


def product_element(lattice, shape, charge):
    """``s_{g_i1,n1} ... s_{g_ik,nk} e^charge`` with its generating-function data."""
    d = lattice.rank
    unit = [lattice.basis_vector(i) for i in range(d)]
    poly = FockPolynomial.one()
    for i, n in shape:
        poly = poly * s_coefficient(unit[i], n)
    element = VoaElement.from_fock(lattice, poly, charge)
    return element, [unit[i] for i, _ in shape], [n for _, n in shape]


# -- Elements and cocycle ------------------------------------------------------


def test_cocycle_commutator(a2):
    eps = make_cocycle(a2)
    vectors = lattice_vectors(a2, 6)
    for a, b in product(vectors, repeat=2):
        assert eps(a, b) * eps(b, a) == (-1) ** int(a2.inner(a, b))
    for a in vectors:
        assert eps(a, a) == (-1) ** (a2.norm(a) // 2)


def test_element_arithmetic(a1):
    x = VoaElement.exponential(a1, (1,))
    y = VoaElement.exponential(a1, (-1,))
    total = x + y
    assert total.is_homogeneous and total.weight == 1
    assert not (total - x - y)
    assert total.charges() == {(1,), (-1,)}
    assert VoaElement.vacuum(a1).vacuum_coefficient() == 1


def test_exponential_checks_rank(a2):
    with pytest.raises(InvalidInputError):
        VoaElement.exponential(a2, (1,))


def test_half_norm(a2):
    assert half_norm(a2, (1, 1)) == 1
    assert half_norm(a2, (2, 1)) == 3


# -- Bases ---------------------------------------------------------------------


@pytest.mark.parametrize(
    "name, degree, dimension",
    [("A1", 0, 1), ("A1", 1, 3), ("A1", 2, 4), ("A2", 1, 8), ("A2", 2, 17), ("E8", 1, 248), ("E8", 2, 4124)],
)
def test_graded_dimensions(name, degree, dimension):
    lattice = catalog(name)
    assert graded_basis(lattice, degree).dimension == dimension
    assert len(voa_basis(lattice, degree)) == dimension


def test_graded_basis_rejects_negative_degree(a1):
    with pytest.raises(InvalidInputError):
        graded_basis(a1, -1)


def test_integral_coordinates_of_basis_elements(a2):
    basis = graded_basis(a2, 2)
    for position, element in enumerate(voa_basis(a2, 2)):
        assert basis.integral_coordinates(element) == {position: 1}


def test_basis_labels(a1):
    labels = graded_basis(a1, 1).labels()
    assert labels[0] == "g0(-1)"
    assert "e^[1]" in labels and "e^[-1]" in labels


# -- Pairings ------------------------------------------------------------------


@pytest.mark.parametrize("form", BOTH)
@pytest.mark.parametrize(
    ("name", "degree"),
    [
        ("A2", 1),
        ("A2", 2),
        ("A2", 3),
        pytest.param("A2", 4, marks=pytest.mark.slow),
        ("E8", 1),
        pytest.param("E8", 2, marks=pytest.mark.slow),
    ],
)
def test_pairing_matches_generating_function(name, degree, form):
    lattice = catalog(name)
    for charge in lattice_vectors(lattice, 2 * degree):
        rest = degree - half_norm(lattice, charge)
        partner = charge if form is PairingForm.HERMITIAN else tuple(-x for x in charge)
        shapes = colored_partitions(lattice.rank, rest)
        for left, right in product(shapes, repeat=2):
            u, alphas, ms = product_element(lattice, left, charge)
            v, betas, ns = product_element(lattice, right, partner)
            expected = pair_genfun(lattice, alphas, ms, betas, ns, charge, partner, form)
            assert pair(u, v, form) == expected


def fock_element(lattice, poly):
    return VoaElement.from_fock(lattice, poly)


def test_oscillator_pairings_on_e8_roots(e8):
    hermitian = PairingForm.HERMITIAN
    roots = vectors_of_norm(e8, 2)[::24]
    for a, b in product(roots, repeat=2):
        ab = e8.inner(a, b)
        u, v = VoaElement.oscillator(e8, a, 2), VoaElement.oscillator(e8, b, 2)
        assert pair(u, v, hermitian) == 2 * ab
        u = fock_element(e8, s_coefficient(a, 2))
        v = fock_element(e8, s_coefficient(b, 2))
        assert pair(u, v, hermitian) == Fraction(ab, 2) + Fraction(ab * ab, 2)
    few = roots[::3]
    for a, b, c, d in product(few, repeat=4):
        u = fock_element(e8, FockPolynomial.oscillator(a, 1) * FockPolynomial.oscillator(b, 1))
        v = fock_element(e8, FockPolynomial.oscillator(c, 1) * FockPolynomial.oscillator(d, 1))
        expected = e8.inner(a, c) * e8.inner(b, d) + e8.inner(a, d) * e8.inner(b, c)
        assert pair(u, v, hermitian) == expected


@pytest.mark.parametrize("form", BOTH)
def test_pairing_is_symmetric(a2, form):
    elements = voa_basis(a2, 2)
    gram = graded_gram(elements, form)
    for i, row in enumerate(gram):
        for j, value in enumerate(row):
            assert value == gram[j][i]


def test_hermitian_form_is_positive_definite(a1):
    gram = graded_gram(voa_basis(a1, 2), PairingForm.HERMITIAN)
    for k in range(1, len(gram) + 1):
        assert determinant([row[:k] for row in gram[:k]]) > 0


def test_bilinear_form_on_weight_one(a1):
    h = VoaElement.oscillator(a1, (1,), 1)
    assert pair(h, h, PairingForm.BILINEAR) == -2
    assert pair(h, h, PairingForm.HERMITIAN) == 2
    plus, minus = VoaElement.exponential(a1, (1,)), VoaElement.exponential(a1, (-1,))
    assert pair(plus, minus, PairingForm.BILINEAR) == 1
    assert pair(plus, minus, PairingForm.HERMITIAN) == 0


# -- Graded forms --------------------------------------------------------------


@pytest.mark.parametrize("name", ["A1", "A2", "E8"])
def test_dual_over_standard_is_the_discriminant_group(name):
    lattice = catalog(name)
    r, u = standard_form(lattice, 1), dual_form(lattice, 1)
    assert r <= u
    assert quotient_invariants(r, u) == discriminant_group(lattice)


@pytest.mark.parametrize("form", BOTH)
def test_standard_form_dual_is_u(a2, form):
    for n in range(3):
        assert standard_form(a2, n).dual(form) == dual_form(a2, n)


def test_form_algebra_on_a1(a1):
    r, u = standard_form(a1, 1), dual_form(a1, 1)
    assert form_index(r, u) == 2
    assert intersect_forms([r, u]) == r
    assert sum_forms([r, u]) == u
    with pytest.raises(ContainmentError):
        quotient_invariants(u, r)


def test_scales(a2):
    assert standard_form(a2, 1).scale() == 1
    assert dual_form(a2, 1).scale() == 3
    assert standard_form(a2, 2).rescaled_gram() == [
        [int(x) for x in row] for row in standard_form(a2, 2).gram(PairingForm.HERMITIAN)
    ]


def test_schur_form_is_standard(a2):
    for n in range(3):
        assert schur_form(a2, n) == standard_form(a2, n)


def test_forms_are_canonical(a1):
    elements = voa_basis(a1, 1)
    doubled = GradedZForm.from_elements(a1, 1, [e.scaled(2) for e in elements]).scaled(Fraction(1, 2))
    assert doubled == standard_form(a1, 1)
    assert GradedZForm.zero(a1, 1).rank == 0


def test_forms_of_different_lattices_do_not_mix(a1, a2):
    with pytest.raises(InvalidInputError):
        intersect_forms([standard_form(a1, 1), standard_form(a2, 1)])


def test_gram_blocks_split_by_charge(a1):
    blocks = standard_form(a1, 1).gram_blocks(PairingForm.HERMITIAN)
    assert sorted(len(b.rows) for b in blocks) == [1, 1, 1]
    bilinear = standard_form(a1, 1).gram_blocks(PairingForm.BILINEAR)
    assert sorted(len(b.rows) for b in bilinear) == [1, 2]


def test_norm_four_vectors_of_rank_one(rank1_4):
    assert vectors_of_norm(rank1_4, 4) == [(-1,), (1,)]
    assert quotient_invariants(standard_form(rank1_4, 1), dual_form(rank1_4, 1)) == AbelianInvariants((4,))
