from fractions import Fraction

import pytest

from ivoa_forms.core import catalog
from ivoa_forms.core.matrices import identity
from ivoa_forms.cvcc import (
    IsingType,
    IsingVector,
    automorphism_defects,
    cvcc_aa1,
    cvcc_ee8,
    e1_matrix,
    ising_check,
    miyamoto,
    stabilization_check,
    virasoro_bracket_defects,
)
from ivoa_forms.cvcc.miyamoto import apply_sparse
from ivoa_forms.errors import InvalidInputError
from ivoa_forms.symmetry import forms_through, lift_isometry, theta
from ivoa_forms.voa import GradedZForm, VoaElement, standard_form

FAMILY = (Fraction(0), Fraction(1, 2), Fraction(1, 16))


def in_family(value):
    return any((value - base).denominator == 1 and value >= base for base in FAMILY)


@pytest.fixture(scope="module")
def ising(rank1_4):
    return cvcc_aa1(rank1_4, (1,))


# -- Construction --------------------------------------------------------------


@pytest.mark.parametrize("sign", [1, -1])
def test_aa1_vectors_are_ising(rank1_4, sign):
    e = cvcc_aa1(rank1_4, (1,), sign)
    assert e.kind is IsingType.AA1
    assert e.provenance == ((1,), sign)
    assert not ising_check(e).has_errors


def test_aa1_has_weight_two(ising):
    assert ising.element.is_homogeneous
    assert ising.element.weight == 2
    assert ising.element.charges() == {(0,), (1,), (-1,)}


def test_aa1_input_checks(a1, rank1_4):
    with pytest.raises(InvalidInputError):
        cvcc_aa1(a1, (1,))
    with pytest.raises(InvalidInputError):
        cvcc_aa1(rank1_4, (1, 0))
    with pytest.raises(InvalidInputError):
        cvcc_aa1(rank1_4, (1,), 0)


def test_e1_on_the_heisenberg_vector(rank1_4):
    e = cvcc_aa1(rank1_4, (1,))
    heisenberg = VoaElement.oscillator(rank1_4, (1,), 1)
    assert e.mode(1, heisenberg) == heisenberg.scaled(Fraction(1, 2))
    assert not virasoro_bracket_defects(e, 1)


def test_ee8_rejects_wrong_embeddings():
    e8 = catalog("E8")
    with pytest.raises(InvalidInputError):
        cvcc_ee8(e8, identity(8))
    ee8 = catalog("EE8")
    with pytest.raises(InvalidInputError):
        cvcc_ee8(ee8, identity(8)[:7])
    with pytest.raises(InvalidInputError):
        cvcc_ee8(ee8, identity(8), (1,) * 7)


@pytest.mark.slow
def test_ee8_vector_is_ising():
    ee8 = catalog("EE8")
    e = cvcc_ee8(ee8, identity(8))
    assert e.kind is IsingType.EE8
    assert e.element.weight == 2
    assert not ising_check(e, bracket_degree=1).has_errors


# -- Miyamoto involutions ------------------------------------------------------


def test_e1_on_weight_one(ising):
    assert e1_matrix(ising, 1) == [{0: Fraction(1, 2)}]


@pytest.mark.parametrize("degree", [0, 1, 2, 3])
def test_miyamoto_eigenvalues(ising, degree):
    data = miyamoto(ising, degree)
    assert data.degree == degree
    assert sum(data.eigenvalues.values()) == data.dimension
    assert all(in_family(value) for value in data.eigenvalues)
    assert data.squares_to_identity()


def test_rank_one_lattice_has_no_sixteenth(ising):
    for degree in range(3):
        data = miyamoto(ising, degree)
        assert not data.has_sixteenth
        assert data.is_identity


def test_involution_respects_products(ising, rank1_4):
    data = {n: miyamoto(ising, n) for n in range(3)}
    h = VoaElement.oscillator(rank1_4, (1,), 1)
    plus = VoaElement.exponential(rank1_4, (1,))
    assert automorphism_defects(ising, [(h, 0, plus), (h, 1, h)], data) == []


def test_stabilization_of_the_standard_form(ising, rank1_4):
    records = stabilization_check(ising, forms_through(rank1_4, 2), 2)
    assert [r.degree for r in records] == [0, 1, 2]
    for record in records:
        assert record.span_preserved
        assert record.form_preserved
        assert record.index == 1


def test_stabilization_needs_the_vector_in_degree_two(ising, rank1_4):
    with pytest.raises(InvalidInputError):
        stabilization_check(ising, forms_through(rank1_4, 1), 1)


def conjugation_defects(e, g, degree):
    """Rows where ``t(g e) g`` and ``g t(e)`` differ on the degree piece."""
    moved = IsingVector(g.apply(e.element), e.kind, e.provenance)
    before = miyamoto(e, degree).involution
    after = miyamoto(moved, degree).involution
    image = g.matrix(degree)
    return [i for i in range(len(image)) if apply_sparse(after, image[i]) != apply_sparse(image, before[i])]


@pytest.mark.parametrize("degree", [0, 1, 2])
def test_involution_of_theta_image_is_conjugate(ising, rank1_4, degree):
    assert conjugation_defects(ising, theta(rank1_4), degree) == []


@pytest.mark.parametrize("degree", [0, 1, 2])
def test_involution_of_reflected_vector_is_conjugate(degree):
    lattice = catalog("A1+A1")
    e = cvcc_aa1(lattice, (1, 1))
    flip = lift_isometry(lattice, [[1, 0], [0, -1]])
    assert flip.apply(e.element) != e.element
    assert conjugation_defects(e, flip, degree) == []


# -- E8 ------------------------------------------------------------------------


def norm_four_vector(lattice):
    """Sum of the first two orthogonal basis vectors."""
    d = lattice.rank
    i, j = next((i, j) for i in range(d) for j in range(i + 1, d) if lattice.gram[i][j] == 0)
    return tuple(int(k in (i, j)) for k in range(d))


@pytest.fixture(scope="module")
def e8_ising(e8):
    return cvcc_aa1(e8, norm_four_vector(e8))


@pytest.mark.slow
def test_e8_aa1_vector_is_ising(e8_ising):
    assert not ising_check(e8_ising, bracket_degree=1).has_errors


@pytest.mark.slow
def test_e8_involution_has_sixteenth_eigenvalue(e8_ising):
    data = miyamoto(e8_ising, 1)
    assert data.dimension == 248
    assert sum(data.eigenvalues.values()) == 248
    assert all(in_family(value) for value in data.eigenvalues)
    assert data.has_sixteenth
    assert not data.is_identity
    assert data.squares_to_identity()


@pytest.mark.slow
def test_e8_involution_respects_products(e8, e8_ising):
    alpha = e8_ising.provenance[0]
    k = next(k for k in range(8) if e8.inner(alpha, e8.basis_vector(k)) % 2)
    root = VoaElement.exponential(e8, e8.basis_vector(k))
    opposite = VoaElement.exponential(e8, tuple(-x for x in e8.basis_vector(k)))
    h = VoaElement.oscillator(e8, alpha, 1)
    data = {n: miyamoto(e8_ising, n) for n in range(2)}
    pairs = [(h, 0, root), (root, 0, opposite), (root, 1, opposite)]
    assert automorphism_defects(e8_ising, pairs, data) == []


@pytest.mark.slow
def test_e8_involution_preserves_weight_one_span(e8, e8_ising):
    forms = {
        0: standard_form(e8, 0),
        1: standard_form(e8, 1),
        2: GradedZForm.from_elements(e8, 2, [e8_ising.element]),
    }
    records = stabilization_check(e8_ising, forms, 1)
    assert [r.degree for r in records] == [0, 1]
    assert all(r.span_preserved for r in records)


@pytest.mark.slow
def test_e8_involution_of_theta_image_is_conjugate(e8, e8_ising):
    assert conjugation_defects(e8_ising, theta(e8), 1) == []
