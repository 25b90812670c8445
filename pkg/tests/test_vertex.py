from fractions import Fraction

import pytest

from ivoa_forms.core import AbelianInvariants, catalog
from ivoa_forms.errors import InvalidInputError
from ivoa_forms.symmetry import lift_isometry, theta
from ivoa_forms.voa import PairingForm, VoaElement, graded_gram, heisenberg_mode, pair, standard_form, voa_basis
from ivoa_forms.vertex import (
    ModeRequest,
    generated_form,
    generating_identity_check,
    invariance_check,
    is_quasi_primary,
    omega,
    omega_multiplier,
    pair_adjoint_check,
    skew_symmetry_check,
    trace_form,
    vertex_mode,
    virasoro_config,
    virasoro_mode,
)


def exp(lattice, *charge):
    return VoaElement.exponential(lattice, charge)


# -- Modes ---------------------------------------------------------------------


def test_exponential_products_on_a1(a1):
    plus, minus = exp(a1, 1), exp(a1, -1)
    vac = VoaElement.vacuum(a1)
    h = VoaElement.oscillator(a1, (1,), 1)
    assert vertex_mode(plus, 1, minus) == -vac
    assert vertex_mode(plus, 0, minus) == -h
    assert not vertex_mode(plus, 2, minus)


def test_vacuum_and_creation(a1):
    vac = VoaElement.vacuum(a1)
    for n in range(3):
        for v in voa_basis(a1, n):
            assert vertex_mode(vac, -1, v) == v
            assert vertex_mode(v, -1, vac) == v


def test_heisenberg_zero_mode_reads_the_charge(a2):
    v = exp(a2, 1, 1)
    assert heisenberg_mode((1, 0), 0, v) == v.scaled(1)
    assert heisenberg_mode((1, 1), 0, v) == v.scaled(2)


def test_mode_request_weight(a1):
    request = ModeRequest(exp(a1, 1), 0, exp(a1, -1))
    assert request.expected_weight == 1
    assert request.evaluate().weight == 1


def test_lift_commutes_with_modes(a2):
    rotation = lift_isometry(a2, [[0, -1], [1, -1]])
    basis = voa_basis(a2, 1)
    for u in basis:
        for v in basis:
            for k in (-1, 0, 1):
                assert rotation.apply(vertex_mode(u, k, v)) == vertex_mode(rotation.apply(u), k, rotation.apply(v))


@pytest.mark.parametrize("name, top", [("A1", 2), ("A2", 1)])
def test_modes_of_basis_vectors_stay_integral(name, top):
    lattice = catalog(name)
    forms = {}
    for i in range(top + 1):
        for j in range(top + 1):
            for u in voa_basis(lattice, i):
                for v in voa_basis(lattice, j):
                    for k in range(-2, i + j):
                        w = vertex_mode(u, k, v)
                        if not w:
                            continue
                        if w.weight not in forms:
                            forms[w.weight] = standard_form(lattice, w.weight)
                        assert forms[w.weight].contains(w), (u, k, v)


@pytest.mark.parametrize("m, n, k", [(0, 0, 1), (0, 0, 0), (1, 0, 1), (0, 1, 0), (1, 1, 1), (2, 0, 0)])
def test_generating_identity_opposite_charges(a1, m, n, k):
    assert generating_identity_check(a1, (1,), (-1,), m, n, k).holds


@pytest.mark.parametrize("m, n, k", [(0, 0, -3), (1, 0, -3), (0, 0, -4)])
def test_generating_identity_equal_charges(a1, m, n, k):
    assert generating_identity_check(a1, (1,), (1,), m, n, k).holds


def test_skew_symmetry(a1):
    plus, minus = exp(a1, 1), exp(a1, -1)
    h = VoaElement.oscillator(a1, (1,), 1)
    for k in (-1, 0, 1):
        assert skew_symmetry_check(plus, k, minus).holds
        assert skew_symmetry_check(h, k, plus).holds


# -- Virasoro ------------------------------------------------------------------


@pytest.mark.parametrize("name, multiplier", [("A1", 4), ("A2", 3), ("E8", 1), ("RANK1(4)", 8)])
def test_omega_multiplier(name, multiplier):
    assert omega_multiplier(catalog(name)) == multiplier


def test_virasoro_config(a2):
    config = virasoro_config(a2)
    assert config.central_charge == 2
    assert config.omega == omega(a2)


def test_l0_is_the_grading(a1):
    for n in range(3):
        for v in voa_basis(a1, n):
            assert virasoro_mode(0, v) == v.scaled(n)


def test_omega_is_quasi_primary_with_central_charge(a2):
    w = omega(a2)
    assert is_quasi_primary(w)
    assert vertex_mode(w, 3, w) == VoaElement.vacuum(a2).scaled(1)
    assert not virasoro_mode(-1, VoaElement.vacuum(a2))


def test_virasoro_bracket_on_a1(a1):
    modes = range(-2, 3)
    for n in range(5):
        for v in voa_basis(a1, n):
            for m in modes:
                for k in modes:
                    left = virasoro_mode(m, virasoro_mode(k, v)) - virasoro_mode(k, virasoro_mode(m, v))
                    right = virasoro_mode(m + k, v).scaled(m - k)
                    if m + k == 0:
                        right = right + v.scaled(Fraction(m**3 - m, 12))
                    assert not (left - right), (v, m, k)


# -- Invariant form ------------------------------------------------------------


def test_invariance_matches_bilinear_form_in_weight_one(a1):
    elements = voa_basis(a1, 1)
    for u in elements:
        for v in elements:
            report = invariance_check(u, v)
            assert report.pairing == pair(u, v, PairingForm.BILINEAR)
            assert report.integral
            assert pair_adjoint_check(u, v) == report.pairing


def test_invariance_check_needs_equal_weights(a1):
    with pytest.raises(InvalidInputError):
        invariance_check(exp(a1, 1), VoaElement.vacuum(a1))


def test_hermitian_form_is_bilinear_form_twisted_by_theta(a2):
    t = theta(a2)
    basis = voa_basis(a2, 2)
    for u in basis:
        for v in basis:
            assert pair(u, v, PairingForm.HERMITIAN) == pair(u, t.apply(v), PairingForm.BILINEAR)


@pytest.mark.parametrize("form", [PairingForm.HERMITIAN, PairingForm.BILINEAR])
def test_lifts_preserve_both_pairings(a2, form):
    basis = voa_basis(a2, 2)
    for g in (theta(a2), lift_isometry(a2, [[0, -1], [1, -1]])):
        assert graded_gram([g.apply(b) for b in basis], form) == graded_gram(basis, form)


def test_trace_form_of_a1_is_the_killing_form(a1):
    report = trace_form(a1, 1)
    assert report.integral
    assert report.rank == 3
    assert report.invariants == AbelianInvariants((4, 4, 8))


def test_trace_form_in_degree_two(a1):
    report = trace_form(a1, 2)
    assert report.degree == 2
    assert report.integral
    assert len(report.matrix) == standard_form(a1, 2).rank
    assert 0 < report.rank <= len(report.matrix)
    for i, row in enumerate(report.matrix):
        for j, value in enumerate(row):
            assert value == report.matrix[j][i]


def test_trace_form_rejects_wrong_degree(a1):
    with pytest.raises(InvalidInputError):
        trace_form(a1, 2, standard_form(a1, 1))


# -- Closure -------------------------------------------------------------------


def test_exponentials_generate_the_standard_form(a1):
    forms = generated_form(a1, [exp(a1, 1), exp(a1, -1)], 2)
    assert forms[1].rank == 3
    for n in range(3):
        assert forms[n] == standard_form(a1, n)


def test_generated_form_rejects_heavy_generators(a1):
    with pytest.raises(InvalidInputError):
        generated_form(a1, [exp(a1, 2)], 2)



ROOTS = {
    "A1": [(1,), (-1,)],
    "A2": [(1, 0), (-1, 0), (0, 1), (0, -1), (1, 1), (-1, -1)],
}


@pytest.mark.parametrize("name", ["A1", pytest.param("A2", marks=pytest.mark.slow)])
def test_root_exponentials_generate_the_standard_form_to_degree_three(name):
    lattice = catalog(name)
    forms = generated_form(lattice, [exp(lattice, *r) for r in ROOTS[name]], 3)
    for n in range(4):
        assert forms[n] == standard_form(lattice, n)
