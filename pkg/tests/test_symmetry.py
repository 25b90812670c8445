from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ivoa_forms.core import AbelianInvariants, IntegerModule, catalog, orthogonal_sum
from ivoa_forms.core.matrices import identity, matmul
from ivoa_forms.errors import InvalidInputError, InvarianceError
from ivoa_forms.symmetry import (
    eigen_split,
    extension_forms,
    fixed_form,
    form_eigen_split,
    forms_through,
    generate_group,
    identity_lift,
    invariant_matrices,
    lift_isometry,
    orbit_intersection,
    orbit_sum,
    plus_generation_check,
    tensor_form,
    theta,
    transform_forms,
)
from ivoa_forms.voa import GradedZForm, VoaElement, standard_form

SWAP = [[0, 1], [1, 0]]


def lopsided_form(a1):
    """``Z h(-1) + Z e^g + 2Z e^-g``: not stable under theta."""
    h = VoaElement.oscillator(a1, (1,), 1)
    plus, minus = VoaElement.exponential(a1, (1,)), VoaElement.exponential(a1, (-1,))
    return GradedZForm.from_elements(a1, 1, [h, plus, minus.scaled(2)])


def tensor_swap(n):
    size = n * n
    matrix = [[0] * size for _ in range(size)]
    for i in range(n):
        for j in range(n):
            matrix[i * n + j][j * n + i] = 1
    return matrix


def canonical_involution(swaps, plus, minus):
    size = 2 * swaps + plus + minus
    matrix = [[0] * size for _ in range(size)]
    for b in range(swaps):
        matrix[2 * b][2 * b + 1] = matrix[2 * b + 1][2 * b] = 1
    for k in range(2 * swaps, 2 * swaps + plus):
        matrix[k][k] = 1
    for k in range(2 * swaps + plus, size):
        matrix[k][k] = -1
    return matrix


def elementary(size, i, j, c):
    matrix = identity(size)
    matrix[i][j] = c
    return matrix


@st.composite
def conjugated_involutions(draw):
    swaps = draw(st.integers(min_value=0, max_value=3))
    plus = draw(st.integers(min_value=0, max_value=2))
    minus = draw(st.integers(min_value=0, max_value=2))
    size = 2 * swaps + plus + minus
    if size == 0:
        plus, size = 1, 1
    t = canonical_involution(swaps, plus, minus)
    if size > 1:
        steps = draw(
            st.lists(
                st.tuples(
                    st.integers(0, size - 1), st.integers(0, size - 1), st.integers(-2, 2)
                ).filter(lambda s: s[0] != s[1]),
                max_size=6,
            )
        )
        for i, j, c in steps:
            t = matmul(matmul(elementary(size, i, j, -c), t), elementary(size, i, j, c))
    return t, swaps


# -- Lifted isometries ---------------------------------------------------------


def test_rotation_of_a2_has_order_three(a2):
    rotation = lift_isometry(a2, [[0, -1], [1, -1]])
    group = generate_group([rotation])
    assert len({g.sigma for g in group}) == 3
    assert len(group) % 3 == 0
    assert rotation.apply(VoaElement.exponential(a2, (1, 0))).charges() == {(0, 1)}


ROTATION = [[0, -1], [1, -1]]


def a2_symmetries(a2):
    return generate_group([theta(a2), lift_isometry(a2, ROTATION)])


def test_theta_and_rotation_generate_the_hexagon(a2):
    assert len({g.sigma for g in a2_symmetries(a2)}) == 6


@pytest.mark.parametrize("max_degree", [2, pytest.param(4, marks=pytest.mark.slow)])
def test_standard_forms_are_stable_under_the_hexagon(a2, max_degree):
    forms = forms_through(a2, max_degree)
    records = orbit_intersection(forms, a2_symmetries(a2))
    assert sorted(records) == list(range(max_degree + 1))
    for n, record in records.items():
        assert record.invariant
        assert record.index == 1
        assert record.form == standard_form(a2, n)


def test_orbit_intersection_doubles_every_root(a2):
    heisenberg = [VoaElement.oscillator(a2, a2.basis_vector(i), 1) for i in range(2)]
    roots = [(1, 0), (-1, 0), (0, 1), (0, -1), (1, 1), (-1, -1)]
    exponentials = [VoaElement.exponential(a2, r, 2 if r == (1, 0) else 1) for r in roots]
    form = GradedZForm.from_elements(a2, 1, heisenberg + exponentials)
    record = orbit_intersection({1: form}, a2_symmetries(a2))[1]
    assert record.index == 32
    assert record.invariant


def test_lift_rejects_non_isometries(a2):
    with pytest.raises(InvalidInputError):
        lift_isometry(a2, [[1, 1], [0, 1]])
    with pytest.raises(InvalidInputError):
        lift_isometry(a2, identity(2), [1, 3])


def test_theta_is_an_involution(a1):
    t = theta(a1)
    assert t.compose(t) == identity_lift(a1)
    assert t.inverse() == t
    assert generate_group([t]) == [identity_lift(a1), t]


def test_group_generation_needs_generators():
    with pytest.raises(InvalidInputError):
        generate_group([])


# -- Fixed points and orbits ---------------------------------------------------


def test_theta_fixed_form_of_a1(a1):
    fixed = fixed_form(forms_through(a1, 2), [theta(a1)])
    assert fixed[0] == standard_form(a1, 0)
    assert fixed[1].rank == 1
    plus = VoaElement.exponential(a1, (1,)) + VoaElement.exponential(a1, (-1,))
    assert fixed[1].contains(plus)


def test_fixed_form_rejects_moving_groups(a1):
    with pytest.raises(InvarianceError) as error:
        fixed_form({1: lopsided_form(a1)}, [theta(a1)])
    assert error.value.degree == 1
    assert error.value.element == 0
    with pytest.raises(InvarianceError):
        invariant_matrices(lopsided_form(a1), [identity_lift(a1), theta(a1)])


def test_orbit_intersection_and_sum(a1):
    form = lopsided_form(a1)
    group = generate_group([theta(a1)])
    record = orbit_intersection({1: form}, group)[1]
    assert record.index == 2
    assert record.history == (1, 2)
    assert record.invariant
    assert orbit_sum({1: form}, group)[1] == standard_form(a1, 1)


def test_standard_forms_are_theta_stable(a2):
    forms = forms_through(a2, 2)
    assert transform_forms(theta(a2), forms) == forms
    for record in orbit_intersection(forms, [theta(a2)]).values():
        assert record.index == 1


def test_tensor_of_standard_forms_is_standard(a1, a2):
    total = orthogonal_sum(a1, a2)
    assert tensor_form(forms_through(a1, 2), forms_through(a2, 2)) == forms_through(total, 2)


def test_tensor_form_needs_both_factors(a1):
    with pytest.raises(InvalidInputError):
        tensor_form({}, forms_through(a1, 1))


# -- Eigenmodules --------------------------------------------------------------


def test_swap_on_the_plane():
    split = eigen_split(IntegerModule.full(2), [SWAP])
    assert split.quotient == AbelianInvariants((2,))
    assert split.jordan_blocks == 1
    assert split.eigenmodule((1,)) == IntegerModule.span(2, [[1, 1]])
    assert split.eigenmodule((-1,)) == IntegerModule.span(2, [[1, -1]])
    assert sorted(split.support) == [(-1,), (1,)]


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
def test_tensor_factor_swap(n):
    split = eigen_split(IntegerModule.full(n * n), [tensor_swap(n)])
    assert split.quotient == AbelianInvariants((2,) * comb(n, 2))
    assert split.jordan_blocks == comb(n, 2)


@given(conjugated_involutions())
@settings(max_examples=100, deadline=None)
def test_index_counts_jordan_blocks(case):
    t, swaps = case
    split = eigen_split(IntegerModule.full(len(t)), [t])
    assert split.jordan_blocks == swaps
    assert split.quotient.order == 2**swaps


def test_eigen_split_rejects_non_involutions():
    with pytest.raises(InvalidInputError):
        eigen_split(IntegerModule.full(2), [[[1, 1], [0, 1]]])
    with pytest.raises(InvalidInputError):
        eigen_split([], [SWAP])


def test_commuting_pair_of_involutions():
    negate = [[-1, 0], [0, -1]]
    split = eigen_split(IntegerModule.full(2), [SWAP, negate])
    assert split.order == 4
    assert split.quotient == AbelianInvariants((2,))
    assert split.jordan_blocks is None
    assert sorted(split.support) == [(-1, -1), (1, -1)]


def test_form_eigen_split_of_a1(a1):
    pieces = form_eigen_split(standard_form(a1, 1), [theta(a1)])
    assert pieces.forms[(1,)].rank == 1
    assert pieces.forms[(-1,)].rank == 2
    assert pieces.split.quotient == AbelianInvariants((2,))


# -- Extensions and generation -------------------------------------------------


def test_extension_forms_of_rank_one(rank1_4):
    forms = forms_through(rank1_4, 2)
    group = generate_group([theta(rank1_4)])
    ext = extension_forms(forms, [theta(rank1_4)], group, 2)
    assert ext.a_prime[0] == forms[0]
    assert ext.a_prime[1] == forms[1]
    for n, containment in enumerate(ext.containments):
        assert containment.degree == n
        assert containment.a_prime_in_square
        assert containment.square_in_product
        assert containment.product_in_double
        assert ext.a_prime[n] <= ext.a_double[n]
        assert ext.a_double[n] <= forms[n]
    assert ext.holds


def test_extension_forms_input_checks(rank1_4):
    forms = forms_through(rank1_4, 1)
    with pytest.raises(InvalidInputError):
        extension_forms(forms, [theta(rank1_4)], [], 1)
    with pytest.raises(InvalidInputError):
        extension_forms(forms, [theta(rank1_4)], [identity_lift(rank1_4)], 2)


def test_plus_vectors_generate_the_fixed_part(rank1_4):
    records = plus_generation_check(rank1_4, 2)
    assert [r.degree for r in records] == [0, 1, 2]
    assert all(r.rational_ranks_agree and r.contained for r in records)
    assert records[1].fixed_rank == 0
    assert records[2].fixed_rank == 2


def test_plus_generation_needs_a_rootless_lattice(a1):
    with pytest.raises(InvalidInputError):
        plus_generation_check(a1, 2)


def test_theta_fixed_weight_one_of_a2_is_spanned_by_root_pairs():
    lattice = catalog("A2")
    fixed = fixed_form(forms_through(lattice, 1), [theta(lattice)])
    assert fixed[1].rank == 3
    assert fixed[1] <= standard_form(lattice, 1)


def test_flip_and_theta_generate_a_klein_group():
    lattice = catalog("A1+A1")
    flip = lift_isometry(lattice, [[1, 0], [0, -1]])
    assert len(generate_group([theta(lattice), flip])) == 4
    assert len(generate_group([theta(lattice), flip, lift_isometry(lattice, SWAP)])) == 8


@pytest.mark.slow
def test_extension_forms_of_a_sum_of_two_roots():
    lattice = catalog("A1+A1")
    involutions = [theta(lattice), lift_isometry(lattice, [[1, 0], [0, -1]])]
    group = generate_group([*involutions, lift_isometry(lattice, SWAP)])
    forms = forms_through(lattice, 3)
    ext = extension_forms(forms, involutions, group, 3)
    assert [c.degree for c in ext.containments] == [0, 1, 2, 3]
    assert ext.holds
    for n in range(4):
        assert ext.a_prime[n] == ext.a_double[n]
