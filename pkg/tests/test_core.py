from fractions import Fraction

import pytest
from conftest import brute_min_norm
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from ivoa_forms.core import (
    AbelianInvariants,
    Bound,
    EvenLattice,
    IntegerModule,
    catalog,
    cokernel,
    determinant,
    discriminant_group,
    hnf,
    index_of,
    integer_kernel,
    lattice_dual,
    lattice_vectors,
    lll_gram,
    min_norm,
    module_index,
    module_quotient,
    orthogonal_sum,
    snf,
    vectors_of_norm,
)
from ivoa_forms.core.matrices import matmul, transpose
from ivoa_forms.errors import ContainmentError, InvalidInputError

small_ints = st.integers(min_value=-4, max_value=4)


def square_matrices(n):
    return st.lists(st.lists(small_ints, min_size=n, max_size=n), min_size=n, max_size=n)


# -- Lattices ------------------------------------------------------------------


@pytest.mark.parametrize(
    "name, rank, det",
    [
        ("A1", 1, 2),
        ("A2", 2, 3),
        ("A(3)", 3, 4),
        ("D(4)", 4, 4),
        ("E8", 8, 1),
        ("EE8", 8, 256),
        ("RANK1(4)", 1, 4),
        ("A1+A1", 2, 4),
    ],
)
def test_catalog_ranks_and_determinants(name, rank, det):
    lattice = catalog(name)
    assert lattice.rank == rank
    assert lattice.det == det


@pytest.mark.parametrize(
    "name, divisors",
    [("A1", (2,)), ("A2", (3,)), ("D(4)", (2, 2)), ("E8", ()), ("A1+A1", (2, 2)), ("RANK1(4)", (4,))],
)
def test_discriminant_group(name, divisors):
    assert discriminant_group(catalog(name)).divisors == divisors


@pytest.mark.parametrize(
    "rows",
    [
        [[1]],  # odd
        [[2, 1], [0, 2]],  # not symmetric
        [[2, 3], [3, 2]],  # indefinite
        [[0]],
    ],
)
def test_even_lattice_rejects_bad_gram(rows):
    with pytest.raises(InvalidInputError):
        EvenLattice.from_rows(rows)


@pytest.mark.parametrize("name", ["X9", "RANK1(3)", "A0", "D(2)"])
def test_catalog_rejects_unknown_names(name):
    with pytest.raises(InvalidInputError):
        catalog(name)


def test_orthogonal_sum_is_block_diagonal(a1, a2):
    total = orthogonal_sum(a1, a2)
    assert total.gram == ((2, 0, 0), (0, 2, -1), (0, -1, 2))
    assert total.det == a1.det * a2.det


def test_dual_basis_pairs_to_delta(a2):
    for i in range(2):
        beta = a2.dual_basis_vector(i)
        for j in range(2):
            assert a2.inner(beta, a2.basis_vector(j)) == int(i == j)


def test_lattice_dual_is_the_inverse_gram(a1, e8):
    assert lattice_dual(a1) == [[Fraction(1, 2)]]
    dual = lattice_dual(e8)
    assert all(x.denominator == 1 for row in dual for x in row)
    assert determinant(dual) == 1
    assert matmul(dual, [list(row) for row in e8.gram]) == [[int(i == j) for j in range(8)] for i in range(8)]


# -- Abelian invariants --------------------------------------------------------


def test_invariants_from_cyclic_orders():
    group = AbelianInvariants.from_cyclic_orders([2, 4, 3])
    assert group.divisors == (2, 12)
    assert group.order == 24
    assert str(group) == "Z/2 + Z/12"


def test_invariants_need_a_divisibility_chain():
    with pytest.raises(ValueError):
        AbelianInvariants((4, 2))


def test_invariants_free_part_has_infinite_order():
    group = AbelianInvariants((2,), free_rank=1)
    assert group.order is Bound.INFINITE
    assert not group.is_trivial
    assert AbelianInvariants().is_trivial


# -- Normal forms --------------------------------------------------------------


@given(square_matrices(3))
@settings(max_examples=60, deadline=None)
def test_hnf_is_a_unimodular_transform(matrix):
    h, u = hnf(matrix)
    assert matmul(u, matrix) == h
    assert abs(determinant(u)) == 1
    for row in h:
        nonzero = [x for x in row if x]
        if nonzero:
            assert nonzero[0] > 0


@given(square_matrices(3))
@settings(max_examples=60, deadline=None)
def test_snf_order_matches_determinant(matrix):
    det = determinant(matrix)
    assume(det != 0)
    invariants, rank = snf(matrix)
    assert rank == 3
    assert invariants.order == abs(det)


@given(st.lists(st.lists(small_ints, min_size=2, max_size=2), min_size=3, max_size=4))
@settings(max_examples=60, deadline=None)
def test_integer_kernel_annihilates(matrix):
    for x in integer_kernel(matrix):
        assert matmul([x], matrix) == [[0, 0]]


def test_cokernel_counts_the_free_part():
    assert cokernel([[2, 0, 0]], 3) == AbelianInvariants((2,), free_rank=2)
    assert cokernel([], 2) == AbelianInvariants(free_rank=2)


# -- Integer modules -----------------------------------------------------------


def test_module_index_and_quotient():
    sub = IntegerModule.span(2, [[2, 0], [0, 3]])
    sup = IntegerModule.full(2)
    assert sub <= sup
    assert module_index(sub, sup) == 6
    assert module_quotient(sub, sup) == AbelianInvariants((6,))
    assert index_of([[2, 0], [0, 2]], [[1, 0], [0, 1]]) == 4


def test_module_quotient_rejects_non_containment():
    with pytest.raises(ContainmentError):
        module_quotient(IntegerModule.full(2), IntegerModule.span(2, [[2, 0], [0, 1]]))


def test_module_index_drops_to_infinite_on_rank_loss():
    assert module_index(IntegerModule.span(2, [[1, 0]]), IntegerModule.full(2)) is Bound.INFINITE


def test_module_index_needs_integral_containment():
    # the coordinate determinant is 2, but (1, 0) is not in 2Z + Z
    sub = IntegerModule.span(2, [[1, 0], [0, 4]])
    sup = IntegerModule.span(2, [[2, 0], [0, 1]])
    with pytest.raises(ContainmentError):
        module_index(sub, sup)
    with pytest.raises(ContainmentError):
        index_of([[1, 0]], [[2, 0], [0, 1]])


def test_module_intersection_and_sum():
    a = IntegerModule.span(3, [[2, 0, 0], [0, 1, 0]])
    b = IntegerModule.span(3, [[3, 0, 0], [0, 1, 1]])
    meet = a & b
    assert meet == IntegerModule.span(3, [[6, 0, 0]])
    assert (a + b).contains([1, 0, 0])
    assert (a + b).contains([0, 0, 1])


def test_module_membership_and_coordinates():
    module = IntegerModule.span(3, [[1, 1, 0], [0, 2, 0]])
    assert module.contains({0: 1, 1: 3})
    assert not module.contains([0, 1, 0])
    assert module.coordinates([0, 1, 0]) is not None
    assert module.coordinates([0, 0, 1]) is None


# -- Enumeration ---------------------------------------------------------------


def test_e8_root_and_norm_four_counts(e8):
    assert len(vectors_of_norm(e8, 2)) == 240
    assert len(vectors_of_norm(e8, 4)) == 2160
    assert len(lattice_vectors(e8, 4)) == 2401


def test_lattice_vectors_sorted_by_norm(a2):
    vectors = lattice_vectors(a2, 6)
    assert vectors[0] == (0, 0)
    norms = [a2.norm(v) for v in vectors]
    assert norms == sorted(norms)
    assert norms.count(2) == 6


def test_lll_gram_keeps_the_lattice():
    gram = [[10, 7], [7, 6]]
    reduced, t = lll_gram(gram)
    assert matmul(matmul(t, gram), transpose(t)) == reduced
    assert abs(determinant(t)) == 1
    assert reduced[0][0] <= 6


def test_min_norm_of_catalog_lattices(e8, rank1_4):
    value, witness = min_norm(e8.gram, 4)
    assert value == 2
    assert e8.norm(witness) == 2
    assert min_norm(rank1_4.gram, 4)[0] == 4
    assert min_norm(rank1_4.gram, 3) == (Bound.NONE_BELOW_BOUND, None)


def test_min_norm_rejects_nonpositive_bound(a1):
    with pytest.raises(InvalidInputError):
        min_norm(a1.gram, 0)


@given(square_matrices(3))
@settings(max_examples=40, deadline=None)
def test_min_norm_matches_brute_force(basis):
    assume(determinant(basis) != 0)
    gram = matmul(basis, transpose(basis))
    expected = brute_min_norm(gram)
    assume(expected is not None)
    value, witness = min_norm(gram, max(gram[i][i] for i in range(3)))
    assert value == expected
    assert sum(witness[i] * gram[i][j] * witness[j] for i in range(3) for j in range(3)) == value
