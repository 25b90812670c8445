import os
from contextlib import contextmanager
from fractions import Fraction
from itertools import product

import pytest

from ivoa_forms.core import EvenLattice, catalog


@contextmanager
def inside_dir(dirpath):
    """
    Execute code from inside the given directory
    :param dirpath: String, path of the directory the command is being run.
    """
    old_path = os.getcwd()
    try:
        os.chdir(dirpath)
        yield
    finally:
        os.chdir(old_path)


def brute_min_norm(gram, max_radius=6):
    """Smallest nonzero norm by scanning a box that provably holds a shortest
    vector; None when that box would be wider than max_radius."""
    n = len(gram)
    lattice_gram = [[Fraction(x) for x in row] for row in gram]
    inverse = _inverse(lattice_gram)
    shortest = min(lattice_gram[i][i] for i in range(n))
    radius = max(int((shortest * inverse[i][i]) ** 0.5) + 1 for i in range(n))
    if radius > max_radius:
        return None
    best = None
    for x in product(range(-radius, radius + 1), repeat=n):
        if not any(x):
            continue
        value = sum(x[i] * lattice_gram[i][j] * x[j] for i in range(n) for j in range(n))
        if best is None or value < best:
            best = value
    return best


def _inverse(matrix):
    n = len(matrix)
    aug = [list(row) + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(matrix)]
    for c in range(n):
        pivot = next(r for r in range(c, n) if aug[r][c])
        aug[c], aug[pivot] = aug[pivot], aug[c]
        lead = aug[c][c]
        aug[c] = [x / lead for x in aug[c]]
        for r in range(n):
            if r != c and aug[r][c]:
                factor = aug[r][c]
                aug[r] = [x - factor * y for x, y in zip(aug[r], aug[c])]
    return [row[n:] for row in aug]


@pytest.fixture(scope="session")
def a1() -> EvenLattice:
    return catalog("A1")


@pytest.fixture(scope="session")
def a2() -> EvenLattice:
    return catalog("A2")


@pytest.fixture(scope="session")
def e8() -> EvenLattice:
    return catalog("E8")


@pytest.fixture(scope="session")
def rank1_4() -> EvenLattice:
    return catalog("RANK1(4)")
