"""Parsing of lattice specs, isometry files and small inline values.

Lattice files hold the rank ``d`` on the first line and then ``d`` rows of
``d`` integers (the Gram matrix).  Isometry files hold ``d`` rows of ``d``
integers (``sigma`` in the row convention) and an optional line of ``d``
signs.  Blank lines and ``#`` comments are ignored in both.
"""

from __future__ import annotations

from pathlib import Path

from ..core.lattice import EvenLattice, catalog
from ..core.types import IntMatrix, LatticeVector
from ..errors import InvalidInputError
from ..symmetry.isometry import LiftedIsometry, lift_isometry


def _lines(path: Path) -> list[list[str]]:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise InvalidInputError(f"Cannot read {path}: {e}") from e
    out = []
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if line:
            out.append(line.replace(",", " ").split())
    return out


def _integers(words: list[str], where: str) -> list[int]:
    try:
        return [int(w) for w in words]
    except ValueError as e:
        raise InvalidInputError(f"{where}: expected integers, got {' '.join(words)!r}") from e


def read_matrix_rows(rows: list[list[str]], d: int, path: Path) -> IntMatrix:
    if len(rows) < d:
        raise InvalidInputError(f"{path}: expected {d} rows, found {len(rows)}")
    matrix = [_integers(row, f"{path} row {i + 1}") for i, row in enumerate(rows[:d])]
    for i, row in enumerate(matrix):
        if len(row) != d:
            raise InvalidInputError(f"{path} row {i + 1}: expected {d} entries, got {len(row)}")
    return matrix


def read_lattice_file(path: Path) -> EvenLattice:
    rows = _lines(path)
    if not rows:
        raise InvalidInputError(f"{path} is empty")
    header = _integers(rows[0], f"{path} header")
    if len(header) != 1 or header[0] < 1:
        raise InvalidInputError(f"{path}: the first line must be the rank")
    d = header[0]
    if len(rows) != d + 1:
        raise InvalidInputError(f"{path}: expected {d} Gram rows after the rank, found {len(rows) - 1}")
    return EvenLattice.from_rows(read_matrix_rows(rows[1:], d, path), Path(path).stem)


def resolve_lattice(source: str) -> EvenLattice:
    """A catalog name (``E8``, ``A(3)``, ``RANK1(4)``, ``A1+A1``) or a lattice file."""
    path = Path(source)
    if path.is_file():
        return read_lattice_file(path)
    return catalog(source)


def read_isometry_file(lattice: EvenLattice, path: Path) -> LiftedIsometry:
    rows = _lines(path)
    d = lattice.rank
    sigma = read_matrix_rows(rows, d, path)
    signs = None
    if len(rows) == d + 1:
        signs = parse_signs(" ".join(rows[d]), d)
    elif len(rows) > d + 1:
        raise InvalidInputError(f"{path}: expected {d} rows and an optional sign line")
    return lift_isometry(lattice, sigma, signs)


def read_integer_matrix(path: Path) -> IntMatrix:
    """A square integer matrix, one row per line."""
    rows = _lines(path)
    if not rows:
        raise InvalidInputError(f"{path} is empty")
    return read_matrix_rows(rows, len(rows), path)


def read_embedding_file(path: Path, rank: int) -> IntMatrix:
    """Rows of lattice coordinates, each of length ``rank``."""
    matrix = [_integers(row, f"{path} row {i + 1}") for i, row in enumerate(_lines(path))]
    for i, row in enumerate(matrix):
        if len(row) != rank:
            raise InvalidInputError(f"{path} row {i + 1}: expected {rank} entries, got {len(row)}")
    return matrix


# ---------------------------------------------------------------------------
# Inline values
# ---------------------------------------------------------------------------


def parse_sign(text: str) -> int:
    value = text.strip()
    if value in ("+", "+1", "1"):
        return 1
    if value in ("-", "-1"):
        return -1
    raise InvalidInputError(f"Expected a sign (+ or -), got {text!r}")


def parse_signs(text: str, length: int) -> tuple[int, ...]:
    signs = tuple(parse_sign(w) for w in text.replace(",", " ").split())
    if len(signs) != length:
        raise InvalidInputError(f"Expected {length} signs, got {len(signs)}")
    return signs


def parse_vector(text: str, rank: int) -> LatticeVector:
    vector = tuple(_integers(text.replace(",", " ").split(), "vector"))
    if len(vector) != rank:
        raise InvalidInputError(f"Vector {vector} does not match rank {rank}")
    return vector
