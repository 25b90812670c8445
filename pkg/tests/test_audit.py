import json
from fractions import Fraction

import pytest

from ivoa_forms.audit import (
    SCHEMA,
    FormKind,
    Parity,
    ReportExtension,
    audit,
    block_name,
    dumps_report,
    duality_check,
    schur_pairing_is_identity,
    e8_audit,
    environment,
    glue_record,
    render_report,
    to_jsonable,
    write_json,
    write_report,
)
from ivoa_forms.core import AbelianInvariants, Bound, catalog
from ivoa_forms.errors import InvalidInputError
from ivoa_forms.voa import PairingForm, standard_form


@pytest.fixture(scope="module")
def a1_report(a1):
    return audit(a1, [0, 1, 2])


# -- Records -------------------------------------------------------------------


def test_block_names():
    assert block_name(0) == "J"
    assert block_name(4) == "norm4"


def test_a1_weight_one_audit(a1_report):
    record = a1_report.records[1]
    assert a1_report.passed
    assert (record.rank, record.dimension, record.det, record.scale) == (3, 3, 2, 1)
    assert record.parity is Parity.ODD
    assert record.invariants == AbelianInvariants((2,))
    assert [b.name for b in record.blocks] == ["J", "norm2"]
    assert record.block("norm2").is_square
    assert record.block("J").det == 2
    with pytest.raises(InvalidInputError):
        record.block("norm8")


def test_vacuum_degree(a1_report):
    record = a1_report.records[0]
    assert record.rank == 1
    assert record.det == 1
    assert record.glue is None


def test_a2_minimum_norm_of_j(a2):
    report = audit(a2, [1], min_norm_block="J")
    record = report.records[0]
    assert record.det == 3
    assert record.block("J").min_norm == 2
    assert record.min_norm == 2
    assert record.block("norm2").pieces == 6


def test_minimum_norm_needs_the_hermitian_form(a2):
    with pytest.raises(InvalidInputError):
        audit(a2, [1], PairingForm.BILINEAR, min_norm_block="J")
    with pytest.raises(InvalidInputError):
        audit(a2, [1], min_norm_block="norm8")


def test_bilinear_audit_pairs_opposite_charges(a1):
    record = audit(a1, [1], PairingForm.BILINEAR).records[0]
    assert record.block("norm2").pieces == 1
    assert record.block("norm2").rank == 2
    assert abs(record.det) == 2


def test_dual_form_audit(a1):
    report = audit(a1, [1], module=FormKind.DUAL)
    assert report.records[0].det == Fraction(1, 2)
    assert report.module is FormKind.DUAL


def test_glue_of_a1_in_weight_two(a1):
    glue = glue_record(standard_form(a1, 2))
    assert glue is not None
    assert glue.block == "J"
    assert glue.ranks == (1, 1)
    assert glue.index in (1, 2)


def test_e8_weight_one():
    report = e8_audit(1)
    assert report.passed
    record = report.records[0]
    assert record.rank == 248
    assert record.block("J").rank == 8
    assert record.block("norm2").rank == 240


@pytest.mark.slow
def test_e8_weight_two():
    report = e8_audit(2)
    assert report.passed, [i.message for i in report.checks.errors]
    record = report.records[1]
    assert record.block("J").min_norm == 3
    assert record.glue.index == 256
    assert record.glue.det == 2**16


def test_e8_audit_covers_two_degrees():
    with pytest.raises(InvalidInputError):
        e8_audit(3)


# -- Duality -------------------------------------------------------------------


@pytest.mark.parametrize("pairing", [PairingForm.HERMITIAN, PairingForm.BILINEAR])
def test_duality_of_a1(a1, pairing):
    report = duality_check(a1, 2, pairing)
    assert report.passed
    assert report.records[1].invariants == AbelianInvariants((2,))


def test_duality_of_a2(a2):
    report = duality_check(a2, 2)
    assert report.passed
    assert [r.degree for r in report.records] == [0, 1, 2]
    assert report.records[0].invariants.is_trivial
    assert report.records[1].invariants == AbelianInvariants((3,))


@pytest.mark.parametrize("pairing", [PairingForm.HERMITIAN, PairingForm.BILINEAR])
@pytest.mark.parametrize("degree", [0, 1, 2, 3, 4, pytest.param(5, marks=pytest.mark.slow)])
def test_schur_duality_of_a2(a2, degree, pairing):
    assert schur_pairing_is_identity(a2, degree, pairing)


def test_duality_of_ee8_in_weight_one():
    report = duality_check(catalog("EE8"), 1)
    assert report.passed
    assert report.records[1].invariants == AbelianInvariants((2,) * 8)


def test_duality_rejects_negative_degrees(a1):
    with pytest.raises(InvalidInputError):
        duality_check(a1, -1)


# -- Serialization -------------------------------------------------------------


def test_to_jsonable_scalars():
    assert to_jsonable(Fraction(1, 2)) == "1/2"
    assert to_jsonable(Fraction(4, 2)) == 2
    assert to_jsonable(Parity.ODD) == "odd"
    assert to_jsonable(Bound.INFINITE) == Bound.INFINITE.value
    assert to_jsonable(AbelianInvariants((2, 4))) == {"divisors": [2, 4], "free_rank": 0, "order": 8}
    with pytest.raises(TypeError):
        to_jsonable(object())


def test_json_documents_are_deterministic(a1_report):
    first = dumps_report("audit", {"lattice": "A1"}, a1_report.records, indent=2)
    second = dumps_report("audit", {"lattice": "A1"}, a1_report.records, indent=2)
    assert first == second
    document = json.loads(first)
    assert document["schema"] == SCHEMA == 1
    assert document["command"] == "audit"
    assert document["per_degree"][1]["rank"] == 3
    assert document["per_degree"][1]["parity"] == "odd"


def test_write_json_creates_parents(tmp_path, a1_report):
    path = write_json(tmp_path / "out" / "a1.json", "audit", {"lattice": "A1"}, a1_report.records)
    assert json.loads(path.read_text())["per_degree"][0]["det"] == 1


# -- Markdown ------------------------------------------------------------------


def test_environment_installs_filters():
    env = environment()
    assert {"rational", "divisors", "yesno"} <= set(env.filters)
    assert any(isinstance(ext, ReportExtension) for ext in env.extensions.values())


def test_render_audit_report(a1_report):
    text = render_report(a1_report)
    assert text.startswith("# Audit of V_A1")
    assert "checks passed: yes" in text
    assert "## Degree 1" in text
    assert "| J |" in text


def test_render_duality_report(tmp_path, a2):
    report = duality_check(a2, 1)
    path = write_report(tmp_path / "duality.md", report, "duality.md.j2")
    text = path.read_text()
    assert "Duality of R and U for V_A2" in text
    assert "Z/3" in text
