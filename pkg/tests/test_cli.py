import json
import sys

import pytest
from conftest import inside_dir
from typer.testing import CliRunner

from ivoa_forms.run import app, main

runner = CliRunner()


def invoke(*args):
    return runner.invoke(app, list(args))


# -- Bases and products --------------------------------------------------------


def test_basis_count():
    result = invoke("basis", "-l", "E8", "-n", "1", "--count-only")
    assert result.exit_code == 0
    assert "248" in result.stdout


def test_basis_json(tmp_path):
    with inside_dir(tmp_path):
        result = invoke("basis", "-l", "A1", "-n", "1", "--json", "out/basis.json")
        assert result.exit_code == 0
        document = json.loads((tmp_path / "out" / "basis.json").read_text())
    assert document["schema"] == 1
    assert document["command"] == "basis"
    assert document["per_degree"][0]["count"] == 3
    assert len(document["per_degree"][0]["elements"]) == 3


def test_unknown_lattice_exits_with_one():
    result = invoke("basis", "-l", "X9", "-n", "1")
    assert result.exit_code == 1


def test_lattice_file(tmp_path):
    path = tmp_path / "a2.gram"
    path.write_text("2\n2 -1\n-1 2  # A2\n")
    result = invoke("basis", "-l", str(path), "-n", "1", "--count-only")
    assert result.exit_code == 0
    assert "8" in result.stdout


def test_product_of_exponentials():
    # e^g and e^-g are the last two weight one basis elements of A1
    result = invoke("product", "-l", "A1", "--u-degree", "1", "--u", "1", "--v-degree", "1", "--v", "2", "--k", "1")
    assert result.exit_code == 0
    result = invoke("product", "-l", "A1", "--u-degree", "1", "--u", "7", "--v-degree", "1", "--v", "2", "--k", "1")
    assert result.exit_code == 1


# -- Checks and exit codes -----------------------------------------------------


def test_generated_form_check_passes():
    result = invoke("generate", "-l", "A1", "--max-degree", "2", "--check")
    assert result.exit_code == 0


def test_failed_check_exits_with_two():
    result = invoke("generate", "-l", "A1", "--max-degree", "1", "-g", "1", "--check")
    assert result.exit_code == 2


def test_audit_with_report(tmp_path):
    report = tmp_path / "audit.md"
    result = invoke("audit", "-l", "A2", "-n", "1", "-n", "2", "--min-norm-block", "J", "--report", str(report))
    assert result.exit_code == 0
    assert report.read_text().startswith("# Audit of V_A2")


def test_dual_check():
    result = invoke("dual-check", "-l", "A2", "-n", "2", "--form", "bilinear")
    assert result.exit_code == 0


def test_trace_form():
    result = invoke("trace-form", "-l", "A1", "--m", "1")
    assert result.exit_code == 0


def test_tensor():
    result = invoke("tensor", "--left", "A1", "--right", "A1", "--max-degree", "1")
    assert result.exit_code == 0


# -- Groups and involutions ----------------------------------------------------


def test_theta_surgery():
    for command in ("intersect", "sum", "fix"):
        result = invoke(command, "-l", "A1", "--max-degree", "1", "--theta")
        assert result.exit_code == 0, command


def test_surgery_needs_a_group():
    result = invoke("fix", "-l", "A1", "--max-degree", "1")
    assert result.exit_code == 1


def test_eigen_split_of_a_matrix(tmp_path):
    swap = tmp_path / "swap.txt"
    swap.write_text("0 1\n1 0\n")
    result = invoke("eigen-split", "--matrix", str(swap))
    assert result.exit_code == 0
    assert "Z/2" in result.stdout


def test_eigen_split_of_a_lifted_involution(tmp_path):
    minus = tmp_path / "minus.txt"
    minus.write_text("-1\n")
    result = invoke("eigen-split", "-l", "A1", "-n", "1", "--involution", str(minus))
    assert result.exit_code == 0


def test_ising_with_miyamoto(tmp_path):
    out = tmp_path / "ising.json"
    result = invoke(
        "ising", "-l", "RANK1(4)", "--type", "AA1", "--check",
        "--bracket-degree", "1", "--miyamoto-through", "2", "--json", str(out),
    )
    assert result.exit_code == 0
    document = json.loads(out.read_text())
    assert [d["degree"] for d in document["per_degree"]] == [0, 1, 2]
    assert not any(d["has_sixteenth"] for d in document["per_degree"])


def test_ising_rejects_bad_signs():
    result = invoke("ising", "-l", "RANK1(4)", "--type", "aa1", "--sign", "0")
    assert result.exit_code == 1


# -- Global options and entry point --------------------------------------------


def test_bad_log_level():
    result = invoke("--log-level", "chatty", "basis", "-l", "A1", "-n", "0")
    assert result.exit_code == 1


def test_threads_option():
    result = invoke("--threads", "2", "gram", "-l", "A2", "-n", "1")
    assert result.exit_code == 0


@pytest.mark.parametrize(
    "argv, code",
    [
        (["basis", "-l", "A1", "-n", "1", "--count-only"], 0),
        (["basis", "-l", "A1"], 1),
        (["basis", "-l", "X9", "-n", "1"], 1),
    ],
)
def test_main_exit_codes(monkeypatch, argv, code):
    monkeypatch.setattr(sys, "argv", ["ivoa", *argv])
    with pytest.raises(SystemExit) as exit_info:
        main()
    assert exit_info.value.code == code


def test_trivial_miyamoto_involution_is_only_a_warning():
    result = invoke("ising", "-l", "RANK1(4)", "--type", "AA1", "--miyamoto-through", "1")
    assert result.exit_code == 0
    assert "miyamoto.sixteenth" in result.stdout
