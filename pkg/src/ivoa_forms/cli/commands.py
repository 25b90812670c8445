"""The ``ivoa`` command line.

Every command prints a table to standard output and can write the same data
as a versioned JSON document (``--json PATH``).  Exit codes: 0 on success,
1 for invalid input, 2 when a checked property fails.

Example::

    ivoa basis --lattice E8 --degree 1 --count-only
    ivoa audit --lattice E8 --degree 2 --form hermitian --min-norm-block J
    ivoa ising --lattice "RANK1(4)" --type AA1 --sign + --check --miyamoto-through 4
"""

from __future__ import annotations

from pathlib import Path
from typing import Annotated

import typer

from ..audit.duality import duality_check
from ..audit.report import AuditReport, DegreeRecord, FormKind, audit, e8_audit
from ..config import Settings, get_settings
from ..core.enumeration import vectors_of_norm
from ..core.lattice import orthogonal_sum
from ..core.modules import IntegerModule
from ..cvcc.ising import IsingType, IsingVector, cvcc_aa1, cvcc_ee8, ising_check
from ..cvcc.miyamoto import miyamoto, stabilization_check
from ..errors import InvalidInputError
from ..symmetry.eigen import eigen_split, form_eigen_split
from ..symmetry.isometry import LiftedIsometry, generate_group, theta
from ..symmetry.surgery import fixed_form, forms_through, orbit_intersection, orbit_sum, tensor_form
from ..validation import ValidationResult, advisory, equals, is_true
from ..voa.basis import dual_form_basis, graded_basis, voa_basis
from ..voa.element import VoaElement
from ..voa.forms import form_index, standard_form
from ..voa.pairing import PairingForm
from ..vertex.adjoint import trace_form
from ..vertex.closure import generated_form
from ..vertex.modes import vertex_mode
from .output import console, finish, handled, save, setup_logging, show_table
from .parsing import (
    parse_sign,
    parse_signs,
    parse_vector,
    read_embedding_file,
    read_integer_matrix,
    read_isometry_file,
    resolve_lattice,
)

app = typer.Typer(
    help="Exact integral forms of lattice vertex operator algebras.",
    no_args_is_help=True,
    add_completion=False,
)

# ---------------------------------------------------------------------------
# Shared options
# ---------------------------------------------------------------------------

LatticeOpt = Annotated[str, typer.Option("--lattice", "-l", help="Catalog name (E8, A2, A(3), RANK1(4), A1+A1) or Gram file.")]
DegreeOpt = Annotated[int, typer.Option("--degree", "-n", min=0, help="Graded degree.")]
MaxDegreeOpt = Annotated[int, typer.Option("--max-degree", min=0, help="Highest degree handled.")]
PairingOpt = Annotated[PairingForm, typer.Option("--form", case_sensitive=False, help="Pairing.")]
ModuleOpt = Annotated[FormKind, typer.Option("--module", case_sensitive=False, help="Graded form to use.")]
JsonOpt = Annotated[Path | None, typer.Option("--json", help="Write a JSON document to PATH.")]
ReportOpt = Annotated[Path | None, typer.Option("--report", help="Write a markdown report to PATH.")]
GroupOpt = Annotated[list[Path] | None, typer.Option("--group", help="Isometry file (repeatable).")]
ThetaOpt = Annotated[bool, typer.Option("--theta", help="Add the standard lift of -1 to the group.")]


@app.callback()
def configure(
    ctx: typer.Context,
    threads: Annotated[int | None, typer.Option("--threads", help="Worker threads for Gram assembly.")] = None,
    log_level: Annotated[str | None, typer.Option("--log-level", help="Logging level.")] = None,
) -> None:
    with handled():
        settings = get_settings().with_overrides(threads=threads, log_level=log_level)
    setup_logging(settings.log_level)
    ctx.obj = settings


def _settings(ctx: typer.Context) -> Settings:
    return ctx.obj if isinstance(ctx.obj, Settings) else get_settings()


def _group(lattice_spec: str, files: list[Path] | None, with_theta: bool) -> list[LiftedIsometry]:
    lattice = resolve_lattice(lattice_spec)
    generators = [read_isometry_file(lattice, p) for p in files or ()]
    if with_theta:
        generators.append(theta(lattice))
    if not generators:
        raise InvalidInputError("Give at least one --group file or --theta")
    return generate_group(generators)


# ---------------------------------------------------------------------------
# Bases and Gram matrices
# ---------------------------------------------------------------------------


@app.command()
def basis(
    lattice: LatticeOpt,
    degree: DegreeOpt,
    count_only: Annotated[bool, typer.Option("--count-only", help="Print only the number of elements.")] = False,
    dual: Annotated[bool, typer.Option("--dual", help="Use the dual Schur basis of U.")] = False,
    json_path: JsonOpt = None,
) -> None:
    """The integral basis of ``(V_L)_n`` (or of ``U_n`` with ``--dual``)."""
    with handled():
        lat = resolve_lattice(lattice)
        elements = dual_form_basis(lat, degree, dual=True) if dual else voa_basis(lat, degree)
    if count_only:
        console.print(len(elements))
    else:
        show_table(f"{'U' if dual else 'R'}_{degree} of {lat}", ["#", "element"], [(i, repr(e)) for i, e in enumerate(elements)])
    record = {"degree": degree, "count": len(elements)}
    if not count_only:
        record["elements"] = [repr(e) for e in elements]
    save("basis", {"lattice": lattice, "degree": degree, "dual": dual}, [record], json_path=json_path)


@app.command()
def gram(
    ctx: typer.Context,
    lattice: LatticeOpt,
    degree: DegreeOpt,
    form: PairingOpt = PairingForm.HERMITIAN,
    module: ModuleOpt = FormKind.STANDARD,
    json_path: JsonOpt = None,
) -> None:
    """Gram matrix of a graded form, split into orthogonal blocks."""
    with handled():
        f = module.build(resolve_lattice(lattice), degree)
        blocks = f.gram_blocks(form, threads=_settings(ctx).threads)
    show_table(
        f"{module} form of degree {degree}, {form} pairing",
        ["block", "first charge", "charges", "rank"],
        [(i, str(list(b.charges[0])), len(b.charges), len(b.rows)) for i, b in enumerate(blocks)],
    )
    console.print(f"rank {f.rank}, d(n) = {f.scale(form)}")
    record = {"degree": degree, "rank": f.rank, "scale": f.scale(form), "blocks": blocks}
    save("gram", {"lattice": lattice, "degree": degree, "form": form, "module": module}, [record], json_path=json_path)


# ---------------------------------------------------------------------------
# Audits
# ---------------------------------------------------------------------------


def _show_audit(report: AuditReport) -> None:
    show_table(
        f"{report.module} form of V_{report.lattice}, {report.pairing} pairing",
        ["degree", "rank", "det", "parity", "d(n)", "discriminant"],
        [(r.degree, r.rank, r.det, str(r.parity), r.scale, str(r.invariants)) for r in report.records],
    )
    for record in report.records:
        _show_blocks(record)


def _show_blocks(record: DegreeRecord) -> None:
    show_table(
        f"blocks of degree {record.degree}",
        ["block", "rank", "pieces", "det", "parity", "discriminant", "min norm"],
        [
            (b.name, b.rank, b.pieces, b.det, str(b.parity), str(b.invariants), b.min_norm)
            for b in record.blocks
        ],
    )
    if record.glue is not None:
        g = record.glue
        console.print(
            f"|{g.block} : {g.block}1 + {g.block}2| = {g.index} "
            f"(ranks {g.ranks[0]} + {g.ranks[1]}, det {g.det})"
        )


@app.command("audit")
def audit_command(
    ctx: typer.Context,
    lattice: LatticeOpt,
    degree: Annotated[list[int], typer.Option("--degree", "-n", min=0, help="Degree (repeatable).")],
    form: PairingOpt = PairingForm.HERMITIAN,
    module: ModuleOpt = FormKind.STANDARD,
    min_norm_block: Annotated[str | None, typer.Option("--min-norm-block", help="Block name (J, norm2, ...).")] = None,
    json_path: JsonOpt = None,
    report_path: ReportOpt = None,
) -> None:
    """Rank, determinant, parity, discriminant and blocks of graded forms."""
    with handled():
        report = audit(
            resolve_lattice(lattice),
            degree,
            form,
            module=module,
            min_norm_block=min_norm_block,
            threads=_settings(ctx).threads,
        )
    _show_audit(report)
    inputs = {"lattice": lattice, "degree": degree, "form": form, "module": module, "min_norm_block": min_norm_block}
    save("audit", inputs, report.records, json_path=json_path, report=report, report_path=report_path)
    finish(report.checks)


@app.command("e8-audit")
def e8_audit_command(
    ctx: typer.Context,
    max_degree: Annotated[int, typer.Option("--max-degree", min=1, max=2, help="1 or 2.")] = 2,
    skip_min_norm: Annotated[bool, typer.Option("--skip-min-norm", help="Do not enumerate min(J).")] = False,
    json_path: JsonOpt = None,
    report_path: ReportOpt = None,
) -> None:
    """The degree 1 and 2 structure of the standard form of ``V_E8``."""
    with handled():
        report = e8_audit(max_degree, min_norm=not skip_min_norm, threads=_settings(ctx).threads)
    _show_audit(report)
    inputs = {"max_degree": max_degree, "min_norm": not skip_min_norm}
    save("e8-audit", inputs, report.records, json_path=json_path, report=report, report_path=report_path)
    finish(report.checks)


@app.command("dual-check")
def dual_check(
    lattice: LatticeOpt,
    degree: DegreeOpt,
    form: PairingOpt = PairingForm.HERMITIAN,
    json_path: JsonOpt = None,
    report_path: ReportOpt = None,
) -> None:
    """``U_n / R_n``, the Schur duality and ``R_n^* = U_n`` through a degree."""
    with handled():
        report = duality_check(resolve_lattice(lattice), degree, form)
    show_table(
        f"duality for V_{report.lattice}, {form} pairing",
        ["degree", "U/R", "Schur identity", "U = R*"],
        [(r.degree, str(r.invariants), r.schur_identity, r.dual_matches) for r in report.records],
    )
    inputs = {"lattice": lattice, "degree": degree, "form": form}
    save(
        "dual-check", inputs, report.records,
        json_path=json_path, report=report, report_path=report_path, template="duality.md.j2",
    )
    finish(report.checks)


# ---------------------------------------------------------------------------
# Vertex products and generated forms
# ---------------------------------------------------------------------------


def _basis_element(elements: list[VoaElement], index: int, name: str) -> VoaElement:
    if not 0 <= index < len(elements):
        raise InvalidInputError(f"{name} index {index} is outside 0..{len(elements) - 1}")
    return elements[index]


@app.command()
def product(
    lattice: LatticeOpt,
    u_degree: Annotated[int, typer.Option("--u-degree", min=0)],
    u: Annotated[int, typer.Option("--u", help="Index into the integral basis of degree --u-degree.")],
    v_degree: Annotated[int, typer.Option("--v-degree", min=0)],
    v: Annotated[int, typer.Option("--v", help="Index into the integral basis of degree --v-degree.")],
    k: Annotated[int, typer.Option("--k", help="Mode index.")],
    json_path: JsonOpt = None,
) -> None:
    """``u_k v`` for integral basis elements, in integral basis coordinates."""
    with handled():
        lat = resolve_lattice(lattice)
        left = _basis_element(voa_basis(lat, u_degree), u, "u")
        right = _basis_element(voa_basis(lat, v_degree), v, "v")
        w = vertex_mode(left, k, right)
        target = u_degree + v_degree - k - 1
        coords = graded_basis(lat, target).integral_coordinates(w) if w else {}
    show_table(f"u_{k} v in degree {target}", ["basis index", "coefficient"], sorted(coords.items()))
    result = ValidationResult()
    result.check(
        "integral",
        is_true("u_k v leaves the integral form"),
        all(x.denominator == 1 for x in coords.values()),
    )
    record = {"degree": target, "coordinates": coords, "element": repr(w)}
    inputs = {"lattice": lattice, "u_degree": u_degree, "u": u, "v_degree": v_degree, "v": v, "k": k}
    save("product", inputs, [record], json_path=json_path)
    finish(result)


@app.command()
def generate(
    lattice: LatticeOpt,
    max_degree: MaxDegreeOpt,
    generator: Annotated[
        list[str] | None, typer.Option("--generator", "-g", help="Charge a of a generator e^a (repeatable).")
    ] = None,
    check: Annotated[bool, typer.Option("--check", help="Fail unless the result is the standard form.")] = False,
    json_path: JsonOpt = None,
) -> None:
    """The integral form generated by ``e^a`` (default ``e^{+-gamma_i}``)."""
    with handled():
        lat = resolve_lattice(lattice)
        if generator:
            charges = [parse_vector(text, lat.rank) for text in generator]
        else:
            units = [lat.basis_vector(i) for i in range(lat.rank)]
            charges = units + [tuple(-x for x in a) for a in units]
        forms = generated_form(lat, [VoaElement.exponential(lat, a) for a in charges], max_degree)
        standard = forms_through(lat, max_degree)
    result = ValidationResult()
    rows = []
    for n in range(max_degree + 1):
        same = forms[n] == standard[n]
        rows.append((n, forms[n].rank, standard[n].rank, same))
        if check:
            result.check(f"degree{n}.standard", is_true(f"generated form differs from R_{n}"), same)
    show_table(f"form generated in V_{lat}", ["degree", "rank", "rank R_n", "equals R_n"], rows)
    per_degree = [{"degree": n, "form": forms[n], "equals_standard": same} for n, _, _, same in rows]
    save("generate", {"lattice": lattice, "max_degree": max_degree, "generators": charges}, per_degree, json_path=json_path)
    finish(result)


# ---------------------------------------------------------------------------
# Form surgery
# ---------------------------------------------------------------------------


@app.command()
def intersect(
    lattice: LatticeOpt,
    max_degree: MaxDegreeOpt,
    group: GroupOpt = None,
    with_theta: ThetaOpt = False,
    json_path: JsonOpt = None,
) -> None:
    """``S_n = cap_g g R_n`` over the group generated by the isometries."""
    with handled():
        elements = _group(lattice, group, with_theta)
        records = orbit_intersection(forms_through(resolve_lattice(lattice), max_degree), elements)
    console.print(f"group of order {len(elements)}")
    show_table(
        "orbit intersection",
        ["degree", "rank", "|R_n : S_n|", "invariant"],
        [(r.degree, r.form.rank, r.index, r.invariant) for r in records.values()],
    )
    result = ValidationResult()
    for r in records.values():
        result.check(f"degree{r.degree}.invariant", is_true("S_n is not invariant"), r.invariant)
    inputs = {"lattice": lattice, "max_degree": max_degree, "group": group or [], "theta": with_theta}
    save("intersect", inputs, list(records.values()), json_path=json_path)
    finish(result)


@app.command("sum")
def sum_command(
    lattice: LatticeOpt,
    max_degree: MaxDegreeOpt,
    group: GroupOpt = None,
    with_theta: ThetaOpt = False,
    json_path: JsonOpt = None,
) -> None:
    """``sum_g g R_n`` over the group generated by the isometries."""
    with handled():
        elements = _group(lattice, group, with_theta)
        standard = forms_through(resolve_lattice(lattice), max_degree)
        sums = orbit_sum(standard, elements)
        indices = {n: form_index(standard[n], sums[n]) for n in sums}
    show_table(
        "orbit sum",
        ["degree", "rank", "|sum : R_n|"],
        [(n, sums[n].rank, indices[n]) for n in sorted(sums)],
    )
    per_degree = [{"degree": n, "form": sums[n], "index": indices[n]} for n in sorted(sums)]
    inputs = {"lattice": lattice, "max_degree": max_degree, "group": group or [], "theta": with_theta}
    save("sum", inputs, per_degree, json_path=json_path)


@app.command()
def fix(
    lattice: LatticeOpt,
    max_degree: MaxDegreeOpt,
    group: GroupOpt = None,
    with_theta: ThetaOpt = False,
    json_path: JsonOpt = None,
) -> None:
    """The fixed points ``R_n^G`` of an invariant group."""
    with handled():
        elements = _group(lattice, group, with_theta)
        fixed = fixed_form(forms_through(resolve_lattice(lattice), max_degree), elements)
    show_table("fixed points", ["degree", "rank", "dimension"], [(n, f.rank, f.dimension) for n, f in sorted(fixed.items())])
    inputs = {"lattice": lattice, "max_degree": max_degree, "group": group or [], "theta": with_theta}
    save("fix", inputs, [{"degree": n, "form": f} for n, f in sorted(fixed.items())], json_path=json_path)


@app.command("eigen-split")
def eigen_split_command(
    lattice: Annotated[str | None, typer.Option("--lattice", "-l", help="Lattice for lifted involutions.")] = None,
    degree: Annotated[int | None, typer.Option("--degree", "-n", min=0)] = None,
    involution: Annotated[list[Path] | None, typer.Option("--involution", help="Isometry file (repeatable).")] = None,
    matrix: Annotated[list[Path] | None, typer.Option("--matrix", help="Integer involution on Z^k (repeatable).")] = None,
    json_path: JsonOpt = None,
) -> None:
    """Eigenmodules of commuting involutions and ``|A : sum A_chi|``.

    Either ``--matrix`` files acting on ``Z^k`` or ``--involution`` files
    lifted to ``V_L`` acting on ``R_n``.
    """
    with handled():
        if matrix:
            if involution:
                raise InvalidInputError("Use either --matrix or --involution")
            matrices = [read_integer_matrix(p) for p in matrix]
            split = eigen_split(IntegerModule.full(len(matrices[0])), matrices)
        else:
            if lattice is None or degree is None or not involution:
                raise InvalidInputError("--involution needs --lattice and --degree")
            lat = resolve_lattice(lattice)
            split = form_eigen_split(standard_form(lat, degree), [read_isometry_file(lat, p) for p in involution]).split
    show_table(
        "eigenmodules",
        ["character", "rank"],
        [(str(chi), m.rank) for chi, m in zip(split.characters, split.eigenmodules)],
    )
    console.print(f"|E| = {split.order}, A / sum A_chi = {split.quotient}, 2x2 Jordan blocks mod 2: {split.jordan_blocks}")
    result = ValidationResult()
    result.check(
        "annihilated",
        is_true("|E| does not annihilate the quotient"),
        all(split.order % d == 0 for d in split.quotient.divisors),
    )
    if split.jordan_blocks is not None:
        result.check("jordan", equals(2**split.jordan_blocks, "quotient order"), split.quotient.order)
    record = {
        "characters": [list(c) for c in split.characters],
        "ranks": [m.rank for m in split.eigenmodules],
        "quotient": split.quotient,
        "jordan_blocks": split.jordan_blocks,
    }
    inputs = {"lattice": lattice, "degree": degree, "involution": involution or [], "matrix": matrix or []}
    save("eigen-split", inputs, [record], json_path=json_path)
    finish(result)


@app.command()
def tensor(
    left: Annotated[str, typer.Option("--left", help="First lattice.")],
    right: Annotated[str, typer.Option("--right", help="Second lattice.")],
    max_degree: MaxDegreeOpt,
    json_path: JsonOpt = None,
) -> None:
    """``R(L) (x) R(M)`` inside ``V_{L+M}`` against the standard form there."""
    with handled():
        a, b = resolve_lattice(left), resolve_lattice(right)
        product_forms = tensor_form(forms_through(a, max_degree), forms_through(b, max_degree))
        standard = forms_through(orthogonal_sum(a, b), max_degree)
    rows = [(n, product_forms[n].rank, product_forms[n] == standard[n]) for n in range(max_degree + 1)]
    show_table(f"V_{a} (x) V_{b}", ["degree", "rank", "equals R_n"], rows)
    result = ValidationResult()
    for n, _, same in rows:
        result.check(f"degree{n}.standard", is_true("tensor product differs from R_n"), same)
    per_degree = [{"degree": n, "rank": rank, "equals_standard": same} for n, rank, same in rows]
    save("tensor", {"left": left, "right": right, "max_degree": max_degree}, per_degree, json_path=json_path)
    finish(result)


# ---------------------------------------------------------------------------
# Ising vectors and trace forms
# ---------------------------------------------------------------------------


def _ising_vector(
    lattice: str, kind: IsingType, vector: str | None, sign: str, embedding: Path | None, phi: str | None
) -> IsingVector:
    lat = resolve_lattice(lattice)
    match kind:
        case IsingType.AA1:
            if vector is not None:
                alpha = parse_vector(vector, lat.rank)
            else:
                candidates = vectors_of_norm(lat, 4)
                if not candidates:
                    raise InvalidInputError(f"{lat} has no vectors of norm 4")
                alpha = candidates[-1]
            return cvcc_aa1(lat, alpha, parse_sign(sign))
        case IsingType.EE8:
            if embedding is not None:
                rows = read_embedding_file(embedding, lat.rank)
            else:
                rows = [list(lat.basis_vector(i)) for i in range(lat.rank)]
            signs = parse_signs(phi, len(rows)) if phi is not None else None
            return cvcc_ee8(lat, rows, signs)


@app.command()
def ising(
    lattice: LatticeOpt,
    kind: Annotated[IsingType, typer.Option("--type", case_sensitive=False, help="AA1 or EE8.")],
    vector: Annotated[str | None, typer.Option("--vector", help="Norm 4 vector for AA1.")] = None,
    sign: Annotated[str, typer.Option("--sign", help="Sign of the e^a part for AA1.")] = "+",
    embedding: Annotated[Path | None, typer.Option("--embedding", help="Rows spanning sqrt2 E8 for EE8.")] = None,
    phi: Annotated[str | None, typer.Option("--phi", help="Signs of the character for EE8.")] = None,
    check: Annotated[bool, typer.Option("--check", help="Check the Ising mode equations.")] = False,
    bracket_degree: Annotated[int, typer.Option("--bracket-degree", help="Degrees used for [L(m), L(n)].")] = 2,
    miyamoto_through: Annotated[
        int | None, typer.Option("--miyamoto-through", min=0, help="Build t(e) on degrees 0..N.")
    ] = None,
    json_path: JsonOpt = None,
) -> None:
    """Build a conformal vector of central charge 1/2 and check it."""
    with handled():
        e = _ising_vector(lattice, kind, vector, sign, embedding, phi)
        result = ising_check(e, bracket_degree=bracket_degree) if check else ValidationResult()
        per_degree, rows = [], []
        if miyamoto_through is not None:
            top = miyamoto_through
            forms = forms_through(e.lattice, max(top, 2))
            stabilization = stabilization_check(e, forms, top)
            for n in range(top + 1):
                data = miyamoto(e, n)
                result.check(f"miyamoto{n}.square", is_true("t(e)^2 is not 1"), data.squares_to_identity())
                result.check(
                    f"miyamoto{n}.span",
                    is_true("t(e) leaves the rational span of R_n"),
                    stabilization[n].span_preserved,
                )
                values = ", ".join(f"{value}^{count}" for value, count in data.eigenvalues.items())
                rows.append((n, data.dimension, values, data.has_sixteenth, stabilization[n].index))
                per_degree.append(
                    {
                        "degree": n,
                        "eigenvalues": data.eigenvalues,
                        "has_sixteenth": data.has_sixteenth,
                        "stabilization": stabilization[n],
                    }
                )
            result.check(
                "miyamoto.sixteenth",
                advisory(f"no 1/16 eigenvalue through degree {top}, t(e) acts trivially there"),
                any(row[3] for row in rows),
            )
    console.print(f"{e.kind} vector on {e.lattice}: {len(e.element)} terms")
    if miyamoto_through is not None:
        show_table("Miyamoto involution", ["degree", "dimension", "e_1 eigenvalues", "1/16 present", "|R_n : R_n & tR_n|"], rows)
    inputs = {
        "lattice": lattice, "type": kind, "vector": vector, "sign": sign,
        "phi": phi, "check": check, "miyamoto_through": miyamoto_through,
    }
    save("ising", inputs, per_degree, json_path=json_path)
    finish(result)


@app.command("trace-form")
def trace_form_command(
    lattice: LatticeOpt,
    m: Annotated[int, typer.Option("--m", min=1, help="Degree of the trace form.")],
    json_path: JsonOpt = None,
) -> None:
    """``f_m(a, b) = tr(ad a ad b)`` on the generators of ``R_m``."""
    with handled():
        report = trace_form(resolve_lattice(lattice), m)
    show_table(
        f"trace form f_{m}",
        ["degree", "size", "integral", "rank", "invariants"],
        [(report.degree, len(report.matrix), report.integral, report.rank, str(report.invariants))],
    )
    result = ValidationResult()
    result.check("integral", is_true("f_m takes non-integral values"), report.integral)
    save("trace-form", {"lattice": lattice, "m": m}, [report], json_path=json_path)
    finish(result)
