"""Audit records of graded forms, and their JSON and markdown renderings."""

# -- Records -----------------------------------------------------------------
from .report import (
    AuditReport,
    BlockRecord,
    DegreeRecord,
    FormKind,
    GlueRecord,
    Parity,
    audit,
    audit_form,
    block_name,
    e8_audit,
    glue_record,
)
from .duality import DualityRecord, DualityReport, dual_schur_elements, duality_check, schur_pairing_is_identity

# -- Output ------------------------------------------------------------------
from .render import ReportExtension, environment, jinja_filter, render_report, write_report
from .serialize import SCHEMA, dumps_report, report_document, to_jsonable, write_json

__all__ = [
    # Records
    "AuditReport",
    "BlockRecord",
    "DegreeRecord",
    "FormKind",
    "GlueRecord",
    "Parity",
    "audit",
    "audit_form",
    "block_name",
    "e8_audit",
    "glue_record",
    "DualityRecord",
    "DualityReport",
    "dual_schur_elements",
    "duality_check",
    "schur_pairing_is_identity",
    # Output
    "ReportExtension",
    "environment",
    "jinja_filter",
    "render_report",
    "write_report",
    "SCHEMA",
    "dumps_report",
    "report_document",
    "to_jsonable",
    "write_json",
]
