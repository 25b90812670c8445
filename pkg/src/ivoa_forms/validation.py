"""Check records shared by the Ising, audit and duality reports."""

from __future__ import annotations

from collections.abc import Callable
from dataclasses import dataclass, field
from enum import StrEnum, auto
from typing import Any, NamedTuple

# ---------------------------------------------------------------------------
# Severity and single findings
# ---------------------------------------------------------------------------


class Severity(StrEnum):
    """How serious a check finding is."""

    ERROR = auto()
    WARNING = auto()
    OK = auto()


class CheckStatus(StrEnum):
    """Outcome of a single validator call."""

    PASSED = auto()
    FAILED = auto()


@dataclass(frozen=True, slots=True)
class ValidationIssue:
    """One finding, attached to the name of the check that produced it."""

    severity: Severity
    check_key: str
    message: str


class CheckReport(NamedTuple):
    """What a validator returns: outcome, severity, message and the checked value."""

    status: CheckStatus
    severity: Severity
    message: str | None
    value: Any | None


# ---------------------------------------------------------------------------
# Aggregate result
# ---------------------------------------------------------------------------


@dataclass
class ValidationResult:
    """Collects :class:`ValidationIssue` instances for one run of checks."""

    issues: list[ValidationIssue] = field(default_factory=list)

    def record(self, key: str, report: CheckReport) -> CheckReport:
        message = report.message or ("ok" if report.status is CheckStatus.PASSED else "failed")
        self.issues.append(ValidationIssue(report.severity, key, message))
        return report

    def check(self, key: str, validator: Callable[[Any], CheckReport], value: Any) -> CheckReport:
        return self.record(key, validator(value))

    @property
    def has_errors(self) -> bool:
        return any(i.severity == Severity.ERROR for i in self.issues)

    @property
    def errors(self) -> list[ValidationIssue]:
        return [i for i in self.issues if i.severity == Severity.ERROR]

    @property
    def warnings(self) -> list[ValidationIssue]:
        return [i for i in self.issues if i.severity == Severity.WARNING]

    def __bool__(self) -> bool:
        return not self.has_errors


# ---------------------------------------------------------------------------
# Common validators
# ---------------------------------------------------------------------------


def _ok(value: Any) -> CheckReport:
    return CheckReport(CheckStatus.PASSED, Severity.OK, None, value)


def equals(expected: Any, label: str = "value") -> Callable[[Any], CheckReport]:
    """Value must equal *expected*."""

    def _validate(value: Any) -> CheckReport:
        if value != expected:
            return CheckReport(
                CheckStatus.FAILED, Severity.ERROR, f"{label}: expected {expected!r}, got {value!r}", value
            )
        return _ok(value)

    return _validate


def is_zero(value: Any) -> CheckReport:
    """Value must be falsy (a zero element, scalar or empty list)."""
    if value:
        return CheckReport(CheckStatus.FAILED, Severity.ERROR, f"expected 0, got {value!r}", value)
    return _ok(value)


def is_true(message: str) -> Callable[[Any], CheckReport]:
    def _validate(value: Any) -> CheckReport:
        if not value:
            return CheckReport(CheckStatus.FAILED, Severity.ERROR, message, value)
        return _ok(value)

    return _validate


def advisory(message: str) -> Callable[[Any], CheckReport]:
    """Warn (not fail) when the value is falsy."""

    def _validate(value: Any) -> CheckReport:
        if not value:
            return CheckReport(CheckStatus.FAILED, Severity.WARNING, message, value)
        return _ok(value)

    return _validate
