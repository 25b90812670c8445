"""Markdown rendering of audit reports through jinja2.

Filters are plain functions registered with ``@jinja_filter`` and installed
by the single :class:`ReportExtension`.  Templates ship as package data under
``ivoa_forms/templates``.

Available in templates::

    {{ record.det | rational }}          → 1, 1/2
    {{ record.invariants | divisors }}   → Z/2 + Z/2, 0
    {{ check.passed | yesno }}           → yes, no
"""

from __future__ import annotations

from collections.abc import Callable
from fractions import Fraction
from pathlib import Path
from typing import Any

from jinja2 import Environment, PackageLoader, StrictUndefined
from jinja2.ext import Extension

from ..core.types import AbelianInvariants, Bound

# ---------------------------------------------------------------------------
# Decorator-based registry
# ---------------------------------------------------------------------------

_FILTERS: dict[str, Callable[..., Any]] = {}


def jinja_filter(name: str) -> Callable[[Callable[..., Any]], Callable[..., Any]]:
    """Register a function as a Jinja2 filter.

    Example::

        @jinja_filter("rational")
        def rational(value: Fraction) -> str: ...
    """

    def decorator(func: Callable[..., Any]) -> Callable[..., Any]:
        _FILTERS[name] = func
        return func

    return decorator


# ---------------------------------------------------------------------------
# Filters
# ---------------------------------------------------------------------------


@jinja_filter("rational")
def rational(value: Fraction | int | Bound | None) -> str:
    """``p/q`` for fractions, the plain integer otherwise; ``-`` for missing values."""
    if value is None:
        return "-"
    if isinstance(value, Bound):
        return value.value
    value = Fraction(value)
    return str(value.numerator) if value.denominator == 1 else f"{value.numerator}/{value.denominator}"


@jinja_filter("divisors")
def divisors(value: AbelianInvariants) -> str:
    return str(value)


@jinja_filter("yesno")
def yesno(value: Any) -> str:
    return "yes" if value else "no"


# ---------------------------------------------------------------------------
# Single Extension entry-point
# ---------------------------------------------------------------------------


class ReportExtension(Extension):
    """Installs every filter decorated with ``@jinja_filter`` above."""

    def __init__(self, environment: Environment) -> None:
        super().__init__(environment)
        environment.filters.update(_FILTERS)

    @property
    def filters(self) -> dict[str, Callable[..., Any]]:
        return dict(_FILTERS)

    def __repr__(self) -> str:
        return f"{self.__class__.__name__}(filters={sorted(_FILTERS)})"


def environment() -> Environment:
    return Environment(
        loader=PackageLoader("ivoa_forms", "templates"),
        extensions=[ReportExtension],
        undefined=StrictUndefined,
        trim_blocks=True,
        lstrip_blocks=True,
        keep_trailing_newline=True,
    )


def render_report(report: Any, template: str = "audit.md.j2", **context: Any) -> str:
    return environment().get_template(template).render(report=report, **context)


def write_report(path: Path, report: Any, template: str = "audit.md.j2", **context: Any) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(render_report(report, template, **context), encoding="utf-8")
    return path
