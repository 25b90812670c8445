"""Versioned JSON documents for command results.

Every document is ``{"schema": 1, "command", "inputs", "per_degree"}``.
Rationals become ``"p/q"`` strings (integers stay plain), keys are sorted and
the indent is fixed, so identical invocations give identical bytes.
"""

from __future__ import annotations

from collections.abc import Mapping, Sequence
from dataclasses import fields, is_dataclass
from enum import Enum
from fractions import Fraction
from json import dumps
from pathlib import Path
from typing import Any

from ..config import get_settings
from ..core.modules import IntegerModule
from ..core.types import AbelianInvariants
from ..voa.element import VoaElement
from ..voa.forms import GradedZForm

SCHEMA = 1


def to_jsonable(value: Any) -> Any:
    match value:
        case None | bool():
            return value
        case Enum():
            return value.value
        case str() | int():
            return value
        case Fraction():
            return value.numerator if value.denominator == 1 else f"{value.numerator}/{value.denominator}"
        case AbelianInvariants():
            return {
                "divisors": list(value.divisors),
                "free_rank": value.free_rank,
                "order": to_jsonable(value.order),
            }
        case GradedZForm():
            return {
                "degree": value.degree,
                "rank": value.rank,
                "dimension": value.dimension,
                "rows": [[[c, to_jsonable(x)] for c, x in sorted(row.items())] for row in value.rows()],
            }
        case IntegerModule():
            return {"dimension": value.dimension, "rows": [[list(item) for item in row] for row in value.rows]}
        case VoaElement():
            return repr(value)
        case tuple() if hasattr(value, "_asdict"):
            return to_jsonable(value._asdict())
        case _ if is_dataclass(value) and not isinstance(value, type):
            return {f.name: to_jsonable(getattr(value, f.name)) for f in fields(value) if not f.name.startswith("_")}
        case Mapping():
            return {str(to_jsonable(k)): to_jsonable(v) for k, v in value.items()}
        case set() | frozenset():
            return sorted((to_jsonable(v) for v in value), key=repr)
        case Sequence():
            return [to_jsonable(v) for v in value]
    raise TypeError(f"Cannot serialize {type(value).__name__}")


def report_document(command: str, inputs: Mapping[str, Any], per_degree: Sequence[Any]) -> dict[str, Any]:
    return {
        "schema": SCHEMA,
        "command": command,
        "inputs": to_jsonable(inputs),
        "per_degree": to_jsonable(per_degree),
    }


def dumps_report(
    command: str, inputs: Mapping[str, Any], per_degree: Sequence[Any], *, indent: int | None = None
) -> str:
    indent = get_settings().json_indent if indent is None else indent
    return dumps(report_document(command, inputs, per_degree), sort_keys=True, indent=indent) + "\n"


def write_json(
    path: Path, command: str, inputs: Mapping[str, Any], per_degree: Sequence[Any], *, indent: int | None = None
) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(dumps_report(command, inputs, per_degree, indent=indent), encoding="utf-8")
    return path
