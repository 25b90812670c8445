"""Runtime settings read from the environment (and a local ``.env`` file).

Usage::

    from ivoa_forms.config import get_settings

    settings = get_settings()
    settings.threads        # IVOA_THREADS, default 1
    settings.log_level      # IVOA_LOG_LEVEL, default "WARNING"
"""

from __future__ import annotations

import logging
import os
from dataclasses import dataclass, replace
from functools import cache

from dotenv import load_dotenv

from .errors import InvalidInputError

load_dotenv()


class Env:
    """Read an environment variable with typed accessors."""

    def __init__(self, var_name: str, default: str = "") -> None:
        self.name: str = var_name
        self._value: str = os.getenv(var_name, default)

    @property
    def value(self) -> str:
        return self._value

    def as_int(self, minimum: int = 0) -> int:
        try:
            number = int(self._value)
        except ValueError as e:
            raise InvalidInputError(
                f"{self.name} must be an integer, got {self._value!r}"
            ) from e
        if number < minimum:
            raise InvalidInputError(f"{self.name} must be >= {minimum}, got {number}")
        return number

    def __str__(self) -> str:
        return self._value

    def __repr__(self) -> str:
        return f"Env({self.name!r})"


@dataclass(frozen=True, slots=True)
class Settings:
    """Process-wide knobs; nothing here changes a computed value."""

    threads: int = 1
    log_level: str = "WARNING"
    json_indent: int = 2

    def with_overrides(
        self, *, threads: int | None = None, log_level: str | None = None
    ) -> Settings:
        changes: dict[str, object] = {}
        if threads is not None:
            if threads < 1:
                raise InvalidInputError(f"--threads must be >= 1, got {threads}")
            changes["threads"] = threads
        if log_level is not None:
            changes["log_level"] = _checked_level(log_level)
        return replace(self, **changes)


def _checked_level(level: str) -> str:
    name = level.upper()
    if name not in logging.getLevelNamesMapping():
        raise InvalidInputError(f"Unknown log level: {level!r}")
    return name


@cache
def get_settings() -> Settings:
    return Settings(
        threads=Env("IVOA_THREADS", "1").as_int(minimum=1),
        log_level=_checked_level(Env("IVOA_LOG_LEVEL", "WARNING").value),
        json_indent=Env("IVOA_JSON_INDENT", "2").as_int(),
    )
