"""Entry point of the ``ivoa`` console script.

Usage::

    ivoa --help
    ivoa --log-level DEBUG e8-audit --max-degree 1

Library errors are already mapped to exit codes by the commands (1 for
invalid input, 2 for failed properties); malformed command lines exit with
1 as well.
"""

from __future__ import annotations

import typer

from .cli.commands import app
from .cli.output import console, err_console, setup_logging

__all__ = ["app", "console", "main", "setup_logging"]


def main() -> None:
    try:
        code = app(standalone_mode=False)
    except typer.Abort:
        err_console.print(":stop_sign: [red]Aborted.[/red]")
        code = 1
    except Exception as e:
        # usage errors from the command parser carry their own ``show``
        show = getattr(e, "show", None)
        if not callable(show):
            raise
        show()
        code = 1
    raise SystemExit(code or 0)


if __name__ == "__main__":
    main()
