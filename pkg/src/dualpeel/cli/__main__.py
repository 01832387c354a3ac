from __future__ import annotations

from typing import Annotated

import typer

from dualpeel.cli.app import app
from dualpeel.cli.logs import configure_logging
from dualpeel.ioc.container import get_cli_container


@app.callback()
def configure_cli_dependencies(
    *,
    verbose: Annotated[
        bool,
        typer.Option("--verbose", "-v", help="Log progress and debug details to stderr."),
    ] = False,
) -> None:
    configure_logging(verbose=verbose)
    get_cli_container()


def main() -> None:
    app()


if __name__ == "__main__":  # pragma: no cover
    main()
