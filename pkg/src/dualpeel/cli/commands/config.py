from __future__ import annotations

from typing import Annotated

import typer

from dualpeel.cli.commands.services import ConfigCommandService

config_app = typer.Typer(no_args_is_help=True, help="Inspect and create the config file.")


@config_app.command("path")
def config_path() -> None:
    ConfigCommandService().path()


@config_app.command("show")
def config_show(
    section: Annotated[
        str | None,
        typer.Argument(help="Only show this section, e.g. 'simulation'."),
    ] = None,
) -> None:
    ConfigCommandService().show(section=section)


@config_app.command("init")
def config_init(
    force: Annotated[
        bool,
        typer.Option("--force", help="Overwrite an existing file with the defaults."),
    ] = False,
) -> None:
    ConfigCommandService().init(force=force)
