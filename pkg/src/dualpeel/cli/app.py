from __future__ import annotations

from dualpeel.cli.commands.config import config_app
from dualpeel.cli.commands.root import root_app

app = root_app
app.add_typer(config_app, name="config")
