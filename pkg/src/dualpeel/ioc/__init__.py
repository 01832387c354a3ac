from __future__ import annotations

from dualpeel.ioc.container import get_cli_container

__all__ = ("get_cli_container",)
