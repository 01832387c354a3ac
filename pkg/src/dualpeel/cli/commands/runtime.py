from __future__ import annotations

import inspect
from collections.abc import Callable
from typing import Any, TypeVar, get_type_hints

import typer
from diwire import Scope, resolver_context

CommandT = TypeVar("CommandT", bound=Callable[..., Any])


def runtime_typer_signature(command: CommandT) -> CommandT:
    """Replace postponed annotations with runtime Typer annotations."""
    signature = inspect.signature(command)
    annotations = get_type_hints(command, include_extras=True)
    command.__signature__ = signature.replace(  # type: ignore[attr-defined]
        parameters=[
            parameter.replace(annotation=annotations.get(parameter.name, parameter.annotation))
            for parameter in signature.parameters.values()
        ],
        return_annotation=annotations.get("return", signature.return_annotation),
    )
    return command


def injected_command(app: typer.Typer, name: str) -> Callable[[CommandT], CommandT]:
    """Register a request-scoped command whose ``Injected`` parameters diwire fills."""

    def register(command: CommandT) -> CommandT:
        injected = resolver_context.inject(scope=Scope.REQUEST)(command)
        app.command(name)(runtime_typer_signature(injected))
        return injected

    return register
