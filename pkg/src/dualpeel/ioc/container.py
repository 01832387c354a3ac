from __future__ import annotations

from diwire import Container, Scope

from dualpeel.cli.experiments import ExperimentCommand
from dualpeel.cli.presenters.reports import ReportPresenter
from dualpeel.config import ConfigLoader
from dualpeel.sim import ExperimentRunner, ReportWriter


def get_cli_container() -> Container:
    container = Container()

    _register_cli_dependencies(container)

    return container


def _register_cli_dependencies(container: Container) -> None:
    container.add_factory(_build_config_loader, provides=ConfigLoader, scope=Scope.REQUEST)
    container.add(ExperimentRunner)
    container.add_factory(_build_report_writer, provides=ReportWriter)
    container.add_factory(_build_report_presenter, provides=ReportPresenter, scope=Scope.REQUEST)
    container.add(ExperimentCommand, scope=Scope.REQUEST)


def _build_config_loader() -> ConfigLoader:
    return ConfigLoader()


def _build_report_writer() -> ReportWriter:
    return ReportWriter()


def _build_report_presenter() -> ReportPresenter:
    return ReportPresenter()
