from __future__ import annotations

from dualpeel.cli.experiments.command import ExperimentCommand
from dualpeel.cli.experiments.models import ExperimentRequest

__all__ = ("ExperimentCommand", "ExperimentRequest")
