from __future__ import annotations

import logging
from dataclasses import dataclass

from diwire import Injected

from dualpeel.cli.experiments.models import ExperimentRequest
from dualpeel.cli.presenters.reports import ReportPresenter
from dualpeel.config import ConfigLoader, DualpeelConfig
from dualpeel.core.iterative import ErasureWord, erasure_decode, erasure_quantize
from dualpeel.core.oracle import ml_decode, optimal_quantize
from dualpeel.sim import (
    CodeLoader,
    ExperimentKind,
    ExperimentRunner,
    OutputFormat,
    ReportWriter,
    SimConfig,
    SweepReport,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True, kw_only=True, slots=True)
class ExperimentCommand:
    """Application service behind the experiment commands."""

    config_loader: Injected[ConfigLoader]
    runner: Injected[ExperimentRunner]
    writer: Injected[ReportWriter]
    presenter: Injected[ReportPresenter]

    def run(self, request: ExperimentRequest) -> int:
        """Run the requested experiment and emit its report.

        Returns:
            Process exit code; non-zero when any row is anomalous.

        """
        config = self.config_loader.load(cli_overrides=request.overrides)
        if request.word is not None:
            return self._single_word(request, config, request.word)

        sim_config = self._sim_config(request, config)
        logger.info("Running %s on %s", sim_config.kind.value, sim_config.code.label)
        report = self.runner.run(sim_config)
        output_format = request.output_format or config.simulation.output_format
        self._emit(request, sim_config, report, output_format)
        self.presenter.summary(report)
        if not report.ok:
            self.presenter.anomalies(report.anomalies)
            return 1
        return 0

    def _sim_config(self, request: ExperimentRequest, config: DualpeelConfig) -> SimConfig:
        code = config.code_spec(alist_path=request.code_path, dist=request.dist)
        return config.to_sim_config(
            request.kind,
            code=code,
            paired=request.paired,
            exhaustive=request.exhaustive,
        )

    def _emit(
        self,
        request: ExperimentRequest,
        sim_config: SimConfig,
        report: SweepReport,
        output_format: OutputFormat,
    ) -> None:
        if request.output is not None:
            path = self.writer.write(request.output, report, sim_config, output_format)
            self.presenter.saved(str(path))
            return
        self.presenter.raw(self.writer.render(report, sim_config, output_format))

    def _single_word(self, request: ExperimentRequest, config: DualpeelConfig, word: str) -> int:
        sim_config = self._sim_config(request, config)
        code = CodeLoader(exact_rank_max_n=0).load(sim_config.code)
        symbols = ErasureWord.from_string(word)
        if request.kind is ExperimentKind.decode:
            decoded = erasure_decode(code.parity_check, symbols)
            self.presenter.decoded(decoded, ml_decode(code.parity_check, symbols))
            return 0
        quantized = erasure_quantize(
            code.parity_check,
            symbols,
            sim_config.tie_break,
            seed=sim_config.seed,
        )
        self.presenter.quantized(quantized, optimal_quantize(code.parity_check, symbols))
        return 0
