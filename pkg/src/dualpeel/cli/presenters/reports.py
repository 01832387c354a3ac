from __future__ import annotations

from dataclasses import dataclass, field

from rich import box
from rich.table import Table

from dualpeel.cli.presenters.base import CliPresenter
from dualpeel.core.iterative import DecodeOutcome, DecodeSuccess, QuantOutcome, QuantSuccess
from dualpeel.core.oracle import MLAnomaly, MLOutcome, OracleWitness
from dualpeel.sim import SweepReport

SUMMARY_SKIP = frozenset({"sizes"})


@dataclass(kw_only=True, slots=True)
class ReportPresenter:
    """Render experiment summaries and single-word results.

    Summaries go to stderr so report data on stdout stays machine-readable.
    """

    base: CliPresenter = field(default_factory=CliPresenter)

    def raw(self, text: str) -> None:
        self.base.raw(text)

    def summary(self, report: SweepReport) -> None:
        rows: list[tuple[str, object]] = [
            ("Experiment", report.kind.value),
            ("Rows", len(report.rows)),
            ("Confidence", report.confidence),
            ("Anomalies", report.anomalies),
        ]
        rows.extend(
            (key.replace("_", " ").capitalize(), self._value(summary_value))
            for key, summary_value in report.summary.items()
            if key not in SUMMARY_SKIP
        )
        self.base.key_values("Summary", rows, stderr=True)
        if report.points:
            self.base.error_console.print(self.base.panel("Success by point", self._points(report)))

    def saved(self, path: str) -> None:
        self.base.success("Report written", detail=path, stderr=True)

    def anomalies(self, count: int) -> None:
        self.base.warning(f"{count} anomalous rows recorded", stderr=True)

    def decoded(self, outcome: DecodeOutcome, optimal: MLOutcome) -> None:
        rows: list[tuple[str, object]] = [("Outcome", self.base.yes_no(enabled=outcome.succeeded))]
        if isinstance(outcome, DecodeSuccess):
            rows.extend(
                (("Codeword", outcome.word.to_string()), ("Iterations", outcome.iterations)),
            )
        else:
            rows.extend(
                (
                    ("Stalled at iteration", outcome.iteration),
                    ("Stopping set", ", ".join(map(str, outcome.stopping_set))),
                ),
            )
        rows.append(("Optimal decoding", self._optimal_decoding(optimal)))
        self.base.key_values("Erasure decode", rows)

    def quantized(self, outcome: QuantOutcome, witness: OracleWitness | None) -> None:
        rows: list[tuple[str, object]] = [("Outcome", self.base.yes_no(enabled=outcome.succeeded))]
        if isinstance(outcome, QuantSuccess):
            rows.extend(
                (
                    ("Codeword", outcome.codeword.to_string()),
                    ("Message", outcome.message.to_string()),
                    ("Reservations", len(outcome.reservations)),
                ),
            )
        else:
            rows.extend(
                (
                    ("Stalled at iteration", outcome.iteration),
                    ("Unsatisfied", ", ".join(map(str, outcome.unsatisfied))),
                ),
            )
        optimal = "No exact codeword" if witness is None else witness.word.to_string()
        rows.append(("Optimal quantization", optimal))
        self.base.key_values("Erasure quantize", rows)

    def _optimal_decoding(self, optimal: MLOutcome) -> str:
        if isinstance(optimal, MLAnomaly):
            return f"Anomaly: {optimal.reason}"
        if optimal.unique:
            return f"{optimal.codeword.to_string()} (unique)"
        return f"{optimal.codeword.to_string()} (one of 2^{optimal.ambiguity})"

    def _points(self, report: SweepReport) -> Table:
        table = Table(box=box.SIMPLE, expand=True)
        for heading in ("Algorithm", "Rate", "e", "Success", "± CI", "Bound"):
            table.add_column(heading, style="cyan" if heading == "Algorithm" else None)
        for point in report.points:
            table.add_row(
                point.algorithm.value,
                f"{point.rate:.4f}",
                f"{point.erasure_prob:.4f}",
                f"{point.estimate.probability:.4f}",
                f"{point.estimate.ci_halfwidth:.4f}",
                "-" if point.bound is None else f"{point.bound:.4f}",
            )
        return table

    def _value(self, summary_value: object) -> object:
        if isinstance(summary_value, list):
            return ", ".join(str(self.base.render_value(item)) for item in summary_value)
        if isinstance(summary_value, bool):
            return self.base.yes_no(enabled=summary_value)
        return summary_value
