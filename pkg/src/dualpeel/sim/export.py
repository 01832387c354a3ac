from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from pathlib import Path
from typing import Any

from dualpeel.sim.models import CSV_HEADER, OutputFormat, SimConfig, SweepReport


@dataclass(frozen=True, slots=True)
class ReportWriter:
    """Serialize experiment reports as CSV rows or one JSON document."""

    def render(self, report: SweepReport, config: SimConfig, output_format: OutputFormat) -> str:
        if output_format is OutputFormat.json:
            return self.to_json(report, config)
        return self.to_csv(report)

    def to_csv(self, report: SweepReport) -> str:
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(CSV_HEADER)
        writer.writerows(row.csv_row() for row in report.rows)
        return buffer.getvalue()

    def to_json(self, report: SweepReport, config: SimConfig) -> str:
        return "{}\n".format(json.dumps(self.payload(report, config), indent=2))

    def payload(self, report: SweepReport, config: SimConfig) -> dict[str, Any]:
        return {
            "config": config.model_dump(mode="json"),
            "rows": [row.as_payload() for row in report.rows],
            "points": [point.as_payload() for point in report.points],
            "summary": {
                "kind": report.kind.value,
                "confidence": report.confidence,
                "anomalies": report.anomalies,
                **report.summary,
            },
        }

    def write(
        self,
        path: Path,
        report: SweepReport,
        config: SimConfig,
        output_format: OutputFormat,
    ) -> Path:
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(self.render(report, config, output_format), encoding="utf-8")
        return path
