from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path

from dualpeel.cli.presenters.base import CliPresenter
from dualpeel.config import ConfigError, ConfigInitializer, get_config_path, load_config
from dualpeel.core.graph import (
    AlistCodec,
    DegreeDistribution,
    DegreeDistributionError,
    EnsembleError,
    SampledCode,
    sample_irregular_code,
    sample_regular_code,
)
from dualpeel.core.messages import MessageDomainError
from dualpeel.core.oracle import failure_bound, failure_bound_product, failure_bound_weak_product


@dataclass(kw_only=True, slots=True)
class ConfigCommandService:
    """Behavior for `dualpeel config` commands."""

    presenter: CliPresenter = field(default_factory=CliPresenter)

    def path(self) -> None:
        """Print the effective config path."""
        self.presenter.console.print(
            str(get_config_path()),
            style="cyan",
            highlight=False,
            soft_wrap=True,
        )

    def show(self, *, section: str | None = None) -> None:
        """Print the effective config, or one section of it."""
        try:
            config_payload = load_config().model_dump(mode="json")
        except ConfigError as exc:
            self.presenter.fail(str(exc))
        if section is None:
            self.presenter.json(config_payload)
            return
        if section not in config_payload:
            self.presenter.fail(f"Unknown config section: {section}")
        self.presenter.json(config_payload[section])

    def init(self, *, force: bool = False) -> None:
        """Create the config file, or check the existing one."""
        try:
            result = ConfigInitializer().init(force=force)
        except ConfigError as exc:
            self.presenter.fail(str(exc))
        self.presenter.key_values(
            "Configuration",
            [("Status", result.status.value), ("Path", str(result.path))],
        )


@dataclass(kw_only=True, slots=True)
class GenCodeCommandService:
    """Behavior for `dualpeel gen-code`."""

    codec: AlistCodec = field(default_factory=AlistCodec)
    presenter: CliPresenter = field(default_factory=CliPresenter)

    def run(
        self,
        *,
        n: int,
        dv: int,
        dc: int,
        dist: str | None,
        seed: int,
        output: Path | None,
    ) -> None:
        """Sample an ensemble code and emit it as alist text."""
        try:
            sampled = self._sample(n=n, dv=dv, dc=dc, dist=dist, seed=seed)
        except (DegreeDistributionError, EnsembleError) as exc:
            self.presenter.fail(str(exc))
        if output is None:
            self.presenter.raw(self.codec.dumps(sampled.matrix))
        else:
            output.parent.mkdir(parents=True, exist_ok=True)
            self.codec.write(output, sampled.matrix)
        self.presenter.key_values(
            "Sampled code",
            [
                ("Length", sampled.matrix.cols),
                ("Checks", sampled.matrix.rows),
                ("Edges", sampled.edges),
                ("Cancelled sockets", sampled.shortfall),
                ("Path", None if output is None else str(output)),
            ],
            stderr=True,
        )

    def _sample(self, *, n: int, dv: int, dc: int, dist: str | None, seed: int) -> SampledCode:
        if dist is not None:
            return sample_irregular_code(n, DegreeDistribution.parse(dist), seed)
        return sample_regular_code(n, dv, dc, seed)


@dataclass(kw_only=True, slots=True)
class BoundCommandService:
    """Evaluate the closed-form failure bounds without simulating."""

    presenter: CliPresenter = field(default_factory=CliPresenter)

    def closed_form(self, *, fraction: float, n: int, erasure_prob: float, degree: int) -> None:
        try:
            rows: list[tuple[str, object]] = [
                ("Product", failure_bound_product(fraction, n, erasure_prob, degree)),
                ("Weak product", failure_bound_weak_product(fraction, n, erasure_prob, degree)),
                ("Exponential", failure_bound(fraction, n, erasure_prob, degree)),
            ]
        except MessageDomainError as exc:
            self.presenter.fail(str(exc))
        self.presenter.key_values("Failure probability lower bounds", rows)
