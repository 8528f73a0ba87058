from pydantic import PositiveFloat, PositiveInt, model_validator

from syncert.analysis.admittance import SWEEP_POINTS
from syncert.configs.jobs.common import JobConfig


class SweepJobConfig(JobConfig):
    """Tabulate `lambda_2(Y(jw))` over a log-spaced grid; unset bounds are derived."""

    wmin: PositiveFloat | None = None
    wmax: PositiveFloat | None = None
    points: PositiveInt = SWEEP_POINTS

    @model_validator(mode="after")
    def validate_bounds(self):
        if self.wmin is not None and self.wmax is not None and self.wmin >= self.wmax:
            raise ValueError(f"wmin={self.wmin} must be below wmax={self.wmax}.")
        return self
