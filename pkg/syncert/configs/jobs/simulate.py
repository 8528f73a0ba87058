from pathlib import Path

from pydantic import Field, PositiveFloat, RootModel, conlist, model_validator
from pydantic_yaml import parse_yaml_file_as

from syncert.analysis.simulate import DEFAULT_DT, DEFAULT_HORIZON
from syncert.configs.jobs.common import JobConfig


class SimulateJobConfig(JobConfig):
    """Integrate the free response of a mechanical or LC network from `x0 = [z0; dz0]`."""

    x0: conlist(float, min_length=2) | None = None
    seed_certificate: bool = Field(
        default=False,
        description="Start from the failure certificate mode instead of an explicit state.",
    )
    seed: int = Field(default=0, description="Seed of the random initial state.")
    dt: PositiveFloat = DEFAULT_DT
    horizon: PositiveFloat = DEFAULT_HORIZON

    @model_validator(mode="after")
    def validate_initial_state(self):
        if self.x0 is not None and self.seed_certificate:
            raise ValueError("Pass either an explicit x0 or seed_certificate, not both.")
        if self.dt > self.horizon:
            raise ValueError(f"dt={self.dt} exceeds the horizon {self.horizon}.")
        return self


class InitialStateFile(RootModel[conlist(float, min_length=2)]):
    """A YAML or JSON list `[z1, ..., zq, dz1, ..., dzq]`."""


def load_initial_state(path: Path | str) -> list[float]:
    return parse_yaml_file_as(InitialStateFile, path).root
