from dataclasses import dataclass
from enum import Enum
from pathlib import Path

import pandas as pd

from syncert.schemas.reports import Report, Verdict


class JobType(str, Enum):
    """Enumeration of logical job types runnable via syncert."""

    CERTIFY = "certify"
    SIMULATE = "simulate"
    SWEEP = "sweep"


class ExitCode(int, Enum):
    SYNCHRONIZES = 0
    PARSE_ERROR = 1
    VALIDATION_ERROR = 2
    DOES_NOT_SYNCHRONIZE = 3
    INCONCLUSIVE = 4

    @classmethod
    def from_verdict(cls, verdict: Verdict) -> "ExitCode":
        match verdict:
            case Verdict.SYNCHRONIZES:
                return cls.SYNCHRONIZES
            case Verdict.DOES_NOT_SYNCHRONIZE:
                return cls.DOES_NOT_SYNCHRONIZE
            case Verdict.INCONCLUSIVE:
                return cls.INCONCLUSIVE


@dataclass
class JobResult:
    output_path: Path | None


@dataclass
class CertifyResult(JobResult):
    """Result from a certification job; the report is also written when a path is configured."""

    report: Report

    @property
    def exit_code(self) -> ExitCode:
        return ExitCode.from_verdict(self.report.verdict)


@dataclass
class SimulateResult(JobResult):
    """Trajectory table as written to CSV, with the initial state used."""

    table: pd.DataFrame
    initial_state: list[float]


@dataclass
class SweepResult(JobResult):
    """Per-frequency table and the report of the synchronization check behind it."""

    table: pd.DataFrame
    report: Report

    @property
    def exit_code(self) -> ExitCode:
        return ExitCode.from_verdict(self.report.verdict)
