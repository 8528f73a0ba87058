"""Serialized reports.

Reports are written as a single JSON document. Every float is a 17-digit decimal string so that
parsing a report back yields an equal value, and the document carries the tool version and
tolerances instead of a timestamp so identical runs produce identical bytes.
"""

from enum import Enum
from typing import Annotated, Literal

import numpy as np
from pydantic import BaseModel, Field

from syncert.analysis.admittance import CandidateCheck, FrequencySweepReport, PassivityViolation
from syncert.analysis.certify import (
    FailureCertificate,
    FrequencyCertificate,
    certificate_initial_state,
)
from syncert.analysis.sufficient import BlockReport, ConditionStatus, SufficientReport
from syncert.configs.common import Decimal17, format_decimal17
from syncert.configs.tolerances import Tolerances
from syncert.constants import TOOL_VERSION


class Verdict(str, Enum):
    SYNCHRONIZES = "synchronizes"
    DOES_NOT_SYNCHRONIZE = "does not synchronize"
    INCONCLUSIVE = "inconclusive"

    @classmethod
    def from_bool(cls, synchronizes: bool) -> "Verdict":
        return cls.SYNCHRONIZES if synchronizes else cls.DOES_NOT_SYNCHRONIZE


class ReportModel(BaseModel, extra="forbid"):
    pass


def _decimals(values) -> list[float]:
    return [float(v) for v in np.asarray(values, dtype=float).ravel()]


class PhasorModel(ReportModel):
    """Complex vector split into real and imaginary parts."""

    re: list[Decimal17]
    im: list[Decimal17]

    @classmethod
    def from_array(cls, v: np.ndarray) -> "PhasorModel":
        v = np.asarray(v, dtype=complex)
        return cls(re=_decimals(v.real), im=_decimals(v.imag))


class ModeCertificateModel(ReportModel):
    kind: Literal["mode"] = "mode"
    lambda_star: Decimal17
    omega_star: Decimal17
    xi_star: list[Decimal17]
    initial_state: list[Decimal17]
    marginal: bool = False

    @classmethod
    def from_certificate(cls, cert: FailureCertificate) -> "ModeCertificateModel":
        return cls(
            lambda_star=cert.lambda_star,
            omega_star=cert.omega_star,
            xi_star=_decimals(cert.xi_star),
            initial_state=_decimals(certificate_initial_state(cert)),
            marginal=cert.marginal,
        )


class FrequencyCertificateModel(ReportModel):
    kind: Literal["frequency"] = "frequency"
    omega: Decimal17
    xi: PhasorModel
    marginal: bool = False
    shorted: bool = Field(
        default=False, description="Some coupling is a short circuit (infinite) at `omega`."
    )

    @classmethod
    def from_certificate(cls, cert: FrequencyCertificate) -> "FrequencyCertificateModel":
        return cls(
            omega=cert.omega,
            xi=PhasorModel.from_array(cert.xi),
            marginal=cert.marginal,
            shorted=cert.shorted,
        )


CertificateModel = Annotated[
    ModeCertificateModel | FrequencyCertificateModel, Field(discriminator="kind")
]


def certificate_model(
    cert: FailureCertificate | FrequencyCertificate | None,
) -> ModeCertificateModel | FrequencyCertificateModel | None:
    match cert:
        case FailureCertificate():
            return ModeCertificateModel.from_certificate(cert)
        case FrequencyCertificate():
            return FrequencyCertificateModel.from_certificate(cert)
        case None:
            return None
        case _:
            raise ValueError(f"Unknown certificate type: {type(cert)}")


class BlockModel(ReportModel):
    """One connected component of the spring graph; vertices are 1-based."""

    vertices: list[int]
    frequencies: list[Decimal17]
    observable_outputs: list[bool]
    zero_entry_free: bool | None
    status: ConditionStatus

    @classmethod
    def from_block(cls, block: BlockReport) -> "BlockModel":
        return cls(
            vertices=[v + 1 for v in block.vertices],
            frequencies=list(block.frequencies),
            observable_outputs=list(block.observable_outputs),
            zero_entry_free=block.zero_entry_free,
            status=block.status,
        )


class SufficientModel(ReportModel):
    blocks: list[BlockModel]
    cond1: bool
    cond2_common_frequencies: list[Decimal17]
    cond2: bool
    cond3: bool
    union_graph_connected: bool
    overall: bool
    summary: str

    @classmethod
    def from_report(cls, report: SufficientReport) -> "SufficientModel":
        return cls(
            blocks=[BlockModel.from_block(b) for b in report.blocks],
            cond1=report.cond1,
            cond2_common_frequencies=list(report.cond2_common_frequencies),
            cond2=report.cond2_common_frequencies_hold,
            cond3=report.cond3_joint_nullspace,
            union_graph_connected=report.union_graph_connected,
            overall=report.overall,
            summary=report.summary,
        )


class CandidateModel(ReportModel):
    omega: Decimal17
    source: str
    multiplicity: int
    passes: bool
    shorted: bool
    potentially_defective: bool
    marginal: bool
    null_basis: list[PhasorModel]

    @classmethod
    def from_check(cls, check: CandidateCheck) -> "CandidateModel":
        return cls(
            omega=check.omega,
            source=check.source,
            multiplicity=check.multiplicity,
            passes=check.passes,
            shorted=check.shorted,
            potentially_defective=check.potentially_defective,
            marginal=check.marginal,
            null_basis=[
                PhasorModel.from_array(check.null_basis[:, k])
                for k in range(check.null_basis.shape[1])
            ],
        )


class PassivityModel(ReportModel):
    label: str
    omega: Decimal17
    real_part: Decimal17

    @classmethod
    def from_violation(cls, v: PassivityViolation) -> "PassivityModel":
        return cls(label=v.label, omega=v.omega, real_part=v.real_part)


class FrequencyModel(ReportModel):
    candidates: list[CandidateModel]
    steady_state_frequencies: list[Decimal17]
    min_re_lambda2: Decimal17 | None = None
    worst_omega: Decimal17 | None = None
    agrees_with_pbh: bool | None = None
    passivity_violations: list[PassivityModel] = Field(default_factory=list)

    @classmethod
    def from_report(cls, report: FrequencySweepReport) -> "FrequencyModel":
        finite = report.re_lambda2[np.isfinite(report.re_lambda2)]
        return cls(
            candidates=[CandidateModel.from_check(c) for c in report.candidates],
            steady_state_frequencies=list(report.steady_state_frequencies),
            min_re_lambda2=float(finite.min()) if finite.size else None,
            worst_omega=report.worst_omega,
            agrees_with_pbh=report.agrees_with_pbh,
            passivity_violations=[
                PassivityModel.from_violation(v) for v in report.passivity_violations
            ],
        )


class CrossCheckModel(ReportModel):
    method: str
    verdict: Verdict
    agrees: bool


class Report(ReportModel):
    tool_version: str = TOOL_VERSION
    network: str
    kind: str
    q: int
    verdict: Verdict
    method: str
    certificate: CertificateModel | None = None
    marginal: bool = False
    damper_graph_connected: bool | None = None
    sufficient: SufficientModel | None = None
    frequency: FrequencyModel | None = None
    cross_checks: list[CrossCheckModel] = Field(default_factory=list)
    tolerances: dict[str, Decimal17]

    @staticmethod
    def tolerance_table(tolerances: Tolerances) -> dict[str, float]:
        return {k: float(v) for k, v in tolerances.model_dump().items()}

    def to_machine(self) -> str:
        return self.model_dump_json(indent=2)

    def to_text(self) -> str:
        lines = [
            self.tool_version,
            f"network: {self.network} ({self.kind}, q={self.q})",
        ]
        match self.certificate:
            case ModeCertificateModel() as cert:
                lines.append(
                    f"certificate: lambda*={format_decimal17(cert.lambda_star)} "
                    f"omega*={format_decimal17(cert.omega_star)}"
                    + (" (marginal)" if cert.marginal else "")
                )
                lines.append(f"  xi* = [{', '.join(f'{x:.9g}' for x in cert.xi_star)}]")
            case FrequencyCertificateModel() as cert:
                lines.append(
                    f"certificate: omega={format_decimal17(cert.omega)}"
                    + (" (short circuit)" if cert.shorted else "")
                    + (" (marginal)" if cert.marginal else "")
                )
                phasor = [complex(a, b) for a, b in zip(cert.xi.re, cert.xi.im, strict=True)]
                lines.append(f"  xi = [{', '.join(f'{x:.9g}' for x in phasor)}]")
        if self.damper_graph_connected:
            lines.append("damper graph connected: synchronizes without further tests")
        if self.sufficient is not None:
            s = self.sufficient
            lines.append(f"sufficient conditions: {s.summary}")
            for block in s.blocks:
                outputs = [
                    v for v, ok in zip(block.vertices, block.observable_outputs, strict=True) if ok
                ]
                lines.append(
                    f"  block {block.vertices}: condition 1 {block.status.value}, "
                    f"observable from {outputs}"
                )
            freqs = ", ".join(f"{w:.9g}" for w in s.cond2_common_frequencies)
            lines.append(
                f"  condition 2 {'pass' if s.cond2 else 'fail'}: common frequencies {{{freqs}}}"
            )
            lines.append(f"  condition 3 {'pass' if s.cond3 else 'fail'}")
        if self.frequency is not None:
            f = self.frequency
            for c in f.candidates:
                flags = [
                    name
                    for name, on in (
                        ("short circuit", c.shorted),
                        ("potentially defective", c.potentially_defective),
                        ("marginal", c.marginal),
                    )
                    if on
                ]
                lines.append(
                    f"  candidate w={c.omega:.9g} ({c.source}, multiplicity {c.multiplicity}): "
                    f"{'pass' if c.passes else 'FAIL'}, null dim {len(c.null_basis)}"
                    + (f" [{', '.join(flags)}]" if flags else "")
                )
            if f.min_re_lambda2 is not None:
                lines.append(f"  min Re lambda2 = {f.min_re_lambda2:.9g} at w={f.worst_omega:.9g}")
            if f.steady_state_frequencies:
                freqs = ", ".join(f"{w:.9g}" for w in f.steady_state_frequencies)
                lines.append(f"  steady-state frequencies: {{{freqs}}}")
            if f.passivity_violations:
                lines.append(f"  passivity violations: {len(f.passivity_violations)}")
        for check in self.cross_checks:
            status = "agrees" if check.agrees else "DISAGREES"
            lines.append(f"cross-check {check.method}: {check.verdict.value} ({status})")
        lines.append(f"verdict: {self.verdict.value} (method: {self.method})")
        return "\n".join(lines)
