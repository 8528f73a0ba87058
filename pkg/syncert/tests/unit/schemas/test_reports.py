import json

import pytest

from syncert.configs.jobs import CertifyJobConfig
from syncert.jobs.certify import run_certify
from syncert.jobs.common import ExitCode
from syncert.paths import bundled_network_names
from syncert.schemas.reports import ModeCertificateModel, Report, Verdict

EXPECTED_VERDICTS = {
    "example1": Verdict.DOES_NOT_SYNCHRONIZE,
    "example2": Verdict.DOES_NOT_SYNCHRONIZE,
    "path-dampers": Verdict.SYNCHRONIZES,
    "example1-lc": Verdict.DOES_NOT_SYNCHRONIZE,
    "example2-lc": Verdict.DOES_NOT_SYNCHRONIZE,
    "connected-conductance": Verdict.SYNCHRONIZES,
    "tank": Verdict.SYNCHRONIZES,
    "ring4-shorts": Verdict.SYNCHRONIZES,
}


def bundled_report(name: str) -> Report:
    config = CertifyJobConfig(name=name, network=f"bundled://{name}")
    return run_certify(config).report


def test_every_bundled_network_has_an_expected_verdict():
    assert set(EXPECTED_VERDICTS) == set(bundled_network_names())


@pytest.mark.parametrize("name", sorted(EXPECTED_VERDICTS))
def test_bundled_report(name):
    report = bundled_report(name)
    assert report.verdict == EXPECTED_VERDICTS[name]
    assert all(check.agrees for check in report.cross_checks)

    text = report.to_machine()
    assert Report.model_validate_json(text) == report
    assert "NaN" not in text and "Infinity" not in text
    document = json.loads(text)
    assert all(isinstance(v, str) for v in document["tolerances"].values())
    assert report.to_text().splitlines()[-1].startswith(f"verdict: {report.verdict.value}")


def test_machine_report_is_deterministic():
    assert bundled_report("example1").to_machine() == bundled_report("example1").to_machine()


def test_example1_report_certificate():
    report = bundled_report("example1")
    assert isinstance(report.certificate, ModeCertificateModel)
    assert report.certificate.lambda_star == pytest.approx(1.0)
    assert report.certificate.initial_state == pytest.approx([1, 0, -1, 0, 0, 0, 0, 0])
    assert report.sufficient is not None and not report.sufficient.overall
    assert [c.method for c in report.cross_checks] == ["observability"]
    assert report.damper_graph_connected is False


def test_lc_report_carries_frequency_data():
    report = bundled_report("example2-lc")
    assert report.frequency is not None
    assert report.frequency.agrees_with_pbh
    assert [c.method for c in report.cross_checks] == ["observability", "lc_sweep", "admittance"]


def test_general_report_frequency_certificate_fields():
    report = bundled_report("ring4-shorts")
    assert report.method == "admittance"
    assert report.certificate is None
    assert any(c.shorted and c.passes for c in report.frequency.candidates)
    assert report.frequency.steady_state_frequencies == pytest.approx([2**-0.5])


@pytest.mark.parametrize(
    "verdict, code",
    [
        (Verdict.SYNCHRONIZES, 0),
        (Verdict.DOES_NOT_SYNCHRONIZE, 3),
        (Verdict.INCONCLUSIVE, 4),
    ],
)
def test_exit_code_from_verdict(verdict, code):
    assert ExitCode.from_verdict(verdict) == code


def test_verdict_from_bool():
    assert Verdict.from_bool(True) == Verdict.SYNCHRONIZES
    assert Verdict.from_bool(False) == Verdict.DOES_NOT_SYNCHRONIZE
