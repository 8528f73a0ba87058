import json

import pytest

from syncert.analysis.errors import UnsupportedMethodError
from syncert.configs.jobs import CertifyJobConfig, CertifyMethod
from syncert.entrypoint import Certifier
from syncert.jobs.common import ExitCode, JobType
from syncert.jobs.utils import timer
from syncert.schemas.reports import Verdict


@pytest.mark.parametrize(
    "network, method, verdict",
    [
        ("example1", CertifyMethod.PBH, Verdict.DOES_NOT_SYNCHRONIZE),
        ("example1", CertifyMethod.OBSERVABILITY, Verdict.DOES_NOT_SYNCHRONIZE),
        ("example1", CertifyMethod.SUFFICIENT, Verdict.INCONCLUSIVE),
        ("path-dampers", CertifyMethod.SUFFICIENT, Verdict.SYNCHRONIZES),
        ("path-dampers", CertifyMethod.ALL, Verdict.SYNCHRONIZES),
        ("example2-lc", CertifyMethod.OBSERVABILITY, Verdict.DOES_NOT_SYNCHRONIZE),
        ("ring4-shorts", CertifyMethod.ALL, Verdict.SYNCHRONIZES),
    ],
)
def test_certify_methods(network, method, verdict):
    config = CertifyJobConfig(name="test", network=f"bundled://{network}", method=method)
    result = Certifier().certify(config)
    assert result.report.verdict == verdict
    assert result.exit_code == ExitCode.from_verdict(verdict)
    assert result.output_path is None


@pytest.mark.parametrize(
    "method", [CertifyMethod.PBH, CertifyMethod.OBSERVABILITY, CertifyMethod.SUFFICIENT]
)
def test_general_network_rejects_array_methods(method):
    config = CertifyJobConfig(name="test", network="bundled://ring4-shorts", method=method)
    with pytest.raises(UnsupportedMethodError):
        Certifier().certify(config)


def test_sufficient_method_has_no_certificate():
    config = CertifyJobConfig(
        name="test", network="bundled://example1", method=CertifyMethod.SUFFICIENT
    )
    report = Certifier().certify(config).report
    assert report.certificate is None
    assert report.sufficient.summary == "sufficient test inconclusive"


def test_certify_writes_machine_report(tmp_path):
    output = tmp_path / "reports" / "example2.json"
    config = CertifyJobConfig(
        name="example2", network="bundled://example2", output_path=str(output)
    )
    result = Certifier().run(config)
    assert result.output_path == output
    document = json.loads(output.read_text())
    assert document["verdict"] == "does not synchronize"
    assert document["certificate"]["kind"] == "mode"
    assert output.read_text() == result.report.to_machine() + "\n"


def test_job_type():
    config = CertifyJobConfig(name="test", network="bundled://tank")
    assert Certifier().job_type(config) == JobType.CERTIFY
    with pytest.raises(ValueError):
        Certifier().job_type("not a config")


def test_timer_returns_elapsed_time():
    @timer
    def add(a, b):
        return a + b

    value, elapsed = add(1, 2)
    assert value == 3
    assert elapsed >= 0


def test_non_passive_network_is_inconclusive(resources_dir):
    network = resources_dir / "networks" / "negative-coupling.yaml"
    config = CertifyJobConfig(name="test", network=f"file://{network}")
    result = Certifier().certify(config)
    assert result.report.verdict == Verdict.INCONCLUSIVE
    assert result.exit_code == ExitCode.INCONCLUSIVE
    assert result.report.frequency.passivity_violations
