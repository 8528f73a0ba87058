import json
import sys

import pytest
from click.testing import CliRunner
from loguru import logger

from syncert import entrypoint
from syncert.__main__ import cli
from syncert.tests.test_utils import read_results_csv


@pytest.fixture
def runner():
    yield CliRunner()
    # The CLI rebinds the log sink to the runner's captured stderr.
    logger.remove()
    logger.add(sys.stderr, level="WARNING")


@pytest.fixture
def invalid_dir(resources_dir):
    return resources_dir / "networks"


@pytest.mark.parametrize(
    "network, code",
    [
        ("example1", 3),
        ("example2", 3),
        ("path-dampers", 0),
        ("example1-lc", 3),
        ("connected-conductance", 0),
        ("tank", 0),
        ("ring4-shorts", 0),
    ],
)
def test_certify_exit_codes(runner, network, code):
    result = runner.invoke(cli, ["certify", network])
    assert result.exit_code == code, result.output
    assert "verdict:" in result.output


def test_sufficient_only_is_inconclusive(runner):
    result = runner.invoke(cli, ["certify", "example1", "--method", "sufficient"])
    assert result.exit_code == 4
    assert "sufficient test inconclusive" in result.output


def test_machine_output_is_deterministic(runner):
    args = ["--format", "machine", "certify", "example1"]
    first = runner.invoke(cli, args)
    second = runner.invoke(cli, args)
    assert first.stdout == second.stdout
    document = json.loads(first.stdout)
    assert document["verdict"] == "does not synchronize"
    assert float(document["certificate"]["lambda_star"]) == pytest.approx(1.0)


def test_certify_output_file(runner, tmp_path):
    output = tmp_path / "report.json"
    result = runner.invoke(cli, ["certify", "example2", "--output", str(output)])
    assert result.exit_code == 3
    assert json.loads(output.read_text())["kind"] == "mechanical"


def test_certify_from_config(runner, resources_dir):
    config = resources_dir / "configs" / "certify_example1.yaml"
    assert runner.invoke(cli, ["certify", "--config", str(config)]).exit_code == 3

    inline = json.dumps({"name": "inline", "network": "bundled://path-dampers", "method": "pbh"})
    assert runner.invoke(cli, ["certify", "--config", inline]).exit_code == 0


def test_tol_override(runner):
    result = runner.invoke(cli, ["--tol", "1e-8", "--format", "machine", "certify", "tank"])
    assert result.exit_code == 0
    assert json.loads(result.stdout)["tolerances"]["rank_floor"] == "1e-08"


@pytest.mark.parametrize(
    "file_name, code",
    [
        ("malformed.yaml", 1),
        ("missing-omega0.json", 1),
        ("unknown-kind.json", 1),
        ("negative-damper.json", 2),
        ("edge-out-of-range.yaml", 2),
        ("zero-omega0.yaml", 2),
        ("zero-denominator.yaml", 2),
    ],
)
def test_invalid_inputs(runner, invalid_dir, file_name, code):
    result = runner.invoke(cli, ["certify", str(invalid_dir / file_name)])
    assert result.exit_code == code
    assert "error:" in result.output


def test_missing_network(runner):
    assert runner.invoke(cli, ["certify", "no-such-network"]).exit_code == 1


@pytest.mark.parametrize(
    "args",
    [
        ["certify"],
        ["certify", "example1", "--config", "{}"],
        ["--tol", "0", "certify", "example1"],
        ["certify", "example1", "--method", "guess"],
    ],
)
def test_usage_errors(runner, args):
    assert runner.invoke(cli, args).exit_code == 2


def test_array_method_on_general_network(runner):
    result = runner.invoke(cli, ["certify", "ring4-shorts", "--method", "pbh"])
    assert result.exit_code == 2
    assert "error: invalid input" in result.output
    assert "verdict:" not in result.output


def test_non_passive_network_exits_inconclusive(runner, invalid_dir):
    result = runner.invoke(cli, ["certify", str(invalid_dir / "negative-coupling.yaml")])
    assert result.exit_code == 4, result.output
    assert "verdict:" in result.output


def test_unknown_path_prefix(runner):
    result = runner.invoke(cli, ["certify", "ftp://example1.json"])
    assert result.exit_code == 2
    assert "allowed prefix" in result.output


def test_internal_errors_are_not_input_errors(runner, monkeypatch):
    def fail(self, config):
        raise ValueError("array must not contain infs or NaNs")

    monkeypatch.setattr(entrypoint.Certifier, "certify", fail)
    result = runner.invoke(cli, ["certify", "example1"])
    assert result.exit_code == 1
    assert isinstance(result.exception, ValueError)
    assert "invalid input" not in result.output


def test_simulate_seed_certificate(runner, tmp_path):
    out = tmp_path / "trajectory.csv"
    args = ["simulate", "example1", "--seed-certificate", "--horizon", "2", "--out", str(out)]
    result = runner.invoke(cli, args)
    assert result.exit_code == 0, result.output
    assert "final sync_error" in result.output
    table = read_results_csv(out)
    assert len(table) == 2001
    assert table["z1"].iloc[0] == 1.0


def test_simulate_from_x0_file(runner, resources_dir, tmp_path):
    out = tmp_path / "trajectory.csv"
    x0 = resources_dir / "example1-x0.yaml"
    args = ["simulate", "example1", "--x0", str(x0), "--horizon", "1", "--dt", "0.01"]
    result = runner.invoke(cli, args + ["--out", str(out)])
    assert result.exit_code == 0, result.output
    assert len(read_results_csv(out)) == 101


@pytest.mark.parametrize(
    "args",
    [
        ["simulate", "path-dampers", "--seed-certificate"],
        ["simulate", "ring4-shorts"],
        ["sweep", "example1"],
    ],
)
def test_unsupported_requests(runner, tmp_path, args):
    result = runner.invoke(cli, args + ["--out", str(tmp_path / "out.csv")])
    assert result.exit_code == 2
    assert "error: invalid input" in result.output


def test_sweep(runner, tmp_path):
    out = tmp_path / "sweep.csv"
    result = runner.invoke(cli, ["sweep", "example1-lc", "--points", "12", "--out", str(out)])
    assert result.exit_code == 3
    table = read_results_csv(out)
    columns = ["omega", "re_lambda2", "im_lambda2", "min_singular_value", "candidate"]
    assert list(table.columns) == columns
    assert len(table) >= 12


def test_validate(runner, invalid_dir):
    result = runner.invoke(cli, ["validate", "example1"])
    assert result.exit_code == 0
    assert "valid mechanical network, q=4, 3 edge(s)" in result.output

    negative = invalid_dir / "negative-damper.json"
    assert runner.invoke(cli, ["validate", str(negative)]).exit_code == 2
    assert runner.invoke(cli, ["validate", str(invalid_dir / "malformed.yaml")]).exit_code == 1


@pytest.mark.parametrize("kind", ["mechanical", "lc", "general"])
def test_generate_then_validate(runner, tmp_path, kind):
    out = tmp_path / f"{kind}.json"
    args = ["generate", "--kind", kind, "--q", "4", "--seed", "5", "--out", str(out)]
    assert runner.invoke(cli, args).exit_code == 0
    assert json.loads(out.read_text())["kind"] == kind

    result = runner.invoke(cli, ["validate", str(out)])
    assert result.exit_code == 0, result.output


def test_generate_is_deterministic(runner):
    args = ["generate", "--q", "5", "--density", "0.7", "--seed", "11"]
    assert runner.invoke(cli, args).stdout == runner.invoke(cli, args).stdout
