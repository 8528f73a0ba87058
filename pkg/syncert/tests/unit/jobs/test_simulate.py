import numpy as np
import pytest

from syncert.analysis.errors import InitialStateError, UnsupportedNetworkError
from syncert.configs.jobs import SimulateJobConfig
from syncert.entrypoint import Certifier
from syncert.jobs.simulate import initial_state, simulation_array
from syncert.tests.test_utils import read_results_csv


def simulate_config(tmp_path, network, **fields):
    return SimulateJobConfig(
        name="simulate",
        network=f"bundled://{network}",
        output_path=str(tmp_path / "trajectory.csv"),
        **fields,
    )


def test_seed_certificate_trajectory(tmp_path):
    config = simulate_config(tmp_path, "example1", seed_certificate=True, horizon=10.0)
    result = Certifier().simulate(config)
    assert result.initial_state == pytest.approx([1, 0, -1, 0, 0, 0, 0, 0])

    table = read_results_csv(result.output_path)
    assert list(table.columns[:3]) == ["t", "z1", "z2"]
    assert table["t"].iloc[-1] == pytest.approx(10.0)
    np.testing.assert_allclose(table["z1"], np.cos(np.sqrt(2) * table["t"]), atol=1e-6)
    # Written with 17 significant digits.
    np.testing.assert_array_equal(table["energy"].to_numpy(), result.table["energy"].to_numpy())


def test_random_initial_state_is_seeded(tmp_path, path_dampers):
    config = simulate_config(tmp_path, "path-dampers", seed=3)
    x0 = initial_state(config, path_dampers)
    np.testing.assert_array_equal(x0, np.random.default_rng(3).standard_normal(6))


def test_synchronizing_network_settles(tmp_path):
    config = simulate_config(tmp_path, "path-dampers", horizon=60.0)
    result = Certifier().simulate(config)
    assert result.table["sync_error"].iloc[-1] < 1e-6


def test_lc_network_uses_mechanical_twin(tmp_path, example2_lc, example2):
    twin = simulation_array(example2_lc)
    np.testing.assert_array_equal(twin.d, example2.d)
    config = simulate_config(tmp_path, "example2-lc", seed_certificate=True, horizon=1.0)
    assert len(Certifier().simulate(config).table) == 1001


def test_seed_certificate_requires_failure(tmp_path, path_dampers):
    config = simulate_config(tmp_path, "path-dampers", seed_certificate=True)
    with pytest.raises(InitialStateError):
        initial_state(config, path_dampers)


def test_x0_length_must_match(tmp_path, example1):
    config = simulate_config(tmp_path, "example1", x0=[1.0, 0.0])
    with pytest.raises(InitialStateError):
        initial_state(config, example1)


def test_general_network_cannot_be_simulated(tmp_path):
    with pytest.raises(UnsupportedNetworkError):
        Certifier().simulate(simulate_config(tmp_path, "ring4-shorts"))
