import pytest

from syncert.configs.jobs import CertifyJobConfig, CertifyMethod, SimulateJobConfig, SweepJobConfig
from syncert.configs.tolerances import Tolerances


@pytest.fixture
def tolerances():
    return Tolerances(rank_floor=1e-9, subset=1e-5)


@pytest.fixture
def certify_job_config(tolerances):
    return CertifyJobConfig(
        name="certify-job-config",
        network="bundled://example1",
        method=CertifyMethod.PBH,
        tolerances=tolerances,
    )


@pytest.fixture
def simulate_job_config(request):
    if request.param == "explicit_x0":
        return SimulateJobConfig(
            name="simulate-job-config",
            network="bundled://example1",
            x0=[1.0, 0.0, -1.0, 0.0, 0.0, 0.0, 0.0, 0.0],
            horizon=10.0,
        )
    elif request.param == "seed_certificate":
        return SimulateJobConfig(
            name="simulate-job-config",
            network="file:///tmp/networks/example2.json",
            seed_certificate=True,
            dt=1e-2,
        )


@pytest.fixture
def sweep_job_config():
    return SweepJobConfig(
        name="sweep-job-config",
        network="bundled://ring4-shorts",
        wmin=0.1,
        wmax=10.0,
        points=32,
        output_path="/tmp/sweep.csv",
    )
