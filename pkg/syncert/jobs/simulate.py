import numpy as np
from loguru import logger

from syncert.analysis.admittance import LcNetwork
from syncert.analysis.certify import certificate_initial_state, pbh_check
from syncert.analysis.errors import InitialStateError, UnsupportedNetworkError
from syncert.analysis.network import OscillatorArray, build_laplacians
from syncert.analysis.simulate import build_state_space, integrate
from syncert.configs.jobs.simulate import SimulateJobConfig
from syncert.jobs.common import SimulateResult
from syncert.jobs.utils import output_path, save_table, timer


def simulation_array(network) -> OscillatorArray:
    match network:
        case OscillatorArray() as array:
            return array
        case LcNetwork() as net:
            # Node voltages of an LC network follow its mechanical twin.
            return net.equivalent_array()
        case _:
            raise UnsupportedNetworkError(
                "Simulation needs a mechanical or LC network; general networks have no "
                "finite-dimensional state model."
            )


def initial_state(config: SimulateJobConfig, array: OscillatorArray) -> np.ndarray:
    if config.seed_certificate:
        verdict = pbh_check(build_laplacians(array), config.tolerances)
        if verdict.certificate is None:
            raise InitialStateError("The network synchronizes; there is no certificate to seed.")
        logger.info(f"Seeding from the mode at omega*={verdict.certificate.omega_star:.9g}")
        return certificate_initial_state(verdict.certificate)
    if config.x0 is not None:
        x0 = np.asarray(config.x0, dtype=float)
        if x0.shape != (2 * array.q,):
            raise InitialStateError(
                f"x0 has {x0.size} entries; a network with q={array.q} needs {2 * array.q}."
            )
        return x0
    logger.info(f"Drawing a random initial state with seed {config.seed}")
    return np.random.default_rng(config.seed).standard_normal(2 * array.q)


@timer
def simulate(config: SimulateJobConfig, array: OscillatorArray, x0: np.ndarray):
    ss = build_state_space(array)
    return integrate(ss, x0, horizon=config.horizon, dt=config.dt)


def run_simulate(config: SimulateJobConfig) -> SimulateResult:
    array = simulation_array(config.load_network().to_domain())
    x0 = initial_state(config, array)
    trajectory, _ = simulate(config, array, x0)
    table = trajectory.to_frame()
    logger.info(
        f"Final sync error {trajectory.sync_error[-1]:.3e} after {trajectory.times[-1]:.6g} s"
    )
    path = save_table(table, output_path(config, "trajectory.csv"))
    return SimulateResult(output_path=path, table=table, initial_state=x0.tolist())
