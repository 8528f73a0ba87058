import numpy as np
import pandas as pd
from loguru import logger

from syncert.analysis.admittance import (
    FrequencySweepReport,
    GeneralNetwork,
    LcNetwork,
    general_sync_check,
    lc_sync_check,
    sweep,
    sweep_grid,
)
from syncert.analysis.errors import FrequencyRangeError, UnsupportedNetworkError
from syncert.configs.jobs.sweep import SweepJobConfig
from syncert.jobs.certify import frequency_report
from syncert.jobs.common import SweepResult
from syncert.jobs.utils import output_path, save_table, timer
from syncert.schemas.reports import Report


def default_bounds(network: LcNetwork | GeneralNetwork, checked: FrequencySweepReport):
    """Two decades around the natural frequency for LC networks, else the candidate span."""
    match network:
        case LcNetwork() as net:
            return 0.1 * net.omega0, 10.0 * net.omega0
        case GeneralNetwork() as net:
            grid = sweep_grid(net, [])
            omegas = [c.omega for c in checked.candidates if c.omega > 0]
            return min([grid[0], *omegas]), max([grid[-1], *omegas])


def frequency_grid(config: SweepJobConfig, bounds: tuple[float, float], marks: list[float]):
    """Log-spaced grid with the candidate frequencies inside it added as extra rows."""
    wmin = config.wmin if config.wmin is not None else bounds[0]
    wmax = config.wmax if config.wmax is not None else bounds[1]
    if wmin >= wmax:
        raise FrequencyRangeError(f"Empty frequency range [{wmin}, {wmax}].")
    grid = np.geomspace(wmin, wmax, config.points)
    extra = [w for w in marks if wmin <= w <= wmax]
    return np.unique(np.concatenate([grid, extra]))


@timer
def tabulate(
    network: LcNetwork | GeneralNetwork,
    omegas: np.ndarray,
    marks: list[float],
    config: SweepJobConfig,
):
    """One row per frequency; `candidate` flags rows taken from the checked frequencies."""
    report = sweep(network, omegas, config.tolerances)
    return pd.DataFrame(
        {
            "omega": report.omegas,
            "re_lambda2": report.re_lambda2,
            "im_lambda2": report.im_lambda2,
            "min_singular_value": report.min_singular_value,
            "candidate": np.isin(report.omegas, marks),
        }
    )


def run_sweep(config: SweepJobConfig) -> SweepResult:
    network_file = config.load_network()
    network = network_file.to_domain()
    match network:
        case LcNetwork() as net:
            verdict, checked = lc_sync_check(net, tolerances=config.tolerances)
        case GeneralNetwork() as net:
            verdict, checked = general_sync_check(net, config.tolerances)
        case _:
            raise UnsupportedNetworkError("Frequency sweeps need an LC or general network.")

    marks = [c.omega for c in checked.candidates if c.omega > 0]
    omegas = frequency_grid(config, default_bounds(network, checked), marks)
    logger.info(f"Sweeping {omegas.size} frequencies in [{omegas[0]:.6g}, {omegas[-1]:.6g}]")
    table, _ = tabulate(network, omegas, marks, config)

    report = frequency_report(
        verdict,
        checked,
        network=config.network,
        kind=network_file.kind,
        q=network_file.q,
        tolerances=Report.tolerance_table(config.tolerances),
    )
    path = save_table(table, output_path(config, "sweep.csv"))
    return SweepResult(output_path=path, table=table, report=report)
