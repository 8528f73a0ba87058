from loguru import logger

from syncert.configs.jobs import (
    CertifyJobConfig,
    SimulateJobConfig,
    SweepJobConfig,
    SyncertJobConfig,
)
from syncert.jobs.certify import run_certify
from syncert.jobs.common import CertifyResult, JobResult, JobType, SimulateResult, SweepResult
from syncert.jobs.simulate import run_simulate
from syncert.jobs.sweep import run_sweep


class Certifier:
    """Simple wrapper around executable functions for the jobs available in the library."""

    def job_type(self, config: SyncertJobConfig) -> JobType:
        match config:
            case CertifyJobConfig():
                return JobType.CERTIFY
            case SimulateJobConfig():
                return JobType.SIMULATE
            case SweepJobConfig():
                return JobType.SWEEP
            case _:
                raise ValueError(f"Invalid job configuration: {type(config)}")

    def certify(self, config: CertifyJobConfig) -> CertifyResult:
        return run_certify(config)

    def simulate(self, config: SimulateJobConfig) -> SimulateResult:
        return run_simulate(config)

    def sweep(self, config: SweepJobConfig) -> SweepResult:
        return run_sweep(config)

    def run(self, config: SyncertJobConfig) -> JobResult:
        """Run a job with the provided configuration.

        The job is determined by the configuration type.
        """
        job_type = self.job_type(config)
        logger.info(f"Running {job_type.value} job '{config.name}'")
        match config:
            case CertifyJobConfig() as certify_config:
                result = self.certify(certify_config)
            case SimulateJobConfig() as simulate_config:
                result = self.simulate(simulate_config)
            case SweepJobConfig() as sweep_config:
                result = self.sweep(sweep_config)
        logger.info(f"Finished {job_type.value} job '{config.name}'")
        return result
