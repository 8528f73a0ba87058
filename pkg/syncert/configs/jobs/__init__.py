from syncert.configs.jobs.certify import CertifyJobConfig, CertifyMethod
from syncert.configs.jobs.common import JobConfig
from syncert.configs.jobs.simulate import SimulateJobConfig
from syncert.configs.jobs.sweep import SweepJobConfig

SyncertJobConfig = CertifyJobConfig | SimulateJobConfig | SweepJobConfig


__all__ = [
    "JobConfig",
    "CertifyJobConfig",
    "CertifyMethod",
    "SimulateJobConfig",
    "SweepJobConfig",
    "SyncertJobConfig",
]
