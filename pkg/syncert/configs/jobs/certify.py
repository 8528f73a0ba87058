from enum import Enum

from syncert.configs.jobs.common import JobConfig


class CertifyMethod(str, Enum):
    PBH = "pbh"
    OBSERVABILITY = "observability"
    SUFFICIENT = "sufficient"
    ALL = "all"


class CertifyJobConfig(JobConfig):
    """Decide synchronization and write a report.

    `all` takes the verdict from the eigenvector test and cross-checks it against the
    observability test and the sufficient conditions. For LC networks it also runs the
    frequency probes. General networks are decided by the admittance test and only accept `all`.
    """

    method: CertifyMethod = CertifyMethod.ALL
