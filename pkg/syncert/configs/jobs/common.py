from pydantic import Field

from syncert.configs.common import SyncertConfig
from syncert.configs.networks import NetworkFile, load_network_file
from syncert.configs.tolerances import Tolerances
from syncert.paths import NetworkPath, resolve_network_path


class JobConfig(SyncertConfig):
    """Configuration that comprises the entire input to a job.

    Every job reads one network file and writes its outputs under `output_path`, or under
    `$SYNCERT_RESULTS/<name>/` when no path is given.
    """

    name: str = Field(description="Name of the job.")
    network: NetworkPath = Field(description="Network file, as `file://` or `bundled://` path.")
    tolerances: Tolerances = Field(default_factory=Tolerances)
    output_path: str | None = Field(
        default=None, description="Where to write the job output. Defaults to the results dir."
    )

    def load_network(self) -> NetworkFile:
        return load_network_file(resolve_network_path(self.network))
