import os
from pathlib import Path

TOOL_VERSION = "syncert 0.1.0"

SYNCERT_HOME_PATH: str = os.getenv(
    "SYNCERT_HOME",
    str(Path.home() / ".syncert"),
)

SYNCERT_RESULTS_PATH: str = os.getenv(
    "SYNCERT_RESULTS",
    f"{SYNCERT_HOME_PATH}/results",
)

SYNCERT_LOG_LEVEL: str = os.getenv("SYNCERT_LOG_LEVEL", "WARNING")

BUNDLED_NETWORKS_PATH = Path(__file__).parent / "networks"
