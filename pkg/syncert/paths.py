import re
from enum import Enum
from pathlib import Path
from typing import Annotated

from pydantic import AfterValidator

from syncert.analysis.errors import NetworkPathError
from syncert.constants import BUNDLED_NETWORKS_PATH


class PathPrefix(str, Enum):
    FILE = "file://"
    BUNDLED = "bundled://"


def strip_path_prefix(path: str) -> str:
    """Strip the 'scheme://' prefix from the start of a string."""
    pattern = r"^\w+\:\/\/"
    return re.sub(pattern, "", path)


def bundled_network_names() -> list[str]:
    return sorted(p.stem for p in BUNDLED_NETWORKS_PATH.glob("*.json"))


def is_valid_bundled_name(name: str) -> bool:
    """Bundled networks are referenced by file name, with or without the `.json` suffix."""
    return Path(name).name == name and name.removesuffix(".json") in bundled_network_names()


def validate_network_path(path: str) -> "NetworkPath":
    raw_path = strip_path_prefix(path)

    if path.startswith(PathPrefix.FILE):
        if not Path(raw_path).is_absolute():
            raise NetworkPathError(f"'{raw_path}' is not an absolute file path.")
    elif path.startswith(PathPrefix.BUNDLED):
        if not is_valid_bundled_name(raw_path):
            raise NetworkPathError(
                f"'{raw_path}' is not a bundled network; choose from {bundled_network_names()}."
            )
    else:
        allowed_prefixes = {x.value for x in PathPrefix}
        raise NetworkPathError(
            f"'{path}' does not begin with an allowed prefix: {allowed_prefixes}"
        )
    return path


NetworkPath = Annotated[str, AfterValidator(lambda x: validate_network_path(x))]


def format_file_path(path: str | Path) -> NetworkPath:
    path = Path(path).absolute()
    return f"{PathPrefix.FILE.value}{path}"


def format_bundled_path(name: str) -> NetworkPath:
    return f"{PathPrefix.BUNDLED.value}{name.removesuffix('.json')}"


def resolve_network_path(path: NetworkPath) -> Path:
    """Local file behind a validated network path."""
    raw_path = strip_path_prefix(path)
    if path.startswith(PathPrefix.BUNDLED):
        return BUNDLED_NETWORKS_PATH / f"{raw_path.removesuffix('.json')}.json"
    return Path(raw_path)


def network_path_from_argument(argument: str) -> NetworkPath:
    """Interpret a CLI argument: a prefixed path, an existing file, or a bundled name."""
    if re.match(r"^\w+\:\/\/", argument):
        return validate_network_path(argument)
    if Path(argument).exists():
        return format_file_path(argument)
    if is_valid_bundled_name(argument):
        return format_bundled_path(argument)
    raise FileNotFoundError(f"No network file or bundled network named '{argument}'.")
