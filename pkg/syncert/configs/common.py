import contextlib
import math
import tempfile
from pathlib import Path
from typing import Annotated, Any

from pydantic import BaseModel, BeforeValidator, PlainSerializer, WithJsonSchema
from pydantic_yaml import parse_yaml_file_as, to_yaml_file


def validate_decimal17(x: Any) -> float:
    match x:
        case bool():
            raise ValueError(f"{x!r} is not a real number.")
        case int() | float():
            value = float(x)
        case str():
            try:
                value = float(x.strip())
            except ValueError as e:
                raise ValueError(f"'{x}' is not a decimal number.") from e
        case _:
            raise ValueError(f"{x!r} is not a real number.")
    if not math.isfinite(value):
        raise ValueError("Non-finite values cannot be serialized; use an explicit marker.")
    return value


def format_decimal17(x: float) -> str:
    """Render a float with 17 significant digits, which round-trips any double exactly."""
    text = format(float(x), ".17g")
    # Normalize negative zero so reports stay byte-identical across platforms.
    return "0" if text == "-0" else text


Decimal17 = Annotated[
    float,
    BeforeValidator(lambda x: validate_decimal17(x)),
    PlainSerializer(lambda x: format_decimal17(x), return_type=str),
    WithJsonSchema({"type": "string"}, mode="validation"),
    WithJsonSchema({"type": "string"}, mode="serialization"),
]
"""Finite float serialized as a 17-significant-digit decimal string.

Accepts numbers or decimal strings. NaN and infinities are rejected.
"""


class SyncertConfig(
    BaseModel,
    extra="forbid",
    validate_assignment=True,
):
    """Base class for all Pydantic configs in the library.

    Defines some common settings used by all subclasses.
    """

    @classmethod
    def from_yaml_file(cls, path: Path | str):
        return parse_yaml_file_as(cls, path)

    def to_yaml_file(self, path: Path | str):
        to_yaml_file(path, self, exclude_none=True)

    @contextlib.contextmanager
    def to_tempfile(self, *, name: str = "config.yaml", dir: str | Path | None = None):
        """Enter a context manager with the config written to a temporary YAML file.

        Keyword Args:
            name (str): Name of the config file in the tmp directory. Defaults to "config.yaml".
            dir (str | Path | None): Root path of the temporary directory. Defaults to None.

        Returns:
            Path to the temporary config file.
        """
        with tempfile.TemporaryDirectory(dir=dir) as tmpdir:
            config_path = Path(tmpdir) / name
            self.to_yaml_file(config_path)
            yield config_path
