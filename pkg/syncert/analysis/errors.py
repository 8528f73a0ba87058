"""Exceptions raised by the analysis layer."""

from dataclasses import dataclass, field
from enum import Enum


class SyncertError(Exception):
    """Base class for all syncert errors."""


class IssueKind(str, Enum):
    NON_SYMMETRIC = "non_symmetric"
    NEGATIVE_WEIGHT = "negative_weight"
    NONZERO_DIAGONAL = "nonzero_diagonal"
    NON_POSITIVE_OMEGA0 = "non_positive_omega0"
    SHAPE_MISMATCH = "shape_mismatch"
    NON_FINITE = "non_finite"


@dataclass(frozen=True)
class ValidationIssue:
    """A single validation failure; indices are 0-based."""

    kind: IssueKind
    indices: tuple[int, ...] = field(default_factory=tuple)
    detail: str = ""

    def __str__(self) -> str:
        where = ",".join(str(i + 1) for i in self.indices)
        label = f"{self.kind.value}({where})" if where else self.kind.value
        return f"{label}: {self.detail}" if self.detail else label


class ArrayValidationError(SyncertError, ValueError):
    """Raised when raw oscillator or circuit data violates its invariants."""

    def __init__(self, issues: list[ValidationIssue]):
        self.issues = list(issues)
        super().__init__("; ".join(str(x) for x in self.issues))


class NetworkValidationError(SyncertError, ValueError):
    """Raised when a network file is well formed but semantically invalid."""


class UnsupportedNetworkError(NetworkValidationError):
    """The network kind is not accepted by the requested operation."""


class InitialStateError(SyncertError, ValueError):
    """Raised when a simulation initial state cannot be built."""


class NonFiniteStateError(SyncertError, ArithmeticError):
    def __init__(self, t: float):
        self.t = t
        super().__init__(f"Non-finite state encountered at t={t!r}.")


class InvalidModeError(SyncertError, ValueError):
    """Raised when a modal term does not satisfy its eigen-relation."""


class OscillatorShortCircuitError(SyncertError, ArithmeticError):
    """The oscillator admittance has a pole at the requested frequency.

    Every node is tied to ground, so the node-voltage space is {0}.
    """

    def __init__(self, omega: float):
        self.omega = omega
        super().__init__(f"Oscillator admittance is infinite at omega={omega!r}.")


class InconsistentShortError(SyncertError, ValueError):
    """An infinite admittance survived the short-circuit row reduction."""


class DegreeOverflowError(SyncertError, OverflowError):
    def __init__(self, degree: int, cap: int):
        self.degree = degree
        self.cap = cap
        super().__init__(f"Polynomial degree {degree} exceeds the configured cap of {cap}.")


class UnsupportedMethodError(SyncertError, ValueError):
    """The requested decision procedure does not apply to this kind of network."""


class NetworkPathError(SyncertError, ValueError):
    """A network reference is neither a valid prefixed path nor a bundled name."""


class FrequencyRangeError(SyncertError, ValueError):
    """A frequency sweep was asked for an empty range."""
