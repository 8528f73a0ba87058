"""Network file formats.

Files use 1-based node indices. Parsing only checks structure; `to_domain` performs the
semantic checks and converts to 0-based analysis objects.
"""

import math
from pathlib import Path
from typing import Annotated, Literal

import numpy as np
from pydantic import Field, RootModel, conlist
from pydantic_yaml import parse_yaml_file_as

from syncert.analysis.admittance import GeneralNetwork, LcNetwork, lc_from_array
from syncert.analysis.errors import ArrayValidationError, NetworkValidationError
from syncert.analysis.network import OscillatorArray, validate_array
from syncert.analysis.polynomials import RationalFunction
from syncert.configs.common import SyncertConfig


class MechanicalEdge(SyncertConfig):
    i: int
    j: int
    d: float = 0.0
    r: float = 0.0


class LcEdge(SyncertConfig):
    i: int
    j: int
    g: float = 0.0
    h: float = 0.0


class RationalConfig(SyncertConfig):
    """Ascending coefficients: `[a0, a1, a2]` is `a0 + a1 s + a2 s^2`."""

    num: conlist(float, min_length=1)
    den: conlist(float, min_length=1) = Field(default_factory=lambda: [1.0])

    def to_rational(self, tol: float = 1e-10) -> RationalFunction:
        if not all(math.isfinite(c) for c in self.num + self.den):
            raise NetworkValidationError("Admittance coefficients must be finite.")
        if not any(self.den):
            raise NetworkValidationError("Admittance denominator is the zero polynomial.")
        return RationalFunction.from_coefficients(self.num, self.den, tol)

    @classmethod
    def from_rational(cls, y: RationalFunction) -> "RationalConfig":
        num, den = y.coefficients()
        return cls(num=num, den=den)


class GeneralEdge(RationalConfig):
    i: int
    j: int


def _check_pairs(q: int, pairs: list[tuple[int, int]]) -> list[str]:
    problems = []
    seen: set[tuple[int, int]] = set()
    for i, j in pairs:
        if not (1 <= i <= q and 1 <= j <= q):
            problems.append(f"edge ({i},{j}) has an index outside 1..{q}")
        elif i >= j:
            problems.append(f"edge ({i},{j}) must satisfy i < j")
        elif (i, j) in seen:
            problems.append(f"edge ({i},{j}) appears more than once")
        seen.add((i, j))
    return problems


def _require(problems: list[str]) -> None:
    if problems:
        raise NetworkValidationError("; ".join(problems))


def _check_size(q: int) -> list[str]:
    return [] if q >= 1 else [f"q={q} must be at least 1"]


class MechanicalNetworkFile(SyncertConfig):
    kind: Literal["mechanical"] = "mechanical"
    q: int
    omega0: float
    edges: list[MechanicalEdge] = Field(default_factory=list)

    def to_domain(self) -> OscillatorArray:
        _require(_check_size(self.q) + _check_pairs(self.q, [(e.i, e.j) for e in self.edges]))
        d = np.zeros((self.q, self.q))
        r = np.zeros((self.q, self.q))
        for e in self.edges:
            d[e.i - 1, e.j - 1] = d[e.j - 1, e.i - 1] = e.d
            r[e.i - 1, e.j - 1] = r[e.j - 1, e.i - 1] = e.r
        try:
            return validate_array(self.q, self.omega0, d, r)
        except ArrayValidationError as e:
            raise NetworkValidationError(str(e)) from e

    @classmethod
    def from_array(cls, array: OscillatorArray) -> "MechanicalNetworkFile":
        edges = [
            MechanicalEdge(i=i + 1, j=j + 1, d=float(array.d[i, j]), r=float(array.r[i, j]))
            for i in range(array.q)
            for j in range(i + 1, array.q)
            if array.d[i, j] != 0 or array.r[i, j] != 0
        ]
        return cls(q=array.q, omega0=array.omega0, edges=edges)


class LcNetworkFile(SyncertConfig):
    kind: Literal["lc"] = "lc"
    q: int
    c0: float
    l0: float
    edges: list[LcEdge] = Field(default_factory=list)

    def to_domain(self) -> LcNetwork:
        _require(_check_size(self.q) + _check_pairs(self.q, [(e.i, e.j) for e in self.edges]))
        g = np.zeros((self.q, self.q))
        h = np.zeros((self.q, self.q))
        for e in self.edges:
            g[e.i - 1, e.j - 1] = g[e.j - 1, e.i - 1] = e.g
            h[e.i - 1, e.j - 1] = h[e.j - 1, e.i - 1] = e.h
        try:
            return lc_from_array(self.c0, self.l0, g, h)
        except ArrayValidationError as e:
            raise NetworkValidationError(str(e)) from e

    @classmethod
    def from_network(cls, net: LcNetwork) -> "LcNetworkFile":
        edges = [
            LcEdge(i=i + 1, j=j + 1, g=float(net.g[i, j]), h=float(net.h[i, j]))
            for i in range(net.q)
            for j in range(i + 1, net.q)
            if net.g[i, j] != 0 or net.h[i, j] != 0
        ]
        return cls(q=net.q, c0=net.c0, l0=net.l0, edges=edges)


class GeneralNetworkFile(SyncertConfig):
    kind: Literal["general"] = "general"
    q: int
    y0: RationalConfig
    edges: list[GeneralEdge] = Field(default_factory=list)

    def to_domain(self) -> GeneralNetwork:
        _require(_check_size(self.q) + _check_pairs(self.q, [(e.i, e.j) for e in self.edges]))
        couplings = {(e.i - 1, e.j - 1): e.to_rational() for e in self.edges}
        return GeneralNetwork(self.q, self.y0.to_rational(), couplings)

    @classmethod
    def from_network(cls, net: GeneralNetwork) -> "GeneralNetworkFile":
        edges = []
        for (i, j), y in sorted(net.couplings.items()):
            num, den = y.coefficients()
            edges.append(GeneralEdge(i=i + 1, j=j + 1, num=num, den=den))
        return cls(q=net.q, y0=RationalConfig.from_rational(net.y0), edges=edges)


NetworkFile = Annotated[
    MechanicalNetworkFile | LcNetworkFile | GeneralNetworkFile,
    Field(discriminator="kind"),
]


class NetworkDocument(RootModel[NetworkFile]):
    pass


def load_network_file(
    path: Path | str,
) -> MechanicalNetworkFile | LcNetworkFile | GeneralNetworkFile:
    """Parse a YAML or JSON network file. Raises pydantic `ValidationError` on bad structure."""
    return parse_yaml_file_as(NetworkDocument, path).root
