"""Oscillator arrays, their Laplacians and the derived coupling graphs."""

from collections.abc import Iterable
from dataclasses import dataclass, field

import networkx as nx
import numpy as np
from loguru import logger

from syncert.analysis.errors import ArrayValidationError, IssueKind, ValidationIssue
from syncert.analysis.linalg import psd_tolerance, spectral_norm
from syncert.configs.tolerances import DEFAULT_TOLERANCES, Tolerances


def _frozen(a: np.ndarray) -> np.ndarray:
    a = np.array(a, dtype=float)
    a.setflags(write=False)
    return a


@dataclass(frozen=True)
class OscillatorArray:
    """Identical oscillators of natural frequency `omega0` coupled by dampers and springs.

    Attributes:
        q: Number of oscillators.
        omega0: Uncoupled natural frequency in rad/s.
        d: Symmetric nonnegative damper weights with zero diagonal.
        r: Symmetric nonnegative spring weights with zero diagonal.
    """

    q: int
    omega0: float
    d: np.ndarray
    r: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "d", _frozen(self.d))
        object.__setattr__(self, "r", _frozen(self.r))

    def permuted(self, perm: Iterable[int]) -> "OscillatorArray":
        """Relabel vertices so that new vertex `k` is old vertex `perm[k]`."""
        p = np.asarray(list(perm))
        return OscillatorArray(self.q, self.omega0, self.d[np.ix_(p, p)], self.r[np.ix_(p, p)])

    def scaled(self, alpha: float, beta: float) -> "OscillatorArray":
        return OscillatorArray(self.q, self.omega0, alpha * self.d, beta * self.r)


@dataclass(frozen=True)
class LaplacianPair:
    D: np.ndarray
    R: np.ndarray
    omega0: float = 1.0

    def __post_init__(self):
        object.__setattr__(self, "D", _frozen(self.D))
        object.__setattr__(self, "R", _frozen(self.R))

    @property
    def q(self) -> int:
        return self.D.shape[0]

    def residual_tolerance(self, tolerances: Tolerances = DEFAULT_TOLERANCES) -> float:
        return tolerances.residual_rel * max(1.0, spectral_norm(self.R), spectral_norm(self.D))

    def is_valid(self) -> bool:
        """Row sums zero, nonpositive off-diagonals and PSD up to `q * eps * |M|`."""
        ones = np.ones(self.q)
        for M in (self.D, self.R):
            scale = max(1.0, spectral_norm(M))
            if not np.allclose(M, M.T):
                return False
            if np.linalg.norm(M @ ones) > 1e-12 * scale * self.q:
                return False
            off = M - np.diag(np.diag(M))
            if np.any(off > 0):
                return False
            if self.q and np.linalg.eigvalsh(M)[0] < -psd_tolerance(M):
                return False
        return True


@dataclass(frozen=True)
class CouplingGraph:
    """Undirected weighted graph on vertices `0..vertex_count-1`."""

    vertex_count: int
    edges: dict[tuple[int, int], float] = field(default_factory=dict)

    def to_networkx(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(range(self.vertex_count))
        g.add_weighted_edges_from((i, j, w) for (i, j), w in self.edges.items())
        return g

    def edge_set(self) -> set[tuple[int, int]]:
        return set(self.edges)

    def is_connected(self) -> bool:
        return self.vertex_count <= 1 or nx.is_connected(self.to_networkx())


@dataclass(frozen=True)
class ComponentDecomposition:
    """Components of the spring-only graph, block-ordered by their lowest vertex."""

    count: int
    components: list[list[int]]
    assignment: np.ndarray
    sizes: list[int]
    offsets: list[int]
    permutation: list[int]
    blocks: list[np.ndarray]


@dataclass(frozen=True)
class DamperConnectivity:
    graph_connected: bool
    lambda2: float
    spectral_connected: bool

    @property
    def agree(self) -> bool:
        return self.graph_connected == self.spectral_connected


def validate_array(q: int, omega0: float, d, r) -> OscillatorArray:
    """Validate raw weights; asymmetric input is reported, never symmetrized."""
    issues: list[ValidationIssue] = []
    d = np.asarray(d, dtype=float)
    r = np.asarray(r, dtype=float)

    if not (isinstance(q, int | np.integer) and q >= 1):
        issues.append(ValidationIssue(IssueKind.SHAPE_MISMATCH, detail=f"q={q!r} must be >= 1"))
        raise ArrayValidationError(issues)
    for name, w in (("d", d), ("r", r)):
        if w.shape != (q, q):
            issues.append(
                ValidationIssue(IssueKind.SHAPE_MISMATCH, detail=f"{name} has shape {w.shape}")
            )
    if not (np.isfinite(omega0) and omega0 > 0):
        issues.append(ValidationIssue(IssueKind.NON_POSITIVE_OMEGA0, detail=f"omega0={omega0}"))
    if any(i.kind == IssueKind.SHAPE_MISMATCH for i in issues):
        raise ArrayValidationError(issues)

    issues.extend(weight_issues(d) + weight_issues(r))
    if issues:
        raise ArrayValidationError(issues)
    return OscillatorArray(int(q), float(omega0), d, r)


def weight_issues(w: np.ndarray) -> list[ValidationIssue]:
    """Symmetry, sign and diagonal checks shared by mechanical and circuit weights."""
    issues: list[ValidationIssue] = []
    q = w.shape[0]
    for i in range(q):
        if not np.isfinite(w[i]).all():
            cols = [j for j in range(q) if not np.isfinite(w[i, j])]
            issues.extend(ValidationIssue(IssueKind.NON_FINITE, (i, j)) for j in cols)
            continue
        if w[i, i] != 0:
            issues.append(ValidationIssue(IssueKind.NONZERO_DIAGONAL, (i,)))
        for j in range(q):
            if j != i and w[i, j] < 0:
                issues.append(ValidationIssue(IssueKind.NEGATIVE_WEIGHT, (i, j)))
            if j > i and w[i, j] != w[j, i]:
                issues.append(ValidationIssue(IssueKind.NON_SYMMETRIC, (i, j)))
    return issues


def array_from_edges(
    q: int, omega0: float, edges: Iterable[tuple[int, int, float, float]]
) -> OscillatorArray:
    """Build an array from 0-based `(i, j, d, r)` edges, writing both triangles."""
    d = np.zeros((q, q))
    r = np.zeros((q, q))
    for i, j, dij, rij in edges:
        d[i, j] = d[j, i] = dij
        r[i, j] = r[j, i] = rij
    return validate_array(q, omega0, d, r)


def laplacian(w: np.ndarray) -> np.ndarray:
    w = np.asarray(w, dtype=float)
    return np.diag(w.sum(axis=1)) - w


def build_laplacians(array: OscillatorArray) -> LaplacianPair:
    return LaplacianPair(laplacian(array.d), laplacian(array.r), array.omega0)


def _graph(w: np.ndarray) -> CouplingGraph:
    q = w.shape[0]
    edges = {(i, j): float(w[i, j]) for i in range(q) for j in range(i + 1, q) if w[i, j] != 0}
    return CouplingGraph(q, edges)


def derive_graphs(
    array: OscillatorArray,
) -> tuple[CouplingGraph, CouplingGraph, CouplingGraph, CouplingGraph]:
    """Return the damper, spring, union and spring-only graphs, in that order."""
    gamma_d = _graph(array.d)
    gamma_r = _graph(array.r)
    gamma_sigma = _graph(array.d + array.r)
    gamma_delta = _graph(spring_only_weights(array))
    return gamma_d, gamma_r, gamma_sigma, gamma_delta


def spring_only_weights(array: OscillatorArray) -> np.ndarray:
    """Spring weights on pairs that carry no damper."""
    return np.where(array.d == 0, array.r, 0.0)


def connected_components(graph: CouplingGraph) -> list[list[int]]:
    """Connected components, each sorted and ordered by their smallest vertex."""
    comps = [sorted(c) for c in nx.connected_components(graph.to_networkx())]
    return sorted(comps, key=lambda c: c[0])


def build_r_delta(array: OscillatorArray) -> tuple[np.ndarray, ComponentDecomposition]:
    r_delta = laplacian(spring_only_weights(array))
    *_, gamma_delta = derive_graphs(array)
    components = connected_components(gamma_delta)

    assignment = np.empty(array.q, dtype=int)
    for idx, comp in enumerate(components):
        assignment[comp] = idx
    sizes = [len(c) for c in components]
    offsets = [int(x) for x in np.concatenate([[0], np.cumsum(sizes)[:-1]])]
    permutation = [v for comp in components for v in comp]
    blocks = [r_delta[np.ix_(comp, comp)] for comp in components]

    decomposition = ComponentDecomposition(
        count=len(components),
        components=components,
        assignment=assignment,
        sizes=sizes,
        offsets=offsets,
        permutation=permutation,
        blocks=blocks,
    )
    return r_delta, decomposition


def damper_connectivity(
    array: OscillatorArray, tolerances: Tolerances = DEFAULT_TOLERANCES
) -> DamperConnectivity:
    """Decide whether the damper graph is connected by traversal and by its Laplacian spectrum."""
    gamma_d, *_ = derive_graphs(array)
    by_graph = gamma_d.is_connected()
    if array.q == 1:
        return DamperConnectivity(by_graph, 0.0, True)

    D = laplacian(array.d)
    lambda2 = float(np.linalg.eigvalsh(D)[1])
    threshold = tolerances.eig_rel * max(1.0, spectral_norm(D))
    result = DamperConnectivity(by_graph, lambda2, lambda2 > threshold)
    if not result.agree:
        logger.error(
            f"Damper connectivity routes disagree: traversal={by_graph}, lambda2={lambda2:.3e}"
        )
    return result


def random_array(
    rng: np.random.Generator,
    q: int,
    density: float = 0.5,
    *,
    spring_density: float | None = None,
    omega0: float = 1.0,
    low: float = 0.5,
    high: float = 2.0,
    integer_weights: bool = False,
) -> OscillatorArray:
    """Draw a random array with independent damper and spring edge masks.

    With `integer_weights`, weights are drawn from {1, 2}, which makes symmetric
    (and hence non-synchronizing) configurations common.
    """
    spring_density = density if spring_density is None else spring_density

    def draw(p: float) -> np.ndarray:
        mask = np.triu(rng.random((q, q)) < p, k=1)
        if integer_weights:
            values = rng.integers(1, 3, size=(q, q)).astype(float)
        else:
            values = rng.uniform(low, high, size=(q, q))
        w = np.where(mask, values, 0.0)
        return w + w.T

    return validate_array(q, omega0, draw(density), draw(spring_density))
