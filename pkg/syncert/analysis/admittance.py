"""Passive electrical oscillator networks through their node admittance matrix.

Each node carries the same grounded oscillator admittance `y0(s)` and node pairs are
joined by coupling admittances `y_ij(s)`. The coupling Laplacian `Y(s)` decides
synchronization: an LC network synchronizes iff `Re lambda_2(Y(jw)) > 0` for every
`w > 0`, and a general passive network synchronizes iff the null space of
`y0(jw) I + Y(jw)` stays inside the all-ones direction at every real `w`.
"""

from dataclasses import dataclass, field
from enum import Enum

import networkx as nx
import numpy as np
import scipy.linalg
import scipy.optimize
from loguru import logger

from syncert.analysis.certify import (
    FrequencyCertificate,
    Method,
    SyncVerdict,
    make_certificate,
    pbh_check,
)
from syncert.analysis.errors import (
    ArrayValidationError,
    InconsistentShortError,
    IssueKind,
    OscillatorShortCircuitError,
    ValidationIssue,
)
from syncert.analysis.linalg import (
    NullSpace,
    cluster_eigenvalues,
    cluster_gap,
    mean_removed,
    null_space_report,
    sign_normalize,
    spectral_norm,
    subset_of_ones,
)
from syncert.analysis.network import (
    OscillatorArray,
    build_laplacians,
    laplacian,
    weight_issues,
)
from syncert.analysis.polynomials import Polynomial, RationalFunction, rational_det
from syncert.configs.tolerances import DEFAULT_TOLERANCES, Tolerances

SWEEP_POINTS = 256
POLE_TOL = 1e-9
ROOT_CLUSTER_REL = 1e-4
EIGEN_MAGNITUDE_CAP = 1e10


@dataclass(frozen=True)
class LcNetwork:
    """Grounded LC tanks coupled by conductances `g` and inverse inductances `h`.

    `Y(s) = G + H / s` with `G`, `H` the Laplacians of `g` and `h`.
    """

    c0: float
    l0: float
    g: np.ndarray
    h: np.ndarray

    @property
    def q(self) -> int:
        return self.g.shape[0]

    @property
    def G(self) -> np.ndarray:
        return laplacian(self.g)

    @property
    def H(self) -> np.ndarray:
        return laplacian(self.h)

    @property
    def omega0(self) -> float:
        return float(1.0 / np.sqrt(self.l0 * self.c0))

    def y0(self, s: complex) -> complex:
        return self.c0 * s + 1.0 / (self.l0 * s)

    def equivalent_array(self) -> OscillatorArray:
        return OscillatorArray(self.q, self.omega0, self.g / self.c0, self.h / self.c0)


@dataclass(frozen=True)
class GeneralNetwork:
    """Nodes with oscillator admittance `y0` and symmetric couplings keyed by `(i, j)`, `i < j`."""

    q: int
    y0: RationalFunction
    couplings: dict[tuple[int, int], RationalFunction] = field(default_factory=dict)

    def coupling(self, i: int, j: int) -> RationalFunction:
        key = (min(i, j), max(i, j))
        return self.couplings.get(key, RationalFunction(0.0))

    def admittance_matrix(self) -> list[list[RationalFunction]]:
        """The coupling Laplacian `Y(s)` entrywise."""
        Y = [[RationalFunction(0.0) for _ in range(self.q)] for _ in range(self.q)]
        for (i, j), y in sorted(self.couplings.items()):
            Y[i][j] = Y[i][j] - y
            Y[j][i] = Y[j][i] - y
            Y[i][i] = Y[i][i] + y
            Y[j][j] = Y[j][j] + y
        return Y

    def system_matrix(self) -> list[list[RationalFunction]]:
        """`y0(s) I + Y(s)` entrywise."""
        M = self.admittance_matrix()
        for i in range(self.q):
            M[i][i] = M[i][i] + self.y0
        return M


Network = LcNetwork | GeneralNetwork


@dataclass(frozen=True)
class ReducedSystem:
    """Short-circuit reduction of a matrix with infinite entries.

    Rows of each shorted group are summed at the group's lowest node, the remaining
    rows are kept in place, and equal-voltage rows `e_a - e_b` are appended. `B` is
    the same transformation applied to the identity, with zero equal-voltage rows, so
    the finite eigenvalues are the roots of `det(A - lambda B)`.
    """

    A: np.ndarray
    B: np.ndarray
    groups: list[list[int]]
    short_pairs: list[tuple[int, int]]

    @property
    def q(self) -> int:
        return self.A.shape[1]


@dataclass(frozen=True)
class CandidateCheck:
    omega: float
    passes: bool
    null_basis: np.ndarray
    source: str
    multiplicity: int = 1
    shorted: bool = False
    potentially_defective: bool = False
    marginal: bool = False


@dataclass
class FrequencySweepReport:
    omegas: np.ndarray
    re_lambda2: np.ndarray
    im_lambda2: np.ndarray
    min_singular_value: np.ndarray
    candidates: list[CandidateCheck]
    verdict: bool
    steady_state_frequencies: list[float] = field(default_factory=list)
    passivity_violations: list["PassivityViolation"] = field(default_factory=list)
    agrees_with_pbh: bool | None = None

    @property
    def worst_omega(self) -> float | None:
        if self.re_lambda2.size == 0 or np.all(np.isnan(self.re_lambda2)):
            return None
        return float(self.omegas[int(np.nanargmin(self.re_lambda2))])


class CandidateSource(str, Enum):
    ROOT = "root"
    POLE = "pole"
    OSCILLATOR_ZERO = "oscillator_zero"
    PROBE = "probe"
    SWEEP = "sweep"


@dataclass(frozen=True)
class FrequencyCandidate:
    omega: float
    multiplicity: int
    source: CandidateSource


@dataclass(frozen=True)
class PassivityViolation:
    label: str
    omega: float
    real_part: float


def lc_from_array(c0: float, l0: float, g, h) -> LcNetwork:
    g = np.array(g, dtype=float)
    h = np.array(h, dtype=float)
    issues: list[ValidationIssue] = []
    for name, value in (("c0", c0), ("l0", l0)):
        if not (np.isfinite(value) and value > 0):
            issues.append(ValidationIssue(IssueKind.NON_POSITIVE_OMEGA0, detail=f"{name}={value}"))
    if g.ndim != 2 or g.shape[0] != g.shape[1] or g.shape != h.shape:
        issues.append(
            ValidationIssue(IssueKind.SHAPE_MISMATCH, detail=f"g {g.shape} vs h {h.shape}")
        )
        raise ArrayValidationError(issues)
    issues.extend(weight_issues(g) + weight_issues(h))
    if issues:
        raise ArrayValidationError(issues)
    g.setflags(write=False)
    h.setflags(write=False)
    return LcNetwork(float(c0), float(l0), g, h)


def lc_to_general(net: LcNetwork) -> GeneralNetwork:
    """Encode `y0 = c0 s + 1/(l0 s)` and `y_ij = g_ij + h_ij / s` as rational functions."""
    y0 = RationalFunction.from_coefficients([1.0, 0.0, net.c0 * net.l0], [0.0, net.l0])
    couplings = {}
    for i in range(net.q):
        for j in range(i + 1, net.q):
            if net.g[i, j] != 0 or net.h[i, j] != 0:
                couplings[(i, j)] = RationalFunction.from_coefficients(
                    [net.h[i, j], net.g[i, j]], [0.0, 1.0]
                )
    return GeneralNetwork(net.q, y0, couplings)


def _short_pairs(net: Network, omega: float) -> list[tuple[int, int]]:
    if isinstance(net, LcNetwork):
        if omega != 0:
            return []
        return [(i, j) for i in range(net.q) for j in range(i + 1, net.q) if net.h[i, j] > 0]
    s = 1j * omega
    return [key for key, y in sorted(net.couplings.items()) if y.is_pole(s, POLE_TOL)]


def _finite_coupling_matrix(net: Network, omega: float, shorted: list[tuple[int, int]]):
    """`Y(jw)` with shorted couplings left out."""
    if isinstance(net, LcNetwork):
        if omega == 0:
            keep = np.where(net.h > 0, 0.0, net.g)
            return laplacian(keep).astype(complex)
        return net.G - 1j * net.H / omega
    s = 1j * omega
    w = np.zeros((net.q, net.q), dtype=complex)
    skip = set(shorted)
    for (i, j), y in net.couplings.items():
        if (i, j) not in skip:
            w[i, j] = w[j, i] = y(s)
    return np.diag(w.sum(axis=1)) - w


def _oscillator_admittance(net: Network, omega: float) -> complex:
    if isinstance(net, LcNetwork):
        if omega == 0:
            raise OscillatorShortCircuitError(omega)
        return complex(net.y0(1j * omega))
    s = 1j * omega
    if net.y0.is_pole(s, POLE_TOL):
        raise OscillatorShortCircuitError(omega)
    return complex(net.y0(s))


def eval_Y(
    net: Network, omega: float, *, include_y0: bool = False
) -> np.ndarray | ReducedSystem:
    """Evaluate `Y(jw)`, or `y0(jw) I + Y(jw)` with `include_y0`.

    Returns the short-circuit reduction when some coupling is infinite at `w`.

    Raises:
        OscillatorShortCircuitError: if `include_y0` and `y0` has a pole at `jw`.
    """
    shorted = _short_pairs(net, omega)
    base = _finite_coupling_matrix(net, omega, shorted)
    if include_y0:
        base = base + _oscillator_admittance(net, omega) * np.eye(net.q)
    if shorted:
        return reduce_short_circuits(base, shorted)
    return base


def reduce_short_circuits(base: np.ndarray, short_pairs: list[tuple[int, int]]) -> ReducedSystem:
    """Replace each shorted group's rows by their sum plus equal-voltage rows.

    `base` must already omit the infinite admittances; they cancel in the group sum.
    """
    base = np.asarray(base, dtype=complex)
    q = base.shape[0]
    graph = nx.Graph()
    graph.add_edges_from(short_pairs)
    groups = sorted((sorted(c) for c in nx.connected_components(graph)), key=lambda c: c[0])
    leader = {v: grp for grp in groups for v in grp}

    identity = np.eye(q, dtype=complex)
    rows_a, rows_b = [], []
    for i in range(q):
        group = leader.get(i)
        if group is None:
            rows_a.append(base[i])
            rows_b.append(identity[i])
        elif group[0] == i:
            rows_a.append(base[group].sum(axis=0))
            rows_b.append(identity[group].sum(axis=0))
    for group in groups:
        for a, b in zip(group, group[1:]):
            row = np.zeros(q, dtype=complex)
            row[a], row[b] = 1.0, -1.0
            rows_a.append(row)
            rows_b.append(np.zeros(q, dtype=complex))

    A = np.array(rows_a, dtype=complex).reshape(len(rows_a), q)
    if not np.all(np.isfinite(A)):
        raise InconsistentShortError("An infinite admittance survived the short-circuit reduction.")
    B = np.array(rows_b, dtype=complex).reshape(len(rows_b), q)
    return ReducedSystem(A, B, groups, sorted(tuple(p) for p in short_pairs))


def finite_eigen(Yjw: np.ndarray | ReducedSystem) -> tuple[np.ndarray, np.ndarray]:
    """Eigenvalues and right eigenvectors, dropping the infinite ones of a reduced system."""
    if isinstance(Yjw, ReducedSystem):
        values, vectors = scipy.linalg.eig(Yjw.A, Yjw.B)
        cap = EIGEN_MAGNITUDE_CAP * max(1.0, spectral_norm(Yjw.A))
        finite = np.isfinite(values) & (np.abs(values) <= cap)
        return values[finite], vectors[:, finite]
    values, vectors = scipy.linalg.eig(np.asarray(Yjw, dtype=complex))
    return values, vectors


def ordered_eigen(Yjw: np.ndarray | ReducedSystem) -> tuple[np.ndarray, np.ndarray]:
    """Finite eigenvalues with the all-ones eigenvalue first, the rest by (Re, Im)."""
    values, vectors = finite_eigen(Yjw)
    if values.size == 0:
        return values, vectors
    spread = [
        np.linalg.norm(mean_removed(vectors[:, k])) / max(np.linalg.norm(vectors[:, k]), 1e-300)
        for k in range(values.size)
    ]
    first = int(np.argmin(spread))
    rest = sorted(
        (k for k in range(values.size) if k != first),
        key=lambda k: (values[k].real, values[k].imag),
    )
    order = [first, *rest]
    return values[order], vectors[:, order]


def lambda2(Yjw: np.ndarray | ReducedSystem) -> complex | None:
    values, _ = ordered_eigen(Yjw)
    return complex(values[1]) if values.size >= 2 else None


def lambda2_real(Yjw: np.ndarray | ReducedSystem) -> float:
    value = lambda2(Yjw)
    if value is None:
        raise ValueError("lambda_2 needs at least two finite eigenvalues.")
    return float(value.real)


def min_singular_value(M: np.ndarray | ReducedSystem) -> float:
    A = M.A if isinstance(M, ReducedSystem) else M
    return float(scipy.linalg.svdvals(A)[-1]) if A.size else 0.0


def null_space_of(M: np.ndarray | ReducedSystem, floor: float, tolerances: Tolerances) -> NullSpace:
    A = M.A if isinstance(M, ReducedSystem) else M
    return null_space_report(A, floor, tolerances.marginal_factor)


def lc_eigenvalue_bounds(net: LcNetwork, omega: float) -> tuple[float, float]:
    """Smallest real part and largest imaginary part over the eigenvalues of `Y(jw)`."""
    values, _ = finite_eigen(eval_Y(net, omega))
    return float(values.real.min()), float(values.imag.max())


def default_probes(net: LcNetwork, tolerances: Tolerances = DEFAULT_TOLERANCES) -> list[float]:
    """`{w0/2, w0, 2 w0}` plus `sqrt(lambda)` for each nonzero eigenvalue of `H`."""
    w0 = net.omega0
    probes = {0.5 * w0, w0, 2.0 * w0}
    H = net.H
    gap = cluster_gap(H, tolerances.cluster_rel)
    for cluster in cluster_eigenvalues(np.linalg.eigvalsh(H), gap):
        if cluster.value > gap:
            probes.add(float(np.sqrt(cluster.value)))
    return sorted(probes)


def _phase_aligned_real(v: np.ndarray) -> np.ndarray:
    return np.real(sign_normalize(v))


def lc_sync_check(
    net: LcNetwork,
    probe_omegas: list[float] | None = None,
    tolerances: Tolerances = DEFAULT_TOLERANCES,
) -> tuple[SyncVerdict, FrequencySweepReport]:
    """Decide synchronization of an LC network from `Re lambda_2(Y(jw))` at a few probes.

    The sign of `Re lambda_2` does not depend on `w > 0` for LC networks, so a finite
    probe set decides the universally quantified condition. The verdict is compared
    with the PBH test on `(G / c0, H / c0)`.
    """
    probes = sorted(probe_omegas) if probe_omegas else default_probes(net, tolerances)
    if any(w <= 0 for w in probes):
        raise ValueError(f"Probe frequencies must be positive: {probes}")
    L = build_laplacians(net.equivalent_array())
    reference = pbh_check(L, tolerances)

    re2, im2, sigma, checks = [], [], [], []
    failing: tuple[float, np.ndarray] | None = None
    for omega in probes:
        Y = eval_Y(net, omega)
        sigma.append(min_singular_value(eval_Y(net, omega, include_y0=True)))
        if net.q == 1:
            re2.append(np.nan)
            im2.append(np.nan)
            empty = np.zeros((1, 0))
            checks.append(CandidateCheck(omega, True, empty, CandidateSource.PROBE.value))
            continue
        values, vectors = ordered_eigen(Y)
        threshold = tolerances.eig_rel * max(1.0, spectral_norm(Y))
        passes = bool(values[1].real > threshold)
        re2.append(float(values[1].real))
        im2.append(float(values[1].imag))
        basis = np.zeros((net.q, 0)) if passes else vectors[:, 1:2]
        checks.append(CandidateCheck(omega, passes, basis, CandidateSource.PROBE.value))
        if not passes and failing is None:
            failing = (omega, vectors[:, 1])

    synchronizes = failing is None
    certificate = None
    if failing is not None:
        certificate = make_certificate(L, _phase_aligned_real(failing[1]))
        if not certificate.is_valid(L, tolerances) and reference.certificate is not None:
            logger.warning("Eigenvector of Y(jw) did not yield a valid mode; using the PBH mode")
            certificate = reference.certificate

    agrees = synchronizes == reference.synchronizes
    if not agrees:
        logger.error(
            f"LC probe verdict ({synchronizes}) disagrees with PBH ({reference.synchronizes})"
        )
    verdict = SyncVerdict(synchronizes, Method.LC_SWEEP, certificate)
    report = FrequencySweepReport(
        omegas=np.asarray(probes, dtype=float),
        re_lambda2=np.asarray(re2, dtype=float),
        im_lambda2=np.asarray(im2, dtype=float),
        min_singular_value=np.asarray(sigma, dtype=float),
        candidates=checks,
        verdict=synchronizes,
        steady_state_frequencies=[net.omega0],
        agrees_with_pbh=agrees,
    )
    return verdict, report


def _axis_frequencies(roots: np.ndarray, tol: float) -> list[tuple[float, int]]:
    """Cluster roots and keep clusters touching the imaginary axis, as `(w, multiplicity)`."""
    upper = [r for r in roots if r.imag >= -tol * (1 + abs(r))]
    upper.sort(key=lambda r: (r.imag, r.real))
    clusters: list[list[complex]] = []
    for r in upper:
        for cluster in clusters:
            centroid = np.mean(cluster)
            if abs(r - centroid) <= ROOT_CLUSTER_REL * (1 + abs(centroid)):
                cluster.append(r)
                break
        else:
            clusters.append([r])

    found: list[tuple[float, int]] = []
    for cluster in clusters:
        centroid = complex(np.mean(cluster))
        members = [centroid, *cluster]
        on_axis = [m for m in members if abs(m.real) <= tol * (1 + abs(m))]
        if on_axis:
            found.append((abs(on_axis[0].imag), len(cluster)))
    return found


def _merge_candidates(candidates: list[FrequencyCandidate]) -> list[FrequencyCandidate]:
    merged: list[FrequencyCandidate] = []
    for cand in sorted(candidates, key=lambda c: c.omega):
        if merged and abs(cand.omega - merged[-1].omega) <= 1e-9 * (1 + cand.omega):
            prev = merged[-1]
            # Shorts and oscillator zeros are exact; keep their label.
            keep = prev if prev.source != CandidateSource.ROOT else cand
            merged[-1] = FrequencyCandidate(
                keep.omega, max(prev.multiplicity, cand.multiplicity), keep.source
            )
        else:
            merged.append(cand)
    return merged


def candidate_frequencies(
    net: GeneralNetwork, tolerances: Tolerances = DEFAULT_TOLERANCES
) -> list[FrequencyCandidate]:
    """Frequencies `w >= 0` at which the null space of `y0 I + Y` may be nontrivial.

    These are the imaginary-axis roots of `n(s)` in `n/d = det(y0 I + Y)`, the
    imaginary-axis poles of the couplings, and the imaginary-axis zeros of `y0`.
    """
    det = rational_det(net.system_matrix(), tol=tolerances.gcd, degree_cap=tolerances.degree_cap)
    found = [
        FrequencyCandidate(w, m, CandidateSource.ROOT)
        for w, m in _axis_frequencies(det.num.roots_companion(), tolerances.root)
    ]
    for y in net.couplings.values():
        found.extend(
            FrequencyCandidate(w, m, CandidateSource.POLE)
            for w, m in _axis_frequencies(y.poles(), tolerances.root)
        )
    found.extend(
        FrequencyCandidate(w, m, CandidateSource.OSCILLATOR_ZERO)
        for w, m in _axis_frequencies(net.y0.num.roots_companion(), tolerances.root)
    )
    merged = _merge_candidates(found)
    logger.info(f"{len(merged)} candidate frequencies from a degree-{det.num.degree()} numerator")
    return merged


def _polish(net: GeneralNetwork, omega: float) -> float:
    """Refine a numerically located frequency by minimizing the smallest singular value."""
    if omega == 0:
        return omega
    delta = 1e-6 * (1 + omega)

    def objective(w: float) -> float:
        try:
            return min_singular_value(eval_Y(net, w, include_y0=True))
        except OscillatorShortCircuitError:
            return 0.0

    try:
        start = objective(omega)
        result = scipy.optimize.minimize_scalar(
            objective,
            bounds=(max(omega - delta, 0.0), omega + delta),
            method="bounded",
            options={"xatol": 1e-14 * max(1.0, omega)},
        )
    except (OscillatorShortCircuitError, InconsistentShortError, ValueError):
        return omega
    return float(result.x) if result.fun < start else omega


def check_frequency(
    net: GeneralNetwork,
    candidate: FrequencyCandidate,
    tolerances: Tolerances = DEFAULT_TOLERANCES,
) -> CandidateCheck:
    omega = candidate.omega
    if candidate.source == CandidateSource.ROOT:
        omega = _polish(net, omega)
    try:
        M = eval_Y(net, omega, include_y0=True)
    except OscillatorShortCircuitError:
        # Every node is grounded, so only the zero voltage vector survives.
        return CandidateCheck(
            omega, True, np.zeros((net.q, 0)), candidate.source.value, candidate.multiplicity
        )

    null = null_space_of(M, tolerances.freq_rank, tolerances)
    passes = subset_of_ones(null.basis, tolerances.subset)
    defective = (
        candidate.source != CandidateSource.POLE and 0 < null.dim < candidate.multiplicity
    )
    if defective:
        logger.warning(
            f"Candidate w={omega:.9g} has root multiplicity {candidate.multiplicity} "
            f"but null space dimension {null.dim}: potentially defective, verdict unverified"
        )
    return CandidateCheck(
        omega=omega,
        passes=passes,
        null_basis=null.basis,
        source=candidate.source.value,
        multiplicity=candidate.multiplicity,
        shorted=isinstance(M, ReducedSystem),
        potentially_defective=defective,
        marginal=null.marginal,
    )


def sweep_grid(net: GeneralNetwork, candidates: list[FrequencyCandidate]) -> np.ndarray:
    scales = [c.omega for c in candidates if c.omega > 0]
    for poly in [net.y0.num, net.y0.den] + [y.den for y in net.couplings.values()]:
        scales.extend(abs(r) for r in poly.roots_companion() if abs(r) > 0)
    lo = 0.1 * min(scales) if scales else 1e-2
    hi = 10.0 * max(scales) if scales else 1e2
    return np.geomspace(lo, hi, SWEEP_POINTS)


def sweep(
    net: Network,
    omegas: np.ndarray,
    tolerances: Tolerances = DEFAULT_TOLERANCES,
) -> FrequencySweepReport:
    """Tabulate `lambda_2(Y(jw))` and the smallest singular value of `y0 I + Y` on a grid."""
    re2, im2, sigma = [], [], []
    kept = []
    for omega in np.asarray(omegas, dtype=float):
        try:
            sigma.append(min_singular_value(eval_Y(net, omega, include_y0=True)))
        except OscillatorShortCircuitError:
            logger.info(f"Skipping w={omega:.6g}: oscillator admittance is infinite")
            continue
        kept.append(omega)
        value = lambda2(eval_Y(net, omega)) if net.q > 1 else None
        re2.append(np.nan if value is None else value.real)
        im2.append(np.nan if value is None else value.imag)
    return FrequencySweepReport(
        omegas=np.asarray(kept, dtype=float),
        re_lambda2=np.asarray(re2, dtype=float),
        im_lambda2=np.asarray(im2, dtype=float),
        min_singular_value=np.asarray(sigma, dtype=float),
        candidates=[],
        verdict=True,
    )


def steady_state_frequencies(
    net: GeneralNetwork, tolerances: Tolerances = DEFAULT_TOLERANCES
) -> list[float]:
    """Frequencies `w >= 0` with `y0(jw) = 0`.

    A synchronizing network settles to `z_i(t) = sum_k Re(alpha_k exp(j w_k t))`,
    identical at every node, over these frequencies.
    """
    return sorted(w for w, _ in _axis_frequencies(net.y0.num.roots_companion(), tolerances.root))


def check_passivity(
    net: GeneralNetwork,
    omegas: np.ndarray,
    tolerances: Tolerances = DEFAULT_TOLERANCES,
) -> list[PassivityViolation]:
    """Points of the grid where some admittance has a negative real part."""
    labelled = [("y0", net.y0)] + [
        (f"y{i + 1},{j + 1}", y) for (i, j), y in sorted(net.couplings.items())
    ]
    violations = []
    for label, y in labelled:
        for omega in omegas:
            s = 1j * omega
            if y.is_pole(s, POLE_TOL):
                continue
            value = complex(y(s))
            if value.real < -tolerances.passivity * max(1.0, abs(value)):
                violations.append(PassivityViolation(label, float(omega), value.real))
    if violations:
        logger.warning(f"{len(violations)} passivity violations; verdicts assume passivity")
    return violations


def general_sync_check(
    net: GeneralNetwork, tolerances: Tolerances = DEFAULT_TOLERANCES
) -> tuple[SyncVerdict, FrequencySweepReport]:
    """Check `null(y0(jw) I + Y(jw))` inside span(1) at every candidate frequency.

    A confirmation sweep over log-spaced frequencies verifies that the null space is
    trivial between candidates.
    """
    candidates = candidate_frequencies(net, tolerances)
    grid = sweep_grid(net, candidates)
    violations = check_passivity(net, grid, tolerances)

    checks = [check_frequency(net, c, tolerances) for c in candidates]
    report = sweep(net, grid, tolerances)
    for omega in report.omegas:
        M = eval_Y(net, omega, include_y0=True)
        null = null_space_of(M, tolerances.rank_floor, tolerances)
        if not subset_of_ones(null.basis, tolerances.subset):
            logger.error(f"Confirmation sweep found a violation at w={omega:.9g} off candidates")
            checks.append(
                CandidateCheck(omega, False, null.basis, CandidateSource.SWEEP.value, null.dim)
            )
    checks.sort(key=lambda c: c.omega)

    failing = next((c for c in checks if not c.passes), None)
    certificate = None
    if failing is not None:
        xi = max(
            (failing.null_basis[:, k] for k in range(failing.null_basis.shape[1])),
            key=lambda v: np.linalg.norm(mean_removed(v)),
        )
        xi = mean_removed(xi)
        certificate = FrequencyCertificate(
            failing.omega,
            sign_normalize(xi / np.linalg.norm(xi)),
            failing.marginal,
            failing.shorted,
        )

    report.candidates = checks
    report.verdict = failing is None
    report.steady_state_frequencies = steady_state_frequencies(net, tolerances)
    report.passivity_violations = violations
    return SyncVerdict(failing is None, Method.ADMITTANCE, certificate), report


def random_lc_network(
    rng: np.random.Generator,
    q: int,
    density: float = 0.5,
    *,
    integer_weights: bool = True,
) -> LcNetwork:
    """Random LC network; `c0 in {1, 2}`, `l0` uniform in [0.5, 2]."""

    def draw() -> np.ndarray:
        mask = np.triu(rng.random((q, q)) < density, k=1)
        if integer_weights:
            values = rng.integers(1, 3, size=(q, q)).astype(float)
        else:
            values = rng.uniform(0.5, 2.0, size=(q, q))
        w = np.where(mask, values, 0.0)
        return w + w.T

    c0 = float(rng.integers(1, 3))
    l0 = float(rng.uniform(0.5, 2.0))
    return lc_from_array(c0, l0, draw(), draw())


def random_general_network(
    rng: np.random.Generator, q: int, density: float = 0.5, max_degree: int = 4
) -> GeneralNetwork:
    """Random network whose admittances are ratios of stable real-rooted polynomials."""

    def admittance() -> RationalFunction:
        deg_num = int(rng.integers(0, max_degree + 1))
        deg_den = int(rng.integers(0, max_degree + 1))
        num = Polynomial.fromroots(-rng.uniform(0.2, 3.0, deg_num)) * rng.uniform(0.5, 2.0)
        den = Polynomial.fromroots(-rng.uniform(0.2, 3.0, deg_den))
        return RationalFunction.from_coefficients(num.coef, den.coef)

    couplings = {
        (i, j): admittance()
        for i in range(q)
        for j in range(i + 1, q)
        if rng.random() < density
    }
    return GeneralNetwork(q, admittance(), couplings)
