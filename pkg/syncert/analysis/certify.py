"""Exact synchronization decisions with failure certificates.

Two equivalent decision procedures are provided. `pbh_check` tests, for every distinct
eigenvalue of the spring Laplacian, whether the joint null space of `R - lambda I` and
`D` leaves the all-ones direction. `observability_check` computes the unobservable
subspace of the pair `(D, R)` directly. A negative verdict always carries a concrete
mode `(lambda*, xi*, omega*)` that never synchronizes.
"""

from dataclasses import dataclass, field
from enum import Enum

import numpy as np
from loguru import logger

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
from syncert.analysis.network import LaplacianPair
from syncert.configs.tolerances import DEFAULT_TOLERANCES, Tolerances

OBSERVABILITY_WARN_SIZE = 50


class Method(str, Enum):
    PBH = "pbh"
    OBSERVABILITY = "observability"
    SUFFICIENT = "sufficient"
    LC_SWEEP = "lc_sweep"
    ADMITTANCE = "admittance"


@dataclass(frozen=True)
class FailureCertificate:
    """A non-synchronizing mode `z(t) = Re(exp(j omega* t) xi*)`."""

    lambda_star: float
    xi_star: np.ndarray
    omega_star: float
    marginal: bool = False

    def residuals(self, L: LaplacianPair) -> tuple[float, float]:
        eig = np.linalg.norm(L.R @ self.xi_star - self.lambda_star * self.xi_star)
        damp = np.linalg.norm(L.D @ self.xi_star)
        return float(eig), float(damp)

    def is_valid(self, L: LaplacianPair, tolerances: Tolerances = DEFAULT_TOLERANCES) -> bool:
        tau = L.residual_tolerance(tolerances)
        eig, damp = self.residuals(L)
        spread = np.linalg.norm(mean_removed(self.xi_star))
        return eig <= tau and damp <= tau and spread >= tolerances.subset


@dataclass(frozen=True)
class ClusterCheck:
    value: float
    multiplicity: int
    null_dim: int
    passes: bool


@dataclass(frozen=True)
class SyncVerdict:
    synchronizes: bool
    method: Method
    certificate: "FailureCertificate | FrequencyCertificate | None" = None
    marginal: bool = False
    clusters: list[ClusterCheck] = field(default_factory=list)

    def __post_init__(self):
        if self.synchronizes == (self.certificate is not None):
            raise ValueError("A certificate is present exactly when synchronization fails.")


def make_certificate(
    L: LaplacianPair, direction: np.ndarray, *, marginal: bool = False
) -> FailureCertificate:
    """Turn a real vector of the violating null space into a normalized certificate."""
    xi = mean_removed(np.real(direction))
    xi = sign_normalize(xi / np.linalg.norm(xi))
    lam = max(float(xi @ L.R @ xi), 0.0)
    return FailureCertificate(lam, xi, float(np.sqrt(L.omega0**2 + lam)), marginal)


def pick_direction(null: NullSpace) -> np.ndarray:
    """Basis vector with the largest component orthogonal to the all-ones direction."""
    spreads = [np.linalg.norm(mean_removed(null.basis[:, k])) for k in range(null.dim)]
    return null.basis[:, int(np.argmax(spreads))]


def pbh_check(L: LaplacianPair, tolerances: Tolerances = DEFAULT_TOLERANCES) -> SyncVerdict:
    if L.q == 1:
        return SyncVerdict(True, Method.PBH)

    values = np.linalg.eigvalsh(L.R)
    clusters = cluster_eigenvalues(values, cluster_gap(L.R, tolerances.cluster_rel))
    logger.info(f"PBH test over {len(clusters)} distinct eigenvalue(s) of R")

    checks: list[ClusterCheck] = []
    marginal = False
    identity = np.eye(L.q)
    for cluster in clusters:
        null = null_space_report(
            np.vstack([L.R - cluster.value * identity, L.D]),
            tolerances.rank_floor,
            tolerances.marginal_factor,
        )
        marginal |= null.marginal
        passes = subset_of_ones(null.basis, tolerances.subset)
        checks.append(ClusterCheck(cluster.value, cluster.multiplicity, null.dim, passes))
        if not passes:
            certificate = make_certificate(L, pick_direction(null), marginal=null.marginal)
            if null.marginal:
                logger.warning(f"Certificate at lambda={certificate.lambda_star:.6g} is marginal")
            return SyncVerdict(False, Method.PBH, certificate, marginal, checks)
    return SyncVerdict(True, Method.PBH, None, marginal, checks)


def normalized_pair(D: np.ndarray, R: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Rescale `D` and map the spectrum of `R` into [-1, 1].

    Neither operation changes the unobservable subspace.
    """
    d_norm = spectral_norm(D)
    Dn = D / d_norm if d_norm > 0 else D
    q = R.shape[0]
    if q == 0:
        return Dn, R
    values = np.linalg.eigvalsh(R)
    center = 0.5 * (values[-1] + values[0])
    half_range = 0.5 * (values[-1] - values[0])
    Rn = R - center * np.eye(q)
    if half_range > 0:
        Rn = Rn / half_range
    return Dn, Rn


def observability_matrix(D: np.ndarray, R: np.ndarray) -> np.ndarray:
    """Stack `[D; DR; ...; DR^(q-1)]` where `q` is the order of `R`."""
    rows = [D]
    power = D
    for _ in range(1, R.shape[0]):
        power = power @ R
        rows.append(power)
    return np.vstack(rows)


def unobservable_subspace(
    D: np.ndarray, R: np.ndarray, tolerances: Tolerances = DEFAULT_TOLERANCES
) -> NullSpace:
    q = D.shape[0]
    if q > OBSERVABILITY_WARN_SIZE:
        logger.warning(
            f"Observability stack for q={q} may be ill-conditioned; the PBH test is authoritative"
        )
    Dn, Rn = normalized_pair(np.asarray(D, dtype=float), np.asarray(R, dtype=float))
    return null_space_report(
        observability_matrix(Dn, Rn), tolerances.rank_floor, tolerances.marginal_factor
    )


def observability_check(
    L: LaplacianPair, tolerances: Tolerances = DEFAULT_TOLERANCES
) -> SyncVerdict:
    if L.q == 1:
        return SyncVerdict(True, Method.OBSERVABILITY)

    unobs = unobservable_subspace(L.D, L.R, tolerances)
    if subset_of_ones(unobs.basis, tolerances.subset):
        return SyncVerdict(True, Method.OBSERVABILITY, marginal=unobs.marginal)
    certificate = certificate_from_invariant_subspace(L, unobs)
    return SyncVerdict(False, Method.OBSERVABILITY, certificate, unobs.marginal)


def certificate_from_invariant_subspace(L: LaplacianPair, unobs: NullSpace) -> FailureCertificate:
    """Extract an eigenvector of `R` from the R-invariant unobservable subspace.

    The subspace lies in null D, so any eigenvector of `R` restricted to its part
    orthogonal to the all-ones direction is a valid certificate.
    """
    ones = np.ones(L.q) / np.sqrt(L.q)
    spread = unobs.basis - np.outer(ones, ones @ unobs.basis)
    u, s, _ = np.linalg.svd(spread, full_matrices=False)
    Q = u[:, s > s[0] * 1e-8]
    values, vectors = np.linalg.eigh(Q.T @ L.R @ Q)
    return make_certificate(L, Q @ vectors[:, 0], marginal=unobs.marginal)


def certificate_initial_state(certificate: FailureCertificate) -> np.ndarray:
    """Initial state `[xi; 0]` seeding the never-synchronizing cosine mode.

    `xi` is the certificate direction scaled to unit max-norm.
    """
    xi = certificate.xi_star / np.max(np.abs(certificate.xi_star))
    return np.concatenate([xi, np.zeros_like(xi)])


@dataclass(frozen=True)
class FrequencyCertificate:
    """Node-voltage phasor `xi` sustained at frequency `omega` without synchronizing."""

    omega: float
    xi: np.ndarray
    marginal: bool = False
    shorted: bool = False
