"""Sufficient conditions for synchronization over the spring-only components.

Each component of the spring-only graph is an undamped subsystem. The array
synchronizes when (1) every subsystem is observable from each of its oscillators,
(2) the natural frequency is the only frequency the subsystems share, and
(3) the springs and dampers together leave only the all-ones direction unconstrained.
A failed battery is inconclusive; it never proves non-synchronization.
"""

from dataclasses import dataclass
from enum import Enum

import numpy as np
from loguru import logger

from syncert.analysis.certify import normalized_pair, observability_matrix
from syncert.analysis.linalg import (
    cluster_eigenvalues,
    cluster_gap,
    intersect_nullspaces,
    null_space_report,
    spectral_norm,
    subset_of_ones,
)
from syncert.analysis.network import (
    ComponentDecomposition,
    OscillatorArray,
    build_laplacians,
    build_r_delta,
    derive_graphs,
)
from syncert.configs.tolerances import DEFAULT_TOLERANCES, Tolerances

INCONCLUSIVE_MESSAGE = "sufficient test inconclusive"


class ConditionStatus(str, Enum):
    PASS = "pass"
    FAIL = "fail"
    INDETERMINATE = "indeterminate"


@dataclass(frozen=True)
class BlockReport:
    vertices: list[int]
    frequencies: list[float]
    observable_outputs: list[bool]
    zero_entry_free: bool | None
    status: ConditionStatus


@dataclass(frozen=True)
class SufficientReport:
    blocks: list[BlockReport]
    cond2_common_frequencies: list[float]
    cond2_common_frequencies_hold: bool
    cond3_joint_nullspace: bool
    union_graph_connected: bool

    @property
    def cond1_observability(self) -> list[list[bool]]:
        return [b.observable_outputs for b in self.blocks]

    @property
    def cond1_zero_entry(self) -> list[bool | None]:
        return [b.zero_entry_free for b in self.blocks]

    @property
    def cond1(self) -> bool:
        return all(b.status == ConditionStatus.PASS for b in self.blocks)

    @property
    def overall(self) -> bool:
        return self.cond1 and self.cond2_common_frequencies_hold and self.cond3_joint_nullspace

    @property
    def summary(self) -> str:
        return "synchronizes" if self.overall else INCONCLUSIVE_MESSAGE


def block_clusters(block: np.ndarray, tolerances: Tolerances = DEFAULT_TOLERANCES):
    return cluster_eigenvalues(
        np.linalg.eigvalsh(block), cluster_gap(block, tolerances.cluster_rel)
    )


def characteristic_frequencies(
    block: np.ndarray, omega0: float, tolerances: Tolerances = DEFAULT_TOLERANCES
) -> list[float]:
    """Sorted `sqrt(omega0^2 + lambda)` over the distinct eigenvalues of a block."""
    gap = cluster_gap(block, tolerances.cluster_rel)
    # The zero eigenvalue of a Laplacian block maps exactly onto omega0.
    values = [0.0 if abs(c.value) <= gap else c.value for c in block_clusters(block, tolerances)]
    return sorted(float(np.sqrt(omega0**2 + max(v, 0.0))) for v in values)


def single_output_observable(
    block: np.ndarray, k: int, tolerances: Tolerances = DEFAULT_TOLERANCES
) -> bool:
    """Observability of the undamped block from its `k`-th (0-based, local) position.

    The `omega0^2 I` shift leaves observability unchanged, so the pair `(e_k^T, R_l)`
    is tested directly.
    """
    n = block.shape[0]
    if not 0 <= k < n:
        raise IndexError(f"Output index {k} outside block of size {n}.")
    e_k = np.zeros((1, n))
    e_k[0, k] = 1.0
    _, Rn = normalized_pair(e_k, np.asarray(block, dtype=float))
    null = null_space_report(observability_matrix(e_k, Rn), tolerances.rank_floor)
    return null.dim == 0


def zero_entry_eigenvector_check(
    block: np.ndarray, tolerances: Tolerances = DEFAULT_TOLERANCES
) -> bool:
    """True iff no eigenvector of the computed orthonormal eigenbasis has a zero entry."""
    _, vectors = np.linalg.eigh(np.asarray(block, dtype=float))
    for k in range(vectors.shape[1]):
        v = vectors[:, k]
        if np.min(np.abs(v)) <= tolerances.zero_entry * np.linalg.norm(v):
            return False
    return True


def has_repeated_spectrum(block: np.ndarray, tolerances: Tolerances = DEFAULT_TOLERANCES) -> bool:
    return any(c.multiplicity > 1 for c in block_clusters(block, tolerances))


def evaluate_block(
    block: np.ndarray,
    vertices: list[int],
    omega0: float,
    tolerances: Tolerances = DEFAULT_TOLERANCES,
) -> BlockReport:
    outputs = [single_output_observable(block, k, tolerances) for k in range(block.shape[0])]
    p_form = all(outputs)
    repeated = has_repeated_spectrum(block, tolerances)
    # Under a repeated eigenvalue the zero-entry form depends on the basis choice.
    m_form = None if repeated else zero_entry_eigenvector_check(block, tolerances)

    if m_form is None:
        status = ConditionStatus.INDETERMINATE
    elif p_form and m_form:
        status = ConditionStatus.PASS
    elif not p_form and not m_form:
        status = ConditionStatus.FAIL
    else:
        logger.error(
            f"Observability and zero-entry forms disagree on a simple spectrum "
            f"for vertices {[v + 1 for v in vertices]}"
        )
        status = ConditionStatus.INDETERMINATE

    if status == ConditionStatus.INDETERMINATE:
        logger.warning(f"Component {[v + 1 for v in vertices]} is indeterminate under condition 1")
    return BlockReport(
        vertices=vertices,
        frequencies=characteristic_frequencies(block, omega0, tolerances),
        observable_outputs=outputs,
        zero_entry_free=m_form,
        status=status,
    )


def common_eigenvalues(
    blocks: list[np.ndarray], gap: float, tolerances: Tolerances = DEFAULT_TOLERANCES
) -> list[float]:
    """Eigenvalues shared by every block, matched within `gap`."""
    if not blocks:
        return []
    common = [c.value for c in block_clusters(blocks[0], tolerances)]
    for block in blocks[1:]:
        values = np.linalg.eigvalsh(block)
        common = [v for v in common if np.min(np.abs(values - v)) <= gap]
    return common


def common_frequencies(
    decomposition: ComponentDecomposition,
    omega0: float,
    r_delta: np.ndarray,
    tolerances: Tolerances = DEFAULT_TOLERANCES,
) -> tuple[list[float], bool]:
    gap = cluster_gap(r_delta, tolerances.cluster_rel)
    shared = common_eigenvalues(decomposition.blocks, gap, tolerances)
    holds = len(shared) == 1 and abs(shared[0]) <= gap
    shared = [0.0 if abs(v) <= gap else v for v in shared]
    return [float(np.sqrt(omega0**2 + max(v, 0.0))) for v in shared], holds


def sufficient_check(
    array: OscillatorArray, tolerances: Tolerances = DEFAULT_TOLERANCES
) -> SufficientReport:
    r_delta, decomposition = build_r_delta(array)
    blocks = [
        evaluate_block(block, comp, array.omega0, tolerances)
        for block, comp in zip(decomposition.blocks, decomposition.components)
    ]
    frequencies, cond2 = common_frequencies(decomposition, array.omega0, r_delta, tolerances)

    L = build_laplacians(array)
    joint = intersect_nullspaces(L.R, L.D, tolerances.rank_floor)
    cond3 = subset_of_ones(joint, tolerances.subset)
    _, _, gamma_sigma, _ = derive_graphs(array)
    sigma_connected = gamma_sigma.is_connected()
    if cond3 != sigma_connected:
        logger.error(
            f"Joint null space test ({cond3}) disagrees with union graph connectivity "
            f"({sigma_connected}); |R|={spectral_norm(L.R):.3e}, |D|={spectral_norm(L.D):.3e}"
        )

    report = SufficientReport(
        blocks=blocks,
        cond2_common_frequencies=frequencies,
        cond2_common_frequencies_hold=cond2,
        cond3_joint_nullspace=cond3,
        union_graph_connected=sigma_connected,
    )
    logger.info(
        f"Sufficient conditions: cond1={report.cond1}, cond2={cond2}, cond3={cond3}"
    )
    return report
