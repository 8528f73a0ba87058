"""Null spaces, the span-of-ones test and eigenvalue clustering."""

from dataclasses import dataclass

import numpy as np
import scipy.linalg

EPS = float(np.finfo(float).eps)


@dataclass(frozen=True)
class NullSpace:
    """Orthonormal null-space basis (as columns) together with the cut that produced it."""

    basis: np.ndarray
    singular_values: np.ndarray
    cut: float
    marginal: bool

    @property
    def dim(self) -> int:
        return self.basis.shape[1]


def rank_cut(shape: tuple[int, int], sigma_max: float, floor: float) -> float:
    """Singular values below the returned value are treated as zero."""
    return max(max(shape) * EPS, floor) * sigma_max


def null_space_report(M: np.ndarray, floor: float = 1e-10, marginal_factor: float = 100.0):
    """Compute the null space of `M` by singular value decomposition.

    The cut is `max(max(rows, cols) * eps, floor) * sigma_max`. A zero matrix has the
    whole space as its null space. The result is flagged marginal when a singular value
    falls within `marginal_factor` of the cut on either side.
    """
    M = np.atleast_2d(np.asarray(M))
    n_cols = M.shape[1]
    if M.shape[0] == 0 or n_cols == 0:
        return NullSpace(np.eye(n_cols, dtype=M.dtype), np.zeros(0), 0.0, False)
    if not np.all(np.isfinite(M)):
        raise ValueError("Null space requested for a matrix with non-finite entries.")

    _, s, vh = scipy.linalg.svd(M, full_matrices=True)
    sigma_max = float(s[0]) if s.size else 0.0
    if sigma_max == 0.0:
        return NullSpace(np.eye(n_cols, dtype=vh.dtype), s, 0.0, False)

    cut = rank_cut(M.shape, sigma_max, floor)
    rank = int(np.sum(s >= cut))
    basis = vh[rank:].conj().T
    near = (s > cut / marginal_factor) & (s < cut * marginal_factor)
    return NullSpace(basis, s, cut, bool(np.any(near)))


def nullspace(M: np.ndarray, floor: float = 1e-10) -> np.ndarray:
    return null_space_report(M, floor).basis


def intersect_nullspaces(A: np.ndarray, B: np.ndarray, floor: float = 1e-10) -> np.ndarray:
    """Basis of null A ∩ null B, computed as the null space of the stacked matrix."""
    A = np.atleast_2d(A)
    B = np.atleast_2d(B)
    if A.shape[1] != B.shape[1]:
        raise ValueError(f"Column dimensions differ: {A.shape[1]} != {B.shape[1]}.")
    return nullspace(np.vstack([A, B]), floor)


def mean_removed(v: np.ndarray) -> np.ndarray:
    return v - np.mean(v) * np.ones_like(v)


def subset_of_ones(basis: np.ndarray, tol: float = 1e-6) -> bool:
    """True iff every basis column is parallel to the all-ones vector."""
    basis = np.asarray(basis)
    if basis.ndim == 1:
        basis = basis[:, None]
    return all(np.linalg.norm(mean_removed(basis[:, k])) <= tol for k in range(basis.shape[1]))


@dataclass(frozen=True)
class EigenCluster:
    value: float
    indices: tuple[int, ...]

    @property
    def multiplicity(self) -> int:
        return len(self.indices)


def cluster_gap(M: np.ndarray, rel: float) -> float:
    return rel * max(1.0, spectral_norm(M))


def cluster_eigenvalues(values: np.ndarray, gap: float) -> list[EigenCluster]:
    """Group ascending eigenvalues whose consecutive spacing is at most `gap`."""
    values = np.asarray(values, dtype=float)
    order = np.argsort(values, kind="stable")
    clusters: list[list[int]] = []
    for idx in order:
        if clusters and values[idx] - values[clusters[-1][-1]] <= gap:
            clusters[-1].append(int(idx))
        else:
            clusters.append([int(idx)])
    return [EigenCluster(float(np.mean(values[c])), tuple(c)) for c in clusters]


def spectral_norm(M: np.ndarray) -> float:
    M = np.atleast_2d(M)
    if M.size == 0:
        return 0.0
    return float(np.linalg.norm(M, 2))


def psd_tolerance(M: np.ndarray) -> float:
    """Scale-aware PSD tolerance `q * eps * |M|_2`."""
    return M.shape[0] * EPS * spectral_norm(M)


def sign_normalize(v: np.ndarray) -> np.ndarray:
    """Flip `v` so that its first largest-magnitude entry is positive.

    Entries within a relative 1e-9 of the largest magnitude count as ties.
    """
    if v.size == 0:
        return v
    mag = np.abs(v)
    k = int(np.flatnonzero(mag >= mag.max() * (1 - 1e-9))[0])
    pivot = v[k]
    if np.iscomplexobj(v):
        return v * (np.abs(pivot) / pivot) if pivot != 0 else v
    return -v if pivot < 0 else v
