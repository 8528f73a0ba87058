"""Time-domain integration of the oscillator array in first-order form.

The state is `x = [z; dz/dt]` and evolves as `dx/dt = Phi x` with
`Phi = [[0, I], [-(omega0^2 I + R), -D]]`. The quadratic form `V = x^T P x` with
`P = 1/2 blockdiag(omega0^2 I + R, I)` is non-increasing along every solution.
"""

from collections.abc import Sequence
from dataclasses import dataclass

import numpy as np
import pandas as pd
import scipy.linalg
from loguru import logger

from syncert.analysis.errors import InvalidModeError, NonFiniteStateError
from syncert.analysis.linalg import spectral_norm
from syncert.analysis.network import (
    LaplacianPair,
    OscillatorArray,
    build_laplacians,
    damper_connectivity,
)
from syncert.configs.tolerances import DEFAULT_TOLERANCES, Tolerances

DEFAULT_DT = 1e-3
DEFAULT_HORIZON = 100.0
STEP_BOUND = 0.1
LYAPUNOV_REL = 1e-12


@dataclass(frozen=True)
class StateSpace:
    Phi: np.ndarray
    P: np.ndarray
    D: np.ndarray
    q: int
    omega0: float

    @property
    def spectral_radius(self) -> float:
        return float(np.max(np.abs(np.linalg.eigvals(self.Phi))))


@dataclass(frozen=True)
class Trajectory:
    times: np.ndarray
    states: np.ndarray
    dt: float
    sync_error: np.ndarray
    energy: np.ndarray

    @property
    def q(self) -> int:
        return self.states.shape[1] // 2

    @property
    def positions(self) -> np.ndarray:
        return self.states[:, : self.q]

    @property
    def velocities(self) -> np.ndarray:
        return self.states[:, self.q :]

    def to_frame(self) -> pd.DataFrame:
        """Tabulate as `t, z1..zq, zd1..zdq, sync_error, energy`."""
        columns = (
            ["t"]
            + [f"z{i + 1}" for i in range(self.q)]
            + [f"zd{i + 1}" for i in range(self.q)]
        )
        frame = pd.DataFrame(np.column_stack([self.times, self.states]), columns=columns)
        frame["sync_error"] = self.sync_error
        frame["energy"] = self.energy
        return frame


@dataclass(frozen=True)
class ModalSolution:
    """Closed-form undamped motion `z(t) = Re sum_k exp(j omega_k t) xi_k`."""

    omegas: np.ndarray
    modes: np.ndarray

    def __call__(self, t: float | np.ndarray) -> np.ndarray:
        t = np.asarray(t, dtype=float)
        phases = np.exp(1j * np.multiply.outer(t, self.omegas))
        return np.real(phases @ self.modes)

    def velocity(self, t: float | np.ndarray) -> np.ndarray:
        t = np.asarray(t, dtype=float)
        phases = np.exp(1j * np.multiply.outer(t, self.omegas))
        return np.real(phases @ (1j * self.omegas[:, None] * self.modes))

    def initial_state(self) -> np.ndarray:
        return np.concatenate([self(0.0), self.velocity(0.0)])


def state_space_from_laplacians(L: LaplacianPair) -> StateSpace:
    q = L.q
    stiffness = L.omega0**2 * np.eye(q) + L.R
    Phi = np.block([[np.zeros((q, q)), np.eye(q)], [-stiffness, -L.D]])
    P = 0.5 * scipy.linalg.block_diag(stiffness, np.eye(q))
    ss = StateSpace(Phi, P, np.array(L.D), q, L.omega0)

    residual = check_lyapunov(ss)
    bound = LYAPUNOV_REL * max(1.0, spectral_norm(P) * spectral_norm(Phi))
    if residual > bound:
        raise ArithmeticError(f"Lyapunov identity violated: residual {residual:.3e} > {bound:.3e}")
    return ss


def build_state_space(array: OscillatorArray) -> StateSpace:
    return state_space_from_laplacians(build_laplacians(array))


def check_lyapunov(ss: StateSpace) -> float:
    """Norm of `Phi^T P + P Phi + blockdiag(0, D)`."""
    target = scipy.linalg.block_diag(np.zeros((ss.q, ss.q)), ss.D)
    return float(np.linalg.norm(ss.Phi.T @ ss.P + ss.P @ ss.Phi + target))


def rk4_step_matrix(Phi: np.ndarray, dt: float) -> np.ndarray:
    """One classical Runge-Kutta step of `dx/dt = Phi x` as a matrix.

    For a linear system the stages k1..k4 collapse to the degree-4 Taylor polynomial
    of `exp(dt Phi)`.
    """
    n = Phi.shape[0]
    A = dt * Phi
    step = np.eye(n)
    term = np.eye(n)
    for k in range(1, 5):
        term = term @ A / k
        step = step + term
    return step


def integrate(
    ss: StateSpace,
    x0: Sequence[float] | np.ndarray,
    horizon: float = DEFAULT_HORIZON,
    dt: float = DEFAULT_DT,
) -> Trajectory:
    """Integrate with fixed-step RK4 on a uniform grid ending exactly at `horizon`.

    The step is shrunk slightly when `horizon` is not a multiple of `dt`.
    """
    if dt <= 0:
        raise ValueError(f"dt must be positive, got {dt}.")
    if horizon < dt:
        raise ValueError(f"horizon ({horizon}) must be at least dt ({dt}).")
    x0 = np.asarray(x0, dtype=float)
    if x0.shape != (2 * ss.q,):
        raise ValueError(f"Initial state must have length {2 * ss.q}, got {x0.shape}.")

    n_steps = int(np.ceil(horizon / dt - 1e-9))
    h = horizon / n_steps
    rho = ss.spectral_radius
    if h * rho > STEP_BOUND:
        logger.warning(
            f"dt={h:.3e} exceeds the recommended {STEP_BOUND}/rho(Phi)={STEP_BOUND / rho:.3e}"
        )

    step = rk4_step_matrix(ss.Phi, h)
    states = np.empty((n_steps + 1, 2 * ss.q))
    states[0] = x0
    for k in range(n_steps):
        states[k + 1] = step @ states[k]
        if not np.all(np.isfinite(states[k + 1])):
            raise NonFiniteStateError((k + 1) * h)

    times = h * np.arange(n_steps + 1)
    return Trajectory(
        times=times,
        states=states,
        dt=h,
        sync_error=sync_error_of(states, ss.q),
        energy=energy_of(ss.P, states),
    )


def sync_error_of(states: np.ndarray, q: int) -> np.ndarray:
    z = states[:, :q]
    v = states[:, q:]
    error = np.zeros(states.shape[0])
    for i in range(q - 1):
        pair = np.abs(z[:, i : i + 1] - z[:, i + 1 :]) + np.abs(v[:, i : i + 1] - v[:, i + 1 :])
        error = np.maximum(error, pair.max(axis=1))
    return error


def energy_of(P: np.ndarray, states: np.ndarray) -> np.ndarray:
    return np.einsum("ni,ij,nj->n", states, P, states)


def sync_error(traj: Trajectory) -> np.ndarray:
    """Largest position-plus-velocity mismatch over all pairs; zero for a single oscillator."""
    return sync_error_of(traj.states, traj.q)


def energy(ss: StateSpace, traj: Trajectory) -> np.ndarray:
    return energy_of(ss.P, traj.states)


def modal_solution(
    R: np.ndarray,
    omega0: float,
    terms: Sequence[tuple[float, Sequence[complex]]],
    *,
    D: np.ndarray | None = None,
    tolerances: Tolerances = DEFAULT_TOLERANCES,
) -> ModalSolution:
    """Build the closed-form evaluator after checking each term's eigen-relation.

    Raises:
        InvalidModeError: if a frequency is non-positive or repeated, or if
            `(R - (omega^2 - omega0^2) I) xi` (or `D xi` when `D` is given) is not small.
    """
    R = np.asarray(R, dtype=float)
    omegas = np.array([float(w) for w, _ in terms])
    modes = np.array([np.asarray(xi, dtype=complex) for _, xi in terms]).reshape(
        len(terms), R.shape[0]
    )
    if np.any(omegas <= 0):
        raise InvalidModeError(f"Mode frequencies must be positive: {omegas.tolist()}")
    if len(np.unique(omegas)) != len(omegas):
        raise InvalidModeError(f"Mode frequencies must be distinct: {omegas.tolist()}")

    scale = max(1.0, spectral_norm(R), spectral_norm(D) if D is not None else 0.0)
    tau = tolerances.residual_rel * scale
    for omega, xi in zip(omegas, modes):
        lam = omega**2 - omega0**2
        size = max(np.linalg.norm(xi), 1e-300)
        residual = np.linalg.norm(R @ xi - lam * xi) / size
        if D is not None:
            residual = max(residual, np.linalg.norm(D @ xi) / size)
        if residual > tau:
            raise InvalidModeError(
                f"Mode at omega={omega:.6g} has residual {residual:.3e} > {tau:.3e}"
            )
    return ModalSolution(omegas, modes)


def expm_states(ss: StateSpace, x0: np.ndarray, times: Sequence[float]) -> np.ndarray:
    """Exact states `expm(Phi t) x0` at the requested sample times."""
    x0 = np.asarray(x0, dtype=float)
    return np.array([scipy.linalg.expm(ss.Phi * t) @ x0 for t in times])


def settling_horizon(array: OscillatorArray) -> float:
    """Horizon after which a synchronizing array is expected to be synchronized.

    `200 / lambda2(D)` when the damper graph is connected, otherwise 500 s.
    """
    connectivity = damper_connectivity(array)
    if array.q > 1 and connectivity.spectral_connected:
        return 200.0 / connectivity.lambda2
    return 500.0
