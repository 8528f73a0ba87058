from pydantic import ConfigDict, Field, PositiveFloat, PositiveInt

from syncert.configs.common import SyncertConfig


class Tolerances(SyncertConfig):
    """Numerical thresholds used by every decision procedure.

    Relative thresholds are scaled by the norm of the matrix they are applied to,
    so verdicts do not change under a uniform rescaling of the weights.
    """

    model_config = ConfigDict(frozen=True)

    eig_rel: PositiveFloat = Field(
        default=1e-9, description="Connectivity / positivity threshold relative to max(1, |M|)."
    )
    cluster_rel: PositiveFloat = Field(
        default=1e-8, description="Eigenvalue clustering gap relative to max(1, |R|)."
    )
    rank_floor: PositiveFloat = Field(
        default=1e-10,
        description="Relative floor on the singular value cut defining a null space.",
    )
    subset: PositiveFloat = Field(
        default=1e-6, description="Mean-removed norm under which a vector counts as parallel to 1."
    )
    zero_entry: PositiveFloat = Field(
        default=1e-8, description="Relative magnitude under which an eigenvector entry is zero."
    )
    residual_rel: PositiveFloat = Field(
        default=1e-8, description="Certificate residual bound relative to max(1, |R|, |D|)."
    )
    root: PositiveFloat = Field(
        default=1e-7, description="Distance from the imaginary axis for on-axis roots."
    )
    gcd: PositiveFloat = Field(
        default=1e-10, description="Relative remainder norm accepted as exact division."
    )
    degree_cap: PositiveInt = Field(default=64, description="Maximum polynomial degree.")
    marginal_factor: PositiveFloat = Field(
        default=100.0, description="Singular values within this factor of the cut are marginal."
    )
    freq_rank: PositiveFloat = Field(
        default=1e-8,
        description="Relative null-space cut at numerically located frequencies.",
    )
    passivity: PositiveFloat = Field(
        default=1e-9, description="Allowed negative real part of an admittance on the test grid."
    )

    def with_rank_floor(self, floor: float | None) -> "Tolerances":
        if floor is None:
            return self
        return self.model_copy(update={"rank_floor": floor})


DEFAULT_TOLERANCES = Tolerances()
