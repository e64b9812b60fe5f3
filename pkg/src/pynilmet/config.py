from typing import Literal

from confz import BaseConfig, EnvSource


class OperationMode(BaseConfig):  # type: ignore[misc]
    environment: Literal["testing", "development", "production"] = "development"
    """The operation mode. Controls the default log level."""

    CONFIG_SOURCES = EnvSource(allow=["ENVIRONMENT"])


class NumericsConfig(BaseConfig):  # type: ignore[misc]
    """Numerical tolerances and defaults.

    Variables can be set through environment variables prefixed with `NILMET_` or an
    `.env` file containing those variables, e.g. `NILMET_TOL=1e-8`.
    """

    tol: float = 1e-9
    """Default tolerance for residual based verdicts (Jacobi, solitons, ranks)."""
    null_tol: float = 1e-9
    """Relative singular value cutoff of the derivation nullspace."""
    integrability_tol: float = 1e-10
    """Tolerance on scale-normalized closedness and Nijenhuis residuals."""
    max_condition: float = 1e12
    """Largest condition number accepted by `gl_act`."""
    cluster_gap: float = 1e-6
    """Relative eigenvalue gap separating clusters in type extraction."""
    max_denominator: int = 64
    """Denominator cap for the rationalization of eigenvalue ratios."""
    seed: int | None = None
    """Seed of the random generators used by sampling helpers."""

    CONFIG_SOURCES = EnvSource(allow_all=True, prefix="NILMET_", file=".env")


class FlowConfig(BaseConfig):  # type: ignore[misc]
    """Gradient flow defaults, read from variables prefixed with `NILMET_FLOW_`."""

    step: float = 0.5
    """Initial step of the bracket flow."""
    metric_step: float = 1e-3
    """RK4 step of the normalized metric flow."""
    metric_steps: int = 1000
    """Number of steps of the normalized metric flow."""
    max_steps: int = 20000
    """Maximal number of accepted steps."""
    grad_tol: float = 1e-9
    """Convergence threshold on the norm of the gradient."""
    max_halvings: int = 20
    """Consecutive step halvings allowed before a flow is declared divergent."""
    grow_after: int = 5
    """Accepted steps after which a halved step is doubled again, up to `step`."""
    increase_tol: float = 1e-9
    """Largest accepted increase of F within one step."""

    CONFIG_SOURCES = EnvSource(allow_all=True, prefix="NILMET_FLOW_", file=".env")
