from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import TYPE_CHECKING

import numpy as np

from pynilmet.algebra.bracket import Array, BracketTensor, as_square, gl_act
from pynilmet.algebra.checks import require_lie
from pynilmet.config import FlowConfig
from pynilmet.curvature.ricci import invariant_ricci, metric_factor, scalar_curvature
from pynilmet.exceptions import (
    IllConditionedError,
    MetricFlowError,
    StructureError,
)
from pynilmet.structures.structure import StructureKind

if TYPE_CHECKING:
    import numpy.typing as npt

    from pynilmet.structures.structure import GeomStructure

logger = logging.getLogger(__name__)


@dataclass
class MetricTrace:
    """Metrics `P_t = g_t^t g_t` of the normalized invariant Ricci flow."""

    times: list[float] = field(default_factory=list)
    metrics: list[Array] = field(default_factory=list, repr=False)
    scal_values: list[float] = field(default_factory=list)
    ricci_operators: list[Array] = field(default_factory=list, repr=False)
    """`Ric^gamma` of `(N_mu, P_t)` as an operator in the fixed basis."""


def _velocity(
    g: Array, mu: BracketTensor, gamma: GeomStructure, sign: float
) -> tuple[Array, Array, float]:
    """`dg/dt = sign/2 (Ric^gamma(g.mu) - c I) g` together with `Ric^gamma(g.mu)`
    and `scal(g.mu)`."""
    pushed = gl_act(g, mu)
    ric = invariant_ricci(pushed, gamma)
    scal = scalar_curvature(pushed)
    c = float(np.einsum("ij,ij->", ric, ric)) / scal if scal != 0 else 0.0
    velocity = 0.5 * sign * (ric - c * np.eye(mu.dim)) @ g
    return velocity, ric, scal


def _initial_factor(
    mu: BracketTensor,
    gamma: GeomStructure,
    factor: npt.ArrayLike | None,
    metric: npt.ArrayLike | None,
) -> Array:
    if metric is not None:
        if gamma.kind is not StructureKind.NONE:
            raise StructureError(
                "A start metric is only accepted without structure; pass a factor "
                "in G_gamma instead."
            )
        return metric_factor(as_square(metric, mu.dim, "metric"))
    if factor is not None:
        return as_square(factor, mu.dim, "metric factor")
    return np.eye(mu.dim)


def normalized_metric_flow(  # noqa: PLR0913
    mu: BracketTensor,
    gamma: GeomStructure,
    sign: int = -1,
    step: float = FlowConfig().metric_step,
    max_steps: int = FlowConfig().metric_steps,
    factor: npt.ArrayLike | None = None,
    metric: npt.ArrayLike | None = None,
) -> MetricTrace:
    """Integrates `dP/dt = sign (ric^gamma(P) - (tr(Ric^gamma_P)^2 / scal(P)) P)`.

    The metric is carried by a factor `g` in `R G_gamma` with `P = g^t g`, evolved by
    `dg/dt = sign/2 (Ric^gamma(g.mu) - c I) g`; curvature at `P` is the curvature of
    `g.mu` at the fixed inner product. A Cholesky factor would leave `G_gamma`, so
    it is only used to start from an arbitrary `metric` when there is no structure.
    `sign = -1` decreases `F`. The scalar curvature is constant along the flow.

    Raises:
        NotALieBracketError: `mu` does not satisfy the Jacobi identity.
        MetricFlowError: the metric stops being positive definite.
    """
    if sign not in (-1, 1):
        raise ValueError(f"sign must be -1 or 1, got {sign}.")
    require_lie(mu)
    g = _initial_factor(mu, gamma, factor, metric)
    trace = MetricTrace()
    t = 0.0
    for index in range(max_steps + 1):
        try:
            k1, ric, scal = _velocity(g, mu, gamma, sign)
            trace.times.append(t)
            trace.metrics.append(g.T @ g)
            trace.scal_values.append(scal)
            trace.ricci_operators.append(np.linalg.solve(g, ric @ g))
            if index == max_steps:
                break
            k2, *_ = _velocity(g + step / 2 * k1, mu, gamma, sign)
            k3, *_ = _velocity(g + step / 2 * k2, mu, gamma, sign)
            k4, *_ = _velocity(g + step * k3, mu, gamma, sign)
        except (IllConditionedError, np.linalg.LinAlgError) as e:
            raise MetricFlowError(
                f"The metric degenerated at t = {t:.6g} (step {index}): {e}"
            ) from e
        g = g + step / 6 * (k1 + 2 * k2 + 2 * k3 + k4)
        t += step
        if np.linalg.eigvalsh(g.T @ g).min() <= 0:
            raise MetricFlowError(
                f"The metric is not positive definite at t = {t:.6g} (step {index})."
            )
    logger.debug(
        "Metric flow over [0, %.3g]: scal drift %.3e.",
        t,
        max(trace.scal_values) - min(trace.scal_values),
    )
    return trace

