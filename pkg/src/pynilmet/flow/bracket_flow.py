from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import TYPE_CHECKING

import numpy as np
import scipy.linalg

from pynilmet.algebra.bracket import Array, BracketTensor, delta, gl_act, v_inner
from pynilmet.algebra.checks import require_lie
from pynilmet.config import FlowConfig, NumericsConfig
from pynilmet.curvature.ricci import F_value, invariant_ricci, scalar_curvature
from pynilmet.exceptions import FlowDivergenceError, ZeroBracketError
from pynilmet.minimality.certificate import soliton_test
from pynilmet.structures.integrability import integrability_residual

if TYPE_CHECKING:
    from pathlib import Path

    from pynilmet.minimality.certificate import SolitonCertificate
    from pynilmet.structures.structure import GeomStructure

logger = logging.getLogger(__name__)

CONSTRAINT_WARNING_TOL = 1e-8
CERTIFICATE_TOL = 1e-6


def grad_F(mu: BracketTensor, gamma: GeomStructure) -> BracketTensor:  # noqa: N802
    """The negative gradient direction of `F` at `mu / |mu|`.

    Returns `w = v - <v, mu> mu` with `v = delta_mu(Ric^gamma)` at unit norm. The
    derivative of `F` along `w` is `-|w|^2`, and `w = 0` exactly at critical points.

    Raises:
        ZeroBracketError: `mu = 0`.
    """
    if mu.is_zero():
        raise ZeroBracketError("The gradient of F is undefined at the zero bracket.")
    unit = mu.normalized()
    v = delta(unit, invariant_ricci(unit, gamma))
    return v - v_inner(v, unit) * unit


@dataclass
class FlowTrace:
    """Time series of a gradient flow run on the unit sphere of brackets."""

    times: list[float] = field(default_factory=list)
    brackets: list[BracketTensor] = field(default_factory=list, repr=False)
    f_values: list[float] = field(default_factory=list)
    scal_values: list[float] = field(default_factory=list)
    grad_norms: list[float] = field(default_factory=list)
    constraint_residuals: list[float] = field(default_factory=list)
    """Integrability residual of the structure at every snapshot."""
    converged: bool = False
    halvings: int = 0
    """Total number of step halvings."""
    final_certificate: SolitonCertificate | None = None

    @property
    def final(self) -> BracketTensor:
        return self.brackets[-1]

    @property
    def steps(self) -> int:
        return len(self.times) - 1

    def record(
        self,
        t: float,
        mu: BracketTensor,
        f_value: float,
        grad_norm: float,
        constraint_residual: float,
    ) -> None:
        self.times.append(t)
        self.brackets.append(mu)
        self.f_values.append(f_value)
        self.scal_values.append(scalar_curvature(mu))
        self.grad_norms.append(grad_norm)
        self.constraint_residuals.append(constraint_residual)

    def to_csv(self, path: Path | str) -> None:
        """Writes the columns `t,F,scal,grad_norm`."""
        table = np.column_stack(
            [self.times, self.f_values, self.scal_values, self.grad_norms]
        )
        np.savetxt(
            path, table, delimiter=",", header="t,F,scal,grad_norm", comments=""
        )


def _generator(mu: BracketTensor, gamma: GeomStructure) -> Array:
    """`-Ric^gamma` at `mu / |mu|`; `exp(t A).mu` moves along `grad_F` for this `A`."""
    return -invariant_ricci(mu.normalized(), gamma)


def _commutator(a: Array, b: Array) -> Array:
    return a @ b - b @ a


def _dexpinv(u: Array, k: Array) -> Array:
    """Inverse derivative of `exp` at `u`, truncated after the second commutator."""
    first = _commutator(u, k)
    return k - first / 2 + _commutator(u, first) / 12


def _pushed(u: Array, mu: BracketTensor) -> BracketTensor:
    return gl_act(scipy.linalg.expm(u), mu)


def _rkmk4_step(mu: BracketTensor, gamma: GeomStructure, h: float) -> BracketTensor:
    """One Runge-Kutta-Munthe-Kaas step of order four.

    Every stage acts on `mu` by `exp` of an element of `g_gamma`, so the step stays
    in the `G_gamma`-orbit of `mu` up to rounding.
    """
    k1 = h * _generator(mu, gamma)
    k2 = _dexpinv(k1 / 2, h * _generator(_pushed(k1 / 2, mu), gamma))
    k3 = _dexpinv(k2 / 2, h * _generator(_pushed(k2 / 2, mu), gamma))
    k4 = _dexpinv(k3, h * _generator(_pushed(k3, mu), gamma))
    return _pushed((k1 + 2 * k2 + 2 * k3 + k4) / 6, mu).normalized()


class _Stepper:
    """Accepts steps that do not increase `F`, halving the step otherwise.

    A halved step is doubled again after `grow_after` accepted steps, up to the
    initial step.
    """

    def __init__(  # noqa: PLR0913
        self,
        gamma: GeomStructure,
        step: float,
        max_halvings: int,
        increase_tol: float,
        grow_after: int,
    ) -> None:
        self.gamma = gamma
        self.step = step
        self.max_step = step
        self.max_halvings = max_halvings
        self.increase_tol = increase_tol
        self.grow_after = grow_after
        self.halvings = 0
        self._accepted = 0

    def _accept(self) -> None:
        self._accepted += 1
        if self._accepted >= self.grow_after and self.step < self.max_step:
            self.step = min(2 * self.step, self.max_step)
            self._accepted = 0
            logger.debug("Step grown back to %.3e.", self.step)

    def advance(
        self, mu: BracketTensor, f_value: float
    ) -> tuple[BracketTensor, float, float]:
        for _ in range(self.max_halvings + 1):
            step = self.step
            candidate = _rkmk4_step(mu, self.gamma, step)
            candidate_f = F_value(candidate, self.gamma)
            if candidate_f <= f_value + self.increase_tol:
                self._accept()
                return candidate, candidate_f, step
            self.step /= 2
            self.halvings += 1
            self._accepted = 0
            logger.warning(
                "F increased by %.3e, halving the step to %.3e.",
                candidate_f - f_value,
                self.step,
            )
        raise FlowDivergenceError(
            f"F keeps increasing after {self.max_halvings} step halvings "
            f"(step {self.step:.3e}, F = {f_value!r})."
        )


def flow_run(  # noqa: PLR0913
    mu0: BracketTensor,
    gamma: GeomStructure,
    step: float = FlowConfig().step,
    max_steps: int = FlowConfig().max_steps,
    grad_tol: float = FlowConfig().grad_tol,
    max_halvings: int = FlowConfig().max_halvings,
    increase_tol: float = FlowConfig().increase_tol,
    grow_after: int = FlowConfig().grow_after,
    tol: float = NumericsConfig().tol,
) -> FlowTrace:
    """Runs the negative gradient flow of `F` from `mu0 / |mu0|`.

    Integrates `d mu / dt = grad_F(mu)` on the group: each step is
    `mu <- exp(Theta).mu` with `Theta` in `g_gamma` from a fourth order
    Runge-Kutta-Munthe-Kaas scheme, followed by renormalization. An integrator in
    `V` would drift off the variety of Lie brackets, where `F` keeps decreasing.
    The run stops once `|grad_F| <= grad_tol` or after `max_steps` accepted steps,
    and the endpoint is certified by `soliton_test` at tolerance 1e-6. The
    integrability residual is recorded at every step.

    Raises:
        ZeroBracketError: `mu0 = 0`.
        NotALieBracketError: `mu0` does not satisfy the Jacobi identity.
        FlowDivergenceError: `F` increases after `max_halvings` halvings.
    """
    if mu0.is_zero():
        raise ZeroBracketError("Cannot flow from the zero bracket.")
    require_lie(mu0, tol)
    mu = mu0.normalized()
    f_value = F_value(mu, gamma)
    grad_norm = grad_F(mu, gamma).norm
    trace = FlowTrace()
    trace.record(0.0, mu, f_value, grad_norm, integrability_residual(mu, gamma))
    stepper = _Stepper(gamma, step, max_halvings, increase_tol, grow_after)
    t = 0.0
    warned = False
    while grad_norm > grad_tol and trace.steps < max_steps:
        mu, f_value, h = stepper.advance(mu, f_value)
        t += h
        grad_norm = grad_F(mu, gamma).norm
        residual = integrability_residual(mu, gamma)
        if residual > CONSTRAINT_WARNING_TOL and not warned:
            logger.warning("Structure residual %.3e at t = %.3f.", residual, t)
            warned = True
        trace.record(t, mu, f_value, grad_norm, residual)
    trace.converged = grad_norm <= grad_tol
    trace.halvings = stepper.halvings
    trace.final_certificate = soliton_test(mu, gamma, max(tol, CERTIFICATE_TOL))
    logger.info(
        "Flow %s after %d steps, F = %.12g, |grad| = %.3e.",
        "converged" if trace.converged else "stopped",
        trace.steps,
        f_value,
        grad_norm,
    )
    return trace
