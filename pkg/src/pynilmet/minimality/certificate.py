from __future__ import annotations

import enum
import logging
from dataclasses import dataclass, field
from typing import TYPE_CHECKING, NamedTuple

import numpy as np

from pynilmet.algebra.bracket import Array, delta
from pynilmet.algebra.checks import require_lie
from pynilmet.algebra.derivations import derivation_basis
from pynilmet.config import NumericsConfig
from pynilmet.curvature.ricci import invariant_ricci, scalar_curvature

if TYPE_CHECKING:
    from pynilmet.algebra.bracket import BracketTensor
    from pynilmet.structures.structure import GeomStructure

logger = logging.getLogger(__name__)

NORM_FLOOR = 1e-14


class Verdict(enum.Enum):
    MINIMAL = "minimal"
    NOT_MINIMAL = "not_minimal"
    ABELIAN_TRIVIAL = "abelian_trivial"


@dataclass(frozen=True)
class SolitonCertificate:
    """The decomposition `Ric^gamma = c I + D` tested for `D` in `Der(mu)`.

    Attributes:
        c: `tr((Ric^gamma)^2) / scal`, the only constant a soliton can have.
        derivation: The candidate `D = Ric^gamma - c I`.
        residual: `|delta_mu(D)| / (|mu| max(|D|, 1e-14))`, invariant under scaling.
        verdict: Outcome at tolerance `tol`.
        tol: The tolerance used.
    """

    c: float
    derivation: Array = field(repr=False)
    residual: float
    verdict: Verdict
    tol: float

    @property
    def is_minimal(self) -> bool:
        return self.verdict is not Verdict.NOT_MINIMAL


def soliton_test(
    mu: BracketTensor, gamma: GeomStructure, tol: float = NumericsConfig().tol
) -> SolitonCertificate:
    """Certifies whether the fixed inner product is minimal for `(N_mu, gamma)`.

    The metric is minimal iff it is an invariant Ricci soliton, i.e.
    `Ric^gamma = c I + D` with `D` a derivation, and then `c` is forced to equal
    `tr((Ric^gamma)^2) / scal`. With `gamma` of kind `NONE` this is the nilsoliton
    test.

    Raises:
        NotALieBracketError: `mu` does not satisfy the Jacobi identity.
    """
    require_lie(mu, tol)
    n = mu.dim
    if mu.is_zero():
        return SolitonCertificate(
            c=0.0,
            derivation=np.zeros((n, n)),
            residual=0.0,
            verdict=Verdict.ABELIAN_TRIVIAL,
            tol=tol,
        )
    ric = invariant_ricci(mu, gamma)
    c = float(np.einsum("ij,ij->", ric, ric)) / scalar_curvature(mu)
    derivation = ric - c * np.eye(n)
    scale = mu.norm * max(float(np.linalg.norm(derivation)), NORM_FLOOR)
    residual = delta(mu, derivation).norm / scale
    verdict = Verdict.MINIMAL if residual <= tol else Verdict.NOT_MINIMAL
    logger.debug("Soliton residual %.3e (%s).", residual, verdict.value)
    return SolitonCertificate(
        c=c, derivation=derivation, residual=residual, verdict=verdict, tol=tol
    )


class SolitonFit(NamedTuple):
    c: float
    derivation: Array
    distance: float
    """`|Ric^gamma - c I - D| / |Ric^gamma|` at the optimum."""


def best_soliton_fit(
    mu: BracketTensor,
    gamma: GeomStructure,
    null_tol: float = NumericsConfig().null_tol,
) -> SolitonFit:
    """Least-squares distance from `Ric^gamma` to `R I + Der(mu)`.

    The distance vanishes exactly when `soliton_test` passes, and then the fitted
    `c` equals the forced one because `I` is never a derivation of `mu != 0`.
    """
    n = mu.dim
    if mu.is_zero():
        return SolitonFit(c=0.0, derivation=np.zeros((n, n)), distance=0.0)
    ric = invariant_ricci(mu, gamma)
    basis = derivation_basis(mu, null_tol)
    columns = np.vstack([np.eye(n).reshape(1, -1), basis.maps.reshape(basis.dim, -1)])
    coeffs, *_ = np.linalg.lstsq(columns.T, ric.reshape(-1), rcond=None)
    derivation = np.einsum("k,kij->ij", coeffs[1:], basis.maps)
    c = float(coeffs[0])
    misfit = np.linalg.norm(ric - c * np.eye(n) - derivation)
    distance = float(misfit / max(float(np.linalg.norm(ric)), NORM_FLOOR))
    return SolitonFit(c=c, derivation=derivation, distance=distance)
