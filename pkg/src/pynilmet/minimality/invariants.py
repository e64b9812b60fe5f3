from __future__ import annotations

import enum
import logging
from dataclasses import dataclass
from typing import TYPE_CHECKING, NamedTuple

import numpy as np

from pynilmet.config import NumericsConfig
from pynilmet.curvature.ricci import F_value, ricci, scalar_curvature
from pynilmet.curvature.two_step import center_ricci, detect_center_splitting
from pynilmet.exceptions import NotTwoStepError
from pynilmet.minimality.certificate import soliton_test

if TYPE_CHECKING:
    from pynilmet.algebra.bracket import BracketTensor
    from pynilmet.structures.structure import GeomStructure

logger = logging.getLogger(__name__)


class Normalization(enum.Enum):
    SCAL = "scal"
    """Rescale to `scal = -1`, i.e. `|mu| = 2`."""
    UNIT = "unit"
    """Rescale to `|mu| = 1`, the normalization of `F`."""


class DistinctionVerdict(enum.Enum):
    DISTINCT = "distinct"
    INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class IsometryInvariants:
    scal: float
    ricci_spectrum: tuple[float, ...]
    center_spectrum: tuple[float, ...]
    """Empty unless `mu` is at most two-step."""
    f_value: float


class Distinction(NamedTuple):
    verdict: DistinctionVerdict
    invariant: str | None
    """Name of the invariant with the largest difference, if any."""
    difference: float


def normalize(mu: BracketTensor, normalization: Normalization) -> BracketTensor:
    if mu.is_zero():
        return mu
    target = 2.0 if normalization is Normalization.SCAL else 1.0
    return mu * (target / mu.norm)


def isometry_invariants(
    mu: BracketTensor, gamma: GeomStructure, tol: float = NumericsConfig().tol
) -> IsometryInvariants:
    """Scalar curvature, sorted spectra of `Ric` and of `Ric` on the center, and `F`.

    All of them are preserved by isometries commuting with `gamma`. The zero
    bracket gives zeros throughout.
    """
    try:
        splitting = detect_center_splitting(mu, tol)
        center = tuple(
            float(v) for v in np.linalg.eigvalsh(center_ricci(mu, splitting))
        )
    except NotTwoStepError:
        center = ()
    return IsometryInvariants(
        scal=scalar_curvature(mu),
        ricci_spectrum=tuple(float(v) for v in np.linalg.eigvalsh(ricci(mu))),
        center_spectrum=center,
        f_value=0.0 if mu.is_zero() else F_value(mu, gamma),
    )


def _largest_difference(
    a: IsometryInvariants, b: IsometryInvariants
) -> tuple[str | None, float]:
    worst: tuple[str | None, float] = (None, 0.0)
    for name in ("scal", "ricci_spectrum", "center_spectrum", "f_value"):
        left = np.atleast_1d(np.asarray(getattr(a, name), dtype=float))
        right = np.atleast_1d(np.asarray(getattr(b, name), dtype=float))
        if left.shape != right.shape:
            return name, float("inf")
        difference = float(np.abs(left - right).max(initial=0.0))
        if difference > worst[1]:
            worst = (name, difference)
    return worst


def distinguish(
    mu1: BracketTensor,
    mu2: BracketTensor,
    gamma: GeomStructure,
    tol: float = NumericsConfig().tol,
    normalization: Normalization = Normalization.SCAL,
) -> Distinction:
    """Separates two minimal brackets by their isometry invariants after rescaling.

    Minimal compatible metrics are unique up to isometry and scaling, so differing
    invariants prove that `(N_mu1, gamma)` and `(N_mu2, gamma)` are not isomorphic.
    Equal invariants prove nothing, and non-minimal inputs are inconclusive.
    """
    if mu1.dim != mu2.dim:
        return Distinction(DistinctionVerdict.DISTINCT, "dim", float("inf"))
    certificates = [soliton_test(mu, gamma, tol) for mu in (mu1, mu2)]
    if not all(cert.is_minimal for cert in certificates):
        logger.info("A bracket is not minimal, no invariant comparison is possible.")
        return Distinction(DistinctionVerdict.INCONCLUSIVE, None, 0.0)
    invariants = [
        isometry_invariants(normalize(mu, normalization), gamma, tol)
        for mu in (mu1, mu2)
    ]
    name, difference = _largest_difference(*invariants)
    if difference > tol:
        return Distinction(DistinctionVerdict.DISTINCT, name, difference)
    return Distinction(DistinctionVerdict.INCONCLUSIVE, None, difference)
