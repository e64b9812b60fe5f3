from __future__ import annotations

import logging
from typing import TYPE_CHECKING

import numpy as np
import scipy.linalg

from pynilmet.algebra.bracket import Array, as_square, gl_act
from pynilmet.config import NumericsConfig
from pynilmet.curvature.ricci import invariant_ricci
from pynilmet.structures.projection import random_invariant_symmetric
from pynilmet.structures.structure import StructureKind

if TYPE_CHECKING:
    import numpy.typing as npt

    from pynilmet.algebra.bracket import BracketTensor
    from pynilmet.structures.structure import GeomStructure

logger = logging.getLogger(__name__)

PROBE_HORIZON = 5.0
PROBE_POINTS = 21


def orbit_path_values(
    mu: BracketTensor,
    gamma: GeomStructure,
    a: npt.ArrayLike,
    times: npt.ArrayLike,
) -> Array:
    """Unnormalized `tr((Ric^gamma)^2)` along the path `exp(tA).mu`."""
    generator = as_square(a, mu.dim)
    values = []
    for t in np.atleast_1d(np.asarray(times, dtype=float)):
        ric = invariant_ricci(gl_act(scipy.linalg.expm(t * generator), mu), gamma)
        values.append(float(np.einsum("ij,ij->", ric, ric)))
    return np.array(values)


def orbit_infimum_probe(
    mu: BracketTensor,
    gamma: GeomStructure,
    trials: int,
    horizon: float = PROBE_HORIZON,
    points: int = PROBE_POINTS,
    seed: int | np.random.Generator | None = NumericsConfig().seed,
) -> Array:
    """Samples `exp(tA).mu` for random `A` in `p_gamma` and `|t| <= horizon`.

    Returns the running minimum of the unnormalized `tr((Ric^ac)^2)` after each
    trial. Without the scale normalization the infimum over compatible metrics of
    a symplectic nilpotent group is 0, and the values approach it.

    Raises:
        StructureError: `gamma` is not symplectic.
    """
    gamma.require(StructureKind.SYMPLECTIC)
    if mu.is_zero():
        return np.zeros(trials)
    rng = np.random.default_rng(seed)
    times = np.linspace(-horizon, horizon, points)
    minima = np.empty(trials)
    best = np.inf
    for trial in range(trials):
        a = random_invariant_symmetric(gamma, rng)
        best = min(best, float(orbit_path_values(mu, gamma, a, times).min()))
        minima[trial] = best
    logger.debug("Orbit probe minimum after %d trials: %.3e.", trials, best)
    return minima
