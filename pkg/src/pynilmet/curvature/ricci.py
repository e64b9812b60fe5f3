from __future__ import annotations

import logging

import numpy as np
import numpy.typing as npt
import scipy.linalg

from pynilmet.algebra.bracket import Array, BracketTensor, as_square, gl_act
from pynilmet.exceptions import (
    CurvatureConsistencyError,
    NotSymmetricError,
    StructureError,
    ZeroBracketError,
)
from pynilmet.structures.projection import project_invariant
from pynilmet.structures.structure import GeomStructure

logger = logging.getLogger(__name__)

SCALAR_CHECK_TOL = 1e-12
MEMBERSHIP_TOL = 1e-8


def ricci(mu: BracketTensor) -> Array:
    """Ricci operator of the fixed inner product on the nilpotent group `(N_mu, <,>)`.

    `<Ric X, Y> = -1/2 sum <mu(X, X_i), X_j><mu(Y, X_i), X_j>
    + 1/4 sum <mu(X_i, X_j), X><mu(X_i, X_j), Y>`.
    """
    c = mu.coeffs
    return -0.5 * np.einsum("aij,bij->ab", c, c) + 0.25 * np.einsum(
        "ija,ijb->ab", c, c
    )


def scalar_curvature(mu: BracketTensor) -> float:
    """`tr Ric`, checked against the identity `scal = -|mu|^2 / 4`.

    Raises:
        CurvatureConsistencyError: the two values disagree.
    """
    scal = float(np.trace(ricci(mu)))
    expected = -0.25 * mu.norm**2
    if abs(scal - expected) > SCALAR_CHECK_TOL * max(abs(expected), 1e-300):
        raise CurvatureConsistencyError(
            f"tr Ric = {scal!r} but -|mu|^2/4 = {expected!r}."
        )
    return scal


def moment_map(mu: BracketTensor) -> Array:
    """`m(mu) = -4 sum ad(X_i)^t ad(X_i) + 2 sum ad(X_i) ad(X_i)^t`.

    Equal to `8 Ric` for every skew-symmetric bilinear map.
    """
    ads = mu.ad_stack()
    return -4.0 * np.einsum("ika,ikb->ab", ads, ads) + 2.0 * np.einsum(
        "iaj,ibj->ab", ads, ads
    )


def invariant_ricci(mu: BracketTensor, gamma: GeomStructure) -> Array:
    """`Ric^gamma = p(Ric)`, the projection of `Ric` onto `p_gamma`."""
    _check_structure(mu, gamma)
    return project_invariant(ricci(mu), gamma)


def F_value(mu: BracketTensor, gamma: GeomStructure) -> float:  # noqa: N802
    """Scale invariant functional `F(mu) = tr((Ric^gamma)^2) / |mu|^4`.

    Raises:
        ZeroBracketError: `mu = 0`.
    """
    if mu.is_zero():
        raise ZeroBracketError("F is undefined at the zero bracket.")
    ric = invariant_ricci(mu, gamma)
    return float(np.einsum("ij,ij->", ric, ric) / mu.norm**4)


def _check_structure(mu: BracketTensor, gamma: GeomStructure) -> None:
    if gamma.dim != mu.dim:
        raise StructureError(
            f"Structure of dimension {gamma.dim} on a bracket of dimension {mu.dim}."
        )


def invariant_ricci_at(
    mu: BracketTensor, gamma: GeomStructure, g: npt.ArrayLike
) -> Array:
    """Invariant Ricci operator of the metric `P = g^t g` on `N_mu`.

    `g` must lie in `G_gamma`; it is an isometry from `(N_mu, P)` onto
    `(N_{g.mu}, <,>)`, so `Ric^gamma_P = g^-1 Ric^gamma(g.mu) g`.
    """
    factor = as_square(g, mu.dim, "metric factor")
    scale = max(1.0, float(np.linalg.norm(factor)) ** 2)
    if _group_defect(factor, gamma) > MEMBERSHIP_TOL * scale:
        raise StructureError("The metric factor does not preserve the structure.")
    ric = invariant_ricci(gl_act(factor, mu), gamma)
    return np.linalg.solve(factor, ric @ factor)


def _group_defect(g: Array, gamma: GeomStructure) -> float:
    if not gamma.j_maps:
        return 0.0
    if gamma.contains_identity:
        return max(float(np.linalg.norm(g @ j - j @ g)) for j in gamma.j_maps)
    return float(np.linalg.norm(g.T @ gamma.j @ g - gamma.j))


def ricci_form(mu: BracketTensor, p: npt.ArrayLike) -> Array:
    """The Ricci tensor `ric_P = P Ric_P` of the metric `<P., .>` as a matrix.

    The curvature is pulled back through the upper Cholesky factor `P = L^t L`.

    Raises:
        NotSymmetricError: `P` is not symmetric positive definite.
    """
    metric = as_square(p, mu.dim, "metric")
    if np.abs(metric - metric.T).max(initial=0.0) > SCALAR_CHECK_TOL * max(
        1.0, np.abs(metric).max(initial=0.0)
    ):
        raise NotSymmetricError("The metric is not symmetric.")
    factor = metric_factor(metric)
    return factor.T @ ricci(gl_act(factor, mu)) @ factor


def metric_factor(p: npt.ArrayLike) -> Array:
    """Upper triangular `L` with `P = L^t L`.

    Raises:
        NotSymmetricError: `P` is not positive definite.
    """
    try:
        return scipy.linalg.cholesky(np.asarray(p, dtype=float), lower=False)
    except np.linalg.LinAlgError as e:
        raise NotSymmetricError(f"The metric is not positive definite: {e}") from e
