"""Two-step nilpotent brackets: the splitting `n = n1 + n2` with `n2 = mu(n, n)`, the
maps `j_mu(Z)` on `n1` and the modified H-type test."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import TYPE_CHECKING

import numpy as np
import numpy.typing as npt
import scipy.linalg

from pynilmet.algebra.bracket import Array, BracketTensor
from pynilmet.algebra.checks import image_basis
from pynilmet.config import NumericsConfig
from pynilmet.curvature.ricci import ricci
from pynilmet.exceptions import CenterMembershipError, NotTwoStepError

if TYPE_CHECKING:
    from collections.abc import Sequence

logger = logging.getLogger(__name__)

HTYPE_SAMPLES = 8


@dataclass(frozen=True)
class CenterSplitting:
    """Orthonormal bases, as columns, of `n1` (complement) and `n2` (center).

    Coordinate vectors are used whenever `mu(n, n)` is spanned by basis vectors, so
    that `j`-matrices are expressed in the basis `X_1, ..., X_n`.
    """

    complement: Array = field(repr=False)
    center: Array = field(repr=False)

    @classmethod
    def coordinates(cls, n: int, center: Sequence[int]) -> CenterSplitting:
        """A fixed splitting with `n2` spanned by the 0-based basis vectors `center`,
        as in the models `n = R^4 + R^2` and `n = R^4 + R^4`.

        It may be larger than the image of `mu`.
        """
        eye = np.eye(n)
        indices = list(center)
        return cls(complement=np.delete(eye, indices, axis=1), center=eye[:, indices])

    @property
    def n1(self) -> int:
        return int(self.complement.shape[1])

    @property
    def n2(self) -> int:
        return int(self.center.shape[1])


def _coordinate_support(mu: BracketTensor, cutoff: float) -> list[int]:
    magnitudes = np.abs(mu.coeffs).max(axis=(0, 1))
    return [k for k in range(mu.dim) if magnitudes[k] > cutoff]


def detect_center_splitting(
    mu: BracketTensor, tol: float = NumericsConfig().tol
) -> CenterSplitting:
    """Takes `n2` as the image of `mu` and checks that it is central.

    Raises:
        NotTwoStepError: `mu(n, mu(n, n)) != 0`.
    """
    n = mu.dim
    cutoff = tol * max(mu.norm, np.finfo(float).tiny)
    center = image_basis(mu.coeffs.reshape(n * n, n), cutoff)
    support = _coordinate_support(mu, cutoff)
    if len(support) == center.shape[1]:
        eye = np.eye(n)
        center = eye[:, support]
        complement = np.delete(eye, support, axis=1)
    elif center.shape[1] == 0:
        complement = np.eye(n)
    else:
        complement = scipy.linalg.null_space(center.T)
    defect = np.linalg.norm(np.einsum("ijk,jm->imk", mu.coeffs, center))
    if defect > tol * max(mu.norm, 1.0) ** 2:
        raise NotTwoStepError(
            f"mu(n, mu(n, n)) does not vanish (defect {defect:.3e})."
        )
    return CenterSplitting(complement=complement, center=center)


def j_map(
    mu: BracketTensor,
    splitting: CenterSplitting,
    z: npt.ArrayLike,
    tol: float = NumericsConfig().tol,
) -> Array:
    """The skew map `j(Z)` of `n1` with `<j(Z) X, Y> = <mu(X, Y), Z>`.

    `Z` is given in the coordinates of `n` and the result in the basis
    `splitting.complement`.

    Raises:
        CenterMembershipError: `Z` has a component outside `n2`.
    """
    vector = np.asarray(z, dtype=float)
    outside = vector - splitting.center @ (splitting.center.T @ vector)
    if np.linalg.norm(outside) > tol * max(1.0, float(np.linalg.norm(vector))):
        raise CenterMembershipError("Z does not lie in the center n2.")
    u = splitting.complement
    return np.einsum("ib,ja,ijk,k->ab", u, u, mu.coeffs, vector)


def center_ricci(mu: BracketTensor, splitting: CenterSplitting) -> Array:
    """`Ric` restricted to `n2`, in the basis `splitting.center`.

    For two-step brackets this is `1/2 [<v_i, v_j>]` where `v_i` collects the
    coordinates of `mu` along the `i`-th center direction.
    """
    return splitting.center.T @ ricci(mu) @ splitting.center


@dataclass(frozen=True)
class HTypeVerdict:
    """Outcome of the modified H-type test.

    Attributes:
        is_htype: Whether every sampled `j(Z)^2` is a non-positive multiple of `I`.
        samples: The sampled `Z` (rows, in coordinates of `n`).
        c_values: `c(Z) = tr(j(Z)^2) / dim n1` for every sample.
        degenerate: Sample indices with `c(Z) = 0`, admitted by the weakened
            definition.
        form: Symmetric matrix `C` on `n2` with `c(Z) = z^t C z`, `z` the
            coordinates of `Z` in `splitting.center`.
        max_defect: Largest `|j(Z)^2 - c(Z) I|` relative to `|j(Z)^2|`.
    """

    is_htype: bool
    samples: Array = field(repr=False)
    c_values: Array
    degenerate: tuple[int, ...]
    form: Array = field(repr=False)
    max_defect: float


def _htype_samples(
    splitting: CenterSplitting, rng: np.random.Generator, count: int
) -> Array:
    combinations = rng.standard_normal((count, splitting.n2))
    combinations /= np.linalg.norm(combinations, axis=1, keepdims=True)
    coords = np.vstack([np.eye(splitting.n2), combinations])
    return coords @ splitting.center.T


def modified_htype_check(
    mu: BracketTensor,
    splitting: CenterSplitting,
    tol: float = NumericsConfig().tol,
    seed: int | np.random.Generator | None = NumericsConfig().seed,
    samples: int = HTYPE_SAMPLES,
) -> HTypeVerdict:
    """Tests whether `j(Z)^2 = c(Z) I` with `c(Z) <= 0` for every `Z` in `n2`.

    `Z` runs through the center basis and `samples` random unit combinations of it.
    """
    rng = np.random.default_rng(seed)
    zs = _htype_samples(splitting, rng, samples) if splitting.n2 else np.zeros((0, 0))
    n1 = max(splitting.n1, 1)
    eye = np.eye(splitting.n1)
    c_values = []
    max_defect = 0.0
    for z in zs:
        j = j_map(mu, splitting, z, tol=tol)
        square = j @ j
        c = float(np.trace(square)) / n1
        defect = float(np.linalg.norm(square - c * eye))
        scale = max(float(np.linalg.norm(square)), np.finfo(float).tiny)
        max_defect = max(max_defect, defect / scale)
        c_values.append(c)
    js = np.array([j_map(mu, splitting, z) for z in splitting.center.T])
    form = np.einsum("pab,qba->pq", js, js) / n1 if len(js) else np.zeros((0, 0))
    values = np.array(c_values)
    degenerate = tuple(int(i) for i in np.flatnonzero(np.abs(values) <= tol))
    verdict = HTypeVerdict(
        is_htype=max_defect <= tol and bool(np.all(values <= tol)),
        samples=zs,
        c_values=values,
        degenerate=degenerate,
        form=form,
        max_defect=max_defect,
    )
    logger.debug("Modified H-type: %s (defect %.3e).", verdict.is_htype, max_defect)
    return verdict
