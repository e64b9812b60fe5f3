"""Two-step brackets `mu: n1 x n1 -> n2` with `n1 = R^4`.

The six pairs `X_1 X_2, X_1 X_3, X_1 X_4, X_2 X_3, X_2 X_4, X_3 X_4` carry the
vectors `A, B, C, D, E, F` of `n2`, whose basis `Z_1, Z_2, ...` follows `X_4` in the
basis of `n`.
"""

from __future__ import annotations

import logging
from typing import TYPE_CHECKING

import numpy as np

from pynilmet.algebra.bracket import Array, BracketTensor
from pynilmet.exceptions import DimensionMismatchError

if TYPE_CHECKING:
    import numpy.typing as npt

logger = logging.getLogger(__name__)

DOMAIN_TOL = 1e-12
N1 = 4
PAIRS = ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3))


def as_vectors(vectors: tuple[npt.ArrayLike, ...], n2: int) -> list[Array]:
    arrays = [np.asarray(v, dtype=float) for v in vectors]
    for name, array in zip("ABCDEF", arrays, strict=False):
        if array.shape != (n2,):
            raise DimensionMismatchError(
                f"{name} must have {n2} components, got shape {array.shape}."
            )
    return arrays


def pair_model(vectors: tuple[npt.ArrayLike, ...], n2: int) -> BracketTensor:
    """The bracket with `mu(X_i, X_j) = sum_k v_k Z_k` for the six pair vectors."""
    coeffs = np.zeros((N1 + n2,) * 3)
    for (i, j), v in zip(PAIRS, as_vectors(vectors, n2), strict=True):
        coeffs[i, j, N1:] = v
        coeffs[j, i, N1:] = -v
    return BracketTensor(coeffs)


def center_vectors(mu: BracketTensor) -> Array:
    """Rows `v_k = (a_k, b_k, ..., f_k)`, one per center direction `Z_k`."""
    return np.array([mu.coeffs[i, j, N1:] for i, j in PAIRS]).T


def warn_off_domain(name: str, condition: str, defect: float) -> None:
    """Logs a warning when a family parameter leaves its documented domain."""
    if abs(defect) > DOMAIN_TOL:
        logger.warning(
            "%s: parameters violate %s (defect %.3e).", name, condition, defect
        )

