from __future__ import annotations

import logging

import numpy as np

from pynilmet.algebra.bracket import Array, BracketTensor
from pynilmet.config import NumericsConfig
from pynilmet.exceptions import NotALieBracketError, NotNilpotentError

logger = logging.getLogger(__name__)


def jacobi_tensor(mu: BracketTensor) -> Array:
    """The cyclic sums of `mu(mu(X_i, X_j), X_k)`.

    `J[i, j, k] = mu(mu(X_i, X_j), X_k) + mu(mu(X_j, X_k), X_i)
    + mu(mu(X_k, X_i), X_j)`, as an `(n, n, n, n)` array.
    """
    c = mu.coeffs
    double = np.einsum("ijm,mkl->ijkl", c, c)
    return (
        double + np.einsum("jkil->ijkl", double) + np.einsum("kijl->ijkl", double)
    )


def jacobi_residual(mu: BracketTensor) -> float:
    """Largest Jacobi defect over basis triples, divided by `1 + |mu|^2`.

    Zero exactly when `mu` is a Lie bracket.
    """
    if mu.dim == 0:
        return 0.0
    defect = np.linalg.norm(jacobi_tensor(mu), axis=-1).max()
    return float(defect / (1.0 + mu.norm**2))


def require_lie(mu: BracketTensor, tol: float = NumericsConfig().tol) -> None:
    residual = jacobi_residual(mu)
    if residual > tol:
        raise NotALieBracketError(
            f"Jacobi identity fails (residual {residual:.3e} > {tol:.1e})."
        )


def image_basis(vectors: Array, cutoff: float) -> Array:
    """Orthonormal basis (as columns) of the span of the rows of `vectors`.

    Singular values at or below `cutoff` are treated as zero.
    """
    n = vectors.shape[-1]
    if vectors.size == 0:
        return np.zeros((n, 0))
    _, singular_values, vh = np.linalg.svd(vectors, full_matrices=False)
    rank = int((singular_values > cutoff).sum())
    return vh[:rank].T


def lower_central_series(
    mu: BracketTensor, tol: float = NumericsConfig().tol
) -> list[Array]:
    """Orthonormal bases of `C^1 = mu(n, n)`, `C^{k+1} = mu(n, C^k)`, ... up to the
    first vanishing term (which is included as an `(n, 0)` array).

    Rank decisions use singular values above `tol * |mu|`.

    Raises:
        NotALieBracketError: `mu` fails the Jacobi identity.
        NotNilpotentError: the series stops shrinking before it reaches zero.
    """
    require_lie(mu, tol)
    n = mu.dim
    cutoff = tol * max(mu.norm, np.finfo(float).tiny)
    current = image_basis(mu.coeffs.reshape(n * n, n), cutoff)
    series = [current]
    while current.shape[1] > 0:
        images = np.einsum("ijk,jm->imk", mu.coeffs, current).reshape(-1, n)
        following = image_basis(images, cutoff)
        if following.shape[1] >= current.shape[1]:
            raise NotNilpotentError(
                f"Lower central series stalls at dimension {current.shape[1]}."
            )
        series.append(following)
        current = following
    return series


def nilpotency_index(mu: BracketTensor, tol: float = NumericsConfig().tol) -> int:
    """Smallest `s` with `C^s = 0`; the zero bracket has index 1.

    Examples:
        ```python
        nilpotency_index(BracketTensor.from_triples(3, [(1, 2, 3, 1.0)]))  # 2
        ```
    """
    return len(lower_central_series(mu, tol))
