from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import TYPE_CHECKING

import numpy as np
import scipy.linalg

from pynilmet.algebra.bracket import Array, as_square, delta, delta_matrix
from pynilmet.config import NumericsConfig

if TYPE_CHECKING:
    import numpy.typing as npt

    from pynilmet.algebra.bracket import BracketTensor

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class DerivationBasis:
    """Orthonormal basis of `Der(mu) = Ker delta_mu` under `tr(A^t B)`.

    Attributes:
        bracket: The bracket whose derivations are described.
        maps: Array of shape `(d, n, n)`, one derivation per leading index.
        tol: Relative singular value cutoff used for the nullspace.
    """

    bracket: BracketTensor
    maps: Array = field(repr=False)
    tol: float

    @property
    def dim(self) -> int:
        return int(self.maps.shape[0])

    def __len__(self) -> int:
        return self.dim

    def project(self, a: npt.ArrayLike) -> Array:
        """Orthogonal projection of `a` onto `Der(mu)`."""
        matrix = as_square(a, self.bracket.dim)
        coords = np.einsum("kij,ij->k", self.maps, matrix)
        return np.einsum("k,kij->ij", coords, self.maps)

    def contains(self, a: npt.ArrayLike, tol: float | None = None) -> bool:
        """Whether `delta_mu(a)` vanishes relative to `|mu| |a|`."""
        matrix = as_square(a, self.bracket.dim)
        scale = self.bracket.norm * np.linalg.norm(matrix)
        if scale == 0:
            return True
        residual = delta(self.bracket, matrix).norm / scale
        return residual <= (self.tol if tol is None else tol)

    def symmetric(self) -> Array:
        """Orthonormal basis of the symmetric derivations, shape `(d_sym, n, n)`.

        `Der(mu)` is not closed under transposition in general, so the symmetric
        derivations are the nullspace of `A -> A - A^t` restricted to `Der(mu)`.
        """
        n = self.bracket.dim
        if self.dim == 0:
            return np.zeros((0, n, n))
        skew_parts = (self.maps - self.maps.transpose(0, 2, 1)).reshape(self.dim, -1)
        kernel = scipy.linalg.null_space(skew_parts.T, rcond=self.tol)
        symmetric = np.einsum("kd,kij->dij", kernel, self.maps)
        # exact symmetrization of the rounding left by the nullspace
        return 0.5 * (symmetric + symmetric.transpose(0, 2, 1))


def derivation_basis(
    mu: BracketTensor, tol: float = NumericsConfig().null_tol
) -> DerivationBasis:
    """Computes `Der(mu)` as the numerical nullspace of `A -> delta_mu(A)`.

    Singular values at or below `tol * sigma_max` count as zero. For the zero bracket
    every matrix is a derivation.

    Examples:
        ```python
        basis = derivation_basis(filiform4())
        basis.contains(0.5 * np.diag([1.0, 2.0, 3.0, 4.0]))  # True
        ```
    """
    n = mu.dim
    matrix = delta_matrix(mu)
    if mu.is_zero() or matrix.shape[0] == 0:
        kernel = np.eye(n * n)
    else:
        kernel = scipy.linalg.null_space(matrix, rcond=tol)
    maps = kernel.T.reshape(-1, n, n)
    maps.setflags(write=False)
    logger.debug("Der(mu) has dimension %d in gl(%d).", maps.shape[0], n)
    return DerivationBasis(bracket=mu, maps=maps, tol=tol)
