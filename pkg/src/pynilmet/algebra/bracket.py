from __future__ import annotations

import logging
from collections.abc import Iterable

import numpy as np
import numpy.typing as npt

from pynilmet.config import NumericsConfig
from pynilmet.exceptions import (
    DimensionMismatchError,
    IllConditionedError,
    NonFiniteError,
    NotAntisymmetricError,
)

logger = logging.getLogger(__name__)

Array = npt.NDArray[np.float64]
"""A real `numpy` array. Linear maps and symmetric operators are `(n, n)` arrays."""

ANTISYMMETRY_TOL = 1e-12


class BracketTensor:
    """A skew-symmetric bilinear map `mu` on `R^n`, stored by structure constants.

    `coeffs[i, j, k]` is the coefficient of `X_k` in `mu(X_i, X_j)` with respect to the
    fixed orthonormal basis `X_1, ..., X_n` (0-based in the array).

    Args:
        coeffs:
            Array of shape `(n, n, n)`. It must be antisymmetric in the first two
            indices up to rounding; the stored tensor is its exact antisymmetric part.

    Raises:
        NotAntisymmetricError: `coeffs[i, j] != -coeffs[j, i]`.
        NonFiniteError: NaN or infinite entries.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: npt.ArrayLike) -> None:
        array = np.array(coeffs, dtype=float)
        if array.ndim != 3 or len(set(array.shape)) != 1:  # noqa: PLR2004
            raise DimensionMismatchError(
                f"Structure constants must have shape (n, n, n), got {array.shape}."
            )
        if not np.all(np.isfinite(array)):
            raise NonFiniteError("Structure constants contain NaN or Inf.")
        defect = np.abs(array + array.transpose(1, 0, 2)).max(initial=0.0)
        scale = max(1.0, np.abs(array).max(initial=0.0))
        if defect > ANTISYMMETRY_TOL * scale:
            raise NotAntisymmetricError(
                f"mu(X_i, X_j) != -mu(X_j, X_i) (defect {defect:.3e})."
            )
        array = 0.5 * (array - array.transpose(1, 0, 2))
        array.setflags(write=False)
        self._coeffs = array

    @classmethod
    def zero(cls, n: int) -> BracketTensor:
        return cls(np.zeros((n, n, n)))

    @classmethod
    def from_triples(
        cls, n: int, triples: Iterable[tuple[int, int, int, float]]
    ) -> BracketTensor:
        """Builds a bracket from `(i, j, k, value)` meaning `mu(X_i, X_j) += value X_k`.

        Indices are 1-based as in the basis labels `X_1, ..., X_n`. The entry
        `mu(X_j, X_i)` is filled in by antisymmetry.

        Examples:
            ```python
            # the 3-dimensional Heisenberg algebra
            BracketTensor.from_triples(3, [(1, 2, 3, 1.0)])
            ```
        """
        coeffs = np.zeros((n, n, n))
        for i, j, k, value in triples:
            if not (1 <= i <= n and 1 <= j <= n and 1 <= k <= n):
                raise DimensionMismatchError(
                    f"Index ({i}, {j}, {k}) outside of 1..{n}."
                )
            if i == j:
                if value != 0:
                    raise NotAntisymmetricError(f"mu(X_{i}, X_{i}) must vanish.")
                continue
            coeffs[i - 1, j - 1, k - 1] += value
            coeffs[j - 1, i - 1, k - 1] -= value
        return cls(coeffs)

    @property
    def coeffs(self) -> Array:
        return self._coeffs

    @property
    def dim(self) -> int:
        return int(self._coeffs.shape[0])

    @property
    def norm(self) -> float:
        """The norm induced by `v_inner`, a sum over ordered pairs."""
        return float(np.linalg.norm(self._coeffs))

    def is_zero(self, tol: float = 0.0) -> bool:
        return self.norm <= tol

    def normalized(self) -> BracketTensor:
        norm = self.norm
        if norm == 0:
            return self
        return BracketTensor(self._coeffs / norm)

    def __call__(self, x: npt.ArrayLike, y: npt.ArrayLike) -> Array:
        return np.einsum("i,j,ijk->k", x, y, self._coeffs)

    def ad(self, i: int) -> Array:
        """Matrix of `ad_mu(X_i) = mu(X_i, .)` for the 0-based index `i`."""
        return self._coeffs[i].T.copy()

    def ad_stack(self) -> Array:
        """All `ad_mu(X_i)` matrices, shape `(n, n, n)` indexed `[i, k, j]`."""
        return np.einsum("ijk->ikj", self._coeffs)

    def _check_dim(self, other: BracketTensor) -> None:
        if other.dim != self.dim:
            raise DimensionMismatchError(
                f"Brackets of dimension {self.dim} and {other.dim} cannot be combined."
            )

    def __add__(self, other: BracketTensor) -> BracketTensor:
        self._check_dim(other)
        return BracketTensor(self._coeffs + other.coeffs)

    def __sub__(self, other: BracketTensor) -> BracketTensor:
        self._check_dim(other)
        return BracketTensor(self._coeffs - other.coeffs)

    def __mul__(self, scalar: float) -> BracketTensor:
        return BracketTensor(float(scalar) * self._coeffs)

    __rmul__ = __mul__

    def __neg__(self) -> BracketTensor:
        return BracketTensor(-self._coeffs)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BracketTensor):
            return NotImplemented
        return self.dim == other.dim and bool(np.array_equal(self.coeffs, other.coeffs))

    def __hash__(self) -> int:
        return hash(self._coeffs.tobytes())

    def __repr__(self) -> str:
        nonzero = [
            f"[X{i + 1},X{j + 1}]={self._coeffs[i, j, k]:g}X{k + 1}"
            for i, j, k in zip(*np.nonzero(self._coeffs), strict=True)
            if i < j
        ]
        return f"BracketTensor(dim={self.dim}, {', '.join(nonzero) or '0'})"


def as_square(a: npt.ArrayLike, n: int, name: str = "map") -> Array:
    matrix = np.asarray(a, dtype=float)
    if matrix.shape != (n, n):
        raise DimensionMismatchError(
            f"Expected a {n}x{n} {name}, got shape {matrix.shape}."
        )
    if not np.all(np.isfinite(matrix)):
        raise NonFiniteError(f"The {name} contains NaN or Inf.")
    return matrix


def v_inner(mu: BracketTensor, lam: BracketTensor) -> float:
    """The `O(n)`-invariant inner product `sum_ijk c_mu[i,j,k] c_lam[i,j,k]`.

    The sum runs over ordered pairs, so `mu(X_1, X_2) = X_3` has squared norm 2.
    """
    if mu.dim != lam.dim:
        raise DimensionMismatchError(
            f"Brackets of dimension {mu.dim} and {lam.dim} cannot be paired."
        )
    return float(np.einsum("ijk,ijk->", mu.coeffs, lam.coeffs))


def gl_act(
    g: npt.ArrayLike,
    mu: BracketTensor,
    max_condition: float = NumericsConfig().max_condition,
) -> BracketTensor:
    """The natural action `g.mu(X, Y) = g mu(g^-1 X, g^-1 Y)`.

    Raises:
        IllConditionedError: `g` is singular or its condition number exceeds
            `max_condition`.
    """
    matrix = as_square(g, mu.dim, "group element")
    condition = np.linalg.cond(matrix)
    if not np.isfinite(condition) or condition > max_condition:
        raise IllConditionedError(
            f"Group element has condition number {condition:.3e} "
            f"(bound {max_condition:.1e})."
        )
    inverse = np.linalg.inv(matrix)
    coeffs = np.einsum("ia,jb,ijk,lk->abl", inverse, inverse, mu.coeffs, matrix)
    return BracketTensor(coeffs)


def delta(mu: BracketTensor, a: npt.ArrayLike) -> BracketTensor:
    """`delta_mu(A) = -A.mu`, i.e. `(X, Y) -> -A mu(X, Y) + mu(AX, Y) + mu(X, AY)`.

    `delta_mu(A)` vanishes exactly when `A` is a derivation of `mu`, and
    `d/dt exp(tA).mu = -delta_mu(A)` at `t = 0`.
    """
    matrix = as_square(a, mu.dim)
    c = mu.coeffs
    coeffs = (
        -np.einsum("lk,abk->abl", matrix, c)
        + np.einsum("ia,ibk->abk", matrix, c)
        + np.einsum("jb,ajk->abk", matrix, c)
    )
    return BracketTensor(coeffs)


def delta_matrix(mu: BracketTensor) -> Array:
    """Matrix of the linear map `A -> delta_mu(A)`.

    Columns are indexed by the row-major entries of `A`, rows by `(i, j, k)` with
    `i < j`, so the matrix has shape `(n^2 (n - 1) / 2, n^2)`.
    """
    n = mu.dim
    c = mu.coeffs
    eye = np.eye(n)
    full = (
        -np.einsum("lp,abq->ablpq", eye, c)
        + np.einsum("qa,pbl->ablpq", eye, c)
        + np.einsum("qb,apl->ablpq", eye, c)
    )
    rows, cols = np.triu_indices(n, 1)
    return full[rows, cols].reshape(-1, n * n)


def random_bracket(n: int, rng: np.random.Generator) -> BracketTensor:
    """A Gaussian element of `Lambda^2 (R^n)* (x) R^n`.

    Jacobi does not hold in general.
    """
    coeffs = rng.standard_normal((n, n, n))
    return BracketTensor(0.5 * (coeffs - coeffs.transpose(1, 0, 2)))


def random_nilpotent_bracket(n: int, rng: np.random.Generator) -> BracketTensor:
    """A random tensor with `mu(X_i, X_j)` in `span(X_k : k > max(i, j))`.

    Every such tensor is nilpotent as a bilinear map, Jacobi is not implied.
    """
    coeffs = rng.standard_normal((n, n, n))
    i, j, k = np.indices((n, n, n))
    coeffs[k <= np.maximum(i, j)] = 0.0
    return BracketTensor(coeffs - coeffs.transpose(1, 0, 2))


def random_two_step_bracket(
    n1: int, n2: int, rng: np.random.Generator
) -> BracketTensor:
    """A random 2-step nilpotent Lie bracket with `mu(n1, n1)` inside the last `n2`
    coordinates."""
    n = n1 + n2
    coeffs = np.zeros((n, n, n))
    block = rng.standard_normal((n1, n1, n2))
    coeffs[:n1, :n1, n1:] = block - block.transpose(1, 0, 2)
    return BracketTensor(coeffs)
