from __future__ import annotations

import logging

import numpy as np
import numpy.typing as npt
import scipy.linalg

from pynilmet.algebra.bracket import Array, as_square
from pynilmet.config import NumericsConfig
from pynilmet.exceptions import NotSymmetricError, StructureError
from pynilmet.structures.structure import GeomStructure, StructureKind

logger = logging.getLogger(__name__)

SYMMETRY_TOL = 1e-12
MAX_GROUP_SCALE = 2.0

Seed = int | np.random.Generator | None


def _matrix_for(a: npt.ArrayLike, gamma: GeomStructure) -> Array:
    return as_square(a, gamma.dim)


def project_invariant(a: npt.ArrayLike, gamma: GeomStructure) -> Array:
    """Orthogonal projection `p` of a symmetric map onto `p_gamma`.

    * none: `A`
    * symplectic: `(A + J A J) / 2`, which anticommutes with `J`
    * complex: `(A - J A J) / 2`, which commutes with `J`
    * hypercomplex: `(A - J1 A J1 - J2 A J2 - J3 A J3) / 4`

    Raises:
        NotSymmetricError: `A` is not symmetric.
    """
    matrix = _matrix_for(a, gamma)
    scale = max(1.0, np.abs(matrix).max(initial=0.0))
    if np.abs(matrix - matrix.T).max(initial=0.0) > SYMMETRY_TOL * scale:
        raise NotSymmetricError("project_invariant expects a symmetric map.")
    if gamma.kind is StructureKind.NONE:
        return matrix.copy()
    if gamma.kind is StructureKind.SYMPLECTIC:
        return 0.5 * (matrix + gamma.j @ matrix @ gamma.j)
    return _average_commuting(matrix, gamma)


def _average_commuting(matrix: Array, gamma: GeomStructure) -> Array:
    conjugates = sum((j @ matrix @ j for j in gamma.j_maps), np.zeros_like(matrix))
    return (matrix - conjugates) / (1 + len(gamma.j_maps))


def project_structure_algebra(b: npt.ArrayLike, gamma: GeomStructure) -> Array:
    """Orthogonal projection under `tr(A^t B)` of any matrix onto `g_gamma`.

    `g_gamma` is `sp(n, R)`, `gl(n/2, C)` or `gl(n/4, H)` in the fixed basis and all
    of `gl(n)` for no structure. Each of them is closed under transposition.
    """
    matrix = _matrix_for(b, gamma)
    if gamma.kind is StructureKind.NONE:
        return matrix.copy()
    if gamma.kind is StructureKind.SYMPLECTIC:
        return 0.5 * (matrix + gamma.j @ matrix.T @ gamma.j)
    return _average_commuting(matrix, gamma)


def structure_algebra_residual(a: npt.ArrayLike, gamma: GeomStructure) -> float:
    """Frobenius defect of membership in `g_gamma`.

    Symplectic `|A^t J + J A|`, complex `|A J - J A|`, hypercomplex the largest
    commutator with `J1`, `J2`, `J3`; zero without a structure.
    """
    matrix = _matrix_for(a, gamma)
    if gamma.kind is StructureKind.NONE:
        return 0.0
    if gamma.kind is StructureKind.SYMPLECTIC:
        return float(np.linalg.norm(matrix.T @ gamma.j + gamma.j @ matrix))
    return max(
        float(np.linalg.norm(matrix @ j - j @ matrix)) for j in gamma.j_maps
    )


def _random_algebra_element(
    gamma: GeomStructure, rng: np.random.Generator
) -> Array:
    b = project_structure_algebra(rng.standard_normal((gamma.dim, gamma.dim)), gamma)
    return b / np.linalg.norm(b)


def random_structure_group_element(
    gamma: GeomStructure,
    scale: float = 1.0,
    seed: Seed = NumericsConfig().seed,
) -> Array:
    """`exp(scale * B)` for a random unit-norm `B` in `g_gamma`.

    The result preserves `gamma`: `g^t J g = J` (symplectic) or `g J_i = J_i g`.
    Scales above 2 are capped to keep the condition number moderate.
    """
    if scale < 0:
        raise StructureError(f"Scale must be non-negative, got {scale}.")
    if scale > MAX_GROUP_SCALE:
        logger.warning("Capping group element scale %s to %s.", scale, MAX_GROUP_SCALE)
        scale = MAX_GROUP_SCALE
    rng = np.random.default_rng(seed)
    if scale == 0:
        return np.eye(gamma.dim)
    return scipy.linalg.expm(scale * _random_algebra_element(gamma, rng))


def random_structure_isometry(
    gamma: GeomStructure, seed: Seed = NumericsConfig().seed
) -> Array:
    """A random orthogonal element of `G_gamma`, i.e. of `K_gamma`."""
    rng = np.random.default_rng(seed)
    b = _random_algebra_element(gamma, rng)
    skew = 0.5 * (b - b.T)
    return scipy.linalg.expm(np.pi * skew / max(np.linalg.norm(skew), 1e-300))


def random_invariant_symmetric(
    gamma: GeomStructure, seed: Seed = NumericsConfig().seed
) -> Array:
    """A random unit-norm element of `p_gamma`, the symmetric part of `g_gamma`."""
    rng = np.random.default_rng(seed)
    b = rng.standard_normal((gamma.dim, gamma.dim))
    a = project_invariant(0.5 * (b + b.T), gamma)
    return a / np.linalg.norm(a)
