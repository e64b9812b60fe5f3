from __future__ import annotations

import logging
from typing import TYPE_CHECKING, NamedTuple

import numpy as np
import numpy.typing as npt

from pynilmet.algebra.bracket import Array, BracketTensor, as_square
from pynilmet.config import NumericsConfig
from pynilmet.exceptions import StructureError
from pynilmet.structures.structure import STRUCTURE_TOL, GeomStructure, StructureKind

if TYPE_CHECKING:
    from collections.abc import Callable

logger = logging.getLogger(__name__)


class ComplexFlags(NamedTuple):
    abelian: bool
    """`mu(JX, JY) = mu(X, Y)`."""
    biinvariant: bool
    """`mu(JX, Y) = J mu(X, Y)`."""


def _almost_complex(j: npt.ArrayLike, n: int) -> Array:
    matrix = as_square(j, n, "J-map")
    if np.abs(matrix @ matrix + np.eye(n)).max() > STRUCTURE_TOL:
        raise StructureError("J does not satisfy J^2 = -I.")
    return matrix


def _pulled_back(mu: BracketTensor, a: Array, b: Array) -> Array:
    """Structure constants of `(X, Y) -> mu(AX, BY)`."""
    return np.einsum("ia,jb,ijk->abk", a, b, mu.coeffs)


def _pushed(j: Array, coeffs: Array) -> Array:
    """Structure constants of `(X, Y) -> J c(X, Y)`."""
    return np.einsum("lk,abk->abl", j, coeffs)


def _pair_residual(coeffs: Array, mu: BracketTensor) -> float:
    if coeffs.size == 0:
        return 0.0
    return float(np.linalg.norm(coeffs, axis=-1).max() / (1.0 + mu.norm))


def symplectic_closed_residual(mu: BracketTensor, gamma: GeomStructure) -> float:
    """Largest cyclic sum `omega(mu(X_i, X_j), X_k) + cyclic`, divided by `1 + |mu|`.

    Vanishes exactly when `omega` is closed for the Chevalley-Eilenberg differential.
    """
    gamma.require(StructureKind.SYMPLECTIC)
    if mu.dim == 0:
        return 0.0
    w = np.einsum("ijl,lk->ijk", mu.coeffs, gamma.j)
    cyclic = w + np.einsum("jki->ijk", w) + np.einsum("kij->ijk", w)
    return float(np.abs(cyclic).max() / (1.0 + mu.norm))


def nijenhuis_residual(mu: BracketTensor, j: npt.ArrayLike) -> float:
    """Largest `|mu(JX, JY) - mu(X, Y) - J mu(JX, Y) - J mu(X, JY)|` over basis pairs,
    divided by `1 + |mu|`.

    Raises:
        StructureError: `J^2 != -I`.
    """
    matrix = _almost_complex(j, mu.dim)
    eye = np.eye(mu.dim)
    tensor = (
        _pulled_back(mu, matrix, matrix)
        - mu.coeffs
        - _pushed(matrix, _pulled_back(mu, matrix, eye))
        - _pushed(matrix, _pulled_back(mu, eye, matrix))
    )
    return _pair_residual(tensor, mu)


def hypercomplex_residual(mu: BracketTensor, gamma: GeomStructure) -> float:
    """Largest of the Nijenhuis residuals of `J1`, `J2` and `J3`."""
    gamma.require(StructureKind.HYPERCOMPLEX)
    return max(nijenhuis_residual(mu, j) for j in gamma.j_maps)


def classify_complex_flags(
    mu: BracketTensor,
    j: npt.ArrayLike,
    tol: float = NumericsConfig().integrability_tol,
) -> ComplexFlags:
    """Tests whether `J` is abelian and whether it is bi-invariant.

    Both defects are normalized like the Nijenhuis residual. The zero bracket is
    both.
    """
    matrix = _almost_complex(j, mu.dim)
    eye = np.eye(mu.dim)
    abelian_defect = _pair_residual(_pulled_back(mu, matrix, matrix) - mu.coeffs, mu)
    biinvariant_defect = _pair_residual(
        _pulled_back(mu, matrix, eye) - _pushed(matrix, mu.coeffs), mu
    )
    logger.debug(
        "Abelian defect %.3e, bi-invariant defect %.3e.",
        abelian_defect,
        biinvariant_defect,
    )
    return ComplexFlags(
        abelian=abelian_defect <= tol, biinvariant=biinvariant_defect <= tol
    )


def _complex_residual(mu: BracketTensor, gamma: GeomStructure) -> float:
    return nijenhuis_residual(mu, gamma.j)


_RESIDUALS: dict[StructureKind, Callable[[BracketTensor, GeomStructure], float]] = {
    StructureKind.NONE: lambda mu, gamma: 0.0,
    StructureKind.SYMPLECTIC: symplectic_closed_residual,
    StructureKind.COMPLEX: _complex_residual,
    StructureKind.HYPERCOMPLEX: hypercomplex_residual,
}


def integrability_residual(mu: BracketTensor, gamma: GeomStructure) -> float:
    """Closedness, Nijenhuis or hypercomplex residual according to `gamma.kind`."""
    if gamma.dim != mu.dim:
        raise StructureError(
            f"Structure of dimension {gamma.dim} on a bracket of dimension {mu.dim}."
        )
    return _RESIDUALS[gamma.kind](mu, gamma)
