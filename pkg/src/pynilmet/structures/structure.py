from __future__ import annotations

import enum
import logging
from dataclasses import dataclass, field

import numpy as np
import numpy.typing as npt

from pynilmet.algebra.bracket import Array
from pynilmet.exceptions import StructureError

logger = logging.getLogger(__name__)

STRUCTURE_TOL = 1e-12

_J_COUNT = {"none": 0, "symplectic": 1, "complex": 1, "hypercomplex": 3}


class StructureKind(enum.Enum):
    NONE = "none"
    SYMPLECTIC = "symplectic"
    COMPLEX = "complex"
    HYPERCOMPLEX = "hypercomplex"


@dataclass(frozen=True, eq=False)
class GeomStructure:
    """A linear structure `gamma` on `R^n` encoded by orthogonal complex structures.

    A symplectic form is stored through `J` with `omega(X, Y) = <X, J Y>`, a complex
    structure by `J` itself and a hypercomplex structure by `(J1, J2, J3)`. Every `J`
    satisfies `J^2 = -I` and `J^t J = I`, which builds the compatibility with the
    fixed inner product into the type.

    Raises:
        StructureError: wrong number of maps, wrong shapes or a violated identity.
    """

    kind: StructureKind
    dim: int
    j_maps: tuple[Array, ...] = field(default=())

    def __post_init__(self) -> None:
        maps = tuple(np.array(j, dtype=float) for j in self.j_maps)
        if len(maps) != _J_COUNT[self.kind.value]:
            raise StructureError(
                f"A {self.kind.value} structure needs {_J_COUNT[self.kind.value]} "
                f"J-maps, got {len(maps)}."
            )
        eye = np.eye(self.dim)
        for index, j in enumerate(maps, start=1):
            if j.shape != (self.dim, self.dim):
                raise StructureError(
                    f"J{index} has shape {j.shape}, expected ({self.dim}, {self.dim})."
                )
            if np.abs(j @ j + eye).max() > STRUCTURE_TOL:
                raise StructureError(f"J{index} does not satisfy J^2 = -I.")
            if np.abs(j.T @ j - eye).max() > STRUCTURE_TOL:
                raise StructureError(f"J{index} is not orthogonal.")
            j.setflags(write=False)
        if self.kind is StructureKind.HYPERCOMPLEX:
            j1, j2, j3 = maps
            if (
                np.abs(j1 @ j2 - j3).max() > STRUCTURE_TOL
                or np.abs(j2 @ j1 + j3).max() > STRUCTURE_TOL
            ):
                raise StructureError("J1 J2 = J3 = -J2 J1 does not hold.")
        object.__setattr__(self, "j_maps", maps)

    @classmethod
    def none(cls, n: int) -> GeomStructure:
        """No structure; every metric is compatible and `g_gamma = gl(n)`."""
        return cls(StructureKind.NONE, n)

    @property
    def j(self) -> Array:
        """The single `J` of a symplectic or complex structure."""
        if len(self.j_maps) != 1:
            raise StructureError(
                f"A {self.kind.value} structure has no single J-map."
            )
        return self.j_maps[0]

    @property
    def contains_identity(self) -> bool:
        """Whether `R I` lies in the structure algebra `g_gamma`."""
        return self.kind is not StructureKind.SYMPLECTIC

    def omega(self, x: npt.ArrayLike, y: npt.ArrayLike) -> float:
        """The symplectic form `omega(x, y) = <x, J y>`."""
        if self.kind is not StructureKind.SYMPLECTIC:
            raise StructureError(f"A {self.kind.value} structure has no 2-form.")
        return float(np.asarray(x) @ self.j @ np.asarray(y))

    def require(self, kind: StructureKind) -> None:
        if self.kind is not kind:
            raise StructureError(
                f"Expected a {kind.value} structure, got {self.kind.value}."
            )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GeomStructure):
            return NotImplemented
        return (
            self.kind is other.kind
            and self.dim == other.dim
            and all(
                np.array_equal(a, b)
                for a, b in zip(self.j_maps, other.j_maps, strict=True)
            )
        )

    def __hash__(self) -> int:
        return hash((self.kind, self.dim, *(j.tobytes() for j in self.j_maps)))


def _require_even(n: int, modulus: int = 2) -> None:
    if n <= 0 or n % modulus:
        raise StructureError(f"Dimension {n} is not a positive multiple of {modulus}.")


def standard_symplectic(n: int) -> GeomStructure:
    """`J X_k = X_{n+1-k}` for `k <= n/2` and `J X_k = -X_{n+1-k}` otherwise.

    For `n = 4` this is `J X_1 = X_4`, `J X_2 = X_3`, `J X_3 = -X_2`, `J X_4 = -X_1`.
    """
    _require_even(n)
    j = np.zeros((n, n))
    for k in range(n // 2):
        j[n - 1 - k, k] = 1.0
        j[k, n - 1 - k] = -1.0
    return GeomStructure(StructureKind.SYMPLECTIC, n, (j,))


_ROTATION = np.array([[0.0, -1.0], [1.0, 0.0]])

_QUATERNION_BLOCKS = (
    np.array(
        [[0, -1, 0, 0], [1, 0, 0, 0], [0, 0, 0, -1], [0, 0, 1, 0]], dtype=float
    ),
    np.array(
        [[0, 0, -1, 0], [0, 0, 0, 1], [1, 0, 0, 0], [0, -1, 0, 0]], dtype=float
    ),
    np.array(
        [[0, 0, 0, -1], [0, 0, -1, 0], [0, 1, 0, 0], [1, 0, 0, 0]], dtype=float
    ),
)


def standard_complex(n: int) -> GeomStructure:
    """Block diagonal `J` with `[[0, -1], [1, 0]]` blocks."""
    _require_even(n)
    j = np.kron(np.eye(n // 2), _ROTATION)
    return GeomStructure(StructureKind.COMPLEX, n, (j,))


def antidiagonal_complex(n: int) -> GeomStructure:
    """The `J` of `standard_symplectic(n)` taken as an almost complex structure.

    On diagonal matrices `Ric^c` then averages the entries `k` and `n + 1 - k`, so
    `filiform4` has `Ric^c = -1/4 I` and the Heisenberg brackets are minimal.
    """
    return GeomStructure(StructureKind.COMPLEX, n, standard_symplectic(n).j_maps)


def standard_hypercomplex(n: int) -> GeomStructure:
    """Block diagonal copies of the standard quaternionic triple on each `R^4`."""
    _require_even(n, modulus=4)
    maps = tuple(np.kron(np.eye(n // 4), block) for block in _QUATERNION_BLOCKS)
    return GeomStructure(StructureKind.HYPERCOMPLEX, n, maps)


def standard_structure(kind: StructureKind, n: int) -> GeomStructure:
    if kind is StructureKind.NONE:
        return GeomStructure.none(n)
    builders = {
        StructureKind.SYMPLECTIC: standard_symplectic,
        StructureKind.COMPLEX: standard_complex,
        StructureKind.HYPERCOMPLEX: standard_hypercomplex,
    }
    return builders[kind](n)
