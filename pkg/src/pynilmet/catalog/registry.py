from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field
from types import MappingProxyType
from typing import TYPE_CHECKING, NamedTuple

from pynilmet.catalog import complex as complex_models
from pynilmet.catalog import hypercomplex, symplectic
from pynilmet.exceptions import UnknownCatalogEntryError
from pynilmet.minimality.types import CriticalType
from pynilmet.structures.structure import StructureKind, standard_structure

if TYPE_CHECKING:
    from collections.abc import Callable, Mapping

    from pynilmet.algebra.bracket import BracketTensor
    from pynilmet.structures.structure import GeomStructure

logger = logging.getLogger(__name__)

ParamValue = float | int | bool | tuple[float, ...]

_RST_DIAGONAL = (3.0 + math.sqrt(3.0)) / 6.0
_INV_SQRT3 = 1.0 / math.sqrt(3.0)


@dataclass(frozen=True)
class CatalogEntry:
    """A named example family with default parameters.

    Attributes:
        name:
            Identifier used by `get_entry` and the command line.
        dim:
            Dimension of the bracket built from the default parameters.
        params:
            Parameter names with their defaults; the default's type fixes how a
            value given on the command line is parsed.
        structure_kind:
            The structure the example is paired with, in its standard form.
        description:
            One-line summary.
        builder:
            The constructor called with the merged parameters.
    """

    name: str
    dim: int
    params: Mapping[str, ParamValue]
    structure_kind: StructureKind
    description: str
    builder: Callable[..., BracketTensor] = field(repr=False, compare=False)

    def build(self, **params: ParamValue) -> BracketTensor:
        """Builds the bracket, overriding defaults with `params`.

        Raises:
            ValueError: an unknown parameter name.
        """
        unknown = set(params) - set(self.params)
        if unknown:
            raise ValueError(
                f"Unknown parameter(s) {sorted(unknown)} for {self.name!r}; "
                f"expected {sorted(self.params)}."
            )
        return self.builder(**{**self.params, **params})

    def structure(self, mu: BracketTensor) -> GeomStructure:
        return standard_structure(self.structure_kind, mu.dim)

    def parse_param(self, key: str, text: str) -> ParamValue:
        """Converts the command line value `text` to the type of the default.

        Vectors are written as comma separated numbers, e.g. `a=0,1`.

        Raises:
            ValueError: unknown key or malformed value.
        """
        if key not in self.params:
            raise ValueError(f"{self.name!r} has no parameter {key!r}.")
        default = self.params[key]
        if isinstance(default, bool):
            lowered = text.strip().lower()
            if lowered not in ("true", "false", "1", "0"):
                raise ValueError(f"{key} expects true or false, got {text!r}.")
            return lowered in ("true", "1")
        if isinstance(default, int):
            return int(text)
        if isinstance(default, tuple):
            values = tuple(float(part) for part in text.split(","))
            if len(values) != len(default):
                raise ValueError(
                    f"{key} expects {len(default)} components, got {len(values)}."
                )
            return values
        return float(text)


class TableRow(NamedTuple):
    """A symplectic example with the type of its minimal compatible metric."""

    entry: str
    params: Mapping[str, ParamValue]
    expected: CriticalType


_ZERO2 = (0.0, 0.0)
_ZERO4 = (0.0, 0.0, 0.0, 0.0)

_ENTRIES = (
    CatalogEntry(
        "heisenberg",
        4,
        {"n": 4},
        StructureKind.SYMPLECTIC,
        "h_3 + R^(n-3) with mu(X1, X2) = X3",
        symplectic.heisenberg,
    ),
    CatalogEntry(
        "filiform4",
        4,
        {},
        StructureKind.SYMPLECTIC,
        "mu(X1, X2) = X3, mu(X1, X3) = X4",
        symplectic.filiform4,
    ),
    CatalogEntry(
        "abc",
        6,
        {"a": 1.0, "b": 1.0, "c": 0.0},
        StructureKind.SYMPLECTIC,
        "two-step family mu(a, b, c), closed iff a - b + c = 0",
        symplectic.abc_family,
    ),
    CatalogEntry(
        "m26",
        6,
        {"x": 0.0, "y": 1.0},
        StructureKind.SYMPLECTIC,
        "mu(x, 1, x + y, 1, 1, y) on the ellipse x^2 + xy + y^2 = 1",
        symplectic.m26_family,
    ),
    CatalogEntry(
        "m26_tensor",
        6,
        {"a": 0.0, "b": 1.0, "c": 1.0, "d": 1.0, "e": 1.0, "f": 1.0},
        StructureKind.SYMPLECTIC,
        "six-parameter tensor, Jacobi iff bf = de, closed iff a - f + c = 0",
        symplectic.m26_tensor,
    ),
    CatalogEntry(
        "m26_arc",
        6,
        {"e": 1.0, "branch": -1},
        StructureKind.SYMPLECTIC,
        "closed Lie brackets with Ric^ac = -1/4 diag(5, 3, 1, -1, -3, -5)",
        symplectic.m26_arc,
    ),
    CatalogEntry(
        "complex_w6",
        6,
        {
            "a": (1.0, 0.0),
            "b": _ZERO2,
            "c": _ZERO2,
            "d": _ZERO2,
            "e": _ZERO2,
            "f": (-1.0, 0.0),
        },
        StructureKind.COMPLEX,
        "general element of Lambda^2 (R^4)^* x R^2",
        complex_models.complex_w6,
    ),
    CatalogEntry(
        "complex_abelian_curve",
        6,
        {"s": 0.6, "t": 0.8},
        StructureKind.COMPLEX,
        "abelian complex structures A = (s, t), F = (-s, t)",
        complex_models.complex_abelian_curve,
    ),
    CatalogEntry(
        "complex_iwasawa_curve",
        6,
        {"s": 0.5, "t": 0.5},
        StructureKind.COMPLEX,
        "abelian complex structures on the Iwasawa manifold",
        complex_models.complex_iwasawa_curve,
    ),
    CatalogEntry(
        "complex_htype_curve",
        6,
        {"s": 0.6, "t": 0.8},
        StructureKind.COMPLEX,
        "modified H-type abelian complex structures",
        complex_models.complex_htype_curve,
    ),
    CatalogEntry(
        "complex_nonabelian_curve",
        6,
        {"t": 1.0, "normalize": False},
        StructureKind.COMPLEX,
        "non-abelian complex structures, bi-invariant at t = 1",
        complex_models.complex_nonabelian_curve,
    ),
    CatalogEntry(
        "hypercomplex_w8",
        8,
        {
            "a": (0.0, 1.0, 0.0, 0.0),
            "b": (0.0, 0.0, 1.0, 0.0),
            "c": (0.0, 0.0, 0.0, 1.0),
            "t": _ZERO4,
        },
        StructureKind.HYPERCOMPLEX,
        "integrable element of Lambda^2 (R^4)^* x R^4 given by A, B, C, T",
        hypercomplex.hypercomplex_w8,
    ),
    CatalogEntry(
        "hypercomplex_abelian_rst",
        8,
        {"r": _INV_SQRT3, "s": _INV_SQRT3, "t": _INV_SQRT3},
        StructureKind.HYPERCOMPLEX,
        "abelian hypercomplex structures, r^2 + s^2 + t^2 = 1",
        hypercomplex.hypercomplex_abelian_rst,
    ),
    CatalogEntry(
        "hypercomplex_rst",
        8,
        {"r": _RST_DIAGONAL, "s": _RST_DIAGONAL, "t": _RST_DIAGONAL},
        StructureKind.HYPERCOMPLEX,
        "non-abelian hypercomplex structures with T = (0, 0, 0, 1)",
        hypercomplex.hypercomplex_rst,
    ),
    CatalogEntry(
        "hypercomplex_curve",
        8,
        {"t": 0.5},
        StructureKind.HYPERCOMPLEX,
        "non-abelian hypercomplex structures with T = (0, 0, 0, 2t)",
        hypercomplex.hypercomplex_curve,
    ),
)

CATALOG: Mapping[str, CatalogEntry] = MappingProxyType(
    {entry.name: entry for entry in _ENTRIES}
)

SYMPLECTIC_TYPES = (
    TableRow("heisenberg", {"n": 4}, CriticalType((3, 4, 6, 7), (1, 1, 1, 1))),
    TableRow("heisenberg", {"n": 6}, CriticalType((1, 2), (3, 3))),
    TableRow("heisenberg", {"n": 8}, CriticalType((2, 3, 4), (3, 2, 3))),
    TableRow("filiform4", {}, CriticalType((1, 2, 3, 4), (1, 1, 1, 1))),
    TableRow("abc", {"a": 1.0, "b": 1.0, "c": 0.0}, CriticalType((1, 2), (3, 3))),
    TableRow(
        "m26_arc", {"e": 1.0, "branch": -1}, CriticalType((1, 2, 3, 4, 5, 6), (1,) * 6)
    ),
)
"""The symplectic examples and the types of their minimal compatible metrics."""


def get_entry(name: str) -> CatalogEntry:
    """Looks up a catalog entry by name.

    Raises:
        UnknownCatalogEntryError: no entry is called `name`.
    """
    try:
        return CATALOG[name]
    except KeyError:
        raise UnknownCatalogEntryError(
            f"Unknown catalog entry {name!r}; known: {', '.join(CATALOG)}."
        ) from None


def build(name: str, **params: ParamValue) -> tuple[BracketTensor, GeomStructure]:
    """The bracket of entry `name` together with its standard structure."""
    entry = get_entry(name)
    mu = entry.build(**params)
    logger.debug("Built catalog entry %s with %s.", name, params)
    return mu, entry.structure(mu)
