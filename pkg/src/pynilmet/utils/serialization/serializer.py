from __future__ import annotations

import json
import logging
from enum import Enum
from typing import TYPE_CHECKING, Any

import numpy as np

from pynilmet.exceptions import NilmetError
from pynilmet.minimality.certificate import SolitonCertificate
from pynilmet.minimality.invariants import Distinction, IsometryInvariants
from pynilmet.minimality.types import CriticalType
from pynilmet.structures.structure import GeomStructure, standard_structure

if TYPE_CHECKING:
    from collections.abc import Mapping, Sequence

    from pynilmet.algebra.bracket import BracketTensor
    from pynilmet.utils.serialization.types import (
        BracketDocument,
        Matrix,
        SerializedCertificate,
        SerializedCriticalType,
        SerializedDistinction,
        SerializedInvariants,
        SerializedStructure,
    )

logger = logging.getLogger(__name__)


class SerializationError(NilmetError, TypeError):
    pass


def _matrix(a: np.ndarray[Any, Any]) -> Matrix:
    return [[float(x) for x in row] for row in np.asarray(a)]


class Serializer:
    """Turns pynilmet objects into JSON compatible `TypedDict`s and primitives."""

    @classmethod
    def serialize_object(cls, obj: Any) -> Any:  # noqa: C901, PLR0911
        """Serialize `obj` to plain data.

        Raises:
            SerializationError: the type of `obj` is not supported.
        """
        if isinstance(obj, SolitonCertificate):
            return cls._serialize_certificate(obj)
        if isinstance(obj, CriticalType):
            return cls._serialize_type(obj)
        if isinstance(obj, IsometryInvariants):
            return cls._serialize_invariants(obj)
        if isinstance(obj, Distinction):
            return cls._serialize_distinction(obj)
        if isinstance(obj, GeomStructure):
            return cls._serialize_structure(obj)
        if isinstance(obj, Enum):
            return obj.value
        if isinstance(obj, np.ndarray):
            return obj.tolist()
        if isinstance(obj, np.generic):
            return obj.item()
        if isinstance(obj, list | tuple):
            return [cls.serialize_object(item) for item in obj]
        if isinstance(obj, dict):
            return {str(key): cls.serialize_object(value) for key, value in obj.items()}
        if isinstance(obj, int | float | bool | str | None):
            return obj
        raise SerializationError(f"Could not serialize object of type {type(obj)}.")

    @classmethod
    def _serialize_structure(cls, obj: GeomStructure) -> SerializedStructure:
        if obj == standard_structure(obj.kind, obj.dim):
            return {"kind": obj.kind.value, "j_maps": "standard"}
        return {"kind": obj.kind.value, "j_maps": [_matrix(j) for j in obj.j_maps]}

    @classmethod
    def _serialize_certificate(cls, obj: SolitonCertificate) -> SerializedCertificate:
        return {
            "verdict": obj.verdict.value,
            "c": obj.c,
            "derivation": _matrix(obj.derivation),
            "residual": obj.residual,
            "tol": obj.tol,
        }

    @classmethod
    def _serialize_type(cls, obj: CriticalType) -> SerializedCriticalType:
        return {
            "type": str(obj),
            "ks": list(obj.ks),
            "ds": list(obj.ds),
            "scale": obj.scale,
        }

    @classmethod
    def _serialize_invariants(cls, obj: IsometryInvariants) -> SerializedInvariants:
        return {
            "scal": obj.scal,
            "ricci_spectrum": list(obj.ricci_spectrum),
            "center_spectrum": list(obj.center_spectrum),
            "f_value": obj.f_value,
        }

    @classmethod
    def _serialize_distinction(cls, obj: Distinction) -> SerializedDistinction:
        return {
            "verdict": obj.verdict.value,
            "invariant": obj.invariant,
            "difference": obj.difference,
        }


def dump(obj: Any) -> Any:
    """Serialize `obj` with the
    [`Serializer`][pynilmet.utils.serialization.serializer.Serializer]."""
    return Serializer.serialize_object(obj)


def document(
    mu: BracketTensor,
    gamma: GeomStructure,
    basis_labels: Sequence[str] | None = None,
    metadata: Mapping[str, Any] | None = None,
) -> BracketDocument:
    """The canonical document of `(mu, gamma)`.

    Only entries with `i < j` and a non-zero value are listed, ordered by
    `(i, j, k)` with 1-based indices.
    """
    n = mu.dim
    brackets: list[list[int | float]] = [
        [int(i) + 1, int(j) + 1, int(k) + 1, float(mu.coeffs[i, j, k])]
        for i, j, k in zip(*np.nonzero(mu.coeffs), strict=True)
        if i < j
    ]
    result: BracketDocument = {
        "dim": n,
        "basis_labels": list(basis_labels or [f"X{i + 1}" for i in range(n)]),
        "brackets": brackets,
        "structure": dump(gamma),
    }
    if metadata:
        result["metadata"] = dump(dict(metadata))
    return result


def emit_document(
    mu: BracketTensor,
    gamma: GeomStructure,
    basis_labels: Sequence[str] | None = None,
    metadata: Mapping[str, Any] | None = None,
) -> str:
    """The canonical document of `(mu, gamma)` as indented JSON text."""
    return json.dumps(document(mu, gamma, basis_labels, metadata), indent=2)
