from __future__ import annotations

import json
import logging
import math
from typing import TYPE_CHECKING, Any, NamedTuple

import numpy as np

from pynilmet.algebra.bracket import BracketTensor
from pynilmet.exceptions import DocumentError
from pynilmet.structures.structure import (
    GeomStructure,
    StructureKind,
    standard_structure,
)

if TYPE_CHECKING:
    from pynilmet.utils.serialization.types import BracketDocument

logger = logging.getLogger(__name__)

_BRACKET_ENTRY_LENGTH = 4


class ParsedDocument(NamedTuple):
    bracket: BracketTensor
    structure: GeomStructure
    basis_labels: list[str]
    metadata: dict[str, Any]


def _is_int(value: Any) -> bool:
    return isinstance(value, int) and not isinstance(value, bool)


def _is_number(value: Any) -> bool:
    return (
        isinstance(value, int | float)
        and not isinstance(value, bool)
        and math.isfinite(value)
    )


class Deserializer:
    """Turns a [`BracketDocument`][pynilmet.utils.serialization.types.BracketDocument]
    into a bracket and its structure, naming the offending field on errors."""

    @classmethod
    def deserialize_document(cls, data: Any) -> ParsedDocument:
        """Validates `data` field by field.

        Raises:
            DocumentError: the document is malformed.
            StructureError: the structure does not fit the dimension.
        """
        if not isinstance(data, dict):
            raise DocumentError("A bracket document must be a JSON object.")
        n = cls.deserialize_dim(data.get("dim"))
        coeffs = cls.deserialize_brackets(data.get("brackets"), n)
        labels = cls.deserialize_labels(data.get("basis_labels"), n)
        structure = cls.deserialize_structure(data.get("structure"), n)
        metadata = data.get("metadata", {})
        if not isinstance(metadata, dict):
            raise DocumentError("metadata must be an object.", field="metadata")
        return ParsedDocument(BracketTensor(coeffs), structure, labels, metadata)

    @classmethod
    def deserialize_dim(cls, value: Any) -> int:
        if not _is_int(value) or value <= 0:
            raise DocumentError(
                f"dim must be a positive integer, got {value!r}.", field="dim"
            )
        return int(value)

    @classmethod
    def deserialize_brackets(cls, value: Any, n: int) -> np.ndarray[Any, Any]:
        """Folds every entry onto `i < j`; `[j, i, k, v]` reads as `[i, j, k, -v]`.

        Repeated entries must agree.
        """
        if not isinstance(value, list):
            raise DocumentError("brackets must be a list.", field="brackets")
        coeffs = np.zeros((n, n, n))
        seen: set[tuple[int, int, int]] = set()
        for index, entry in enumerate(value):
            field = f"brackets[{index}]"
            i, j, k, coefficient = cls.deserialize_entry(entry, n, field)
            if i > j:
                i, j, coefficient = j, i, -coefficient
            key = (i, j, k)
            if key in seen:
                if coeffs[i, j, k] != coefficient:
                    raise DocumentError(
                        f"conflicting duplicate of mu(X{i + 1}, X{j + 1}) along "
                        f"X{k + 1}.",
                        field=field,
                    )
                continue
            seen.add(key)
            coeffs[i, j, k] = coefficient
            coeffs[j, i, k] = -coefficient
        return coeffs

    @classmethod
    def deserialize_entry(
        cls, entry: Any, n: int, field: str
    ) -> tuple[int, int, int, float]:
        if not isinstance(entry, list) or len(entry) != _BRACKET_ENTRY_LENGTH:
            raise DocumentError("an entry must be [i, j, k, value].", field=field)
        for position, index in enumerate(entry[:3]):
            if not _is_int(index) or not 1 <= index <= n:
                raise DocumentError(
                    f"index {index!r} is not an integer in 1..{n}.",
                    field=f"{field}[{position}]",
                )
        if not _is_number(entry[3]):
            raise DocumentError(
                f"value {entry[3]!r} is not a finite number.", field=f"{field}[3]"
            )
        i, j, k = (int(index) - 1 for index in entry[:3])
        if i == j:
            raise DocumentError("mu(X_i, X_i) entries are not allowed.", field=field)
        return i, j, k, float(entry[3])

    @classmethod
    def deserialize_labels(cls, value: Any, n: int) -> list[str]:
        if value is None:
            return [f"X{i + 1}" for i in range(n)]
        if (
            not isinstance(value, list)
            or len(value) != n
            or not all(isinstance(label, str) for label in value)
        ):
            raise DocumentError(
                f"basis_labels must be a list of {n} strings.", field="basis_labels"
            )
        return list(value)

    @classmethod
    def deserialize_structure(cls, value: Any, n: int) -> GeomStructure:
        if value is None:
            return GeomStructure.none(n)
        if not isinstance(value, dict):
            raise DocumentError("structure must be an object.", field="structure")
        try:
            kind = StructureKind(value.get("kind"))
        except ValueError:
            raise DocumentError(
                f"unknown structure kind {value.get('kind')!r}.",
                field="structure.kind",
            ) from None
        j_maps = value.get("j_maps", "standard")
        if j_maps == "standard":
            return standard_structure(kind, n)
        if not isinstance(j_maps, list):
            raise DocumentError(
                'j_maps must be "standard" or a list of matrices.',
                field="structure.j_maps",
            )
        matrices = []
        for index, matrix in enumerate(j_maps):
            array = np.asarray(matrix, dtype=object)
            if array.shape != (n, n) or not all(_is_number(x) for x in array.flat):
                raise DocumentError(
                    f"expected an {n}x{n} matrix of numbers.",
                    field=f"structure.j_maps[{index}]",
                )
            matrices.append(array.astype(float))
        return GeomStructure(kind, n, tuple(matrices))


def load(data: BracketDocument | dict[str, Any]) -> ParsedDocument:
    """Deserialize a document already decoded from JSON."""
    return Deserializer.deserialize_document(data)


def parse_document(text: str) -> ParsedDocument:
    """Decodes JSON `text` and deserializes the bracket document.

    Raises:
        DocumentError: invalid JSON, with its line number, or a malformed document.
    """
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise DocumentError(f"invalid JSON: {e.msg}", line=e.lineno) from e
    return Deserializer.deserialize_document(data)
