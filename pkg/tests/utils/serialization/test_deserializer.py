import json
from typing import Any

import numpy as np
import pytest
from pynilmet.algebra import BracketTensor
from pynilmet.catalog import build, filiform4
from pynilmet.exceptions import DocumentError, StructureError
from pynilmet.structures import GeomStructure, StructureKind, standard_symplectic
from pynilmet.utils.serialization.deserializer import load, parse_document
from pynilmet.utils.serialization.serializer import emit_document


def base_document(**fields: Any) -> dict[str, Any]:
    return {"dim": 3, "brackets": [[1, 2, 3, 1.0]], **fields}


def test_minimal_document() -> None:
    parsed = load(base_document())
    assert parsed.bracket == BracketTensor.from_triples(3, [(1, 2, 3, 1.0)])
    assert parsed.structure == GeomStructure.none(3)
    assert parsed.basis_labels == ["X1", "X2", "X3"]
    assert parsed.metadata == {}


def test_reversed_entries_are_folded() -> None:
    parsed = load(base_document(brackets=[[2, 1, 3, 1.0], [1, 2, 3, -1.0]]))
    assert parsed.bracket.coeffs[0, 1, 2] == -1.0


def test_conflicting_duplicates() -> None:
    with pytest.raises(DocumentError) as excinfo:
        load(base_document(brackets=[[1, 2, 3, 1.0], [2, 1, 3, 1.0]]))
    assert excinfo.value.field == "brackets[1]"


@pytest.mark.parametrize(
    "fields, field",
    [
        ({"dim": 0}, "dim"),
        ({"dim": 2.0}, "dim"),
        ({"dim": True}, "dim"),
        ({"brackets": {}}, "brackets"),
        ({"brackets": [[1, 2, 3]]}, "brackets[0]"),
        ({"brackets": [[1, 2, 4, 1.0]]}, "brackets[0][2]"),
        ({"brackets": [[0, 2, 3, 1.0]]}, "brackets[0][0]"),
        ({"brackets": [[1, 2.0, 3, 1.0]]}, "brackets[0][1]"),
        ({"brackets": [[1, 2, 3, "one"]]}, "brackets[0][3]"),
        ({"brackets": [[1, 1, 3, 1.0]]}, "brackets[0]"),
        ({"basis_labels": ["a", "b"]}, "basis_labels"),
        ({"structure": "symplectic"}, "structure"),
        ({"structure": {"kind": "kaehler"}}, "structure.kind"),
        ({"structure": {"kind": "complex", "j_maps": 1}}, "structure.j_maps"),
        ({"metadata": []}, "metadata"),
    ],
)
def test_invalid_fields(fields: dict[str, Any], field: str) -> None:
    with pytest.raises(DocumentError) as excinfo:
        load(base_document(**fields))
    assert excinfo.value.field == field
    assert str(excinfo.value).startswith(f"{field}: ")


def test_not_an_object() -> None:
    with pytest.raises(DocumentError):
        load([1, 2, 3])  # type: ignore[arg-type]


def test_standard_structure_dimension() -> None:
    with pytest.raises(StructureError):
        load(base_document(structure={"kind": "symplectic"}))


def test_explicit_j_maps() -> None:
    j = standard_symplectic(4).j.tolist()
    parsed = load(
        {"dim": 4, "brackets": [], "structure": {"kind": "symplectic", "j_maps": [j]}}
    )
    assert parsed.structure == standard_symplectic(4)
    with pytest.raises(DocumentError) as excinfo:
        load(
            {
                "dim": 4,
                "brackets": [],
                "structure": {"kind": "symplectic", "j_maps": [[[0, 1], [-1, 0]]]},
            }
        )
    assert excinfo.value.field == "structure.j_maps[0]"


def test_invalid_json_reports_line() -> None:
    with pytest.raises(DocumentError) as excinfo:
        parse_document('{\n  "dim": 3,\n  "brackets": [\n}')
    assert excinfo.value.line == 4
    assert str(excinfo.value).startswith("line 4: ")


@pytest.mark.parametrize("name", ["filiform4", "m26_arc", "complex_iwasawa_curve"])
def test_emitted_documents_parse_back(name: str) -> None:
    mu, gamma = build(name)
    parsed = parse_document(emit_document(mu, gamma, metadata={"catalog": name}))
    np.testing.assert_array_equal(parsed.bracket.coeffs, mu.coeffs)
    assert parsed.structure == gamma
    assert parsed.metadata == {"catalog": name}


def test_parse_text_document() -> None:
    text = json.dumps(
        {
            "dim": 4,
            "basis_labels": ["e1", "e2", "e3", "e4"],
            "brackets": [[1, 2, 3, 1], [1, 3, 4, 1]],
            "structure": {"kind": "symplectic", "j_maps": "standard"},
        }
    )
    parsed = parse_document(text)
    assert parsed.bracket == filiform4()
    assert parsed.structure.kind is StructureKind.SYMPLECTIC
    assert parsed.basis_labels == ["e1", "e2", "e3", "e4"]
