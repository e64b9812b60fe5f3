import enum
import json
from typing import Any

import numpy as np
import pytest
from pynilmet.algebra import BracketTensor
from pynilmet.catalog import filiform4
from pynilmet.minimality import (
    CriticalType,
    Distinction,
    DistinctionVerdict,
    IsometryInvariants,
    soliton_test,
)
from pynilmet.structures import (
    GeomStructure,
    StructureKind,
    standard_complex,
    standard_symplectic,
)
from pynilmet.utils.serialization.serializer import (
    SerializationError,
    document,
    dump,
    emit_document,
)


class MyEnum(enum.Enum):
    RUNNING = "running"
    FINISHED = "finished"


@pytest.mark.parametrize(
    "test_input, expected",
    [
        (1, 1),
        (1.5, 1.5),
        (True, True),
        ("text", "text"),
        (None, None),
        (MyEnum.RUNNING, "running"),
        (np.float64(2.5), 2.5),
        (np.array([[1.0, 0.0], [0.0, 1.0]]), [[1.0, 0.0], [0.0, 1.0]]),
        ((1, np.int64(2)), [1, 2]),
        ({"a": [np.float64(1.0)], 3: None}, {"a": [1.0], "3": None}),
        (
            CriticalType((3, 4, 6, 7), (1, 1, 1, 1), scale=4.0),
            {
                "type": "3<4<6<7;1,1,1,1",
                "ks": [3, 4, 6, 7],
                "ds": [1, 1, 1, 1],
                "scale": 4.0,
            },
        ),
        (
            IsometryInvariants(-1.0, (-0.5, 0.5), (0.5,), 0.25),
            {
                "scal": -1.0,
                "ricci_spectrum": [-0.5, 0.5],
                "center_spectrum": [0.5],
                "f_value": 0.25,
            },
        ),
        (
            Distinction(DistinctionVerdict.DISTINCT, "scal", 0.5),
            {"verdict": "distinct", "invariant": "scal", "difference": 0.5},
        ),
        (standard_symplectic(4), {"kind": "symplectic", "j_maps": "standard"}),
        (GeomStructure.none(3), {"kind": "none", "j_maps": "standard"}),
    ],
)
def test_dump(test_input: Any, expected: Any) -> None:
    assert dump(test_input) == expected


def test_dump_explicit_structure() -> None:
    j = -standard_complex(2).j
    serialized = dump(GeomStructure(StructureKind.COMPLEX, 2, (j,)))
    assert serialized == {"kind": "complex", "j_maps": [[[0.0, 1.0], [-1.0, 0.0]]]}


def test_dump_certificate() -> None:
    serialized = dump(soliton_test(filiform4(), standard_symplectic(4)))
    assert serialized["verdict"] == "minimal"
    assert serialized["c"] == pytest.approx(-1.25)
    np.testing.assert_allclose(
        serialized["derivation"], 0.5 * np.diag([1.0, 2.0, 3.0, 4.0]), atol=1e-14
    )
    json.dumps(serialized)


def test_dump_unsupported_type() -> None:
    with pytest.raises(SerializationError):
        dump(object())
    with pytest.raises(TypeError):
        dump({1, 2})


def test_document_lists_upper_entries() -> None:
    mu = BracketTensor.from_triples(4, [(1, 2, 3, 1.0), (3, 1, 4, 2.0)])
    result = document(mu, standard_symplectic(4))
    assert result == {
        "dim": 4,
        "basis_labels": ["X1", "X2", "X3", "X4"],
        "brackets": [[1, 2, 3, 1.0], [1, 3, 4, -2.0]],
        "structure": {"kind": "symplectic", "j_maps": "standard"},
    }


def test_document_metadata_and_labels() -> None:
    result = document(
        BracketTensor.zero(2),
        GeomStructure.none(2),
        basis_labels=["A", "B"],
        metadata={"catalog": "zero", "params": {"x": np.float64(1.0)}},
    )
    assert result["brackets"] == []
    assert result["basis_labels"] == ["A", "B"]
    assert result["metadata"] == {"catalog": "zero", "params": {"x": 1.0}}
    assert "metadata" not in document(BracketTensor.zero(2), GeomStructure.none(2))


def test_emit_document_is_json() -> None:
    text = emit_document(filiform4(), standard_symplectic(4))
    assert json.loads(text)["brackets"] == [[1, 2, 3, 1.0], [1, 3, 4, 1.0]]
    assert text.startswith("{\n  ")
