import numpy as np
import pytest
from pynilmet.algebra import BracketTensor
from pynilmet.catalog import filiform4
from pynilmet.curvature import invariant_ricci
from pynilmet.exceptions import StructureError
from pynilmet.flow import orbit_infimum_probe, orbit_path_values
from pynilmet.structures import (
    StructureKind,
    random_invariant_symmetric,
    standard_structure,
    standard_symplectic,
)


def test_path_value_at_zero() -> None:
    gamma = standard_symplectic(4)
    a = random_invariant_symmetric(gamma, seed=0)
    ric = invariant_ricci(filiform4(), gamma)
    values = orbit_path_values(filiform4(), gamma, a, [0.0, 1.0])
    assert values.shape == (2,)
    assert values[0] == pytest.approx(np.sum(ric**2))


def test_probe_minima_are_non_increasing() -> None:
    gamma = standard_symplectic(4)
    minima = orbit_infimum_probe(filiform4(), gamma, trials=5, seed=1)
    assert minima.shape == (5,)
    assert np.all(np.diff(minima) <= 0)
    # t = 0 is sampled, so the start value bounds the minimum
    assert minima[-1] <= 1.25 + 1e-12


def test_probe_of_zero_bracket() -> None:
    minima = orbit_infimum_probe(BracketTensor.zero(4), standard_symplectic(4), 3)
    np.testing.assert_array_equal(minima, np.zeros(3))


def test_probe_requires_symplectic_structure() -> None:
    with pytest.raises(StructureError):
        orbit_infimum_probe(
            filiform4(), standard_structure(StructureKind.COMPLEX, 4), trials=1
        )
