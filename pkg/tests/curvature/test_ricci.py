import logging

import numpy as np
import pytest
from pynilmet.algebra import (
    BracketTensor,
    gl_act,
    random_bracket,
    random_nilpotent_bracket,
)
from pynilmet.catalog import filiform4, m26_tensor
from pynilmet.curvature import (
    F_value,
    invariant_ricci,
    invariant_ricci_at,
    moment_map,
    ricci,
    ricci_form,
    scalar_curvature,
)
from pynilmet.exceptions import NotSymmetricError, StructureError, ZeroBracketError
from pynilmet.structures import (
    StructureKind,
    random_structure_group_element,
    standard_structure,
    standard_symplectic,
)


SAMPLES_PER_DIM = 34


@pytest.fixture
def heisenberg3() -> BracketTensor:
    return BracketTensor.from_triples(3, [(1, 2, 3, 1.0)])


def test_heisenberg3_ricci(heisenberg3: BracketTensor) -> None:
    np.testing.assert_allclose(ricci(heisenberg3), np.diag([-0.5, -0.5, 0.5]))
    assert scalar_curvature(heisenberg3) == pytest.approx(-0.5)


def test_scalar_curvature_identity(rng: np.random.Generator) -> None:
    mu = random_bracket(5, rng)
    assert scalar_curvature(mu) == pytest.approx(-0.25 * mu.norm**2)
    np.testing.assert_allclose(ricci(mu), ricci(mu).T)


def moment_map_by_sums(mu: BracketTensor) -> np.ndarray:
    c = mu.coeffs
    n = mu.dim
    m = np.zeros((n, n))
    for x in range(n):
        for y in range(n):
            total = 0.0
            for i in range(n):
                for j in range(n):
                    total += -4.0 * c[x, i, j] * c[y, i, j]
                    total += 2.0 * c[i, j, x] * c[i, j, y]
            m[x, y] = total
    return m


@pytest.mark.parametrize("n", range(3, 9))
def test_moment_map_matches_coordinate_sums(n: int) -> None:
    rng = np.random.default_rng(n)
    for _ in range(SAMPLES_PER_DIM):
        mu = random_bracket(n, rng)
        expected = moment_map_by_sums(mu)
        np.testing.assert_allclose(
            moment_map(mu),
            expected,
            rtol=1e-12,
            atol=1e-12 * np.abs(expected).max(),
        )


@pytest.mark.parametrize("n", range(3, 9))
def test_moment_map_is_eight_ricci(n: int) -> None:
    rng = np.random.default_rng(100 + n)
    for _ in range(SAMPLES_PER_DIM):
        mu = random_nilpotent_bracket(n, rng)
        np.testing.assert_allclose(
            moment_map(mu), 8 * ricci(mu), atol=1e-12 * mu.norm**2
        )


def test_ricci_is_equivariant(rng: np.random.Generator) -> None:
    mu = random_bracket(4, rng)
    q, _ = np.linalg.qr(rng.standard_normal((4, 4)))
    np.testing.assert_allclose(
        ricci(gl_act(q, mu)), q @ ricci(mu) @ q.T, atol=1e-12
    )


def test_filiform_invariant_ricci() -> None:
    ric = invariant_ricci(filiform4(), standard_symplectic(4))
    np.testing.assert_allclose(ric, np.diag([-0.75, -0.25, 0.25, 0.75]), atol=1e-15)
    np.testing.assert_allclose(
        ric, -1.25 * np.eye(4) + 0.5 * np.diag([1.0, 2.0, 3.0, 4.0]), atol=1e-15
    )
    assert F_value(filiform4(), standard_symplectic(4)) == pytest.approx(0.078125)


def test_m26_tensor_invariant_ricci(caplog: pytest.LogCaptureFixture) -> None:
    caplog.set_level(logging.WARNING, logger="pynilmet")
    a, b, c, d, e, f = 0.3, 0.7, 1.1, 0.5, 0.2, 0.9
    ric = invariant_ricci(m26_tensor(a, b, c, d, e, f), standard_symplectic(6))
    first = a**2 + b**2 + c**2 + 2 * d**2 + f**2
    second = a**2 + c**2 - d**2 + 2 * e**2 + f**2
    third = -(a**2) + 2 * b**2 - c**2 + e**2 - f**2
    expected = -0.25 * np.diag([first, second, third, -third, -second, -first])
    np.testing.assert_allclose(ric, expected, atol=1e-14)
    assert "closedness" in caplog.text


def test_invariant_ricci_without_structure(rng: np.random.Generator) -> None:
    mu = random_bracket(4, rng)
    gamma = standard_structure(StructureKind.NONE, 4)
    np.testing.assert_allclose(invariant_ricci(mu, gamma), ricci(mu))


def test_f_value_is_scale_invariant(rng: np.random.Generator) -> None:
    mu = random_bracket(4, rng)
    gamma = standard_structure(StructureKind.COMPLEX, 4)
    assert F_value(3.0 * mu, gamma) == pytest.approx(F_value(mu, gamma))


def test_f_value_of_zero_bracket() -> None:
    with pytest.raises(ZeroBracketError):
        F_value(BracketTensor.zero(4), standard_symplectic(4))


def test_structure_dimension_mismatch() -> None:
    with pytest.raises(StructureError):
        invariant_ricci(filiform4(), standard_symplectic(6))


def test_invariant_ricci_at_identity() -> None:
    gamma = standard_symplectic(4)
    np.testing.assert_allclose(
        invariant_ricci_at(filiform4(), gamma, np.eye(4)),
        invariant_ricci(filiform4(), gamma),
    )


def test_invariant_ricci_at_group_element() -> None:
    gamma = standard_symplectic(4)
    g = random_structure_group_element(gamma, seed=7)
    ric = invariant_ricci_at(filiform4(), gamma, g)
    # isospectral with Ric^gamma(g.mu)
    expected = np.linalg.eigvalsh(invariant_ricci(gl_act(g, filiform4()), gamma))
    np.testing.assert_allclose(
        np.sort(np.linalg.eigvals(ric).real), expected, atol=1e-10
    )


def test_invariant_ricci_at_rejects_foreign_metric() -> None:
    with pytest.raises(StructureError):
        invariant_ricci_at(
            filiform4(), standard_symplectic(4), np.diag([1.0, 2.0, 1.0, 1.0])
        )


def test_ricci_form_is_scale_invariant(heisenberg3: BracketTensor) -> None:
    np.testing.assert_allclose(
        ricci_form(heisenberg3, 4 * np.eye(3)), ricci(heisenberg3)
    )


def test_ricci_form_rejects_bad_metrics(heisenberg3: BracketTensor) -> None:
    with pytest.raises(NotSymmetricError):
        ricci_form(heisenberg3, np.triu(np.ones((3, 3))))
    with pytest.raises(NotSymmetricError):
        ricci_form(heisenberg3, -np.eye(3))
