import numpy as np
import pytest
from pynilmet.catalog import (
    hypercomplex_abelian_rst,
    hypercomplex_curve,
    hypercomplex_rst,
    hypercomplex_w8,
    w8_bracket,
    w8_center_splitting,
    w8_relations,
)
from pynilmet.curvature import center_ricci, modified_htype_check
from pynilmet.minimality import soliton_test
from pynilmet.structures import (
    classify_complex_flags,
    hypercomplex_residual,
    standard_hypercomplex,
)

GAMMA = standard_hypercomplex(8)
J1, J2, _ = standard_hypercomplex(4).j_maps
RST = (3.0 + np.sqrt(3.0)) / 6.0


def test_general_integrable_element() -> None:
    mu = hypercomplex_w8((1, 2, 0, 0), (0, 0, 3, 1), (0, 1, 0, 2), (1, 0, 0, 1))
    assert hypercomplex_residual(mu, GAMMA) < 1e-12
    assert soliton_test(mu, GAMMA).is_minimal


def test_relations_of_general_element() -> None:
    zero = (0.0, 0.0, 0.0, 0.0)
    relations = w8_relations((1, 0, 0, 0), zero, zero, zero, zero, zero)
    assert np.any(relations.integrable)
    assert not np.any(relations.abelian)
    mu = w8_bracket((1, 0, 0, 0), zero, zero, zero, zero, zero)
    assert hypercomplex_residual(mu, GAMMA) > 1e-3


def test_abelian_rst() -> None:
    r, s, t = 0.6, 0.0, 0.8
    mu = hypercomplex_abelian_rst(r, s, t)
    np.testing.assert_allclose(
        center_ricci(mu, w8_center_splitting()),
        np.diag([0.0, r**2, s**2, t**2]),
        atol=1e-14,
    )
    assert modified_htype_check(mu, w8_center_splitting(), seed=0).is_htype


def test_rst_is_not_htype() -> None:
    mu = hypercomplex_rst(RST, RST, RST)
    assert hypercomplex_residual(mu, GAMMA) < 1e-12
    assert not modified_htype_check(mu, w8_center_splitting(), seed=0).is_htype


@pytest.mark.parametrize("t", [0.0, 0.3, 0.5, 1 / np.sqrt(3.0)])
def test_curve(t: float) -> None:
    mu = hypercomplex_curve(t)
    np.testing.assert_allclose(
        center_ricci(mu, w8_center_splitting()),
        np.diag([1 - 3 * t**2, t**2, t**2, t**2]),
        atol=1e-14,
    )
    assert hypercomplex_residual(mu, GAMMA) < 1e-12
    assert soliton_test(mu, GAMMA).is_minimal


def random_w8_vectors(rng: np.random.Generator) -> tuple[np.ndarray, ...]:
    return tuple(rng.standard_normal(4) for _ in range(3))


def test_random_integrable_elements_are_minimal(rng: np.random.Generator) -> None:
    for _ in range(200):
        mu = hypercomplex_w8(*random_w8_vectors(rng), rng.standard_normal(4))
        assert hypercomplex_residual(mu, GAMMA) < 1e-10
        assert soliton_test(mu, GAMMA).is_minimal


@pytest.mark.parametrize("abelian", [True, False])
def test_htype_exactly_for_abelian_structures(
    rng: np.random.Generator, abelian: bool
) -> None:
    for seed in range(25):
        a, b, c = random_w8_vectors(rng)
        t = np.zeros(4) if abelian else rng.standard_normal(4)
        mu = hypercomplex_w8(a, b, c, t)
        relations = w8_relations(a, b, c, t - c, b + J1 @ t, J2 @ t - a)
        assert np.allclose(relations.integrable, 0.0, atol=1e-14)
        assert np.allclose(relations.abelian, 0.0) is abelian
        flags = [classify_complex_flags(mu, j).abelian for j in GAMMA.j_maps]
        assert flags == [abelian] * 3
        verdict = modified_htype_check(mu, w8_center_splitting(), seed=seed)
        assert verdict.is_htype is abelian
