from typing import Any

import numpy as np
import pytest
from pynilmet.algebra import BracketTensor, gl_act, jacobi_residual, v_inner
from pynilmet.catalog import abc_family, build, filiform4
from pynilmet.curvature import F_value
from pynilmet.exceptions import (
    FlowDivergenceError,
    NotALieBracketError,
    ZeroBracketError,
)
from pynilmet.flow import FlowTrace, flow_run, grad_F
from pynilmet.minimality import (
    CriticalType,
    Normalization,
    critical_type,
    isometry_invariants,
    normalize,
)
from pynilmet.structures import (
    GeomStructure,
    random_structure_group_element,
    standard_symplectic,
    symplectic_closed_residual,
)
from pytest_mock import MockerFixture

PERTURBATIONS = 20

MINIMAL_ORBITS: dict[str, tuple[dict[str, Any], CriticalType]] = {
    "abc": ({"a": 1.0, "b": 1.0, "c": 0.0}, CriticalType((1, 2), (3, 3))),
    "m26_arc": ({"e": 0.7, "branch": -1}, CriticalType((1, 2, 3, 4, 5, 6), (1,) * 6)),
}


class PerturbedRuns:
    def __init__(self, name: str) -> None:
        params, self.expected_type = MINIMAL_ORBITS[name]
        self.minimum, self.gamma = build(name, **params)
        self.traces: list[FlowTrace] = [
            flow_run(
                gl_act(
                    random_structure_group_element(self.gamma, 0.3, seed),
                    self.minimum,
                ),
                self.gamma,
            )
            for seed in range(PERTURBATIONS)
        ]


@pytest.fixture(scope="module", params=sorted(MINIMAL_ORBITS))
def perturbed_runs(request: pytest.FixtureRequest) -> PerturbedRuns:
    return PerturbedRuns(request.param)


@pytest.fixture
def perturbed_filiform() -> BracketTensor:
    gamma = standard_symplectic(4)
    g = random_structure_group_element(gamma, scale=0.5, seed=2)
    return gl_act(g, filiform4())


def test_gradient_vanishes_at_critical_point() -> None:
    assert grad_F(filiform4(), standard_symplectic(4)).norm < 1e-12


def test_gradient_is_tangent_to_sphere() -> None:
    mu = abc_family(1.0, 2.0, 1.0)
    w = grad_F(mu, GeomStructure.none(6))
    assert w.norm > 1e-3
    assert v_inner(w, mu.normalized()) == pytest.approx(0.0, abs=1e-12)


def test_derivative_along_gradient() -> None:
    gamma = GeomStructure.none(6)
    mu = abc_family(1.0, 2.0, 1.0).normalized()
    w = grad_F(mu, gamma)
    eps = 1e-5
    derivative = (F_value(mu + eps * w, gamma) - F_value(mu - eps * w, gamma)) / (
        2 * eps
    )
    assert derivative == pytest.approx(-(w.norm**2), rel=1e-5)


def test_gradient_of_zero_bracket() -> None:
    with pytest.raises(ZeroBracketError):
        grad_F(BracketTensor.zero(4), standard_symplectic(4))


def test_flow_from_critical_point_stops_immediately() -> None:
    trace = flow_run(2.0 * filiform4(), standard_symplectic(4))
    assert trace.converged
    assert trace.steps == 0
    assert trace.final.norm == pytest.approx(1.0)
    assert trace.final_certificate is not None
    assert trace.final_certificate.is_minimal


def test_flow_decreases_f(perturbed_filiform: BracketTensor) -> None:
    gamma = standard_symplectic(4)
    trace = flow_run(perturbed_filiform, gamma, max_steps=200)
    assert trace.steps > 0
    assert np.all(np.diff(trace.f_values) <= 1e-9)
    assert trace.f_values[-1] < trace.f_values[0]
    assert max(trace.constraint_residuals) < 1e-10
    assert trace.scal_values[-1] == pytest.approx(-0.25)


def test_flow_converges_to_minimal_bracket(perturbed_filiform: BracketTensor) -> None:
    gamma = standard_symplectic(4)
    trace = flow_run(perturbed_filiform, gamma, grad_tol=1e-8)
    assert trace.converged
    assert trace.f_values[-1] == pytest.approx(F_value(filiform4(), gamma), rel=1e-6)
    assert trace.final_certificate is not None
    assert critical_type(trace.final_certificate) == CriticalType(
        (1, 2, 3, 4), (1, 1, 1, 1)
    )


def test_flow_csv(perturbed_filiform: BracketTensor, tmp_path) -> None:
    trace = flow_run(perturbed_filiform, standard_symplectic(4), max_steps=5)
    path = tmp_path / "trace.csv"
    trace.to_csv(path)
    assert path.read_text().splitlines()[0] == "t,F,scal,grad_norm"
    table = np.loadtxt(path, delimiter=",", skiprows=1)
    assert table.shape == (trace.steps + 1, 4)
    np.testing.assert_allclose(table[:, 1], trace.f_values)


def test_flow_divergence(perturbed_filiform: BracketTensor) -> None:
    with pytest.raises(FlowDivergenceError):
        flow_run(
            perturbed_filiform,
            standard_symplectic(4),
            increase_tol=-1.0,
            max_halvings=2,
        )


def test_flow_rejects_invalid_start() -> None:
    with pytest.raises(ZeroBracketError):
        flow_run(BracketTensor.zero(4), standard_symplectic(4))
    broken = BracketTensor.from_triples(4, [(1, 2, 3, 1.0), (3, 4, 1, 1.0)])
    with pytest.raises(NotALieBracketError):
        flow_run(broken, standard_symplectic(4))


def test_step_grows_back_after_rejection(
    perturbed_filiform: BracketTensor, mocker: MockerFixture
) -> None:
    mocker.patch(
        "pynilmet.flow.bracket_flow._rkmk4_step", side_effect=lambda mu, gamma, h: mu
    )
    mocker.patch(
        "pynilmet.flow.bracket_flow.F_value",
        side_effect=[1.0, 2.0, 1.0, 1.0, 1.0, 1.0],
    )
    trace = flow_run(
        perturbed_filiform, standard_symplectic(4), step=0.5, max_steps=4, grow_after=2
    )
    assert trace.halvings == 1
    np.testing.assert_allclose(np.diff(trace.times), [0.25, 0.25, 0.5, 0.5])


def test_perturbed_flows_reach_orbit_minimum(perturbed_runs: PerturbedRuns) -> None:
    minimum_f = F_value(perturbed_runs.minimum, perturbed_runs.gamma)
    for trace in perturbed_runs.traces:
        assert trace.converged
        assert trace.f_values[0] > trace.f_values[-1]
        assert np.all(np.diff(trace.f_values) <= 1e-9)
        assert abs(trace.f_values[-1] - minimum_f) <= 1e-6


def test_perturbed_flows_end_at_expected_type(perturbed_runs: PerturbedRuns) -> None:
    for trace in perturbed_runs.traces:
        assert trace.final_certificate is not None
        assert trace.final_certificate.is_minimal
        assert critical_type(trace.final_certificate) == perturbed_runs.expected_type


def test_perturbed_flow_endpoints_are_isometric(perturbed_runs: PerturbedRuns) -> None:
    gamma = perturbed_runs.gamma
    expected = isometry_invariants(
        normalize(perturbed_runs.minimum, Normalization.SCAL), gamma, tol=1e-7
    )
    for trace in perturbed_runs.traces:
        found = isometry_invariants(
            normalize(trace.final, Normalization.SCAL), gamma, tol=1e-7
        )
        assert found.scal == pytest.approx(expected.scal, abs=1e-5)
        assert found.f_value == pytest.approx(expected.f_value, abs=1e-5)
        np.testing.assert_allclose(
            found.ricci_spectrum, expected.ricci_spectrum, atol=1e-5
        )
        assert len(found.center_spectrum) == len(expected.center_spectrum)
        np.testing.assert_allclose(
            found.center_spectrum, expected.center_spectrum, atol=1e-5
        )


def test_perturbed_flows_stay_on_closed_lie_brackets(
    perturbed_runs: PerturbedRuns,
) -> None:
    for trace in perturbed_runs.traces:
        assert max(trace.constraint_residuals) <= 1e-8
        for mu in trace.brackets:
            assert symplectic_closed_residual(mu, perturbed_runs.gamma) <= 1e-8
            assert jacobi_residual(mu) <= 1e-8
