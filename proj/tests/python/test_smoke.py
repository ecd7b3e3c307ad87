"""Smoke tests for the python bindings."""

import math

import pytest

import equiform


def test_helix_point():
    point = equiform.helix_point(0.5, 0.0)
    assert point == [1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0]


def test_axonometric_projection():
    assert equiform.axonometric_project([0, 0, 0, 1, 0, 0, 0]) == [1.0, 1.0, 0.0]
    assert equiform.axonometric_project([2, 3, 4, 0, 0, 0, 0]) == [2.0, 3.0, 4.0]


def test_example_motion_is_flat():
    params = equiform.example_params(mu=1.0)
    assert equiform.theorem31_forward_ok(params)
    assert equiform.k0_numerator_coeffs(params) == []
    assert abs(equiform.curvature_at(params, 0.1, 1.2)) < 1e-9


def test_exact_rational_inputs():
    params = equiform.MotionParams("1/2", "3/4")
    assert params.lambda_ == "1/2"
    assert params.s_prime == "3/4"
    alphas = equiform.alphas(params)
    assert alphas[0] == "9/16"  # s'^2
    assert equiform.verify_metric_expansion(params)


def test_zero_pitch_rejected():
    with pytest.raises(Exception):
        equiform.MotionParams(0.0)


def test_generic_draw_is_obstructed():
    params = equiform.draw_params(seed=42)
    coeffs = equiform.k0_numerator_coeffs(params)
    assert coeffs, "a generic draw must have a nonzero K(0,.) numerator"
    reports = equiform.theorem32_obstructions(params, "1")
    assert any(not r["vanished"] for r in reports)


def test_symbolic_numeric_agreement():
    params = equiform.example_params(mu=0.5)
    t, phi = 0.2, 2.1
    sym = equiform.curvature_at(params, t, phi)
    num = equiform.numeric_scalar_curvature(params, t, phi)
    assert math.isclose(sym, num, abs_tol=1e-6)
