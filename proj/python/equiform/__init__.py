"""Exact scalar-curvature engine for kinematic helix surfaces in E^7."""

from ._core import (
    MotionParams,
    alphas,
    axonometric_project,
    chart_point,
    curvature_at,
    draw_params,
    example_params,
    helix_point,
    k0_numerator_coeffs,
    numeric_scalar_curvature,
    theorem31_forward_ok,
    theorem32_obstructions,
    verify_metric_expansion,
)

__all__ = [
    "MotionParams",
    "alphas",
    "axonometric_project",
    "chart_point",
    "curvature_at",
    "draw_params",
    "example_params",
    "helix_point",
    "k0_numerator_coeffs",
    "numeric_scalar_curvature",
    "theorem31_forward_ok",
    "theorem32_obstructions",
    "verify_metric_expansion",
]
