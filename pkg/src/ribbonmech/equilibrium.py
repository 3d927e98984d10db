"""Unconstrained per-segment equilibrium: stationarity of the energy.

The energy per area is a strictly convex quadratic in the five unknowns,
so stationarity is one symmetric 5x5 linear solve per segment.  Reports
carry the gradient residual and the smallest Hessian eigenvalue so a
caller can tell a true minimum from a near-singular stack.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.optimize import minimize_scalar

from .errors import SolverError
from .energy import EquilibriumState, assemble_quadratic_form
from .model import RibbonSpec, SegmentSpec

_MAX_CONDITION = 1e12


@dataclass(frozen=True)
class SolveReport:
    """Solution of one segment's stationarity system."""

    state: EquilibriumState
    energy_per_area: float
    residual_norm: float
    hessian_min_eigenvalue: float
    iterations: int
    condition_number: float
    trivially_flat: bool


def solve_segment(segment: SegmentSpec, phi: float) -> SolveReport:
    """Minimize the segment energy over strains and curvatures at fixed phi.

    Returns the state in canonical form (kappa1 >= kappa2, frame angle
    adjusted by a quarter turn when the labels swap).
    """
    form = assemble_quadratic_form(segment, phi)
    cond = float(np.linalg.cond(form.matrix))
    if not math.isfinite(cond) or cond > _MAX_CONDITION:
        raise SolverError(
            f"stationarity system ill-conditioned (condition number {cond:.3e}); "
            "the stack is degenerate"
        )
    v = np.linalg.solve(form.matrix, -form.linear)
    residual = form.gradient(v)
    # Scale the residual by the membrane stiffness (modulus times thickness).
    scale = max(float(np.abs(form.matrix).max()), 1e-300)
    eigvals = np.linalg.eigvalsh(form.matrix)
    state = EquilibriumState.from_vector(v, phi).canonical()
    trivially_flat = bool(np.linalg.norm(form.linear) <= 1e-14 * scale)
    return SolveReport(
        state=state,
        energy_per_area=form.value(v),
        residual_norm=float(np.linalg.norm(residual)) / scale,
        hessian_min_eigenvalue=float(eigvals[0]),
        iterations=1,
        condition_number=cond,
        trivially_flat=trivially_flat,
    )


def solve_ribbon(spec: RibbonSpec) -> list[SolveReport]:
    """Per-segment unconstrained solves, keeping segment order."""
    reports = []
    for i, segment in enumerate(spec.segments):
        try:
            reports.append(solve_segment(segment, spec.phi))
        except SolverError as exc:
            raise SolverError(f"segment {i}: {exc}") from exc
    return reports


def solve_segment_over_phi(segment: SegmentSpec, phi_start: float) -> tuple[SolveReport, float]:
    """Validation mode: additionally minimize over the frame angle.

    The curvature ansatz is diagonal in the frame at -phi, so for stacks
    whose eigenstrain axes sit elsewhere the fixed-phi optimum may not be
    stationary in phi.  Returns the report at the best phi and that phi.
    Started at a phi where the fixed-phi solution is already stationary in
    phi, it reproduces it.
    """

    def energy_at(phi: float) -> float:
        form = assemble_quadratic_form(segment, phi)
        v = np.linalg.solve(form.matrix, -form.linear)
        return form.value(v)

    # The frame is pi/2-periodic up to a label swap; scan one period.
    half = math.pi / 4.0
    result = minimize_scalar(
        energy_at,
        bounds=(phi_start - half, phi_start + half),
        method="bounded",
        options={"xatol": 1e-12},
    )
    best_phi = float(result.x)
    if energy_at(phi_start) <= result.fun + 1e-15 * (1.0 + abs(result.fun)):
        best_phi = phi_start
    return solve_segment(segment, best_phi), best_phi
