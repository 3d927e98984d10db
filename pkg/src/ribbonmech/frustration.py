"""Contact-constrained equilibria and the tightly coiled assembly.

When a segment's unconstrained optimum lies where the ideal trajectory
would self-penetrate, the reachable minimum sits on the self-contact
boundary.  At fixed midplane strains the energy reduces to a convex
quadratic in the two curvatures, and the contact-equality curve in the
curvature plane is star-shaped around the origin (pitch falls off with
curvature magnitude while the projected width extent is scale-free along
a ray), so the boundary is traced exactly by root-solving along rays and
the reduced energy is minimized along it.  Each handedness side of the
boundary carries its own local minimum; a multi-segment ribbon picks the
single handedness that minimizes the summed energy.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np
from scipy.optimize import brentq, minimize_scalar

from .errors import DomainError, ResolutionError, SolverError
from .energy import EquilibriumState, assemble_quadratic_form
from .helixgeom import (
    RING,
    FramedCurve,
    RibbonMesh,
    StepFunction,
    generate_mesh,
    handedness_label,
    integrate_centerline,
)
from .model import RibbonSpec, SegmentSpec

_ENERGY_TIE_REL = 1e-9


# -- reduced energy over the curvature plane ----------------------------------


@dataclass(frozen=True)
class ReducedEnergy:
    """Energy per area minimized over midplane strains at fixed curvatures.

    value(k) = 0.5 k' S k + t' k + c, with the eliminating strains
    recoverable for any curvature pair.
    """

    s_matrix: np.ndarray  # (2, 2)
    t_vector: np.ndarray  # (2,)
    constant: float
    phi: float
    _strain_solve: Callable[[np.ndarray], np.ndarray]

    def value(self, kappa1, kappa2):
        k1 = np.asarray(kappa1, dtype=float)
        k2 = np.asarray(kappa2, dtype=float)
        s, t = self.s_matrix, self.t_vector
        return (
            0.5 * (s[0, 0] * k1 * k1 + 2.0 * s[0, 1] * k1 * k2 + s[1, 1] * k2 * k2)
            + t[0] * k1
            + t[1] * k2
            + self.constant
        )

    def gradient(self, kappa1: float, kappa2: float) -> np.ndarray:
        return self.s_matrix @ np.array([kappa1, kappa2]) + self.t_vector

    def minimizer(self) -> tuple[float, float]:
        k = np.linalg.solve(self.s_matrix, -self.t_vector)
        return float(k[0]), float(k[1])

    def state_at(self, kappa1: float, kappa2: float) -> EquilibriumState:
        eps = self._strain_solve(np.array([kappa1, kappa2]))
        return EquilibriumState(
            eps_xx=float(eps[0]),
            eps_yy=float(eps[1]),
            eps_xy=float(eps[2]),
            kappa1=float(kappa1),
            kappa2=float(kappa2),
            phi=self.phi,
        )


def reduce_over_strains(segment: SegmentSpec, phi: float) -> ReducedEnergy:
    """Schur complement of the 5x5 energy quadratic onto the curvatures."""
    form = assemble_quadratic_form(segment, phi)
    a = form.matrix[:3, :3]
    b = form.matrix[:3, 3:]
    c = form.matrix[3:, 3:]
    g_eps = form.linear[:3]
    g_kappa = form.linear[3:]
    try:
        a_inv_b = np.linalg.solve(a, b)
        a_inv_g = np.linalg.solve(a, g_eps)
    except np.linalg.LinAlgError as exc:
        raise SolverError(f"membrane block singular: {exc}") from exc

    def strain_solve(kappa: np.ndarray) -> np.ndarray:
        return -(a_inv_b @ kappa + a_inv_g)

    return ReducedEnergy(
        s_matrix=c - b.T @ a_inv_b,
        t_vector=g_kappa - b.T @ a_inv_g,
        constant=float(form.constant - 0.5 * g_eps @ a_inv_g),
        phi=phi,
        _strain_solve=strain_solve,
    )


# -- widths of the adjacent turns ----------------------------------------------


@dataclass(frozen=True)
class ContactWidths:
    """Widths of the two adjacent turns entering the contact test.

    Either a fixed pair, or sampled from the tapered profile at the turn
    midpoints nearest the wide end of a segment's span (the binding pair:
    every other adjacent pair of that segment is narrower).
    """

    fixed: Optional[tuple[float, float]] = None
    profile: Optional[object] = None
    span: Optional[tuple[float, float]] = None
    domain_length: Optional[float] = None

    @staticmethod
    def pair(width1: float, width2: float) -> "ContactWidths":
        if width1 <= 0.0 or width2 <= 0.0:
            raise DomainError(f"widths must be positive, got {width1}, {width2}")
        return ContactWidths(fixed=(float(width1), float(width2)))

    @staticmethod
    def from_profile(profile, span: tuple[float, float], domain_length: float) -> "ContactWidths":
        return ContactWidths(
            fixed=None, profile=profile, span=(float(span[0]), float(span[1])),
            domain_length=float(domain_length),
        )

    def turn_widths(self, period):
        """(w1, w2) for a given turn arclength; broadcasts over arrays."""
        if self.fixed is not None:
            p = np.asarray(period, dtype=float)
            w1 = np.broadcast_to(self.fixed[0], p.shape).astype(float)
            w2 = np.broadcast_to(self.fixed[1], p.shape).astype(float)
            return w1, w2
        p = np.asarray(period, dtype=float)
        s0, s1 = self.span
        wide_first = float(self.profile.width(s0)) >= float(self.profile.width(s1))
        if wide_first:
            m1, m2 = s0 + 0.5 * p, s0 + 1.5 * p
        else:
            m1, m2 = s1 - 0.5 * p, s1 - 1.5 * p
        m1 = np.clip(m1, 0.0, self.domain_length)
        m2 = np.clip(m2, 0.0, self.domain_length)
        return (
            np.asarray(self.profile.width(m1), dtype=float),
            np.asarray(self.profile.width(m2), dtype=float),
        )

    def turn_widths_scalar(self, period: float) -> tuple[float, float]:
        if self.fixed is not None:
            return self.fixed
        s0, s1 = self.span
        wide_first = float(self.profile.width(s0)) >= float(self.profile.width(s1))
        if wide_first:
            m1, m2 = s0 + 0.5 * period, s0 + 1.5 * period
        else:
            m1, m2 = s1 - 0.5 * period, s1 - 1.5 * period
        m1 = min(max(m1, 0.0), self.domain_length)
        m2 = min(max(m2, 0.0), self.domain_length)
        return float(self.profile.width(m1)), float(self.profile.width(m2))


@dataclass(frozen=True)
class ContactGeometry:
    """Closed-form contact quantities over the curvature plane."""

    phi: float
    widths: ContactWidths
    thickness_gap: float = 0.0

    def _terms(self, kappa1, kappa2):
        k1 = np.asarray(kappa1, dtype=float)
        k2 = np.asarray(kappa2, dtype=float)
        c, s = math.cos(self.phi), math.sin(self.phi)
        knorm = k1 * c * c + k2 * s * s
        tau = (k1 - k2) * s * c
        msq = knorm * knorm + tau * tau
        with np.errstate(divide="ignore", invalid="ignore"):
            m = np.sqrt(msq)
            pitch = np.where(msq > 0.0, 2.0 * math.pi * tau / np.where(msq > 0.0, msq, 1.0), np.inf)
            sin_theta = np.where(m > 0.0, np.abs(knorm) / np.where(m > 0.0, m, 1.0), 0.0)
            radius = np.where(msq > 0.0, np.abs(knorm) / np.where(msq > 0.0, msq, 1.0), np.inf)
            period = np.where(m > 0.0, 2.0 * math.pi / np.where(m > 0.0, m, 1.0), np.inf)
        return knorm, tau, pitch, sin_theta, radius, period

    def clearance(self, kappa1, kappa2):
        """Axial gap between facing turn edges; +inf for straight states."""
        _, _, pitch, sin_theta, _, period = self._terms(kappa1, kappa2)
        w1, w2 = self.widths.turn_widths(np.where(np.isfinite(period), period, 0.0))
        extent = 0.5 * (w1 + w2) * sin_theta
        out = np.where(
            np.isfinite(period), np.abs(pitch) - extent - self.thickness_gap, np.inf
        )
        return out if out.shape else float(out)

    def wide_ribbon(self, kappa1, kappa2):
        """Width beyond the quarter-circumference validity of the projection."""
        _, _, _, sin_theta, radius, period = self._terms(kappa1, kappa2)
        w1, w2 = self.widths.turn_widths(np.where(np.isfinite(period), period, 0.0))
        wmax = np.maximum(w1, w2)
        denom = 2.0 * radius * sin_theta
        with np.errstate(divide="ignore", invalid="ignore"):
            arg = np.where(denom > 0.0, wmax / np.where(denom > 0.0, denom, 1.0), np.inf)
        out = np.where(np.isfinite(period), arg >= 0.5 * math.pi, False)
        return out if out.shape else bool(out)

    def forbidden(self, kappa1, kappa2):
        """Self-contact predicate: overlapping turns, or wide-ribbon flag."""
        clear = self.clearance(kappa1, kappa2)
        wide = self.wide_ribbon(kappa1, kappa2)
        out = np.logical_or(np.asarray(clear) <= 0.0, wide)
        return out if out.shape else bool(out)

    def _terms_scalar(self, k1: float, k2: float):
        c, s = math.cos(self.phi), math.sin(self.phi)
        knorm = k1 * c * c + k2 * s * s
        tau = (k1 - k2) * s * c
        msq = knorm * knorm + tau * tau
        if msq == 0.0:
            return knorm, tau, math.inf, 0.0, math.inf, math.inf
        m = math.sqrt(msq)
        return (
            knorm,
            tau,
            2.0 * math.pi * tau / msq,
            abs(knorm) / m,
            abs(knorm) / msq,
            2.0 * math.pi / m,
        )

    def clearance_scalar(self, k1: float, k2: float) -> float:
        _, _, pitch, sin_theta, _, period = self._terms_scalar(k1, k2)
        if not math.isfinite(period):
            return math.inf
        w1, w2 = self.widths.turn_widths_scalar(period)
        return abs(pitch) - 0.5 * (w1 + w2) * sin_theta - self.thickness_gap

    def wide_ribbon_scalar(self, k1: float, k2: float) -> bool:
        _, _, _, sin_theta, radius, period = self._terms_scalar(k1, k2)
        if not math.isfinite(period):
            return False
        w1, w2 = self.widths.turn_widths_scalar(period)
        denom = 2.0 * radius * sin_theta
        if denom <= 0.0:
            return True
        return max(w1, w2) / denom >= 0.5 * math.pi

    def forbidden_scalar(self, k1: float, k2: float) -> bool:
        return self.clearance_scalar(k1, k2) <= 0.0 or self.wide_ribbon_scalar(k1, k2)


def segment_contact_geometry(
    spec: RibbonSpec, index: int, thickness_contact: bool = False
) -> ContactGeometry:
    """Contact geometry of one segment of a ribbon."""
    segment = spec.segments[index]
    widths = ContactWidths.from_profile(
        spec.width_profile, spec.segment_spans()[index], spec.total_length
    )
    gap = segment.total_thickness if thickness_contact else 0.0
    return ContactGeometry(phi=spec.phi, widths=widths, thickness_gap=gap)


# -- forbidden-region landscape -------------------------------------------------


@dataclass(frozen=True)
class GridSpec:
    """Rectangular curvature grid (values are the cell centers)."""

    k1_min: float
    k1_max: float
    n1: int
    k2_min: float
    k2_max: float
    n2: int

    def __post_init__(self):
        if self.n1 < 3 or self.n2 < 3:
            raise ResolutionError(
                f"grid {self.n1}x{self.n2} too coarse: need at least 3 points per axis"
            )
        if not (self.k1_max > self.k1_min and self.k2_max > self.k2_min):
            raise DomainError("grid bounds must satisfy max > min")

    def axes(self) -> tuple[np.ndarray, np.ndarray]:
        return (
            np.linspace(self.k1_min, self.k1_max, self.n1),
            np.linspace(self.k2_min, self.k2_max, self.n2),
        )


@dataclass(frozen=True)
class ForbiddenRegionMap:
    """Reduced energy and contact flag over a curvature grid."""

    kappa1_values: np.ndarray
    kappa2_values: np.ndarray
    energy: np.ndarray  # (n1, n2)
    forbidden: np.ndarray  # (n1, n2) bool

    def minimum_cell(self) -> tuple[int, int]:
        flat = int(np.argmin(self.energy))
        return np.unravel_index(flat, self.energy.shape)

    def to_csv_text(self) -> str:
        lines = ["kappa1,kappa2,reduced_energy,forbidden"]
        for i, k1 in enumerate(self.kappa1_values):
            for j, k2 in enumerate(self.kappa2_values):
                lines.append(
                    f"{k1:.12g},{k2:.12g},{self.energy[i, j]:.12g},{int(self.forbidden[i, j])}"
                )
        return "\n".join(lines) + "\n"


def map_landscape(
    segment: SegmentSpec, phi: float, widths, grid: GridSpec
) -> ForbiddenRegionMap:
    """Reduced-energy landscape with the self-contact flag per cell.

    `widths` is a ContactWidths, a ContactGeometry, or a (w1, w2) pair.
    """
    geometry = _as_geometry(widths, phi)
    reduced = reduce_over_strains(segment, phi)
    k1_axis, k2_axis = grid.axes()
    k1_grid, k2_grid = np.meshgrid(k1_axis, k2_axis, indexing="ij")
    energy = reduced.value(k1_grid, k2_grid)
    forbidden = geometry.forbidden(k1_grid, k2_grid)
    if bool(np.all(forbidden)) or not bool(np.any(forbidden)):
        raise ResolutionError(
            "grid does not straddle the contact boundary "
            f"({'all' if np.all(forbidden) else 'no'} cells forbidden); "
            "refine or widen the grid"
        )
    return ForbiddenRegionMap(
        kappa1_values=k1_axis, kappa2_values=k2_axis, energy=energy, forbidden=forbidden
    )


def _as_geometry(widths, phi: float) -> ContactGeometry:
    if isinstance(widths, ContactGeometry):
        return widths
    if isinstance(widths, ContactWidths):
        return ContactGeometry(phi=phi, widths=widths)
    w1, w2 = widths
    return ContactGeometry(phi=phi, widths=ContactWidths.pair(w1, w2))


# -- constrained equilibrium -----------------------------------------------------


@dataclass(frozen=True)
class Candidate:
    """One contact-constrained (or fallback) equilibrium of a segment."""

    state: EquilibriumState
    energy_per_area: float
    handedness: str
    contact_residual: float
    tangency_angle: float
    on_boundary: bool
    wide_ribbon: bool
    fallback_ring: bool = False


@dataclass(frozen=True)
class FrustratedSolution:
    """Both handedness candidates of one segment plus the global pick."""

    frustrated: bool
    unconstrained_state: EquilibriumState
    unconstrained_energy: float
    candidate_right: Optional[Candidate]
    candidate_left: Optional[Candidate]
    global_pick: str
    degenerate: bool
    boundary_minima_counts: tuple[int, int]

    def candidate(self, side: str) -> Optional[Candidate]:
        return self.candidate_right if side == "right" else self.candidate_left


def _boundary_radius(geometry: ContactGeometry, psi: float, rho_seed: float) -> Optional[float]:
    """Radius where the ray (cos psi, sin psi) crosses the contact equality."""
    c, s = math.cos(psi), math.sin(psi)

    def clearance_at(rho: float) -> float:
        return geometry.clearance_scalar(rho * c, rho * s)

    rho_lo = 1e-12 * rho_seed
    if not clearance_at(rho_lo) > 0.0:
        return None
    rho_hi = rho_seed
    for _ in range(80):
        if clearance_at(rho_hi) < 0.0:
            break
        rho_hi *= 2.0
    else:
        return None
    return float(brentq(clearance_at, rho_lo, rho_hi, xtol=1e-15, rtol=1e-15))


def _tangency_angle(
    reduced: ReducedEnergy, geometry: ContactGeometry, k1: float, k2: float
) -> float:
    """Unsigned angle between the energy and contact-clearance gradients."""
    g_energy = reduced.gradient(k1, k2)
    h = 1e-7 * max(1.0, abs(k1), abs(k2))
    g_clear = np.array(
        [
            (geometry.clearance_scalar(k1 + h, k2) - geometry.clearance_scalar(k1 - h, k2))
            / (2.0 * h),
            (geometry.clearance_scalar(k1, k2 + h) - geometry.clearance_scalar(k1, k2 - h))
            / (2.0 * h),
        ]
    )
    na, nb = np.linalg.norm(g_energy), np.linalg.norm(g_clear)
    if na == 0.0 or nb == 0.0:
        return 0.0
    cosine = abs(float(g_energy @ g_clear)) / (na * nb)
    return float(math.acos(min(1.0, cosine)))


# The two open arcs between the curvature-plane diagonals; the trajectory
# is helical (nonzero torsion) strictly inside each.
_ARC_A = (-0.75 * math.pi, 0.25 * math.pi)
_ARC_B = (0.25 * math.pi, 1.25 * math.pi)


def _trace_arc_minima(
    reduced: ReducedEnergy,
    geometry: ContactGeometry,
    arc: tuple[float, float],
    rho_seed: float,
    scan_points: int,
) -> list[tuple[float, float, float]]:
    """Local minima of the reduced energy along the boundary inside one arc.

    Returns (kappa1, kappa2, energy) triples.
    """
    lo, hi = arc
    margin = 1e-6 * (hi - lo)
    psis = np.linspace(lo + margin, hi - margin, scan_points)
    radii = np.array(
        [r if (r := _boundary_radius(geometry, p, rho_seed)) is not None else np.nan for p in psis]
    )
    k1s = radii * np.cos(psis)
    k2s = radii * np.sin(psis)
    with np.errstate(invalid="ignore"):
        energies = reduced.value(np.nan_to_num(k1s), np.nan_to_num(k2s))
    energies = np.where(np.isfinite(radii), energies, np.inf)

    def objective(psi: float) -> float:
        rho = _boundary_radius(geometry, psi, rho_seed)
        if rho is None:
            return math.inf
        return float(reduced.value(rho * math.cos(psi), rho * math.sin(psi)))

    minima = []
    for i in range(len(psis)):
        left = energies[i - 1] if i > 0 else math.inf
        right = energies[i + 1] if i < len(psis) - 1 else math.inf
        if math.isfinite(energies[i]) and energies[i] <= left and energies[i] <= right:
            a = psis[max(0, i - 1)]
            b = psis[min(len(psis) - 1, i + 1)]
            result = minimize_scalar(
                objective, bounds=(a, b), method="bounded", options={"xatol": 1e-12}
            )
            psi_star = float(result.x)
            rho_star = _boundary_radius(geometry, psi_star, rho_seed)
            if rho_star is None:
                continue
            minima.append(
                (
                    rho_star * math.cos(psi_star),
                    rho_star * math.sin(psi_star),
                    float(result.fun),
                )
            )
    deduped = []
    for k1, k2, e in sorted(minima, key=lambda m: m[2]):
        if all(math.hypot(k1 - u, k2 - v) > 1e-9 * max(1.0, rho_seed) for u, v, _ in deduped):
            deduped.append((k1, k2, e))
    return deduped


def _ring_fallback(reduced: ReducedEnergy, geometry: ContactGeometry) -> Candidate:
    """Best zero-pitch state: reduced energy minimized along kappa1 = kappa2."""
    s, t = reduced.s_matrix, reduced.t_vector
    quad = s[0, 0] + 2.0 * s[0, 1] + s[1, 1]
    k = -(t[0] + t[1]) / quad if quad > 0.0 else 0.0
    state = reduced.state_at(k, k)
    return Candidate(
        state=state,
        energy_per_area=float(reduced.value(k, k)),
        handedness=RING,
        contact_residual=geometry.clearance_scalar(k, k),
        tangency_angle=math.nan,
        on_boundary=False,
        wide_ribbon=geometry.wide_ribbon_scalar(k, k),
        fallback_ring=True,
    )


def constrained_equilibrium(
    segment: SegmentSpec, phi: float, widths, scan_points: int = 600
) -> FrustratedSolution:
    """Minimum-energy state per handedness under the no-penetration constraint.

    If the unconstrained optimum is already admissible it is returned
    unchanged on its own handedness side; the opposite side still gets its
    boundary minimum so a multi-segment assembly can compare handedness.
    """
    geometry = _as_geometry(widths, phi)
    reduced = reduce_over_strains(segment, phi)
    k1_hat, k2_hat = reduced.minimizer()
    unconstrained = reduced.state_at(k1_hat, k2_hat)
    unconstrained_energy = float(reduced.value(k1_hat, k2_hat))
    frustrated = geometry.forbidden_scalar(k1_hat, k2_hat) and not (
        k1_hat == 0.0 and k2_hat == 0.0
    )
    rho_seed = max(math.hypot(k1_hat, k2_hat), 1e-3)

    c, s = math.cos(phi), math.sin(phi)
    chirality_scale = s * c  # sign of torsion for kappa1 > kappa2
    if chirality_scale == 0.0:
        ring = _ring_fallback(reduced, geometry)
        return FrustratedSolution(
            frustrated=frustrated,
            unconstrained_state=unconstrained,
            unconstrained_energy=unconstrained_energy,
            candidate_right=ring,
            candidate_left=ring,
            global_pick=RING,
            degenerate=True,
            boundary_minima_counts=(0, 0),
        )

    sides = {}
    counts = {}
    for arc in (_ARC_A, _ARC_B):
        mid = 0.5 * (arc[0] + arc[1])
        tau_sign = math.copysign(
            1.0, (math.cos(mid) - math.sin(mid)) * chirality_scale
        )
        side = "right" if tau_sign > 0.0 else "left"
        minima = _trace_arc_minima(reduced, geometry, arc, rho_seed, scan_points)
        counts[side] = len(minima)
        if not minima:
            sides[side] = _ring_fallback(reduced, geometry)
            continue
        k1_b, k2_b, energy_b = minima[0]
        state_b = reduced.state_at(k1_b, k2_b)
        sides[side] = Candidate(
            state=state_b,
            energy_per_area=energy_b,
            handedness=side,
            contact_residual=geometry.clearance_scalar(k1_b, k2_b),
            tangency_angle=_tangency_angle(reduced, geometry, k1_b, k2_b),
            on_boundary=True,
            wide_ribbon=geometry.wide_ribbon_scalar(k1_b, k2_b),
        )

    if not frustrated:
        own_side = handedness_label(_own_helix_angle(unconstrained))
        if own_side in ("right", "left"):
            sides[own_side] = Candidate(
                state=unconstrained,
                energy_per_area=unconstrained_energy,
                handedness=own_side,
                contact_residual=geometry.clearance_scalar(k1_hat, k2_hat),
                tangency_angle=math.nan,
                on_boundary=False,
                wide_ribbon=geometry.wide_ribbon_scalar(k1_hat, k2_hat),
            )

    e_right = sides["right"].energy_per_area
    e_left = sides["left"].energy_per_area
    scale = max(abs(e_right), abs(e_left), 1e-300)
    degenerate = abs(e_right - e_left) <= _ENERGY_TIE_REL * scale
    global_pick = "right" if e_right <= e_left else "left"
    return FrustratedSolution(
        frustrated=frustrated,
        unconstrained_state=unconstrained,
        unconstrained_energy=unconstrained_energy,
        candidate_right=sides["right"],
        candidate_left=sides["left"],
        global_pick=global_pick,
        degenerate=degenerate,
        boundary_minima_counts=(counts.get("right", 0), counts.get("left", 0)),
    )


def _own_helix_angle(state: EquilibriumState) -> float:
    c, s = math.cos(state.phi), math.sin(state.phi)
    knorm = state.kappa1 * c * c + state.kappa2 * s * s
    tau = (state.kappa1 - state.kappa2) * s * c
    if knorm == 0.0 and tau == 0.0:
        return 0.0
    return math.atan2(tau, abs(knorm))


# -- multi-segment assembly -------------------------------------------------------


@dataclass(frozen=True)
class SegmentOutcome:
    """Final state of one segment inside the assembled ribbon."""

    index: int
    solution: FrustratedSolution
    chosen: Candidate
    span: tuple[float, float]


@dataclass(frozen=True)
class SeashellAssembly:
    """Assembled equilibrium shape of the whole ribbon."""

    curve: FramedCurve
    mesh: RibbonMesh
    outcomes: list[SegmentOutcome]
    picked_handedness: str
    total_energy: float
    side_energies: dict
    degenerate_pick: bool


def assemble_seashell(
    spec: RibbonSpec,
    step: Optional[float] = None,
    mesh_n_s: int = 1500,
    mesh_n_t: int = 17,
    thickness_contact: bool = False,
    scan_points: int = 600,
) -> SeashellAssembly:
    """Solve every segment under one shared handedness and build the shape.

    The shared handedness minimizes the summed segment energies; each
    segment contributes its contact-constrained state when frustrated and
    its unconstrained state otherwise.  The piecewise curvature profile is
    integrated into one continuous framed curve (frame continuity across
    segment joints) and swept into the surface mesh.
    """
    if step is None:
        step = spec.total_length / 20000.0
    spans = spec.segment_spans()
    solutions = []
    for i, segment in enumerate(spec.segments):
        geometry = segment_contact_geometry(spec, i, thickness_contact)
        try:
            solutions.append(
                constrained_equilibrium(segment, spec.phi, geometry, scan_points=scan_points)
            )
        except (SolverError, ResolutionError) as exc:
            raise type(exc)(f"segment {i}: {exc}") from exc

    areas = [spec.segment_area(i) for i in range(len(spec.segments))]
    totals = {}
    for side in ("right", "left"):
        total = 0.0
        for sol, area in zip(solutions, areas):
            cand = sol.candidate(side)
            total += area * cand.energy_per_area
        totals[side] = total

    # Shared handedness: the predominant handedness among the segments'
    # unconstrained (no-contact) shapes, weighted by midplane area.  Only
    # when no segment expresses a preference does the summed constrained
    # energy decide.
    votes = {"right": 0.0, "left": 0.0}
    for sol, area in zip(solutions, areas):
        label = handedness_label(_own_helix_angle(sol.unconstrained_state))
        if label in votes:
            votes[label] += area
    scale = max(abs(totals["right"]), abs(totals["left"]), 1e-300)
    energy_tie = abs(totals["right"] - totals["left"]) <= _ENERGY_TIE_REL * scale
    vote_scale = max(votes["right"], votes["left"], 1e-300)
    vote_tie = abs(votes["right"] - votes["left"]) <= 1e-12 * vote_scale
    if not vote_tie:
        picked = "right" if votes["right"] > votes["left"] else "left"
        degenerate_pick = False
    else:
        picked = "right" if totals["right"] <= totals["left"] else "left"
        degenerate_pick = energy_tie

    outcomes = []
    for i, (sol, span) in enumerate(zip(solutions, spans)):
        chosen = sol.candidate(picked)
        outcomes.append(SegmentOutcome(index=i, solution=sol, chosen=chosen, span=span))

    if all(out.chosen.handedness == RING for out in outcomes):
        picked_label = RING
    else:
        picked_label = picked

    breaks = [0.0] + [span[1] for span in spans]
    k1_steps = StepFunction(tuple(breaks), tuple(out.chosen.state.kappa1 for out in outcomes))
    k2_steps = StepFunction(tuple(breaks), tuple(out.chosen.state.kappa2 for out in outcomes))
    curve = integrate_centerline(k1_steps, k2_steps, spec.phi, spec.total_length, step)
    mesh = generate_mesh(curve, spec.width_profile, n_t=mesh_n_t, n_s=mesh_n_s)

    return SeashellAssembly(
        curve=curve,
        mesh=mesh,
        outcomes=outcomes,
        picked_handedness=picked_label,
        total_energy=totals[picked],
        side_energies=totals,
        degenerate_pick=degenerate_pick,
    )
