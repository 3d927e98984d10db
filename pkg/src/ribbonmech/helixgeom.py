"""Centerline geometry: frame integration, helix parameters, self-contact.

The deformed ribbon's centerline and frame follow a linear ODE system in
arclength driven by the two principal curvatures and the frame angle.
For piecewise-constant curvature the trajectory is a sequence of circular
helices; closed-form helix parameters, an independent least-squares helix
fit, a closed-form self-contact predicate and a brute-force geometric
contact oracle all live here.

Frame convention: r1, r2 are the principal curvature directions and
N = r1 x r2 the surface normal.  The length axis of the ribbon is
d_x = cos(phi) r1 + sin(phi) r2 and the width axis
d_y = -sin(phi) r1 + cos(phi) r2.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .errors import DomainError, GeometryError

RING_ANGLE_TOL = 1e-12  # |helix angle| below this counts as a ring

RIGHT = "right"
LEFT = "left"
RING = "ring-degenerate"


def handedness_label(helix_angle: float) -> str:
    if abs(helix_angle) < RING_ANGLE_TOL:
        return RING
    return RIGHT if helix_angle > 0.0 else LEFT


# -- step functions of arclength ---------------------------------------------


@dataclass(frozen=True)
class StepFunction:
    """Piecewise-constant function on [breaks[0], breaks[-1]].

    Left-continuous at interior breaks: the value AT a break belongs to
    the interval ending there.
    """

    breaks: tuple[float, ...]
    values: tuple[float, ...]

    def __post_init__(self):
        breaks = tuple(float(b) for b in self.breaks)
        values = tuple(float(v) for v in self.values)
        if len(breaks) != len(values) + 1:
            raise DomainError("need len(breaks) == len(values) + 1")
        if not all(b1 > b0 for b0, b1 in zip(breaks, breaks[1:])):
            raise DomainError("breaks must be strictly increasing")
        if not all(math.isfinite(v) for v in values):
            raise DomainError(f"non-finite step values: {values}")
        object.__setattr__(self, "breaks", breaks)
        object.__setattr__(self, "values", values)

    @staticmethod
    def constant(value: float, length: float) -> "StepFunction":
        return StepFunction(breaks=(0.0, length), values=(value,))

    def __call__(self, s: float) -> float:
        if not self.breaks[0] <= s <= self.breaks[-1]:
            raise DomainError(f"s={s} outside [{self.breaks[0]}, {self.breaks[-1]}]")
        idx = int(np.searchsorted(np.asarray(self.breaks[1:-1]), s, side="left"))
        return self.values[idx]

    @property
    def length(self) -> float:
        return self.breaks[-1] - self.breaks[0]


def _merged_breaks(k1, k2, length: float) -> tuple[np.ndarray, "StepFunction", "StepFunction"]:
    if not isinstance(k1, StepFunction):
        k1 = StepFunction.constant(float(k1), length)
    if not isinstance(k2, StepFunction):
        k2 = StepFunction.constant(float(k2), length)
    for f in (k1, k2):
        if abs(f.breaks[0]) > 1e-12 or abs(f.breaks[-1] - length) > 1e-9 * max(1.0, length):
            raise DomainError("curvature step functions must span [0, length]")
    breaks = np.union1d(np.asarray(k1.breaks), np.asarray(k2.breaks))
    return breaks, k1, k2


# -- framed curves ------------------------------------------------------------


@dataclass(frozen=True)
class FramedCurve:
    """Sampled centerline with its orthonormal frame.

    Arrays have one row per sample: points (n,3), r1/r2/normal (n,3),
    s (n,).  `phi` is the frame angle the curve was integrated with.
    """

    s: np.ndarray
    points: np.ndarray
    r1: np.ndarray
    r2: np.ndarray
    normal: np.ndarray
    phi: float

    def __len__(self) -> int:
        return len(self.s)

    def tangents(self) -> np.ndarray:
        c, s = math.cos(self.phi), math.sin(self.phi)
        return c * self.r1 + s * self.r2

    def width_directions(self) -> np.ndarray:
        c, s = math.cos(self.phi), math.sin(self.phi)
        return -s * self.r1 + c * self.r2

    def orthonormality_error(self) -> float:
        """Worst deviation from unit length, orthogonality and N = r1 x r2."""
        errs = [
            np.abs(np.einsum("ij,ij->i", self.r1, self.r1) - 1.0),
            np.abs(np.einsum("ij,ij->i", self.r2, self.r2) - 1.0),
            np.abs(np.einsum("ij,ij->i", self.normal, self.normal) - 1.0),
            np.abs(np.einsum("ij,ij->i", self.r1, self.r2)),
            np.abs(np.einsum("ij,ij->i", self.r1, self.normal)),
            np.abs(np.einsum("ij,ij->i", self.r2, self.normal)),
            np.abs(np.cross(self.r1, self.r2) - self.normal).max(axis=1),
        ]
        return float(np.max([e.max() for e in errs]))

    def subsample(self, count: int) -> "FramedCurve":
        if count < 2 or len(self) < 2:
            raise DomainError("need at least two samples")
        idx = np.unique(np.linspace(0, len(self) - 1, count).round().astype(int))
        return FramedCurve(
            s=self.s[idx],
            points=self.points[idx],
            r1=self.r1[idx],
            r2=self.r2[idx],
            normal=self.normal[idx],
            phi=self.phi,
        )

    def to_csv_text(self) -> str:
        header = "s,px,py,pz,r1x,r1y,r1z,r2x,r2y,r2z,nx,ny,nz"
        cols = np.column_stack([self.s, self.points, self.r1, self.r2, self.normal])
        rows = [",".join(f"{v:.9g}" for v in row) for row in cols]
        return "\n".join([header] + rows) + "\n"


def _rk4_step_matrix(kappa1: float, kappa2: float, phi: float, h: float) -> np.ndarray:
    """Degree-4 Taylor (= RK4 on this linear autonomous system) step map.

    Acts on the (4,3) state [P; N; r1; r2] from the left.
    """
    c, s = math.cos(phi), math.sin(phi)
    a, b = kappa1 * c, kappa2 * s
    gen = np.array(
        [
            [0.0, 0.0, c, s],
            [0.0, 0.0, a, b],
            [0.0, -a, 0.0, 0.0],
            [0.0, -b, 0.0, 0.0],
        ]
    )
    hg = h * gen
    m = np.eye(4)
    term = np.eye(4)
    for k in range(1, 5):
        term = term @ hg / k
        m = m + term
    return m


def _reorthonormalize(y: np.ndarray) -> np.ndarray:
    r1 = y[2] / np.linalg.norm(y[2])
    r2 = y[3] - (y[3] @ r1) * r1
    r2 = r2 / np.linalg.norm(r2)
    out = y.copy()
    out[1] = np.cross(r1, r2)
    out[2] = r1
    out[3] = r2
    return out


def integrate_centerline(kappa1, kappa2, phi: float, length: float, step: float) -> FramedCurve:
    """Integrate the frame ODEs with a fixed-step 4th-order scheme.

    kappa1/kappa2 are StepFunction instances on [0, length] (plain floats
    are promoted to constants).  The frame is re-orthonormalized after
    every step and a sample is placed exactly at every curvature break.
    """
    if step <= 0.0:
        raise DomainError(f"step must be positive, got {step}")
    if length <= 0.0:
        raise DomainError(f"length must be positive, got {length}")
    breaks, k1, k2 = _merged_breaks(kappa1, kappa2, length)
    min_piece = float(np.min(np.diff(breaks)))
    if step > min_piece / 10.0 + 1e-15:
        raise DomainError(
            f"step {step} too coarse: must be <= {min_piece / 10.0} (shortest piece / 10)"
        )

    c, s = math.cos(phi), math.sin(phi)
    y = np.array(
        [
            [0.0, 0.0, 0.0],
            [0.0, 0.0, 1.0],
            [c, -s, 0.0],
            [s, c, 0.0],
        ]
    )
    s_list = [0.0]
    samples = [y]
    s_here = 0.0
    for s0, s1 in zip(breaks[:-1], breaks[1:]):
        piece = float(s1 - s0)
        mid = 0.5 * (s0 + s1)
        ka, kb = k1(mid), k2(mid)
        n_steps = max(1, int(math.ceil(piece / step - 1e-12)))
        h = piece / n_steps
        m = _rk4_step_matrix(ka, kb, phi, h)
        for i in range(n_steps):
            y = _reorthonormalize(m @ y)
            s_here = s0 + (i + 1) * h
            s_list.append(s_here)
            samples.append(y)

    stack = np.stack(samples)
    return FramedCurve(
        s=np.asarray(s_list),
        points=stack[:, 0, :],
        normal=stack[:, 1, :],
        r1=stack[:, 2, :],
        r2=stack[:, 3, :],
        phi=phi,
    )


# -- closed-form helix parameters ---------------------------------------------


def curvature_torsion(kappa1: float, kappa2: float, phi: float) -> tuple[float, float]:
    """Signed normal curvature along the length axis, and torsion."""
    c, s = math.cos(phi), math.sin(phi)
    knorm = kappa1 * c * c + kappa2 * s * s
    tau = (kappa1 - kappa2) * s * c
    return knorm, tau


def turn_arclength(kappa1: float, kappa2: float, phi: float) -> float:
    """Arclength of one full turn of the constant-curvature trajectory."""
    knorm, tau = curvature_torsion(kappa1, kappa2, phi)
    m = math.hypot(knorm, tau)
    if m == 0.0:
        raise DomainError("straight trajectory has no turns")
    return 2.0 * math.pi / m


@dataclass(frozen=True)
class DirectFormulaEstimates:
    """Alternative closed-form (radius, pitch, theta) evaluated directly
    from the curvature components.

    These expressions mix squared curvatures with single trigonometric
    powers and disagree dimensionally with the curvature/torsion route
    away from special cases; they are reported for cross-checking, never
    used downstream.
    """

    radius: float
    pitch: float
    theta: float


@dataclass(frozen=True)
class HelixParams:
    """Axis-frame geometry of the constant-curvature trajectory.

    theta is the angle between the helix axis and the ribbon length axis;
    helix_angle_Phi is the signed angle between the tangent and the plane
    normal to the axis (its sign is the handedness).  Primary values come
    from the trajectory's curvature and torsion.
    """

    theta: float
    radius_R: float
    pitch_D: float
    helix_angle_Phi: float
    handedness: str
    direct: Optional[DirectFormulaEstimates] = None


def helix_params_closed_form(kappa1: float, kappa2: float, phi: float) -> HelixParams:
    """Closed-form helix parameters for constant (kappa1, kappa2, phi)."""
    if kappa1 == 0.0 and kappa2 == 0.0:
        raise DomainError("both curvatures zero: straight segment, no helix")
    c, s = math.cos(phi), math.sin(phi)
    knorm, tau = curvature_torsion(kappa1, kappa2, phi)
    msq = (kappa1 * c) ** 2 + (kappa2 * s) ** 2  # = knorm^2 + tau^2

    if knorm != 0.0:
        helix_angle = math.atan(tau / knorm)
    else:
        helix_angle = math.copysign(0.5 * math.pi, tau) if tau != 0.0 else 0.0
    pitch = 2.0 * math.pi * tau / msq
    radius = abs(knorm) / msq
    theta = 0.5 * math.pi - helix_angle

    def _safe_inverse(x: float) -> float:
        return 1.0 / x if x != 0.0 else math.inf

    theta_denom = kappa1**2 * c + kappa2**2 * s
    theta_direct = (
        math.atan((kappa1 - kappa2) * c * s / theta_denom) if theta_denom != 0.0 else math.nan
    )
    radius_direct = (
        _safe_inverse(kappa1**2 * math.cos(phi + theta_direct) + kappa2**2 * math.sin(phi + theta_direct))
        if math.isfinite(theta_direct)
        else math.nan
    )
    direct = DirectFormulaEstimates(radius=radius_direct, pitch=pitch, theta=theta_direct)

    return HelixParams(
        theta=theta,
        radius_R=radius,
        pitch_D=pitch,
        helix_angle_Phi=helix_angle,
        handedness=handedness_label(helix_angle),
        direct=direct,
    )


# -- least-squares helix fitting ----------------------------------------------


@dataclass(frozen=True)
class HelixFit:
    """Helix recovered from a sampled curve, with its fit residual."""

    params: HelixParams
    rms_residual: float
    axis: np.ndarray
    center: np.ndarray
    turns: float


def fit_helix(curve: FramedCurve, min_turns: float = 1.5) -> HelixFit:
    """Fit axis, radius and pitch to a constant-curvature sampled curve.

    The axis comes from principal-axis analysis of the discrete tangent
    directions (the zero-variance direction), the radius from a circle
    fit of the axis-plane projection, and the pitch from a linear fit of
    axial advance against unwrapped angle.  Independent of the integrator
    frame: only the sampled points are used.
    """
    pts = np.asarray(curve.points, dtype=float)
    if len(pts) < 16:
        raise GeometryError("need at least 16 samples to fit a helix")

    chords = pts[2:] - pts[:-2]
    lens = np.linalg.norm(chords, axis=1)
    if np.any(lens == 0.0):
        raise GeometryError("degenerate (repeated) samples")
    tangents = chords / lens[:, None]

    spread = float(np.linalg.norm(tangents.max(axis=0) - tangents.min(axis=0)))
    if spread < 1e-8:
        raise GeometryError("tangents do not rotate: straight curve, nothing to fit")

    centered = tangents - tangents.mean(axis=0)
    cov = centered.T @ centered / len(tangents)
    eigvals, eigvecs = np.linalg.eigh(cov)
    axis = eigvecs[:, 0]
    mean_tangent = tangents.mean(axis=0)
    if mean_tangent @ axis < 0.0:
        axis = -axis

    # Right-handed plane basis (e1, e2, axis).
    seed = np.eye(3)[int(np.argmin(np.abs(axis)))]
    e1 = seed - (seed @ axis) * axis
    e1 = e1 / np.linalg.norm(e1)
    e2 = np.cross(axis, e1)

    x = pts @ e1
    y = pts @ e2
    z = pts @ axis

    a_mat = np.column_stack([2.0 * x, 2.0 * y, np.ones_like(x)])
    rhs = x**2 + y**2
    (cx, cy, d), *_ = np.linalg.lstsq(a_mat, rhs, rcond=None)
    radius_sq = d + cx**2 + cy**2
    if radius_sq <= 0.0:
        raise GeometryError("projected circle fit collapsed")
    radius = float(math.sqrt(radius_sq))

    angles = np.unwrap(np.arctan2(y - cy, x - cx))
    turns = float((angles.max() - angles.min()) / (2.0 * math.pi))
    if turns < min_turns:
        raise GeometryError(f"only {turns:.2f} turns sampled, need >= {min_turns}")

    fit_mat = np.column_stack([angles, np.ones_like(angles)])
    (advance_per_rad, z0), *_ = np.linalg.lstsq(fit_mat, z, rcond=None)
    pitch = float(2.0 * math.pi * advance_per_rad)

    radial = np.hypot(x - cx, y - cy) - radius
    axial = z - (z0 + advance_per_rad * angles)
    rms = float(np.sqrt(np.mean(radial**2 + axial**2)))

    helix_angle = math.atan2(advance_per_rad, radius)
    params = HelixParams(
        theta=0.5 * math.pi - helix_angle,
        radius_R=radius,
        pitch_D=pitch,
        helix_angle_Phi=helix_angle,
        handedness=handedness_label(helix_angle),
        direct=None,
    )
    center = (cx * e1 + cy * e2) + z0 * axis
    return HelixFit(params=params, rms_residual=rms, axis=axis, center=center, turns=turns)


# -- self-contact -------------------------------------------------------------


@dataclass(frozen=True)
class ContactCheck:
    """Outcome of the closed-form adjacent-turn contact test.

    `clearance` is the axial gap left between the facing edges of two
    adjacent turns: |pitch| minus the projected half-widths (minus the
    extra gap when a physical thickness offset is requested).  Contact
    means clearance <= 0, or width beyond the quarter-circumference
    validity of the projection (`wide_ribbon`).
    """

    contact: bool
    wide_ribbon: bool
    clearance: float
    pitch: float
    extent: float
    radius: float
    turn_arclength: float

    def __bool__(self) -> bool:
        return self.contact


def self_contact(
    kappa1: float,
    kappa2: float,
    phi: float,
    width1: float,
    width2: float,
    thickness_gap: float = 0.0,
) -> ContactCheck:
    """Do adjacent turns of the ideal trajectory touch or overlap?

    width1/width2 are the ribbon widths at the two adjacent turns. The
    widthwise direction makes a fixed angle with the helix axis, so each
    turn occupies an axial band of half-width (w/2)*sin(theta); bands
    meeting or overlapping across one pitch means contact.
    """
    if width1 <= 0.0 or width2 <= 0.0:
        raise DomainError(f"widths must be positive, got {width1}, {width2}")
    if kappa1 == 0.0 and kappa2 == 0.0:
        raise DomainError("both curvatures zero: straight ribbon cannot self-contact")
    knorm, tau = curvature_torsion(kappa1, kappa2, phi)
    msq = knorm * knorm + tau * tau
    m = math.sqrt(msq)
    pitch = 2.0 * math.pi * tau / msq
    sin_theta = abs(knorm) / m
    radius = abs(knorm) / msq
    extent = 0.5 * (width1 + width2) * sin_theta
    clearance = abs(pitch) - extent - thickness_gap

    wide = False
    if radius * sin_theta == 0.0:
        wide = True
    else:
        arg = max(width1, width2) / (2.0 * radius * sin_theta)
        wide = arg >= 0.5 * math.pi
    return ContactCheck(
        contact=bool(clearance <= 0.0 or wide),
        wide_ribbon=wide,
        clearance=float(clearance),
        pitch=float(pitch),
        extent=float(extent),
        radius=float(radius),
        turn_arclength=2.0 * math.pi / m,
    )


# -- brute-force geometric contact oracle -------------------------------------


def _segment_distance_block(pa, da, pb, db) -> np.ndarray:
    """Min distances between segment sets {pa+u*da} x {pb+v*db}, u,v in [0,1].

    pa/da have shape (na,3), pb/db (nb,3); returns (na, nb).
    """
    pa = pa[:, None, :]
    da = da[:, None, :]
    pb = pb[None, :, :]
    db = db[None, :, :]
    r = pa - pb
    a = np.einsum("ijk,ijk->ij", da, da)
    e = np.einsum("ijk,ijk->ij", db, db)
    f = np.einsum("ijk,ijk->ij", db, r)
    c = np.einsum("ijk,ijk->ij", da, r)
    b = np.einsum("ijk,ijk->ij", da, db)
    denom = a * e - b * b
    with np.errstate(divide="ignore", invalid="ignore"):
        u = np.where(denom > 0.0, np.clip((b * f - c * e) / denom, 0.0, 1.0), 0.0)
        v = (b * u + f) / e
        v_clamped = np.clip(v, 0.0, 1.0)
        u = np.where(v != v_clamped, np.clip((b * v_clamped - c) / a, 0.0, 1.0), u)
    closest_a = pa + u[..., None] * da
    closest_b = pb + v_clamped[..., None] * db
    return np.linalg.norm(closest_a - closest_b, axis=-1)


def ribbon_rulings(
    curve: FramedCurve, width_profile, count: int
) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Widthwise rulings (start point, direction, arclength) of the surface."""
    sub = curve.subsample(count) if count < len(curve) else curve
    w = np.asarray(width_profile.width(sub.s), dtype=float)
    dy = sub.width_directions()
    start = sub.points - 0.5 * w[:, None] * dy
    direction = w[:, None] * dy
    return start, direction, sub.s


def ruling_clearances(
    curve: FramedCurve,
    width_profile,
    local_turn_arclength,
    ruling_count: int = 800,
    min_separation_factor: float = 0.6,
    chunk: int = 256,
) -> np.ndarray:
    """Per-ruling min distance to any ruling at least most of a turn away.

    `local_turn_arclength` is a scalar or a per-sample callable giving the
    arclength of one turn near each station; rulings closer than
    min_separation_factor times that are the same surface neighborhood
    and are excluded.  Entries with no qualifying partner are +inf.
    """
    start, direction, s = ribbon_rulings(curve, width_profile, ruling_count)
    n = len(s)
    if callable(local_turn_arclength):
        periods = np.array([float(local_turn_arclength(v)) for v in s])
    else:
        periods = np.full(n, float(local_turn_arclength))
    out = np.full(n, np.inf)
    for lo in range(0, n, chunk):
        hi = min(lo + chunk, n)
        dmat = _segment_distance_block(start[lo:hi], direction[lo:hi], start, direction)
        sep = np.abs(s[lo:hi, None] - s[None, :])
        min_sep = min_separation_factor * np.maximum(periods[lo:hi, None], periods[None, :])
        dmat = np.where(sep >= min_sep, dmat, np.inf)
        out[lo:hi] = dmat.min(axis=1)
    return out


@dataclass(frozen=True)
class ContactOracleResult:
    """Result of the sampled-surface inter-turn distance check."""

    contact: bool
    min_distance: float
    tolerance: float
    turns: float
    turn_arclength: float

    def __bool__(self) -> bool:
        return self.contact


def brute_force_contact(
    curve: FramedCurve,
    width_profile,
    thickness: float,
    zero_thickness: bool = False,
    rulings_per_turn: int = 220,
) -> ContactOracleResult:
    """Geometric contact oracle: sample the ruled surface, measure gaps.

    Declares contact when the minimum distance between surface rulings
    belonging to different turns falls below the tolerance (the stack
    thickness, or 1e-3 of the fitted radius in zero-thickness mode).
    """
    fit = fit_helix(curve, min_turns=1.9)
    period = 2.0 * math.pi * math.hypot(
        fit.params.radius_R, fit.params.pitch_D / (2.0 * math.pi)
    )
    turns = float((curve.s[-1] - curve.s[0]) / period)
    if turns < 2.0:
        raise GeometryError(f"curve spans {turns:.2f} turns, oracle needs >= 2")
    tolerance = 1e-3 * fit.params.radius_R if zero_thickness else thickness
    count = int(max(64, rulings_per_turn * turns))
    distances = ruling_clearances(curve, width_profile, period, ruling_count=count)
    min_distance = float(distances.min())
    return ContactOracleResult(
        contact=bool(min_distance < tolerance),
        min_distance=min_distance,
        tolerance=float(tolerance),
        turns=turns,
        turn_arclength=period,
    )


# -- ruled surface mesh --------------------------------------------------------


@dataclass(frozen=True)
class RibbonMesh:
    """Triangulated ruled surface swept by the width segment."""

    vertices: np.ndarray  # (n_s * n_t, 3)
    faces: np.ndarray  # (2 (n_s-1)(n_t-1), 3) int, CCW per quad split
    n_s: int
    n_t: int

    def area(self) -> float:
        tri = self.vertices[self.faces]
        cross = np.cross(tri[:, 1] - tri[:, 0], tri[:, 2] - tri[:, 0])
        return float(0.5 * np.linalg.norm(cross, axis=1).sum())

    def euler_characteristic(self) -> int:
        edges = np.concatenate(
            [self.faces[:, [0, 1]], self.faces[:, [1, 2]], self.faces[:, [2, 0]]]
        )
        edges = np.sort(edges, axis=1)
        n_edges = len(np.unique(edges, axis=0))
        return len(self.vertices) - n_edges + len(self.faces)

    def to_obj_text(self) -> str:
        lines = [f"v {v[0]:.9g} {v[1]:.9g} {v[2]:.9g}" for v in self.vertices]
        lines += [f"f {f[0] + 1} {f[1] + 1} {f[2] + 1}" for f in self.faces]
        return "\n".join(lines) + "\n"


def generate_mesh(
    curve: FramedCurve, width_profile, n_t: int, n_s: Optional[int] = None
) -> RibbonMesh:
    """Mesh the ruled surface P(s) + t*d_y(s), t in [-w(s)/2, +w(s)/2].

    Each grid quad is split along its (i,j) -> (i+1,j+1) diagonal so
    repeated runs produce identical files.
    """
    if n_t < 2:
        raise DomainError(f"n_t must be >= 2, got {n_t}")
    sub = curve.subsample(n_s) if (n_s is not None and n_s < len(curve)) else curve
    ns = len(sub)
    w = np.asarray(width_profile.width(sub.s), dtype=float)
    if np.any(w <= 0.0):
        raise DomainError("width must stay positive over the meshed span")
    dy = sub.width_directions()
    t_frac = np.linspace(-0.5, 0.5, n_t)
    vertices = sub.points[:, None, :] + (w[:, None] * t_frac[None, :])[:, :, None] * dy[:, None, :]
    vertices = vertices.reshape(ns * n_t, 3)

    i = np.repeat(np.arange(ns - 1), n_t - 1)
    j = np.tile(np.arange(n_t - 1), ns - 1)
    v00 = i * n_t + j
    v10 = (i + 1) * n_t + j
    v11 = (i + 1) * n_t + j + 1
    v01 = i * n_t + j + 1
    faces = np.concatenate(
        [np.column_stack([v00, v10, v11])[:, None, :], np.column_stack([v00, v11, v01])[:, None, :]],
        axis=1,
    ).reshape(-1, 3)
    return RibbonMesh(vertices=vertices, faces=faces, n_s=ns, n_t=n_t)
