"""Through-thickness strain field and potential energy per unit area.

A candidate configuration of a segment is described by three midplane
strains and two principal curvatures held at a fixed frame angle.  The
in-plane strain at height z is affine in z, so the quadratic energy
density integrates through each layer in closed form (moments of z up to
order two); no quadrature is used anywhere.

The elastic strain entering the quadratic term is the geometric strain of
the state minus the layer eigenstrain.  Surface stresses contribute a
term linear in the surface strains.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, SpecError
from .model import RibbonSpec, SegmentSpec

# Beyond this times 1/H the thin-sheet kinematics is meaningless.
CURVATURE_SANITY_FACTOR = 10.0


@dataclass(frozen=True)
class EquilibriumState:
    """Midplane strains and principal curvatures of one segment.

    kappa1/kappa2 are the curvatures along the principal axes; the first
    principal axis sits at -phi (CCW) from the ribbon length axis.
    """

    eps_xx: float
    eps_yy: float
    eps_xy: float
    kappa1: float
    kappa2: float
    phi: float

    def __post_init__(self):
        values = (self.eps_xx, self.eps_yy, self.eps_xy, self.kappa1, self.kappa2, self.phi)
        if not all(math.isfinite(v) for v in values):
            raise SpecError(f"state must be finite, got {values}")

    @staticmethod
    def flat(phi: float = 0.0) -> "EquilibriumState":
        return EquilibriumState(0.0, 0.0, 0.0, 0.0, 0.0, phi)

    @staticmethod
    def from_vector(v, phi: float) -> "EquilibriumState":
        v = np.asarray(v, dtype=float)
        return EquilibriumState(v[0], v[1], v[2], v[3], v[4], phi)

    def vector(self) -> np.ndarray:
        """Unknowns as [eps_xx, eps_yy, eps_xy, kappa1, kappa2]."""
        return np.array([self.eps_xx, self.eps_yy, self.eps_xy, self.kappa1, self.kappa2])

    def midplane_strain(self) -> np.ndarray:
        return np.array([self.eps_xx, self.eps_yy, self.eps_xy])

    def curvatures_in_frame(self, phi: float) -> tuple[float, float]:
        """(kappa1, kappa2) re-expressed in the frame at angle -phi.

        Only the same frame and the frame a quarter turn away carry a
        diagonal curvature tensor, so phi must match self.phi modulo pi/2.
        """
        delta = (phi - self.phi) % math.pi
        if min(delta, math.pi - delta) < 1e-12:
            return (self.kappa1, self.kappa2)
        if abs(delta - math.pi / 2.0) < 1e-12:
            return (self.kappa2, self.kappa1)
        raise DomainError(f"frame at phi={phi} not compatible with state phi={self.phi}")

    def canonical(self) -> "EquilibriumState":
        """Equivalent state with kappa1 >= kappa2 and phi wrapped to (-pi/2, pi/2]."""
        k1, k2, phi = self.kappa1, self.kappa2, self.phi
        if k1 < k2:
            k1, k2 = k2, k1
            phi = phi + math.pi / 2.0
        phi = (phi + math.pi / 2.0) % math.pi - math.pi / 2.0
        if phi == -math.pi / 2.0:
            phi = math.pi / 2.0
        return EquilibriumState(self.eps_xx, self.eps_yy, self.eps_xy, k1, k2, phi)


@dataclass(frozen=True)
class StrainSample:
    """In-plane strain components at one height z."""

    gamma_xx: float
    gamma_yy: float
    gamma_xy: float

    def vector(self) -> np.ndarray:
        return np.array([self.gamma_xx, self.gamma_yy, self.gamma_xy])


def curvature_tensor(kappa1: float, kappa2: float, phi: float) -> np.ndarray:
    """Curvature tensor in ribbon axes, [K_xx, K_yy, K_xy] (tensor shear)."""
    c, s = math.cos(phi), math.sin(phi)
    return np.array(
        [
            kappa1 * c * c + kappa2 * s * s,
            kappa1 * s * s + kappa2 * c * c,
            (kappa2 - kappa1) * s * c,
        ]
    )


def strain_at(state: EquilibriumState, z: float, residual=(0.0, 0.0, 0.0)) -> StrainSample:
    """Strain at height z: midplane + z * curvature tensor + residual(z).

    `residual` is the built-in strain of the flat reference at this height
    (the negative of the local layer eigenstrain).
    """
    bend = curvature_tensor(state.kappa1, state.kappa2, state.phi)
    res = np.asarray(residual, dtype=float)
    if res.shape != (3,):
        raise DomainError(f"residual must be a length-3 tensor, got shape {res.shape}")
    g = state.midplane_strain() + z * bend + res
    return StrainSample(float(g[0]), float(g[1]), float(g[2]))


def _check_z(segment: SegmentSpec, z: float):
    h = segment.total_thickness
    if not -0.5 * h - 1e-12 <= z <= 0.5 * h + 1e-12:
        raise DomainError(f"z={z} outside [-H/2, H/2] with H={h}")


def segment_strain_at(state: EquilibriumState, segment: SegmentSpec, z: float) -> StrainSample:
    """Strain at height z inside a segment, residual taken from its stack."""
    _check_z(segment, z)
    layer = segment.layer_at(z)
    return strain_at(state, z, residual=-layer.eigenstrain_ribbon_frame())


def _check_curvature_sanity(state: EquilibriumState, segment: SegmentSpec):
    bound = CURVATURE_SANITY_FACTOR / segment.total_thickness
    if max(abs(state.kappa1), abs(state.kappa2)) > bound:
        raise DomainError(
            f"curvature beyond {bound}/mm sanity bound for thickness {segment.total_thickness}"
        )


def _surface_vectors(segment: SegmentSpec) -> tuple[np.ndarray, np.ndarray]:
    """Surface stresses as contraction vectors (factor 2 on the shear slot)."""
    weight = np.array([1.0, 1.0, 2.0])
    f_top = np.asarray(segment.surface_stress.top) * weight
    f_bottom = np.asarray(segment.surface_stress.bottom) * weight
    return f_bottom, f_top


def energy_per_area(state: EquilibriumState, segment: SegmentSpec) -> float:
    """Potential energy per unit midplane area of a segment at this state.

    Quadratic elastic term integrated layer by layer in closed form, plus
    the surface-stress terms evaluated at z = -H/2 and +H/2.
    """
    if len(segment.layers) == 0:
        raise SpecError("segment has no layers")
    _check_curvature_sanity(state, segment)

    eps = state.midplane_strain()
    bend = curvature_tensor(state.kappa1, state.kappa2, state.phi)
    bounds = segment.layer_bounds()

    total = 0.0
    for layer, za, zb in zip(segment.layers, bounds[:-1], bounds[1:]):
        m0 = zb - za
        m1 = 0.5 * (zb**2 - za**2)
        m2 = (zb**3 - za**3) / 3.0
        stiff = layer.stiffness().matrix()
        u = eps - layer.eigenstrain_ribbon_frame()
        total += 0.5 * (
            m0 * (u @ stiff @ u) + 2.0 * m1 * (u @ stiff @ bend) + m2 * (bend @ stiff @ bend)
        )

    f_bottom, f_top = _surface_vectors(segment)
    if np.any(f_bottom) or np.any(f_top):
        h = segment.total_thickness
        e_bottom = segment_strain_at(state, segment, -0.5 * h).vector()
        e_top = segment_strain_at(state, segment, +0.5 * h).vector()
        total += float(f_bottom @ e_bottom + f_top @ e_top)
    return float(total)


def total_energy(states, spec: RibbonSpec) -> float:
    """Total energy: per-segment energy density times exact segment area."""
    states = list(states)
    if len(states) != len(spec.segments):
        raise SpecError(
            f"need one state per segment: {len(states)} states, {len(spec.segments)} segments"
        )
    return sum(
        energy_per_area(state, seg) * spec.segment_area(i)
        for i, (state, seg) in enumerate(zip(states, spec.segments))
    )


@dataclass(frozen=True)
class SegmentQuadraticForm:
    """Energy per area as an explicit quadratic in the five unknowns.

    energy(v) = 0.5 v' H v + g' v + c  with v = [eps_xx, eps_yy, eps_xy,
    kappa1, kappa2] at the fixed frame angle `phi`.
    """

    matrix: np.ndarray  # (5, 5) symmetric
    linear: np.ndarray  # (5,)
    constant: float
    phi: float

    def value(self, v) -> float:
        v = np.asarray(v, dtype=float)
        return float(0.5 * v @ self.matrix @ v + self.linear @ v + self.constant)

    def gradient(self, v) -> np.ndarray:
        return self.matrix @ np.asarray(v, dtype=float) + self.linear


def assemble_quadratic_form(segment: SegmentSpec, phi: float) -> SegmentQuadraticForm:
    """Closed-form layer-by-layer assembly of the 5x5 energy quadratic."""
    if len(segment.layers) == 0:
        raise SpecError("segment has no layers")
    c, s = math.cos(phi), math.sin(phi)
    # Columns map (kappa1, kappa2) to the bending strain tensor per unit z.
    bend_map = np.array([[c * c, s * s], [s * s, c * c], [-s * c, s * c]])

    a_block = np.zeros((3, 3))
    b_block = np.zeros((3, 2))
    c_block = np.zeros((2, 2))
    g_eps = np.zeros(3)
    g_kappa = np.zeros(2)
    const = 0.0

    bounds = segment.layer_bounds()
    for layer, za, zb in zip(segment.layers, bounds[:-1], bounds[1:]):
        m0 = zb - za
        m1 = 0.5 * (zb**2 - za**2)
        m2 = (zb**3 - za**3) / 3.0
        stiff = layer.stiffness().matrix()
        star = layer.eigenstrain_ribbon_frame()
        a_block += m0 * stiff
        b_block += m1 * stiff @ bend_map
        c_block += m2 * bend_map.T @ stiff @ bend_map
        g_eps += -m0 * stiff @ star
        g_kappa += -m1 * bend_map.T @ (stiff @ star)
        const += 0.5 * m0 * (star @ stiff @ star)

    f_bottom, f_top = _surface_vectors(segment)
    if np.any(f_bottom) or np.any(f_top):
        h = segment.total_thickness
        for f_vec, z in ((f_bottom, -0.5 * h), (f_top, +0.5 * h)):
            g_eps += f_vec
            g_kappa += z * bend_map.T @ f_vec
            const += -f_vec @ segment.layer_at(z).eigenstrain_ribbon_frame()

    matrix = np.block([[a_block, b_block], [b_block.T, c_block]])
    matrix = 0.5 * (matrix + matrix.T)
    return SegmentQuadraticForm(
        matrix=matrix,
        linear=np.concatenate([g_eps, g_kappa]),
        constant=float(const),
        phi=phi,
    )
