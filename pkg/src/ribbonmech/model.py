"""Problem definition for pre-strained multilayer ribbons.

A ribbon is a thin elastic sheet of tapered width built from a stack of
bonded layers.  Each layer may carry an eigenstrain (the stress-free
strain it would relax to if unbonded, e.g. from pre-stretching before
bonding) and the stack may carry effective surface stresses on its two
faces.  The ribbon is split lengthwise into segments with independent
stacks.

In-plane symmetric 2x2 tensors (strains, surface stresses) are stored as
length-3 vectors [xx, yy, xy] with the TENSOR shear component xy; the
stiffness contraction carries the factor 2 where engineering shear would
appear.  Angles are radians internally; lengths are mm.
"""

from __future__ import annotations

import json
import math
import warnings
from dataclasses import dataclass, field

import numpy as np

from .errors import DomainError, SpecError

# Ratio below which H << w << L is considered comfortably satisfied.
SLENDERNESS_FACTOR = 5.0


def rotate_strain(eps, angle: float) -> np.ndarray:
    """Rotate an in-plane symmetric tensor [xx, yy, xy] by `angle` (active, CCW).

    Equivalent to R(angle) @ E @ R(angle).T on the 2x2 matrix form.  Trace
    and determinant are preserved.
    """
    e = np.asarray(eps, dtype=float)
    if e.shape != (3,):
        raise DomainError(f"expected a length-3 tensor [xx, yy, xy], got shape {e.shape}")
    c, s = math.cos(angle), math.sin(angle)
    xx, yy, xy = e
    return np.array(
        [
            c * c * xx + s * s * yy - 2.0 * s * c * xy,
            s * s * xx + c * c * yy + 2.0 * s * c * xy,
            s * c * (xx - yy) + (c * c - s * s) * xy,
        ]
    )


@dataclass(frozen=True)
class PlaneStressStiffness:
    """Reduced in-plane stiffness under zero transverse normal stress."""

    q11: float
    q12: float
    q22: float
    q66: float

    def matrix(self) -> np.ndarray:
        """3x3 operator on [e_xx, e_yy, e_xy] (tensor shear, hence 4*q66)."""
        return np.array(
            [
                [self.q11, self.q12, 0.0],
                [self.q12, self.q22, 0.0],
                [0.0, 0.0, 4.0 * self.q66],
            ]
        )


def reduced_stiffness(youngs_modulus: float, poisson_ratio: float) -> PlaneStressStiffness:
    """Isotropic plane-stress stiffness for modulus E and Poisson ratio nu."""
    if youngs_modulus <= 0.0:
        raise DomainError(f"youngs_modulus must be positive, got {youngs_modulus}")
    if not -1.0 < poisson_ratio < 0.5:
        raise DomainError(f"poisson_ratio must lie in (-1, 0.5), got {poisson_ratio}")
    q11 = youngs_modulus / (1.0 - poisson_ratio**2)
    return PlaneStressStiffness(
        q11=q11,
        q12=poisson_ratio * q11,
        q22=q11,
        q66=youngs_modulus / (2.0 * (1.0 + poisson_ratio)),
    )


@dataclass(frozen=True)
class WidthProfile:
    """Linearly tapered width w(s) = w0 - alpha*s (alpha=0: constant width)."""

    w0: float
    alpha: float = 0.0

    def __post_init__(self):
        if not self.w0 > 0.0:
            raise SpecError(f"w0 must be positive, got {self.w0}")

    def width(self, s):
        return self.w0 - self.alpha * np.asarray(s, dtype=float)

    @staticmethod
    def from_endpoints(width_start: float, width_end: float, length: float) -> "WidthProfile":
        if length <= 0.0:
            raise SpecError(f"length must be positive, got {length}")
        return WidthProfile(w0=width_start, alpha=(width_start - width_end) / length)


def _as_tensor3(value, name: str) -> tuple[float, float, float]:
    arr = np.asarray(value, dtype=float)
    if arr.shape != (3,):
        raise SpecError(f"{name} must be a length-3 tensor [xx, yy, xy], got shape {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise SpecError(f"{name} must be finite, got {arr}")
    return (float(arr[0]), float(arr[1]), float(arr[2]))


@dataclass(frozen=True)
class LayerSpec:
    """One layer of the bonded stack.

    `eigenstrain` is the stress-free strain of the layer material measured
    from the flat bonded reference, expressed in the layer's own material
    axes; `material_angle` rotates those axes CCW from the ribbon length
    axis.  A layer pre-stretched by p before bonding wants to contract, so
    it carries eigenstrain -p.
    """

    thickness: float
    youngs_modulus: float = 1.0
    poisson_ratio: float = 0.49
    eigenstrain: tuple[float, float, float] = (0.0, 0.0, 0.0)
    material_angle: float = 0.0

    def __post_init__(self):
        if not self.thickness > 0.0:
            raise SpecError(f"layer thickness must be positive, got {self.thickness}")
        if not self.youngs_modulus > 0.0:
            raise SpecError(f"youngs_modulus must be positive, got {self.youngs_modulus}")
        if not -1.0 < self.poisson_ratio < 0.5:
            raise SpecError(f"poisson_ratio must lie in (-1, 0.5), got {self.poisson_ratio}")
        object.__setattr__(self, "eigenstrain", _as_tensor3(self.eigenstrain, "eigenstrain"))

    def stiffness(self) -> PlaneStressStiffness:
        return reduced_stiffness(self.youngs_modulus, self.poisson_ratio)

    def eigenstrain_ribbon_frame(self) -> np.ndarray:
        """Eigenstrain rotated from material axes into ribbon axes."""
        return rotate_strain(np.array(self.eigenstrain), self.material_angle)


@dataclass(frozen=True)
class SurfaceStress:
    """Effective surface stresses on the two faces, [xx, yy, xy] each."""

    top: tuple[float, float, float] = (0.0, 0.0, 0.0)
    bottom: tuple[float, float, float] = (0.0, 0.0, 0.0)

    def __post_init__(self):
        object.__setattr__(self, "top", _as_tensor3(self.top, "surface stress (top)"))
        object.__setattr__(self, "bottom", _as_tensor3(self.bottom, "surface stress (bottom)"))

    def is_zero(self) -> bool:
        return all(v == 0.0 for v in self.top) and all(v == 0.0 for v in self.bottom)

    @staticmethod
    def zero() -> "SurfaceStress":
        return SurfaceStress()


@dataclass(frozen=True)
class SegmentSpec:
    """A lengthwise piece of the ribbon with its own layer stack."""

    length: float
    layers: tuple[LayerSpec, ...]
    surface_stress: SurfaceStress = field(default_factory=SurfaceStress)

    def __post_init__(self):
        if not self.length > 0.0:
            raise SpecError(f"segment length must be positive, got {self.length}")
        layers = tuple(self.layers)
        if len(layers) == 0:
            raise SpecError("segment needs at least one layer")
        object.__setattr__(self, "layers", layers)

    @property
    def total_thickness(self) -> float:
        return sum(layer.thickness for layer in self.layers)

    def layer_bounds(self) -> np.ndarray:
        """z-interfaces of the stack, from -H/2 (bottom) to +H/2 (top)."""
        h = self.total_thickness
        edges = np.concatenate([[0.0], np.cumsum([la.thickness for la in self.layers])])
        return edges - 0.5 * h

    def layer_at(self, z: float) -> LayerSpec:
        """Layer containing height z; boundaries resolve to the layer below."""
        bounds = self.layer_bounds()
        if z < bounds[0] - 1e-12 or z > bounds[-1] + 1e-12:
            raise DomainError(f"z={z} outside thickness [{bounds[0]}, {bounds[-1]}]")
        idx = int(np.searchsorted(bounds[1:-1], z, side="left"))
        return self.layers[idx]


@dataclass(frozen=True)
class RibbonSpec:
    """Complete problem statement: segments, width taper, mis-orientation.

    `phi` is the in-plane angle between the principal curvature axes and
    the ribbon length/width axes; the first principal axis sits at -phi
    (CCW) from the length axis.
    """

    segments: tuple[SegmentSpec, ...]
    width_profile: WidthProfile
    phi: float
    total_length: float

    def __post_init__(self):
        segments = tuple(self.segments)
        if len(segments) == 0:
            raise SpecError("ribbon needs at least one segment")
        object.__setattr__(self, "segments", segments)
        length_sum = sum(seg.length for seg in segments)
        if abs(length_sum - self.total_length) > 1e-9 * max(1.0, abs(self.total_length)):
            raise SpecError(
                f"total_length {self.total_length} inconsistent with segment sum {length_sum}"
            )
        w_end = self.width_profile.width(self.total_length)
        if min(self.width_profile.w0, float(w_end)) <= 0.0:
            raise SpecError(
                f"width must stay positive along the ribbon; width(L)={w_end}"
            )
        self._warn_if_not_slender()

    def _warn_if_not_slender(self):
        w_min = float(min(self.width_profile.width(0.0), self.width_profile.width(self.total_length)))
        h_max = max(seg.total_thickness for seg in self.segments)
        if h_max * SLENDERNESS_FACTOR > w_min:
            warnings.warn(
                f"thin-sheet assumption strained: thickness {h_max} not << width {w_min}",
                stacklevel=3,
            )
        if w_min * SLENDERNESS_FACTOR > self.total_length:
            warnings.warn(
                f"narrow-ribbon assumption strained: width {w_min} not << length {self.total_length}",
                stacklevel=3,
            )

    @staticmethod
    def build(segments, width_profile: WidthProfile, phi: float) -> "RibbonSpec":
        segments = tuple(segments)
        return RibbonSpec(
            segments=segments,
            width_profile=width_profile,
            phi=phi,
            total_length=sum(seg.length for seg in segments),
        )

    def segment_spans(self) -> list[tuple[float, float]]:
        """Arclength interval [s_start, s_end] of each segment."""
        spans = []
        s = 0.0
        for seg in self.segments:
            spans.append((s, s + seg.length))
            s += seg.length
        return spans

    def segment_area(self, index: int) -> float:
        """Exact integral of the affine width over one segment's span."""
        s0, s1 = self.segment_spans()[index]
        w0 = float(self.width_profile.width(s0))
        w1 = float(self.width_profile.width(s1))
        return 0.5 * (w0 + w1) * (s1 - s0)

    # -- serialization ----------------------------------------------------

    def to_dict(self) -> dict:
        return {
            "phi": self.phi,
            "total_length": self.total_length,
            "width_profile": {"w0": self.width_profile.w0, "alpha": self.width_profile.alpha},
            "segments": [
                {
                    "length": seg.length,
                    "layers": [
                        {
                            "thickness": la.thickness,
                            "youngs_modulus": la.youngs_modulus,
                            "poisson_ratio": la.poisson_ratio,
                            "eigenstrain": list(la.eigenstrain),
                            "material_angle": la.material_angle,
                        }
                        for la in seg.layers
                    ],
                    "surface_stress": {
                        "top": list(seg.surface_stress.top),
                        "bottom": list(seg.surface_stress.bottom),
                    },
                }
                for seg in self.segments
            ],
        }

    @staticmethod
    def from_dict(data: dict) -> "RibbonSpec":
        segments = tuple(
            SegmentSpec(
                length=seg["length"],
                layers=tuple(
                    LayerSpec(
                        thickness=la["thickness"],
                        youngs_modulus=la["youngs_modulus"],
                        poisson_ratio=la["poisson_ratio"],
                        eigenstrain=tuple(la["eigenstrain"]),
                        material_angle=la["material_angle"],
                    )
                    for la in seg["layers"]
                ),
                surface_stress=SurfaceStress(
                    top=tuple(seg["surface_stress"]["top"]),
                    bottom=tuple(seg["surface_stress"]["bottom"]),
                ),
            )
            for seg in data["segments"]
        )
        return RibbonSpec(
            segments=segments,
            width_profile=WidthProfile(**data["width_profile"]),
            phi=data["phi"],
            total_length=data["total_length"],
        )

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @staticmethod
    def from_json(text: str) -> "RibbonSpec":
        return RibbonSpec.from_dict(json.loads(text))


def width_at(spec: RibbonSpec, s: float) -> float:
    """Ribbon width at arclength s in [0, total_length]."""
    if not 0.0 <= s <= spec.total_length:
        raise DomainError(f"arclength s={s} outside [0, {spec.total_length}]")
    return float(spec.width_profile.width(s))
