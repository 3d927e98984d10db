"""TOML configuration files describing a ribbon problem.

Schema (angles in degrees, lengths in mm; internal units are radians/mm):

    [ribbon]
    phi_degrees    = 12.0   # mis-orientation of the curvature axes
    width_start_mm = 12.0   # width at s = 0
    width_end_mm   = 2.0    # width at s = total length

    [[segment]]             # repeated, in arclength order
    length_mm = 50.0

      [[segment.layer]]     # repeated, bottom of the stack first
      thickness_mm = 0.5
      youngs_modulus = 1.0          # optional, default 1.0 (arbitrary unit)
      poisson_ratio = 0.49          # optional, default 0.49
      prestrain_xx = 0.25           # optional, default 0.0
      prestrain_yy = 0.30           # optional
      prestrain_xy = 0.0            # optional
      material_angle_degrees = -12.0  # optional, default 0.0

      [segment.surface_stress]      # optional, default all zero
      top_xx = 0.0
      top_yy = 0.0
      top_xy = 0.0
      bottom_xx = 0.0
      bottom_yy = 0.0
      bottom_xy = 0.0

A layer's `prestrain_*` is the stretch imprinted before bonding: a layer
pre-stretched by 0.3 wants to contract by 0.3 once released, i.e. it
carries eigenstrain -0.3 in its material axes.  `material_angle_degrees`
orients those axes CCW from the ribbon length axis; the principal
curvature axes sit at -phi, so a stack whose pre-stretch axes coincide
with the curvature axes uses material_angle_degrees = -phi_degrees.
"""

from __future__ import annotations

import math

try:
    import tomllib
except ModuleNotFoundError:  # Python < 3.11
    import tomli as tomllib

from .errors import ConfigError, SpecError
from .model import LayerSpec, RibbonSpec, SegmentSpec, SurfaceStress, WidthProfile

_LAYER_KEYS = {
    "thickness_mm",
    "youngs_modulus",
    "poisson_ratio",
    "prestrain_xx",
    "prestrain_yy",
    "prestrain_xy",
    "material_angle_degrees",
}
_SEGMENT_KEYS = {"length_mm", "layer", "surface_stress"}
_RIBBON_KEYS = {"phi_degrees", "width_start_mm", "width_end_mm"}
_SURFACE_KEYS = {"top_xx", "top_yy", "top_xy", "bottom_xx", "bottom_yy", "bottom_xy"}


def _number(table: dict, key: str, section: str, default=None) -> float:
    if key not in table:
        if default is None:
            raise ConfigError("missing required key", section=section, field=key)
        return float(default)
    value = table[key]
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ConfigError(f"expected a number, got {value!r}", section=section, field=key)
    return float(value)


def _reject_unknown(table: dict, allowed: set, section: str):
    unknown = set(table) - allowed
    if unknown:
        raise ConfigError(f"unknown key(s) {sorted(unknown)}", section=section)


def _parse_layer(table: dict, section: str) -> LayerSpec:
    _reject_unknown(table, _LAYER_KEYS, section)
    prestrain = (
        _number(table, "prestrain_xx", section, 0.0),
        _number(table, "prestrain_yy", section, 0.0),
        _number(table, "prestrain_xy", section, 0.0),
    )
    try:
        return LayerSpec(
            thickness=_number(table, "thickness_mm", section),
            youngs_modulus=_number(table, "youngs_modulus", section, 1.0),
            poisson_ratio=_number(table, "poisson_ratio", section, 0.49),
            eigenstrain=tuple(-p for p in prestrain),
            material_angle=math.radians(_number(table, "material_angle_degrees", section, 0.0)),
        )
    except SpecError as exc:
        raise ConfigError(str(exc), section=section) from exc


def _parse_surface_stress(table: dict, section: str) -> SurfaceStress:
    _reject_unknown(table, _SURFACE_KEYS, section)
    return SurfaceStress(
        top=(
            _number(table, "top_xx", section, 0.0),
            _number(table, "top_yy", section, 0.0),
            _number(table, "top_xy", section, 0.0),
        ),
        bottom=(
            _number(table, "bottom_xx", section, 0.0),
            _number(table, "bottom_yy", section, 0.0),
            _number(table, "bottom_xy", section, 0.0),
        ),
    )


def parse_config(text: str) -> RibbonSpec:
    """Parse and validate a TOML config into a RibbonSpec."""
    try:
        data = tomllib.loads(text)
    except tomllib.TOMLDecodeError as exc:
        raise ConfigError(f"TOML syntax: {exc}") from exc

    _reject_unknown(data, {"ribbon", "segment"}, section="top level")
    if "ribbon" not in data:
        raise ConfigError("missing [ribbon] section")
    ribbon = data["ribbon"]
    _reject_unknown(ribbon, _RIBBON_KEYS, section="ribbon")
    phi = math.radians(_number(ribbon, "phi_degrees", "ribbon"))
    width_start = _number(ribbon, "width_start_mm", "ribbon")
    width_end = _number(ribbon, "width_end_mm", "ribbon")

    raw_segments = data.get("segment", [])
    if not isinstance(raw_segments, list) or len(raw_segments) == 0:
        raise ConfigError("no segments: need at least one [[segment]]")

    segments = []
    for i, raw in enumerate(raw_segments):
        section = f"segment #{i + 1}"
        _reject_unknown(raw, _SEGMENT_KEYS, section)
        raw_layers = raw.get("layer", [])
        if not isinstance(raw_layers, list) or len(raw_layers) == 0:
            raise ConfigError("need at least one [[segment.layer]]", section=section)
        layers = tuple(
            _parse_layer(la, f"{section} layer #{j + 1}") for j, la in enumerate(raw_layers)
        )
        surface = SurfaceStress.zero()
        if "surface_stress" in raw:
            surface = _parse_surface_stress(raw["surface_stress"], f"{section} surface_stress")
        try:
            segments.append(
                SegmentSpec(
                    length=_number(raw, "length_mm", section),
                    layers=layers,
                    surface_stress=surface,
                )
            )
        except SpecError as exc:
            raise ConfigError(str(exc), section=section) from exc

    total_length = sum(seg.length for seg in segments)
    try:
        profile = WidthProfile.from_endpoints(width_start, width_end, total_length)
        return RibbonSpec.build(segments, profile, phi)
    except SpecError as exc:
        raise ConfigError(str(exc), section="ribbon") from exc


def load_config(path) -> RibbonSpec:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_config(fh.read())


# -- canonical demo problem --------------------------------------------------

# Tapered bilayer with seven stack segments.  The bottom layer is
# pre-stretched biaxially along the curvature axes (material angle -phi);
# the crosswise pre-stretch is fixed while the lengthwise one steps up
# segment by segment, flipping the natural handedness partway along.
SEASHELL_LENGTHWISE_PRESTRAINS = (0.25, 0.3, 0.4, 0.5, 0.6, 0.7, 0.9)
SEASHELL_SEGMENT_LENGTHS_MM = (50.0, 50.0, 40.0, 40.0, 30.0, 20.0, 20.0)
SEASHELL_CROSSWISE_PRESTRAIN = 0.3


def seashell_config_toml(
    phi_degrees: float = 12.0,
    width_start_mm: float = 12.0,
    width_end_mm: float = 2.0,
    layer_thickness_mm: float = 0.5,
    youngs_modulus: float = 1.0,
    poisson_ratio: float = 0.49,
) -> str:
    """TOML text for the canonical tapered seven-segment seashell ribbon."""
    lines = [
        "[ribbon]",
        f"phi_degrees = {phi_degrees!r}",
        f"width_start_mm = {width_start_mm!r}",
        f"width_end_mm = {width_end_mm!r}",
    ]
    for prestrain_x, length in zip(SEASHELL_LENGTHWISE_PRESTRAINS, SEASHELL_SEGMENT_LENGTHS_MM):
        lines += [
            "",
            "[[segment]]",
            f"length_mm = {length!r}",
            "",
            "[[segment.layer]]",
            f"thickness_mm = {layer_thickness_mm!r}",
            f"youngs_modulus = {youngs_modulus!r}",
            f"poisson_ratio = {poisson_ratio!r}",
            f"prestrain_xx = {prestrain_x!r}",
            f"prestrain_yy = {SEASHELL_CROSSWISE_PRESTRAIN!r}",
            f"material_angle_degrees = {-phi_degrees!r}",
            "",
            "[[segment.layer]]",
            f"thickness_mm = {layer_thickness_mm!r}",
            f"youngs_modulus = {youngs_modulus!r}",
            f"poisson_ratio = {poisson_ratio!r}",
        ]
    return "\n".join(lines) + "\n"
