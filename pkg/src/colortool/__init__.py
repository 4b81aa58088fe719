"""Perceptual color palettes in HCL space.

Construct qualitative, sequential and diverging palettes as trajectories
through hue-chroma-luminance space, convert colors between sRGB, XYZ,
LUV/HCL and HSV, simulate color vision deficiencies, check WCAG
contrast, and render deterministic SVG diagnostics.  A CLI (colortool)
and a small HTTP service expose the same operations.
"""

from .colors import (
    D65,
    HCL,
    HSV,
    LUV,
    SRGB,
    XYZ,
    LinearRGB,
    WhitePoint,
    fixup_gamut,
    format_hex,
    hcl_to_hex,
    hcl_to_luv,
    hcl_to_srgb,
    hex_to_hcl,
    hsv_to_srgb,
    in_srgb_gamut,
    linear_to_srgb,
    linear_to_xyz,
    luv_to_hcl,
    luv_to_xyz,
    parse_hex,
    srgb_to_hcl,
    srgb_to_hsv,
    srgb_to_linear,
    xyz_to_linear,
    xyz_to_luv,
)
from .errors import (
    ColortoolError,
    HexParseError,
    InvalidColorError,
    InvalidInputError,
    InvalidSpecError,
    RegistryFormatError,
    UnknownPaletteError,
    UnsupportedKindError,
)
from .ops import (
    CVD_KINDS,
    adjust_luminance,
    contrast_ratio,
    cvd_matrix,
    desaturate,
    relative_luminance,
    simulate_cvd,
)
from .palettes import (
    Palette,
    PaletteSpec,
    describe,
    diverging_path,
    qualitative_path,
    rainbow_hsv,
    sample,
    sequential_path,
    trajectory,
)
from .registry import default_registry, load_registry, registry_get
from .svgplot import (
    DemoGrid,
    SVGDocument,
    SwatchSet,
    compose_grid,
    default_demo_grid,
    demo_comparison_grid,
    demoplot_heatmap,
    hclplot,
    specplot,
    swatchplot,
)

__version__ = "0.1.0"

__all__ = [
    "__version__",
    # colors
    "SRGB", "LinearRGB", "XYZ", "LUV", "HCL", "HSV", "WhitePoint", "D65",
    "srgb_to_linear", "linear_to_srgb", "linear_to_xyz", "xyz_to_linear",
    "xyz_to_luv", "luv_to_xyz", "luv_to_hcl", "hcl_to_luv",
    "hsv_to_srgb", "srgb_to_hsv", "parse_hex", "format_hex", "fixup_gamut",
    "srgb_to_hcl", "hcl_to_srgb", "hex_to_hcl", "hcl_to_hex", "in_srgb_gamut",
    # errors
    "ColortoolError", "InvalidColorError", "HexParseError", "InvalidSpecError",
    "UnknownPaletteError", "RegistryFormatError", "InvalidInputError",
    "UnsupportedKindError",
    # ops
    "CVD_KINDS", "cvd_matrix", "simulate_cvd", "desaturate",
    "adjust_luminance", "relative_luminance", "contrast_ratio",
    # palettes
    "PaletteSpec", "Palette", "sequential_path", "diverging_path",
    "qualitative_path", "trajectory", "sample", "rainbow_hsv", "describe",
    # registry
    "load_registry", "default_registry", "registry_get",
    # viz
    "SVGDocument", "SwatchSet", "DemoGrid", "default_demo_grid",
    "swatchplot", "specplot", "hclplot", "demoplot_heatmap",
    "compose_grid", "demo_comparison_grid",
]
