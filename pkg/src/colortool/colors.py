"""Conversions among sRGB, linear RGB, CIE XYZ, CIELUV, HCL and HSV.

Every conversion is a pure function over small frozen value types, chained as

    hex <-> sRGB <-> linear RGB <-> XYZ (D65) <-> LUV <-> HCL

with HSV attached to the sRGB end.  XYZ is scaled so that the D65 white
point has y = 100, which lets the LUV formulas use their textbook form.
"""

from __future__ import annotations

import colorsys
import math
from dataclasses import dataclass

from .errors import HexParseError, InvalidColorError

__all__ = [
    "SRGB",
    "LinearRGB",
    "XYZ",
    "LUV",
    "HCL",
    "HSV",
    "WhitePoint",
    "D65",
    "srgb_to_linear",
    "linear_to_srgb",
    "linear_to_xyz",
    "xyz_to_linear",
    "xyz_to_luv",
    "luv_to_xyz",
    "luv_to_hcl",
    "hcl_to_luv",
    "hsv_to_srgb",
    "srgb_to_hsv",
    "parse_hex",
    "format_hex",
    "fixup_gamut",
    "srgb_to_hcl",
    "hcl_to_srgb",
    "hex_to_hcl",
    "hcl_to_hex",
    "in_srgb_gamut",
]


@dataclass(frozen=True, slots=True)
class SRGB:
    """Gamma-encoded sRGB channels; in gamut iff all three lie in [0, 1]."""

    r: float
    g: float
    b: float


@dataclass(frozen=True, slots=True)
class LinearRGB:
    """Linear-light RGB channels; in gamut iff all three lie in [0, 1]."""

    r: float
    g: float
    b: float


@dataclass(frozen=True, slots=True)
class XYZ:
    """CIE tristimulus values, scaled so the D65 white point has y = 100."""

    x: float
    y: float
    z: float


@dataclass(frozen=True, slots=True)
class LUV:
    """CIE 1976 L*u*v*; l in [0, 100], u and v unbounded in principle."""

    l: float
    u: float
    v: float


@dataclass(frozen=True, slots=True)
class HCL:
    """Polar LUV: hue in degrees (interpreted mod 360), chroma >= 0, luminance in [0, 100]."""

    h: float
    c: float
    l: float


@dataclass(frozen=True, slots=True)
class HSV:
    """Hexcone hue (degrees), saturation and value in [0, 1]."""

    h: float
    s: float
    v: float


@dataclass(frozen=True, slots=True)
class WhitePoint:
    xn: float
    yn: float
    zn: float


#: Reference white used throughout: D65, 2 degree observer, y scaled to 100.
D65 = WhitePoint(95.047, 100.0, 108.883)

# Linear sRGB -> XYZ matrix for D65 (IEC 61966-2-1).  The inverse is computed
# exactly from these constants rather than hardcoded from a rounded table so
# that the two directions are mutual inverses to float precision.
_RGB_TO_XYZ = (
    (0.4124564, 0.3575761, 0.1804375),
    (0.2126729, 0.7151522, 0.0721750),
    (0.0193339, 0.1191920, 0.9503041),
)


def _invert3(m):
    a, b, c = m[0]
    d, e, f = m[1]
    g, h, i = m[2]
    det = a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)
    return (
        ((e * i - f * h) / det, (c * h - b * i) / det, (b * f - c * e) / det),
        ((f * g - d * i) / det, (a * i - c * g) / det, (c * d - a * f) / det),
        ((d * h - e * g) / det, (b * g - a * h) / det, (a * e - b * d) / det),
    )


_XYZ_TO_RGB = _invert3(_RGB_TO_XYZ)

# L branch threshold: y/yn above this uses the cube-root law.  The low-light
# slope KAPPA makes L exactly 8 at the threshold.
_EPS = (6.0 / 29.0) ** 3
_KAPPA = (29.0 / 3.0) ** 3


def _check_finite(*channels: float) -> None:
    for value in channels:
        if not math.isfinite(value):
            raise InvalidColorError(f"non-finite channel value {value!r}")


def _clamp01(u: float) -> float:
    return 0.0 if u < 0.0 else 1.0 if u > 1.0 else u


def _decode(u: float) -> float:
    # sRGB transfer function, extended to out-of-range inputs by sign symmetry
    sign = -1.0 if u < 0.0 else 1.0
    u = abs(u)
    if u <= 0.04045:
        return sign * (u / 12.92)
    return sign * ((u + 0.055) / 1.055) ** 2.4


def _encode(u: float) -> float:
    sign = -1.0 if u < 0.0 else 1.0
    u = abs(u)
    if u <= 0.0031308:
        return sign * (u * 12.92)
    return sign * (1.055 * u ** (1.0 / 2.4) - 0.055)


def srgb_to_linear(c: SRGB) -> LinearRGB:
    """Decode gamma-encoded sRGB to linear light."""
    _check_finite(c.r, c.g, c.b)
    return LinearRGB(_decode(c.r), _decode(c.g), _decode(c.b))


def linear_to_srgb(c: LinearRGB) -> SRGB:
    """Encode linear light as gamma-encoded sRGB (exact inverse of srgb_to_linear)."""
    _check_finite(c.r, c.g, c.b)
    return SRGB(_encode(c.r), _encode(c.g), _encode(c.b))


def linear_to_xyz(c: LinearRGB) -> XYZ:
    """Linear RGB to CIE XYZ (D65), scaled to yn = 100."""
    _check_finite(c.r, c.g, c.b)
    m = _RGB_TO_XYZ
    return XYZ(
        (m[0][0] * c.r + m[0][1] * c.g + m[0][2] * c.b) * 100.0,
        (m[1][0] * c.r + m[1][1] * c.g + m[1][2] * c.b) * 100.0,
        (m[2][0] * c.r + m[2][1] * c.g + m[2][2] * c.b) * 100.0,
    )


def xyz_to_linear(c: XYZ) -> LinearRGB:
    """CIE XYZ (D65, yn = 100) to linear RGB."""
    _check_finite(c.x, c.y, c.z)
    x, y, z = c.x / 100.0, c.y / 100.0, c.z / 100.0
    m = _XYZ_TO_RGB
    return LinearRGB(
        m[0][0] * x + m[0][1] * y + m[0][2] * z,
        m[1][0] * x + m[1][1] * y + m[1][2] * z,
        m[2][0] * x + m[2][1] * y + m[2][2] * z,
    )


def _uv_prime(x: float, y: float, z: float) -> tuple[float, float]:
    d = x + 15.0 * y + 3.0 * z
    if d == 0.0:
        return 0.0, 0.0
    return 4.0 * x / d, 9.0 * y / d


def xyz_to_luv(c: XYZ, w: WhitePoint = D65) -> LUV:
    """CIE XYZ to L*u*v* relative to white point ``w``.

    A vanishing chromaticity denominator (x + 15y + 3z = 0) is treated as
    black.  Requires y >= 0.
    """
    _check_finite(c.x, c.y, c.z)
    if c.y < -1e-9:
        raise InvalidColorError(f"negative luminance y = {c.y!r}")
    y = max(c.y, 0.0)
    d = c.x + 15.0 * y + 3.0 * c.z
    if d == 0.0:
        return LUV(0.0, 0.0, 0.0)
    up = 4.0 * c.x / d
    vp = 9.0 * y / d
    upn, vpn = _uv_prime(w.xn, w.yn, w.zn)
    yr = y / w.yn
    if yr > _EPS:
        lum = 116.0 * yr ** (1.0 / 3.0) - 16.0
    else:
        lum = _KAPPA * yr
    return LUV(lum, 13.0 * lum * (up - upn), 13.0 * lum * (vp - vpn))


def luv_to_xyz(c: LUV, w: WhitePoint = D65) -> XYZ:
    """L*u*v* back to CIE XYZ.  Requires l in [0, 100]; l = 0 maps to black."""
    _check_finite(c.l, c.u, c.v)
    # the forward path yields up to ~4e-6 above 100 for pure white (the
    # rounded white point vs the matrix row sums); absorb that, reject more
    if c.l < -1e-4 or c.l > 100.0 + 1e-4:
        raise InvalidColorError(f"luminance l = {c.l!r} outside [0, 100]")
    lum = min(max(c.l, 0.0), 100.0)
    if lum == 0.0:
        return XYZ(0.0, 0.0, 0.0)
    upn, vpn = _uv_prime(w.xn, w.yn, w.zn)
    up = c.u / (13.0 * lum) + upn
    vp = c.v / (13.0 * lum) + vpn
    if vp == 0.0:
        raise InvalidColorError("chromaticity denominator vanished during inversion")
    if lum > 8.0:
        y = w.yn * ((lum + 16.0) / 116.0) ** 3
    else:
        y = w.yn * lum / _KAPPA
    x = y * (9.0 * up) / (4.0 * vp)
    z = y * (12.0 - 3.0 * up - 20.0 * vp) / (4.0 * vp)
    return XYZ(x, y, z)


def luv_to_hcl(c: LUV) -> HCL:
    """Rectangular LUV to polar HCL; achromatic colors get hue 0."""
    _check_finite(c.l, c.u, c.v)
    chroma = math.hypot(c.u, c.v)
    hue = math.degrees(math.atan2(c.v, c.u)) % 360.0
    if hue >= 360.0:  # float mod can round up to the divisor
        hue = 0.0
    return HCL(hue, chroma, c.l)


def hcl_to_luv(c: HCL) -> LUV:
    """Polar HCL to rectangular LUV; hue is taken mod 360."""
    _check_finite(c.h, c.c, c.l)
    if c.c < 0.0:
        raise InvalidColorError(f"negative chroma {c.c!r}")
    rad = math.radians(c.h % 360.0)
    return LUV(c.l, c.c * math.cos(rad), c.c * math.sin(rad))


def hsv_to_srgb(c: HSV) -> SRGB:
    """Hexcone HSV to sRGB."""
    _check_finite(c.h, c.s, c.v)
    if not (0.0 <= c.s <= 1.0 and 0.0 <= c.v <= 1.0):
        raise InvalidColorError(f"saturation/value out of [0, 1]: {c.s!r}, {c.v!r}")
    r, g, b = colorsys.hsv_to_rgb((c.h / 360.0) % 1.0, c.s, c.v)
    return SRGB(r, g, b)


def srgb_to_hsv(c: SRGB) -> HSV:
    """sRGB to hexcone HSV; hue reported in degrees."""
    _check_finite(c.r, c.g, c.b)
    h, s, v = colorsys.rgb_to_hsv(c.r, c.g, c.b)
    return HSV(h * 360.0, s, v)


_HEX_DIGITS = set("0123456789abcdefABCDEF")


def parse_hex(text: str) -> SRGB:
    """Parse '#RRGGBB' (case-insensitive) into sRGB channels in [0, 1]."""
    if len(text) != 7:
        raise HexParseError(f"expected 7-character '#RRGGBB', got {text!r}")
    if text[0] != "#":
        raise HexParseError(f"missing leading '#' in {text!r}", position=0)
    for i in range(1, 7):
        if text[i] not in _HEX_DIGITS:
            raise HexParseError(
                f"invalid hex digit {text[i]!r} at position {i} in {text!r}", position=i
            )
    return SRGB(
        int(text[1:3], 16) / 255.0,
        int(text[3:5], 16) / 255.0,
        int(text[5:7], 16) / 255.0,
    )


def format_hex(c: SRGB) -> str:
    """Format an in-gamut sRGB color as uppercase '#RRGGBB'.

    Channels are rounded to 8 bits with ties to even.  Inputs outside
    [0, 1] by more than float noise raise; run fixup_gamut first.
    """
    _check_finite(c.r, c.g, c.b)
    parts = []
    for u in (c.r, c.g, c.b):
        if u < -1e-9 or u > 1.0 + 1e-9:
            raise InvalidColorError(f"channel {u!r} out of gamut; apply fixup first")
        parts.append(round(_clamp01(u) * 255.0))
    return "#{:02X}{:02X}{:02X}".format(*parts)


def fixup_gamut(c: SRGB) -> SRGB:
    """Clamp each channel to [0, 1]; in-gamut colors pass through unchanged."""
    _check_finite(c.r, c.g, c.b)
    return SRGB(_clamp01(c.r), _clamp01(c.g), _clamp01(c.b))


def in_srgb_gamut(c: SRGB, tol: float = 1e-9) -> bool:
    """True when every channel lies in [0, 1] within ``tol``."""
    return all(-tol <= u <= 1.0 + tol for u in (c.r, c.g, c.b))


def srgb_to_hcl(c: SRGB) -> HCL:
    return luv_to_hcl(xyz_to_luv(linear_to_xyz(srgb_to_linear(c))))


def hcl_to_srgb(c: HCL) -> SRGB:
    """HCL to sRGB without gamut fixup; results may leave [0, 1]."""
    return linear_to_srgb(xyz_to_linear(luv_to_xyz(hcl_to_luv(c))))


def hex_to_hcl(text: str) -> HCL:
    return srgb_to_hcl(parse_hex(text))


def hcl_to_hex(c: HCL, fixup: bool = True) -> str:
    """HCL to '#RRGGBB'; with ``fixup`` the color is clamped into gamut first."""
    srgb = hcl_to_srgb(c)
    if fixup:
        srgb = fixup_gamut(srgb)
    return format_hex(srgb)
