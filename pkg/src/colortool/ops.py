"""Palette assessment and manipulation.

Color-vision-deficiency simulation (Machado 2009 matrices in linear RGB),
desaturation and lighten/darken in HCL, and WCAG 2.x contrast ratios.
All list operations take and return '#RRGGBB' strings and preserve order.
"""

from __future__ import annotations

from . import cvd_data
from .colors import (
    HCL,
    LinearRGB,
    fixup_gamut,
    format_hex,
    hcl_to_hex,
    hex_to_hcl,
    linear_to_srgb,
    parse_hex,
    srgb_to_linear,
)
from .errors import HexParseError, InvalidInputError

__all__ = [
    "CVD_KINDS",
    "cvd_matrix",
    "simulate_cvd",
    "desaturate",
    "adjust_luminance",
    "relative_luminance",
    "contrast_ratio",
]

#: Supported deficiency kinds, in canonical order.
CVD_KINDS = cvd_data.KINDS


def cvd_matrix(kind: str, severity: float):
    """3x3 linear-RGB matrix for ``kind`` at ``severity`` in [0, 1].

    The published table holds matrices at severity steps of 0.1;
    intermediate severities interpolate elementwise between the two
    neighboring steps.
    """
    if kind not in CVD_KINDS:
        raise InvalidInputError(f"unknown deficiency kind {kind!r}; expected one of {CVD_KINDS}")
    if not 0.0 <= severity <= 1.0:
        raise InvalidInputError(f"severity {severity!r} outside [0, 1]")
    table = cvd_data.matrices_for(kind)
    t = severity * 10.0
    nearest = round(t)
    if abs(t - nearest) < 1e-9:  # snap: 0.3 * 10 is not exactly 3 in floats
        return table[int(nearest)]
    lo = int(t)
    frac = t - lo
    a, b = table[lo], table[lo + 1]
    return tuple(
        tuple((1.0 - frac) * a[i][j] + frac * b[i][j] for j in range(3)) for i in range(3)
    )


def _parse_all(colors: list[str]) -> list:
    parsed = []
    for i, text in enumerate(colors):
        try:
            parsed.append(parse_hex(text))
        except HexParseError as exc:
            raise HexParseError(f"color {i}: {exc}", position=exc.position) from None
    return parsed


def simulate_cvd(colors: list[str], kind: str, severity: float = 1.0) -> list[str]:
    """Simulate how ``colors`` appear under a color vision deficiency.

    Each color is decoded to linear RGB, transformed by the severity
    matrix, clamped into gamut, and re-encoded.  At severity 0 the list
    comes back unchanged.
    """
    matrix = cvd_matrix(kind, severity)
    out = []
    for srgb in _parse_all(colors):
        lin = srgb_to_linear(srgb)
        v = (lin.r, lin.g, lin.b)
        sim = LinearRGB(
            matrix[0][0] * v[0] + matrix[0][1] * v[1] + matrix[0][2] * v[2],
            matrix[1][0] * v[0] + matrix[1][1] * v[1] + matrix[1][2] * v[2],
            matrix[2][0] * v[0] + matrix[2][1] * v[1] + matrix[2][2] * v[2],
        )
        out.append(format_hex(fixup_gamut(linear_to_srgb(sim))))
    return out


def desaturate(colors: list[str], amount: float = 1.0) -> list[str]:
    """Scale HCL chroma by (1 - amount); amount 1 collapses to grays."""
    if not 0.0 <= amount <= 1.0:
        raise InvalidInputError(f"amount {amount!r} outside [0, 1]")
    _parse_all(colors)
    out = []
    for text in colors:
        hcl = hex_to_hcl(text)
        out.append(hcl_to_hex(HCL(hcl.h, hcl.c * (1.0 - amount), hcl.l)))
    return out


def adjust_luminance(colors: list[str], amount: float) -> list[str]:
    """Lighten (amount > 0) or darken (amount < 0) in HCL.

    Positive amounts move L proportionally toward 100, negative toward 0,
    so +1 and -1 saturate exactly at the endpoints.  Chroma and hue are
    kept; colors pushed out of gamut are clamped on re-encoding.
    """
    if not -1.0 <= amount <= 1.0:
        raise InvalidInputError(f"amount {amount!r} outside [-1, 1]")
    _parse_all(colors)
    out = []
    for text in colors:
        hcl = hex_to_hcl(text)
        if amount >= 0.0:
            lum = hcl.l + amount * (100.0 - hcl.l)
        else:
            lum = hcl.l * (1.0 + amount)
        out.append(hcl_to_hex(HCL(hcl.h, hcl.c, lum)))
    return out


def relative_luminance(color: str) -> float:
    """WCAG 2.x relative luminance in [0, 1]."""
    lin = srgb_to_linear(parse_hex(color))
    return 0.2126 * lin.r + 0.7152 * lin.g + 0.0722 * lin.b


def contrast_ratio(a: str, b: str) -> float:
    """WCAG 2.x contrast ratio in [1, 21]; symmetric in its arguments."""
    ya = relative_luminance(a)
    yb = relative_luminance(b)
    hi, lo = (ya, yb) if ya >= yb else (yb, ya)
    return (hi + 0.05) / (lo + 0.05)
