"""HCL palette construction.

A palette is a trajectory through HCL space described by up to nine
parameters (h1, h2, c1, c2, cmax, l1, l2, p1, p2) plus a kind:

* sequential: hue sweeps h1 to h2 while chroma and luminance follow
  power curves; an optional cmax bends the chroma path into a triangle.
* diverging: two sequential arms with hues h1 and h2 joined at a
  neutral midpoint.
* qualitative: constant chroma and luminance, hues equally spaced.

The trajectory parameter i runs from 1 (first color) down to 0 (last),
so a sequential palette starts at (h1, c1, l1) and ends at (h2, c2, l2).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .colors import HCL, hcl_to_hex, hsv_to_srgb, HSV, format_hex
from .errors import InvalidInputError, InvalidSpecError

__all__ = [
    "KINDS",
    "PaletteSpec",
    "Palette",
    "sequential_path",
    "diverging_path",
    "qualitative_path",
    "trajectory",
    "sample",
    "rainbow_hsv",
    "describe",
]

KINDS = ("qualitative", "sequential", "diverging")


@dataclass(frozen=True, slots=True, kw_only=True)
class PaletteSpec:
    """Immutable description of one palette trajectory.

    Optional parameters may be None: h2 falls back to h1 (sequential and
    diverging) or to equal hue spacing (qualitative), c2 to 0, l2 to l1,
    and p2 to p1.  cmax, when set, is the peak of a triangular chroma
    path and must not fall below either endpoint chroma.
    """

    kind: str
    h1: float
    h2: float | None = None
    c1: float
    c2: float | None = None
    cmax: float | None = None
    l1: float
    l2: float | None = None
    p1: float = 1.0
    p2: float | None = None
    reverse: bool = False
    fixup: bool = True
    name: str | None = None

    def __post_init__(self) -> None:
        if self.kind not in KINDS:
            raise InvalidSpecError(
                f"unknown palette kind {self.kind!r}; expected one of {KINDS}", field="kind"
            )
        for field in ("h1", "h2", "c1", "c2", "cmax", "l1", "l2", "p1", "p2"):
            value = getattr(self, field)
            if value is None:
                continue
            value = float(value)
            if not math.isfinite(value):
                raise InvalidSpecError(f"{field} must be finite, got {value!r}", field=field)
            object.__setattr__(self, field, value)
        for field in ("c1", "c2", "cmax"):
            value = getattr(self, field)
            if value is not None and value < 0.0:
                raise InvalidSpecError(f"{field} must be >= 0, got {value!r}", field=field)
        for field in ("l1", "l2"):
            value = getattr(self, field)
            if value is not None and not 0.0 <= value <= 100.0:
                raise InvalidSpecError(
                    f"{field} must lie in [0, 100], got {value!r}", field=field
                )
        for field in ("p1", "p2"):
            value = getattr(self, field)
            if value is not None and value <= 0.0:
                raise InvalidSpecError(f"{field} must be > 0, got {value!r}", field=field)
        if self.kind == "sequential" and self.cmax is not None:
            c2 = self.c2 if self.c2 is not None else 0.0
            if self.cmax < max(self.c1, c2):
                raise InvalidSpecError(
                    f"cmax = {self.cmax:g} must not fall below both endpoint chromas "
                    f"(c1 = {self.c1:g}, c2 = {c2:g})",
                    field="cmax",
                )


@dataclass(frozen=True, slots=True)
class Palette:
    """A realized palette: a label and an ordered run of '#RRGGBB' colors."""

    label: str
    colors: tuple[str, ...]


def _check_index(i: float) -> None:
    if not 0.0 <= i <= 1.0:
        raise InvalidInputError(f"trajectory index {i!r} outside [0, 1]")


def _require_kind(spec: PaletteSpec, kind: str) -> None:
    if spec.kind != kind:
        raise InvalidSpecError(
            f"expected a {kind} spec, got kind {spec.kind!r}", field="kind"
        )


def _triangular_chroma(c1: float, c2: float, cmax: float, u: float) -> float:
    # Knot placement: each leg's share of [0,1] is proportional to its
    # chroma span, which keeps the two slopes balanced and the peak exact.
    rise = abs(cmax - c2)
    fall = abs(cmax - c1)
    if rise + fall == 0.0:
        return cmax
    j = rise / (rise + fall)
    if j <= 0.0:
        return cmax - (cmax - c1) * u
    if j >= 1.0 or u <= j:
        return c2 + (cmax - c2) * u / j
    return cmax - (cmax - c1) * (u - j) / (1.0 - j)


def sequential_path(spec: PaletteSpec, i: float) -> HCL:
    """HCL at trajectory position ``i``; i = 1 is the (h1, c1, l1) end."""
    _require_kind(spec, "sequential")
    _check_index(i)
    h1 = spec.h1
    h2 = spec.h2 if spec.h2 is not None else h1
    c1 = spec.c1
    c2 = spec.c2 if spec.c2 is not None else 0.0
    l1 = spec.l1
    l2 = spec.l2 if spec.l2 is not None else l1
    p1 = spec.p1
    p2 = spec.p2 if spec.p2 is not None else p1
    hue = h2 - i * (h2 - h1)
    lum = l2 - i**p2 * (l2 - l1)
    if spec.cmax is None:
        chroma = c2 - i**p1 * (c2 - c1)
    else:
        chroma = _triangular_chroma(c1, c2, spec.cmax, i**p1)
    return HCL(hue, chroma, lum)


def diverging_path(spec: PaletteSpec, t: float) -> HCL:
    """HCL at signed position ``t`` in [-1, 1]; t = 0 is the neutral midpoint."""
    _require_kind(spec, "diverging")
    if not -1.0 <= t <= 1.0:
        raise InvalidInputError(f"trajectory index {t!r} outside [-1, 1]")
    h2 = spec.h2 if spec.h2 is not None else spec.h1
    l1 = spec.l1
    l2 = spec.l2 if spec.l2 is not None else l1
    p1 = spec.p1
    p2 = spec.p2 if spec.p2 is not None else p1
    a = abs(t)
    return HCL(
        spec.h1 if t >= 0.0 else h2,
        spec.c1 * a**p1,
        l2 - a**p2 * (l2 - l1),
    )


def qualitative_path(spec: PaletteSpec, k: int, n: int) -> HCL:
    """HCL of color ``k`` out of ``n``: fixed chroma/luminance, spaced hues.

    Without an explicit h2, hues cover h1 .. h1 + 360(n-1)/n so that n
    equal steps never wrap back onto the first hue.
    """
    _require_kind(spec, "qualitative")
    if n < 1:
        raise InvalidInputError(f"color count must be >= 1, got {n}")
    if not 0 <= k < n:
        raise InvalidInputError(f"color index {k} outside [0, {n})")
    h1 = spec.h1
    if spec.h2 is not None:
        h2 = spec.h2
    else:
        h2 = h1 + 360.0 * (n - 1) / n
    hue = h1 if n == 1 else h1 + (k / (n - 1)) * (h2 - h1)
    return HCL(hue, spec.c1, spec.l1)


def trajectory(spec: PaletteSpec, n: int) -> list[HCL]:
    """The n pre-fixup HCL samples of ``spec``, in display order.

    Sequential palettes sample i = 1 - k/(n-1), diverging ones
    t = 1 - 2k/(n-1) (odd n hits the exact neutral), qualitative ones the
    k-of-n hue wheel.  The spec's reverse flag reverses the result.
    """
    if n < 1:
        raise InvalidInputError(f"color count must be >= 1, got {n}")
    if spec.kind == "sequential":
        points = [sequential_path(spec, 1.0 if n == 1 else 1.0 - k / (n - 1)) for k in range(n)]
    elif spec.kind == "diverging":
        points = [diverging_path(spec, 1.0 if n == 1 else 1.0 - 2.0 * k / (n - 1)) for k in range(n)]
    else:
        points = [qualitative_path(spec, k, n) for k in range(n)]
    if spec.reverse:
        points.reverse()
    return points


def sample(spec: PaletteSpec, n: int) -> Palette:
    """Realize ``spec`` as ``n`` hex colors.

    With the spec's fixup flag set (the default) out-of-gamut trajectory
    points are clamped into sRGB; without it they raise.
    """
    colors = tuple(hcl_to_hex(point, fixup=spec.fixup) for point in trajectory(spec, n))
    return Palette(spec.name or f"custom {spec.kind}", colors)


def rainbow_hsv(
    n: int,
    start: float = 0.0,
    end: float | None = None,
    reverse: bool = False,
) -> Palette:
    """Classic HSV rainbow with s = v = 1, included as a comparison foil.

    Hues run from 360*start to 360*end in n equal steps.  ``end``
    defaults to (n-1)/n, equal spacing without wrapping onto the start.
    """
    if n < 1:
        raise InvalidInputError(f"color count must be >= 1, got {n}")
    if end is None:
        end = (n - 1) / n
    for label, value in (("start", start), ("end", end)):
        if not 0.0 <= value <= 1.0:
            raise InvalidInputError(f"{label} must lie in [0, 1], got {value!r}")
    hues = [360.0 * (start if n == 1 else start + k * (end - start) / (n - 1)) for k in range(n)]
    colors = [format_hex(hsv_to_srgb(HSV(h, 1.0, 1.0))) for h in hues]
    if reverse:
        colors.reverse()
    return Palette("Rainbow", tuple(colors))


def _fmt_value(value) -> str:
    if value is None:
        return "none"
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return format(value, "g")
    return str(value)


def describe(spec: PaletteSpec) -> str:
    """Stable key-value rendering of a spec, one ``key: value`` per line.

    Keys always appear in the same order: kind, name, h1, h2, c1, c2,
    cmax, l1, l2, p1, p2, reverse, fixup.  Absent optionals print as
    'none', so two structurally equal specs describe identically.
    """
    fields = (
        ("kind", spec.kind),
        ("name", spec.name),
        ("h1", spec.h1),
        ("h2", spec.h2),
        ("c1", spec.c1),
        ("c2", spec.c2),
        ("cmax", spec.cmax),
        ("l1", spec.l1),
        ("l2", spec.l2),
        ("p1", spec.p1),
        ("p2", spec.p2),
        ("reverse", spec.reverse),
        ("fixup", spec.fixup),
    )
    return "\n".join(f"{key}: {_fmt_value(value)}" for key, value in fields)
