"""Deterministic SVG emitters for palette diagnostics.

Four figure types: swatch grids, hue/chroma/luminance spectrum plots,
chroma-luminance path plots with a gamut raster, and a seeded demo
heatmap.  Everything is plain SVG 1.1 text built from fixed layout
constants; identical inputs give byte-identical documents (no ids,
timestamps or library-dependent formatting).  Numbers are written with
at most two decimals, trailing zeros stripped.
"""

from __future__ import annotations

import dataclasses
from dataclasses import dataclass
from xml.sax.saxutils import escape

from .colors import HCL, fixup_gamut, hcl_to_srgb, hex_to_hcl, format_hex, in_srgb_gamut
from .errors import InvalidInputError, UnsupportedKindError
from .ops import desaturate, simulate_cvd
from .palettes import Palette, PaletteSpec, rainbow_hsv, sample
from .registry import default_registry

__all__ = [
    "SVGDocument",
    "SwatchSet",
    "DemoGrid",
    "default_demo_grid",
    "swatchplot",
    "specplot",
    "hclplot",
    "demoplot_heatmap",
    "compose_grid",
    "demo_comparison_grid",
]


@dataclass(frozen=True, slots=True)
class SVGDocument:
    """A complete SVG document plus its pixel size."""

    text: str
    width: float
    height: float


@dataclass(frozen=True, slots=True)
class SwatchSet:
    """One titled group of labeled palette rows for swatchplot."""

    title: str
    rows: tuple[tuple[str, Palette], ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "rows", tuple((str(l), p) for l, p in self.rows))
        if not self.rows:
            raise InvalidInputError("a swatch set needs at least one palette row")


def _fmt(x: float) -> str:
    """Two-decimal fixed formatting with trailing zeros stripped; no '-0'."""
    text = f"{x:.2f}".rstrip("0").rstrip(".")
    return "0" if text in ("", "-0") else text


def _esc(text: str) -> str:
    return escape(text, {'"': "&quot;"})


def _document(width: float, height: float, body: list[str]) -> SVGDocument:
    lines = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_fmt(width)}" '
        f'height="{_fmt(height)}" viewBox="0 0 {_fmt(width)} {_fmt(height)}">',
        *body,
        "</svg>",
    ]
    return SVGDocument("\n".join(lines) + "\n", width, height)


def _rect(x, y, w, h, fill, cls=None, extra="") -> str:
    cls_attr = f' class="{cls}"' if cls else ""
    return (
        f'<rect{cls_attr} x="{_fmt(x)}" y="{_fmt(y)}" width="{_fmt(w)}" '
        f'height="{_fmt(h)}" fill="{fill}"{extra}/>'
    )


def _text(x, y, content, cls, size, anchor="start", extra="") -> str:
    return (
        f'<text class="{cls}" x="{_fmt(x)}" y="{_fmt(y)}" font-family="sans-serif" '
        f'font-size="{_fmt(size)}" text-anchor="{anchor}"{extra}>{_esc(content)}</text>'
    )


# ---------------------------------------------------------------- swatches

# Swatch layout: fixed label gutter and band width so figures with the
# same row count are the same size regardless of content.
_SW_MARGIN = 16.0
_SW_LABEL_W = 168.0
_SW_BAND_W = 400.0
_SW_TITLE_H = 26.0
_SW_ROW_H = 26.0
_SW_ROW_GAP = 8.0
_SW_SET_GAP = 14.0
_SW_WIDTH = _SW_MARGIN * 2 + _SW_LABEL_W + _SW_BAND_W


def swatchplot(sets: list[SwatchSet]) -> SVGDocument:
    """Horizontal color bands, one row per palette, grouped under titles."""
    if not sets:
        raise InvalidInputError("swatchplot needs at least one swatch set")
    body: list[str] = []
    y = _SW_MARGIN
    for set_index, swset in enumerate(sets):
        if set_index:
            y += _SW_SET_GAP
        body.append(
            _text(_SW_MARGIN, y + 17.0, swset.title, "set-title", 15.0, extra=' font-weight="bold"')
        )
        y += _SW_TITLE_H
        for label, palette in swset.rows:
            body.append(_text(_SW_MARGIN, y + _SW_ROW_H / 2 + 4.5, label, "row-label", 13.0))
            count = len(palette.colors)
            width = _SW_BAND_W / count
            for i, color in enumerate(palette.colors):
                body.append(
                    _rect(_SW_MARGIN + _SW_LABEL_W + i * width, y, width, _SW_ROW_H, color, "swatch")
                )
            y += _SW_ROW_H + _SW_ROW_GAP
    height = y - _SW_ROW_GAP + _SW_MARGIN
    return _document(_SW_WIDTH, height, body)


# ---------------------------------------------------------------- spectrum

_SP_W = 560.0
_SP_H = 380.0
_SP_X = 60.0
_SP_Y = 28.0
_SP_PLOT_W = 440.0
_SP_PLOT_H = 240.0
_SP_STRIP_Y = 300.0
_SP_STRIP_H = 30.0

_SP_CHROMA_COLOR = "#E16A86"
_SP_LUM_COLOR = "#222222"
_SP_HUE_COLOR = "#008FBE"


def _unwrap_hues(hues: list[float]) -> list[float]:
    # Shift each hue by whole turns so consecutive values differ < 180 deg.
    out = [hues[0]]
    for h in hues[1:]:
        prev = out[-1]
        while h - prev > 180.0:
            h -= 360.0
        while h - prev < -180.0:
            h += 360.0
        out.append(h)
    return out


def _polyline(points: list[tuple[float, float]], stroke: str, cls: str, values: list[float]) -> str:
    coords = " ".join(f"{_fmt(x)},{_fmt(y)}" for x, y in points)
    data = ",".join(_fmt(v) for v in values)
    return (
        f'<polyline class="{cls}" data-values="{data}" points="{coords}" '
        f'fill="none" stroke="{stroke}" stroke-width="2"/>'
    )


def specplot(p: Palette) -> SVGDocument:
    """Hue, chroma and luminance of a palette as three polylines.

    Chroma and luminance read on the left axis (0..100); hue, unwrapped
    so it never jumps across 360, reads on the right axis spanning the
    palette's hue range.  A swatch strip below keys plot x to color.
    """
    n = len(p.colors)
    if n < 2:
        raise InvalidInputError("specplot needs a palette of at least 2 colors")
    points = [hex_to_hcl(c) for c in p.colors]
    hues = _unwrap_hues([pt.h for pt in points])
    chromas = [pt.c for pt in points]
    lums = [pt.l for pt in points]

    hue_lo, hue_hi = min(hues), max(hues)
    if hue_hi - hue_lo < 1e-9:  # constant-hue palettes still need a finite axis
        hue_lo, hue_hi = hue_lo - 10.0, hue_hi + 10.0

    def x_at(k: int) -> float:
        return _SP_X + _SP_PLOT_W * k / (n - 1)

    def y_left(v: float) -> float:
        return _SP_Y + _SP_PLOT_H * (1.0 - v / 100.0)

    def y_right(h: float) -> float:
        return _SP_Y + _SP_PLOT_H * (1.0 - (h - hue_lo) / (hue_hi - hue_lo))

    body = [
        '<clipPath id="plot-area">'
        + _rect(_SP_X, _SP_Y, _SP_PLOT_W, _SP_PLOT_H, "#000000")
        + "</clipPath>",
        _rect(_SP_X, _SP_Y, _SP_PLOT_W, _SP_PLOT_H, "none", None, ' stroke="#888888"'),
    ]
    for value in (0, 25, 50, 75, 100):
        body.append(
            _text(_SP_X - 8.0, y_left(value) + 4.0, str(value), "tick-left", 11.0, anchor="end")
        )
    for k in range(5):
        body.append(
            _text(
                _SP_X + _SP_PLOT_W + 8.0,
                y_left(25 * k) + 4.0,
                _fmt(hue_lo + (hue_hi - hue_lo) * k / 4.0),
                "tick-right",
                11.0,
            )
        )
    body.append(_text(_SP_X, _SP_Y - 10.0, "Chroma / Luminance", "axis-left", 12.0))
    body.append(
        _text(_SP_X + _SP_PLOT_W, _SP_Y - 10.0, "Hue", "axis-right", 12.0, anchor="end")
    )
    body.append('<g clip-path="url(#plot-area)">')
    body.append(
        _polyline([(x_at(k), y_left(chromas[k])) for k in range(n)], _SP_CHROMA_COLOR, "chroma", chromas)
    )
    body.append("</g>")
    body.append(
        _polyline([(x_at(k), y_left(lums[k])) for k in range(n)], _SP_LUM_COLOR, "luminance", lums)
    )
    body.append(
        _polyline([(x_at(k), y_right(hues[k])) for k in range(n)], _SP_HUE_COLOR, "hue", hues)
    )
    legend = (
        ("Chroma", _SP_CHROMA_COLOR),
        ("Luminance", _SP_LUM_COLOR),
        ("Hue", _SP_HUE_COLOR),
    )
    for i, (name, color) in enumerate(legend):
        lx = _SP_X + 8.0 + i * 110.0
        ly = _SP_Y + 16.0
        body.append(
            f'<line x1="{_fmt(lx)}" y1="{_fmt(ly - 4.0)}" x2="{_fmt(lx + 22.0)}" '
            f'y2="{_fmt(ly - 4.0)}" stroke="{color}" stroke-width="2"/>'
        )
        body.append(_text(lx + 28.0, ly, name, "legend", 11.0))
    strip_w = _SP_PLOT_W / n
    for i, color in enumerate(p.colors):
        body.append(
            _rect(_SP_X + i * strip_w, _SP_STRIP_Y, strip_w, _SP_STRIP_H, color, "swatch")
        )
    body.append(_text(_SP_X, _SP_STRIP_Y + _SP_STRIP_H + 18.0, p.label, "plot-title", 12.0))
    return _document(_SP_W, _SP_H, body)


# ------------------------------------------------------- chroma-luminance

_HP_W = 560.0
_HP_H = 430.0
_HP_X = 60.0
_HP_Y = 24.0
_HP_SX = 2.5  # px per chroma unit
_HP_SY = 3.5  # px per luminance unit
_HP_CHROMA_MAX = 180.0
_HP_CELL = 2.0  # raster cell size in chroma/luminance units


def _hue_of_luminance(points: list[HCL]):
    pairs = sorted(
        zip([pt.l for pt in points], _unwrap_hues([pt.h for pt in points])),
        key=lambda lh: lh[0],
    )
    lo_l, lo_h = pairs[0]
    hi_l, hi_h = pairs[-1]
    if hi_l - lo_l < 1e-9:
        return lambda lum: lo_h

    def interp(lum: float) -> float:
        if lum <= lo_l:
            return lo_h
        if lum >= hi_l:
            return hi_h
        for (l0, h0), (l1, h1) in zip(pairs, pairs[1:]):
            if lum <= l1:
                if l1 - l0 < 1e-12:
                    return h1
                return h0 + (h1 - h0) * (lum - l0) / (l1 - l0)
        return hi_h

    return interp


def hclplot(spec: PaletteSpec, n: int) -> SVGDocument:
    """A sequential palette's path through the chroma-luminance plane.

    The background rasterizes the sRGB-representable slice of HCL at the
    hue the palette uses for each luminance (piecewise-linear through
    the sampled colors); cells whose color would need fixup stay blank.
    The n sampled colors are overlaid as outlined dots.
    """
    if spec.kind != "sequential":
        raise UnsupportedKindError(
            f"chroma-luminance path plots support sequential palettes only, got {spec.kind!r}"
        )
    if n < 2:
        raise InvalidInputError("hclplot needs n >= 2")
    palette = sample(spec, n)
    points = [hex_to_hcl(c) for c in palette.colors]
    hue_at = _hue_of_luminance(points)

    def x_at(chroma: float) -> float:
        return _HP_X + chroma * _HP_SX

    def y_at(lum: float) -> float:
        return _HP_Y + (100.0 - lum) * _HP_SY

    body = []
    cells = int(_HP_CHROMA_MAX / _HP_CELL)
    rows = int(100.0 / _HP_CELL)
    for row in range(rows):
        lum = row * _HP_CELL + _HP_CELL / 2.0
        hue = hue_at(lum)
        for col in range(cells):
            chroma = col * _HP_CELL + _HP_CELL / 2.0
            srgb = hcl_to_srgb(HCL(hue, chroma, lum))
            if not in_srgb_gamut(srgb, tol=0.0):
                continue
            body.append(
                _rect(
                    x_at(col * _HP_CELL),
                    y_at(row * _HP_CELL + _HP_CELL),
                    _HP_CELL * _HP_SX,
                    _HP_CELL * _HP_SY,
                    format_hex(fixup_gamut(srgb)),
                    "cell",
                )
            )
    axis_y = y_at(0.0)
    body.append(
        f'<line x1="{_fmt(_HP_X)}" y1="{_fmt(axis_y)}" x2="{_fmt(x_at(_HP_CHROMA_MAX))}" '
        f'y2="{_fmt(axis_y)}" stroke="#555555"/>'
    )
    body.append(
        f'<line x1="{_fmt(_HP_X)}" y1="{_fmt(y_at(100.0))}" x2="{_fmt(_HP_X)}" '
        f'y2="{_fmt(axis_y)}" stroke="#555555"/>'
    )
    for chroma in (0, 50, 100, 150):
        body.append(
            _text(x_at(chroma), axis_y + 16.0, str(chroma), "tick-x", 11.0, anchor="middle")
        )
    for lum in (0, 20, 40, 60, 80, 100):
        body.append(
            _text(_HP_X - 8.0, y_at(lum) + 4.0, str(lum), "tick-y", 11.0, anchor="end")
        )
    body.append(_text(x_at(_HP_CHROMA_MAX / 2.0), axis_y + 34.0, "Chroma", "axis-x", 12.0, anchor="middle"))
    body.append(_text(_HP_X, _HP_Y - 8.0, "Luminance", "axis-y", 12.0))
    for point, color in zip(points, palette.colors):
        body.append(
            f'<circle class="pt" cx="{_fmt(x_at(point.c))}" cy="{_fmt(y_at(point.l))}" '
            f'r="4" fill="{color}" stroke="#000000" stroke-width="1"/>'
        )
    body.append(_text(x_at(_HP_CHROMA_MAX / 2.0), axis_y + 52.0, palette.label, "plot-title", 12.0, anchor="middle"))
    return _document(_HP_W, _HP_H, body)


# ----------------------------------------------------------------- heatmap

_DEMO_SIZE = 20
_DEMO_MARGIN = 20.0
_DEMO_CELL_PX = 14.0
_DEMO_WH = _DEMO_MARGIN * 2 + _DEMO_SIZE * _DEMO_CELL_PX

# Seeded source for demo data: a plain 32-bit linear congruential
# generator (Numerical Recipes constants 1664525 / 1013904223), each
# point coordinate the mean of two consecutive draws so counts bunch
# toward the grid center.
_LCG_A = 1664525
_LCG_C = 1013904223
_LCG_M = 2**32


@dataclass(frozen=True, slots=True)
class DemoGrid:
    """A 20x20 matrix of non-negative counts plus the seed that made it."""

    counts: tuple[tuple[int, ...], ...]
    seed: int


def default_demo_grid(seed: int = 42, points: int = 2000) -> DemoGrid:
    """Deterministic demo data: ``points`` LCG-sampled points binned 20x20."""
    state = seed % _LCG_M
    counts = [[0] * _DEMO_SIZE for _ in range(_DEMO_SIZE)]

    def draw() -> float:
        nonlocal state
        state = (_LCG_A * state + _LCG_C) % _LCG_M
        return state / _LCG_M

    for _ in range(points):
        x = (draw() + draw()) / 2.0
        y = (draw() + draw()) / 2.0
        col = min(int(x * _DEMO_SIZE), _DEMO_SIZE - 1)
        row = min(int(y * _DEMO_SIZE), _DEMO_SIZE - 1)
        counts[row][col] += 1
    return DemoGrid(tuple(tuple(row) for row in counts), seed)


def demoplot_heatmap(p: Palette, grid: DemoGrid) -> SVGDocument:
    """Render ``grid`` as a heatmap classed into len(palette) value bins.

    Bins are equal-width between the smallest and largest count; the
    first palette color paints the lowest bin.  A grid with only one
    distinct value paints entirely in the first color.
    """
    k = len(p.colors)
    if k < 2:
        raise InvalidInputError("heatmap demo needs a palette of at least 2 colors")
    flat = [value for row in grid.counts for value in row]
    lo, hi = min(flat), max(flat)
    span = hi - lo
    body = []
    for row_index, row in enumerate(grid.counts):
        for col_index, value in enumerate(row):
            if span == 0:
                level = 0
            else:
                level = min(int((value - lo) * k / span), k - 1)
            body.append(
                _rect(
                    _DEMO_MARGIN + col_index * _DEMO_CELL_PX,
                    _DEMO_MARGIN + row_index * _DEMO_CELL_PX,
                    _DEMO_CELL_PX,
                    _DEMO_CELL_PX,
                    p.colors[level],
                    "cell",
                    extra=f' data-level="{level}"',
                )
            )
    return _document(_DEMO_WH, _DEMO_WH, body)


# ------------------------------------------------------------- composition

_GRID_TITLE_H = 26.0
_GRID_LABEL_W = 26.0
_GRID_GAP = 6.0


def compose_grid(
    panels: list[list[SVGDocument]],
    col_titles: list[str] | None = None,
    row_labels: list[str] | None = None,
) -> SVGDocument:
    """Arrange equal-shaped panels in a grid with optional margins of text."""
    if not panels or not panels[0]:
        raise InvalidInputError("compose_grid needs at least one panel")
    cols = len(panels[0])
    if any(len(row) != cols for row in panels):
        raise InvalidInputError("all panel rows must have the same length")
    col_w = [max(row[c].width for row in panels) for c in range(cols)]
    row_h = [max(doc.height for doc in row) for row in panels]
    left = _GRID_LABEL_W if row_labels else 0.0
    top = _GRID_TITLE_H if col_titles else 0.0
    width = left + sum(col_w) + _GRID_GAP * (cols - 1)
    height = top + sum(row_h) + _GRID_GAP * (len(panels) - 1)
    body = []
    if col_titles:
        x = left
        for c, title in enumerate(col_titles):
            body.append(
                _text(x + col_w[c] / 2.0, top - 8.0, title, "col-title", 14.0, anchor="middle", extra=' font-weight="bold"')
            )
            x += col_w[c] + _GRID_GAP
    y = top
    for r, row in enumerate(panels):
        if row_labels:
            cx = left / 2.0 + 4.0
            cy = y + row_h[r] / 2.0
            body.append(
                f'<text class="row-title" x="{_fmt(cx)}" y="{_fmt(cy)}" '
                f'font-family="sans-serif" font-size="13" text-anchor="middle" '
                f'transform="rotate(-90 {_fmt(cx)} {_fmt(cy)})">{_esc(row_labels[r])}</text>'
            )
        x = left
        for c, doc in enumerate(row):
            body.append(f'<g transform="translate({_fmt(x)},{_fmt(y)})">')
            body.append(doc.text.rstrip("\n"))
            body.append("</g>")
            x += col_w[c] + _GRID_GAP
        y += row_h[r] + _GRID_GAP
    return _document(width, height, body)


def demo_comparison_grid(seed: int = 42) -> SVGDocument:
    """The six-panel heatmap comparison: two palettes under three renderings.

    Rows: an HSV rainbow (end 2/3, reversed) and the reversed Blue-Yellow
    palette, both at 7 colors.  Columns: the palette as-is, under
    deuteranopia at full severity, and fully desaturated.
    """
    grid = default_demo_grid(seed)
    rainbow = rainbow_hsv(7, end=2.0 / 3.0, reverse=True)
    spec = default_registry().get("Blue-Yellow")
    hcl_pal = sample(dataclasses.replace(spec, reverse=True), 7)
    rows = []
    for source in (rainbow, hcl_pal):
        variants = (
            source.colors,
            tuple(simulate_cvd(list(source.colors), "deutan", 1.0)),
            tuple(desaturate(list(source.colors), 1.0)),
        )
        rows.append(
            [demoplot_heatmap(Palette(source.label, colors), grid) for colors in variants]
        )
    return compose_grid(
        rows,
        col_titles=["Original", "Deuteranope", "Desaturated"],
        row_labels=["Rainbow", "HCL (Blue-Yellow)"],
    )
