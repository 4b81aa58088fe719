"""Command-line interface.

Exit codes: 0 on success, 2 on usage errors (argparse), 1 on data errors
(bad colors, unknown palettes, invalid parameters).  Standard output
carries only the payload (hex codes, numbers, SVG text or file paths);
everything else goes to standard error.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import sys

from . import colors as C
from .errors import ColortoolError, InvalidInputError, InvalidSpecError
from .ops import contrast_ratio, simulate_cvd
from .palettes import PaletteSpec, describe, rainbow_hsv, sample
from .registry import default_registry
from .svgplot import (
    SwatchSet,
    default_demo_grid,
    demo_comparison_grid,
    demoplot_heatmap,
    hclplot,
    specplot,
    swatchplot,
)

_SPEC_FIELDS = ("h1", "h2", "c1", "c2", "cmax", "l1", "l2", "p1", "p2")


def _norm_hex(token: str) -> str:
    # accept hex colors with or without the leading '#'
    if len(token) == 6 and "#" not in token:
        return "#" + token
    return token


def _parse_overrides(pairs: list[str]) -> dict:
    overrides = {}
    for pair in pairs:
        key, sep, value = pair.partition("=")
        if not sep or not key:
            raise InvalidInputError(f"override {pair!r} is not of the form key=value")
        if key not in _SPEC_FIELDS:
            raise InvalidSpecError(
                f"cannot override {key!r}; expected one of {_SPEC_FIELDS}", field=key
            )
        if value.lower() in ("none", "-"):
            overrides[key] = None
            continue
        try:
            overrides[key] = float(value)
        except ValueError:
            raise InvalidInputError(f"override {key}: {value!r} is not a number") from None
    return overrides


def _resolve_spec(args: argparse.Namespace) -> PaletteSpec:
    """Build the palette spec from --name/--kind/--override/--reverse flags."""
    overrides = _parse_overrides(args.override or [])
    if args.name:
        spec = default_registry().get(args.name, overrides)
        if args.kind and spec.kind != args.kind:
            raise InvalidSpecError(
                f"palette {spec.name!r} is {spec.kind}, not {args.kind}", field="kind"
            )
    else:
        if not args.kind:
            raise InvalidInputError("either --name or --kind is required")
        for required in ("h1", "c1", "l1"):
            if overrides.get(required) is None:
                raise InvalidSpecError(
                    f"custom palettes need --override {required}=<value>", field=required
                )
        spec = PaletteSpec(kind=args.kind, **overrides)
    if getattr(args, "reverse", False):
        spec = dataclasses.replace(spec, reverse=True)
    return spec


def _emit_svg(doc, out: str) -> None:
    if out == "-":
        sys.stdout.write(doc.text)
        return
    with open(out, "w", encoding="utf-8") as handle:
        handle.write(doc.text)
    print(out)


def _add_spec_flags(parser: argparse.ArgumentParser, with_n: bool = True) -> None:
    parser.add_argument("--kind", choices=("qualitative", "sequential", "diverging"))
    parser.add_argument("--name", help="registry palette name")
    parser.add_argument(
        "--override",
        action="append",
        metavar="KEY=VALUE",
        help="set a trajectory parameter (h1 h2 c1 c2 cmax l1 l2 p1 p2); repeatable",
    )
    parser.add_argument("--reverse", action="store_true", help="reverse color order")
    if with_n:
        parser.add_argument("-n", "--count", type=int, default=7, dest="n")


def _add_out_flag(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--out", default="-", help="SVG output path, or - for stdout")


# ------------------------------------------------------------- subcommands


def _cmd_palette(args) -> int:
    palette = sample(_resolve_spec(args), args.n)
    if args.json:
        print(json.dumps(list(palette.colors)))
    else:
        for color in palette.colors:
            print(color)
    return 0


_SPACES = ("hex", "srgb", "linear", "xyz", "luv", "hcl", "hsv")


def _value_to_srgb(space: str, token: str) -> C.SRGB:
    if space == "hex":
        return C.parse_hex(_norm_hex(token))
    parts = token.split(",")
    if len(parts) != 3:
        raise InvalidInputError(
            f"{space} value must be three comma-separated numbers, got {token!r}"
        )
    try:
        a, b, c = (float(part) for part in parts)
    except ValueError:
        raise InvalidInputError(f"non-numeric component in {token!r}") from None
    if space == "srgb":
        return C.SRGB(a, b, c)
    if space == "linear":
        return C.linear_to_srgb(C.LinearRGB(a, b, c))
    if space == "xyz":
        return C.linear_to_srgb(C.xyz_to_linear(C.XYZ(a, b, c)))
    if space == "luv":
        return C.linear_to_srgb(C.xyz_to_linear(C.luv_to_xyz(C.LUV(a, b, c))))
    if space == "hcl":
        return C.hcl_to_srgb(C.HCL(a, b, c))
    return C.hsv_to_srgb(C.HSV(a, b, c))


def _srgb_to_value(space: str, srgb: C.SRGB) -> str:
    if space == "hex":
        return C.format_hex(C.fixup_gamut(srgb))
    if space == "srgb":
        triple = (srgb.r, srgb.g, srgb.b)
    elif space == "linear":
        lin = C.srgb_to_linear(srgb)
        triple = (lin.r, lin.g, lin.b)
    elif space == "xyz":
        xyz = C.linear_to_xyz(C.srgb_to_linear(srgb))
        triple = (xyz.x, xyz.y, xyz.z)
    elif space == "luv":
        luv = C.xyz_to_luv(C.linear_to_xyz(C.srgb_to_linear(srgb)))
        triple = (luv.l, luv.u, luv.v)
    elif space == "hcl":
        hcl = C.srgb_to_hcl(srgb)
        triple = (hcl.h, hcl.c, hcl.l)
    else:
        hsv = C.srgb_to_hsv(srgb)
        triple = (hsv.h, hsv.s, hsv.v)
    return " ".join(f"{component:.4f}" for component in triple)


def _cmd_convert(args) -> int:
    for token in args.values:
        srgb = _value_to_srgb(args.src, token)
        print(_srgb_to_value(args.dst, srgb))
    return 0


def _cmd_simulate(args) -> int:
    hexes = [_norm_hex(token) for token in args.colors]
    for color in simulate_cvd(hexes, args.cvd, args.severity):
        print(color)
    return 0


def _cmd_assess(args) -> int:
    hexes = [_norm_hex(token) for token in args.colors]
    if args.what == "contrast":
        if len(hexes) != 2:
            raise InvalidInputError("assess contrast takes exactly two colors")
        print(f"{contrast_ratio(hexes[0], hexes[1]):.2f}")
        return 0
    # monotone-luminance: strictly increasing or strictly decreasing L
    lums = [C.hex_to_hcl(color).l for color in hexes]
    diffs = [b - a for a, b in zip(lums, lums[1:])]
    monotone = not diffs or all(d > 0 for d in diffs) or all(d < 0 for d in diffs)
    print("yes" if monotone else "no")
    print(" ".join(f"{lum:.2f}" for lum in lums))
    return 0


def _cmd_swatch(args) -> int:
    palette = sample(_resolve_spec(args), args.n)
    title = args.title or palette.label
    _emit_svg(swatchplot([SwatchSet(title, ((palette.label, palette),))]), args.out)
    return 0


def _cmd_specplot(args) -> int:
    _emit_svg(specplot(sample(_resolve_spec(args), args.n)), args.out)
    return 0


def _cmd_hclplot(args) -> int:
    _emit_svg(hclplot(_resolve_spec(args), args.n), args.out)
    return 0


def _cmd_demo(args) -> int:
    if args.grid:
        _emit_svg(demo_comparison_grid(args.seed), args.out)
        return 0
    if args.rainbow:
        palette = rainbow_hsv(args.n, end=2.0 / 3.0, reverse=args.reverse)
    else:
        palette = sample(_resolve_spec(args), args.n)
    _emit_svg(demoplot_heatmap(palette, default_demo_grid(args.seed)), args.out)
    return 0


def _cmd_registry(args) -> int:
    registry = default_registry()
    if args.action == "list":
        by_kind: dict[str, list[str]] = {}
        for spec in registry.entries():
            by_kind.setdefault(spec.kind, []).append(spec.name or "")
        for kind in ("qualitative", "sequential", "diverging"):
            if kind not in by_kind:
                continue
            print(f"{kind}:")
            for name in by_kind[kind]:
                print(f"  {name}")
        return 0
    if not args.names:
        raise InvalidInputError("registry show needs a palette name")
    for i, name in enumerate(args.names):
        if i:
            print()
        print(describe(registry.get(name)))
    return 0


def _cmd_serve(args) -> int:
    from .service import create_server, resolve_ui_dir

    server = create_server(args.host, args.port, ui_dir=resolve_ui_dir(args.ui))
    host, port = server.server_address[:2]
    print(f"serving on http://{host}:{port}", file=sys.stderr)
    try:
        server.serve_forever()
    except KeyboardInterrupt:
        pass
    finally:
        server.server_close()
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="colortool",
        description="HCL palettes, color conversions, deficiency simulation and SVG diagnostics.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("palette", help="sample a palette to hex colors")
    _add_spec_flags(p)
    p.add_argument("--json", action="store_true", help="emit a JSON array")
    p.set_defaults(func=_cmd_palette)

    p = sub.add_parser("convert", help="convert colors between coordinate spaces")
    p.add_argument("--from", dest="src", choices=_SPACES, required=True)
    p.add_argument("--to", dest="dst", choices=_SPACES, required=True)
    p.add_argument("values", nargs="+", help="hex codes or comma-separated triples")
    p.set_defaults(func=_cmd_convert)

    p = sub.add_parser("simulate", help="simulate color vision deficiencies")
    p.add_argument("--cvd", choices=("deutan", "protan", "tritan"), required=True)
    p.add_argument("--severity", type=float, default=1.0)
    p.add_argument("colors", nargs="+", metavar="HEX")
    p.set_defaults(func=_cmd_simulate)

    p = sub.add_parser("assess", help="contrast ratios and luminance checks")
    p.add_argument("what", choices=("contrast", "monotone-luminance"))
    p.add_argument("colors", nargs="+", metavar="HEX")
    p.set_defaults(func=_cmd_assess)

    p = sub.add_parser("swatch", help="render a swatch band SVG")
    _add_spec_flags(p)
    p.add_argument("--title", help="figure title (defaults to the palette label)")
    _add_out_flag(p)
    p.set_defaults(func=_cmd_swatch)

    p = sub.add_parser("spec", help="render a hue/chroma/luminance spectrum SVG")
    _add_spec_flags(p)
    _add_out_flag(p)
    p.set_defaults(func=_cmd_specplot)

    p = sub.add_parser("hclplot", help="render a chroma-luminance path SVG (sequential only)")
    _add_spec_flags(p)
    _add_out_flag(p)
    p.set_defaults(func=_cmd_hclplot)

    p = sub.add_parser("demo", help="render demo heatmaps")
    _add_spec_flags(p)
    p.add_argument("--seed", type=int, default=42, help="demo data seed")
    p.add_argument("--rainbow", action="store_true", help="use the HSV rainbow foil")
    p.add_argument(
        "--grid",
        action="store_true",
        help="six-panel comparison: rainbow and Blue-Yellow, original/deutan/desaturated",
    )
    _add_out_flag(p)
    p.set_defaults(func=_cmd_demo)

    p = sub.add_parser("registry", help="inspect the palette registry")
    p.add_argument("action", choices=("list", "show"))
    p.add_argument("names", nargs="*", help="palette names (for show)")
    p.set_defaults(func=_cmd_registry)

    p = sub.add_parser("serve", help="start the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8765)
    p.add_argument("--ui", help="directory of studio UI static files")
    p.set_defaults(func=_cmd_serve)

    return parser


def run(argv: list[str]) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        code = exc.code
        return code if isinstance(code, int) else 0 if code is None else 2
    try:
        return args.func(args)
    except ColortoolError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
