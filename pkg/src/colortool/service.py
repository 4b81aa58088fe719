"""HTTP/JSON facade for the studio UI.

Endpoints:

    GET  /api/registry          full palette registry as JSON
    POST /api/render            sample a spec; optional CVD/desaturation
    POST /api/plot/swatch       swatch SVG for a spec
    POST /api/plot/spec         spectrum SVG for a spec
    POST /api/plot/hcl          chroma-luminance SVG (sequential only)

plus static file serving for the studio bundle.  The service is
stateless; all color math lives in the library modules, so every
response is reproducible through the CLI.  Validation failures return
400 with {"error", "field"}; asking for a chroma-luminance plot of a
non-sequential palette returns 422.
"""

from __future__ import annotations

import json
import os
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer
from urllib.parse import urlparse

from .colors import hex_to_hcl
from .errors import ColortoolError, InvalidSpecError, UnsupportedKindError
from .ops import desaturate, simulate_cvd
from .palettes import Palette, PaletteSpec, describe, sample
from .registry import Registry, default_registry
from .svgplot import SwatchSet, hclplot, specplot, swatchplot

__all__ = ["create_server", "resolve_ui_dir"]

_UI_ENV_VAR = "COLORTOOL_UI_DIR"

_SPEC_NUMBER_FIELDS = ("h1", "h2", "c1", "c2", "cmax", "l1", "l2", "p1", "p2")
_SPEC_FLAG_FIELDS = ("reverse", "fixup")

_CONTENT_TYPES = {
    ".html": "text/html; charset=utf-8",
    ".js": "text/javascript; charset=utf-8",
    ".css": "text/css; charset=utf-8",
    ".svg": "image/svg+xml",
    ".json": "application/json",
    ".map": "application/json",
    ".png": "image/png",
    ".ico": "image/x-icon",
}


def resolve_ui_dir(explicit: str | None = None) -> str | None:
    """Locate the studio's static bundle: flag, then env, then ./frontend/dist."""
    if explicit:
        return explicit
    env = os.environ.get(_UI_ENV_VAR)
    if env:
        return env
    fallback = os.path.join("frontend", "dist")
    return fallback if os.path.isdir(fallback) else None


def _spec_to_json(spec: PaletteSpec) -> dict:
    payload: dict = {"kind": spec.kind, "name": spec.name}
    for field in _SPEC_NUMBER_FIELDS:
        payload[field] = getattr(spec, field)
    payload["reverse"] = spec.reverse
    payload["fixup"] = spec.fixup
    return payload


def _spec_from_json(obj) -> PaletteSpec:
    if not isinstance(obj, dict):
        raise InvalidSpecError("request body needs a 'spec' object", field="spec")
    kwargs: dict = {}
    for key, value in obj.items():
        if key == "kind":
            if not isinstance(value, str):
                raise InvalidSpecError("kind must be a string", field="kind")
            kwargs[key] = value
        elif key == "name":
            if value is not None and not isinstance(value, str):
                raise InvalidSpecError("name must be a string or null", field="name")
            kwargs[key] = value
        elif key in _SPEC_NUMBER_FIELDS:
            if value is None:
                continue
            if isinstance(value, bool) or not isinstance(value, (int, float)):
                raise InvalidSpecError(f"{key} must be a number or null", field=key)
            kwargs[key] = float(value)
        elif key in _SPEC_FLAG_FIELDS:
            if not isinstance(value, bool):
                raise InvalidSpecError(f"{key} must be a boolean", field=key)
            kwargs[key] = value
        else:
            raise InvalidSpecError(f"unknown spec field {key!r}", field=key)
    if "kind" not in kwargs:
        raise InvalidSpecError("spec is missing 'kind'", field="kind")
    for required in ("h1", "c1", "l1"):
        if required not in kwargs:
            raise InvalidSpecError(f"spec is missing {required!r}", field=required)
    return PaletteSpec(**kwargs)


def _parse_request(body: dict) -> tuple[PaletteSpec, int, dict]:
    if not isinstance(body, dict):
        raise InvalidSpecError("request body must be a JSON object", field=None)
    spec = _spec_from_json(body.get("spec"))
    n = body.get("n", 7)
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise InvalidSpecError(f"n must be a positive integer, got {n!r}", field="n")
    return spec, n, body


def _render(body: dict) -> dict:
    spec, n, body = _parse_request(body)
    palette = sample(spec, n)
    colors = list(palette.colors)
    response: dict = {
        "colors": colors,
        "luminance": [hex_to_hcl(color).l for color in colors],
        "settings": describe(spec),
    }
    cvd = body.get("cvd")
    if cvd is not None:
        if not isinstance(cvd, dict) or not isinstance(cvd.get("kind"), str):
            raise InvalidSpecError("cvd must be {kind, severity}", field="cvd")
        severity = cvd.get("severity", 1.0)
        if isinstance(severity, bool) or not isinstance(severity, (int, float)):
            raise InvalidSpecError("cvd severity must be a number", field="cvd")
        response["cvd_colors"] = simulate_cvd(colors, cvd["kind"], float(severity))
    amount = body.get("desaturate")
    if amount is not None:
        if isinstance(amount, bool) or not isinstance(amount, (int, float)):
            raise InvalidSpecError("desaturate must be a number", field="desaturate")
        response["desaturated_colors"] = desaturate(colors, float(amount))
    return response


def _plot(which: str, body: dict):
    spec, n, _ = _parse_request(body)
    palette = sample(spec, n)
    if which == "swatch":
        return swatchplot([SwatchSet(palette.label, ((palette.label, palette),))])
    if which == "spec":
        return specplot(Palette(palette.label, palette.colors))
    return hclplot(spec, n)


def create_server(
    host: str = "127.0.0.1",
    port: int = 8765,
    registry: Registry | None = None,
    ui_dir: str | None = None,
) -> ThreadingHTTPServer:
    """Build the HTTP server (unstarted); call serve_forever() on the result."""
    reg = registry if registry is not None else default_registry()

    class Handler(BaseHTTPRequestHandler):
        protocol_version = "HTTP/1.1"

        def log_message(self, *args) -> None:  # keep stdout/stderr quiet
            pass

        def _send(self, status: int, content_type: str, payload: bytes) -> None:
            self.send_response(status)
            self.send_header("Content-Type", content_type)
            self.send_header("Content-Length", str(len(payload)))
            self.send_header("Access-Control-Allow-Origin", "*")
            self.end_headers()
            self.wfile.write(payload)

        def _send_json(self, status: int, payload: dict | list) -> None:
            self._send(status, "application/json", json.dumps(payload).encode("utf-8"))

        def _send_error(self, status: int, message: str, field: str | None = None) -> None:
            self._send_json(status, {"error": message, "field": field})

        def do_OPTIONS(self) -> None:
            self.send_response(204)
            self.send_header("Access-Control-Allow-Origin", "*")
            self.send_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS")
            self.send_header("Access-Control-Allow-Headers", "Content-Type")
            self.send_header("Content-Length", "0")
            self.end_headers()

        def do_GET(self) -> None:
            path = urlparse(self.path).path
            if path == "/api/registry":
                dump = [
                    {"name": spec.name, "kind": spec.kind, "spec": _spec_to_json(spec)}
                    for spec in reg.entries()
                ]
                self._send_json(200, dump)
                return
            if path.startswith("/api/"):
                self._send_error(404, f"no such endpoint: {path}")
                return
            self._serve_static(path)

        def _serve_static(self, path: str) -> None:
            if ui_dir is None:
                self._send_error(404, "no studio UI bundled; API lives under /api/")
                return
            rel = path.lstrip("/") or "index.html"
            root = os.path.realpath(ui_dir)
            full = os.path.realpath(os.path.join(root, rel))
            if full != root and not full.startswith(root + os.sep):
                self._send_error(403, "path escapes the UI directory")
                return
            if os.path.isdir(full):
                full = os.path.join(full, "index.html")
            if not os.path.isfile(full):
                self._send_error(404, f"no such file: {path}")
                return
            ext = os.path.splitext(full)[1].lower()
            with open(full, "rb") as handle:
                payload = handle.read()
            self._send(200, _CONTENT_TYPES.get(ext, "application/octet-stream"), payload)

        def _read_body(self) -> bytes:
            # always drain the body; leftovers would corrupt the next
            # request on a kept-alive connection
            length = int(self.headers.get("Content-Length") or 0)
            return self.rfile.read(length) if length else b""

        @staticmethod
        def _parse_json(raw: bytes) -> dict:
            try:
                return json.loads(raw.decode("utf-8") or "null")
            except (json.JSONDecodeError, UnicodeDecodeError) as exc:
                raise InvalidSpecError(f"invalid JSON body: {exc}", field=None) from None

        def do_POST(self) -> None:
            path = urlparse(self.path).path
            try:
                raw = self._read_body()
                if path == "/api/render":
                    self._send_json(200, _render(self._parse_json(raw)))
                    return
                if path.startswith("/api/plot/"):
                    which = path.removeprefix("/api/plot/")
                    if which not in ("swatch", "spec", "hcl"):
                        self._send_error(404, f"no such plot type: {which!r}")
                        return
                    doc = _plot(which, self._parse_json(raw))
                    self._send(200, "image/svg+xml", doc.text.encode("utf-8"))
                    return
                self._send_error(404, f"no such endpoint: {path}")
            except UnsupportedKindError as exc:
                self._send_error(422, str(exc), field="kind")
            except InvalidSpecError as exc:
                self._send_error(400, str(exc), field=exc.field)
            except ColortoolError as exc:
                self._send_error(400, str(exc))
            except Exception as exc:  # pragma: no cover - defensive
                self._send_error(500, f"internal error: {exc}")

    return ThreadingHTTPServer((host, port), Handler)
