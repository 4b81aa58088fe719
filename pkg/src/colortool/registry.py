"""Named palette registry.

Palettes live in a plain-text file, one record per line:

    kind | name | h1 h2 c1 c2 cmax l1 l2 p1 p2

The nine parameters are whitespace-separated numbers with ``-`` marking
an absent optional; ``#`` starts a comment and blank lines are skipped.
Lookups normalize names by lowercasing and dropping spaces and dashes,
so "Blue-Yellow", "blue yellow" and "blueyellow" all resolve to the
same entry.  The packaged registry can be replaced wholesale by
pointing the COLORTOOL_REGISTRY environment variable at another file.
"""

from __future__ import annotations

import dataclasses
import os
from importlib import resources

from .errors import InvalidSpecError, RegistryFormatError, UnknownPaletteError
from .palettes import KINDS, PaletteSpec

__all__ = [
    "ENV_VAR",
    "Registry",
    "load_registry",
    "default_registry",
    "registry_get",
    "normalize_name",
]

ENV_VAR = "COLORTOOL_REGISTRY"

_PARAM_FIELDS = ("h1", "h2", "c1", "c2", "cmax", "l1", "l2", "p1", "p2")


def normalize_name(name: str) -> str:
    """Lookup key for a palette name: lowercase, spaces and dashes removed."""
    return name.lower().replace(" ", "").replace("-", "")


def _edit_distance(a: str, b: str, cap: int = 3) -> int:
    # Plain Levenshtein with an early-out cap; names are short.
    if abs(len(a) - len(b)) > cap:
        return cap + 1
    prev = list(range(len(b) + 1))
    for i, ca in enumerate(a, start=1):
        cur = [i]
        for j, cb in enumerate(b, start=1):
            cur.append(min(prev[j] + 1, cur[j - 1] + 1, prev[j - 1] + (ca != cb)))
        if min(cur) > cap:
            return cap + 1
        prev = cur
    return prev[-1]


class Registry:
    """Read-only mapping of normalized palette names to specs, in file order."""

    def __init__(self, entries: list[PaletteSpec]):
        self._by_key: dict[str, PaletteSpec] = {}
        for spec in entries:
            self._by_key[normalize_name(spec.name or "")] = spec

    def names(self) -> list[str]:
        return [spec.name or "" for spec in self._by_key.values()]

    def entries(self) -> list[PaletteSpec]:
        return list(self._by_key.values())

    def get(self, name: str, overrides: dict | None = None) -> PaletteSpec:
        """Resolve ``name`` and apply scalar parameter overrides.

        Overrides may target any of the nine trajectory parameters; a
        None value clears an optional one.  The stored entry is never
        modified.  Unknown names raise with nearby spellings attached.
        """
        key = normalize_name(name)
        spec = self._by_key.get(key)
        if spec is None:
            suggestions = [
                stored.name or ""
                for stored_key, stored in self._by_key.items()
                if _edit_distance(key, stored_key) <= 2
            ]
            if suggestions:
                hint = f"; did you mean {', '.join(suggestions)}?"
            else:
                hint = "; run 'colortool registry list' for available names"
            raise UnknownPaletteError(
                f"unknown palette {name!r}{hint}", suggestions=suggestions
            )
        if not overrides:
            return spec
        changes = {}
        for field, value in overrides.items():
            if field not in _PARAM_FIELDS:
                raise InvalidSpecError(
                    f"cannot override {field!r}; expected one of {_PARAM_FIELDS}",
                    field=field,
                )
            changes[field] = value if value is None else float(value)
        return dataclasses.replace(spec, **changes)


def _parse_number(token: str, column: str, line_no: int) -> float | None:
    if token == "-":
        return None
    try:
        return float(token)
    except ValueError:
        raise RegistryFormatError(
            f"line {line_no}: {column} is not a number: {token!r}", line=line_no
        ) from None


def parse_registry(text: str, source: str = "<registry>") -> Registry:
    entries: list[PaletteSpec] = []
    seen: dict[str, int] = {}
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = [part.strip() for part in line.split("|")]
        if len(parts) != 3:
            raise RegistryFormatError(
                f"line {line_no}: expected 'kind | name | nine parameters', "
                f"got {len(parts)} field(s)",
                line=line_no,
            )
        kind, name, params = parts
        if kind not in KINDS:
            raise RegistryFormatError(
                f"line {line_no}: unknown kind {kind!r}; expected one of {KINDS}",
                line=line_no,
            )
        if not name:
            raise RegistryFormatError(f"line {line_no}: empty palette name", line=line_no)
        tokens = params.split()
        if len(tokens) != len(_PARAM_FIELDS):
            raise RegistryFormatError(
                f"line {line_no}: expected {len(_PARAM_FIELDS)} parameters "
                f"(h1 h2 c1 c2 cmax l1 l2 p1 p2, '-' for absent), got {len(tokens)}",
                line=line_no,
            )
        values = {
            field: _parse_number(token, field, line_no)
            for field, token in zip(_PARAM_FIELDS, tokens)
        }
        for required in ("h1", "c1", "l1"):
            if values[required] is None:
                raise RegistryFormatError(
                    f"line {line_no}: {required} is required", line=line_no
                )
        if values["p1"] is None:
            values["p1"] = 1.0
        key = normalize_name(name)
        if key in seen:
            raise RegistryFormatError(
                f"line {line_no}: duplicate palette name {name!r} "
                f"(first defined on line {seen[key]})",
                line=line_no,
            )
        seen[key] = line_no
        try:
            entries.append(PaletteSpec(kind=kind, name=name, **values))
        except InvalidSpecError as exc:
            raise RegistryFormatError(f"line {line_no}: {exc}", line=line_no) from None
    return Registry(entries)


def load_registry(path: str | None = None) -> Registry:
    """Load a registry file; defaults to $COLORTOOL_REGISTRY, then the packaged one."""
    if path is None:
        path = os.environ.get(ENV_VAR) or None
    if path is not None:
        with open(path, encoding="utf-8") as handle:
            return parse_registry(handle.read(), source=path)
    packaged = resources.files("colortool").joinpath("data/registry.txt")
    return parse_registry(packaged.read_text(encoding="utf-8"), source="packaged registry")


_cache: dict[str | None, Registry] = {}


def default_registry(refresh: bool = False) -> Registry:
    """Process-wide registry, loaded lazily and cached per COLORTOOL_REGISTRY value."""
    key = os.environ.get(ENV_VAR) or None
    if refresh or key not in _cache:
        _cache[key] = load_registry()
    return _cache[key]


def registry_get(name: str, overrides: dict | None = None) -> PaletteSpec:
    """Shorthand for default_registry().get(name, overrides)."""
    return default_registry().get(name, overrides)
