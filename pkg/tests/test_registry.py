import textwrap

import pytest

from colortool import (
    InvalidSpecError,
    RegistryFormatError,
    UnknownPaletteError,
    default_registry,
    load_registry,
    registry_get,
)
from colortool.registry import ENV_VAR, normalize_name, parse_registry

EXPECTED_NAMES = {
    "Pastel 1", "Dark 3", "Warm", "Cold",
    "Viridis", "Blue-Yellow", "Purples", "Heat", "Grays",
    "Blue-Red", "Green-Brown", "Purple-Green",
}


# ------------------------------------------------------- packaged file


def test_packaged_registry_contents():
    reg = load_registry()
    assert set(reg.names()) == EXPECTED_NAMES
    assert len(reg.entries()) == 12
    # entries keep file order
    assert reg.names()[0] == "Pastel 1"
    assert "Viridis" in reg.names()


def test_viridis_entry_parameters():
    spec = registry_get("Viridis")
    assert spec.kind == "sequential"
    assert (spec.h1, spec.h2) == (300.0, 75.0)
    assert (spec.c1, spec.c2) == (40.0, 95.0)
    assert spec.cmax is None
    assert (spec.l1, spec.l2) == (15.0, 90.0)
    assert (spec.p1, spec.p2) == (1.0, 1.1)
    assert spec.name == "Viridis"


def test_dark3_entry_has_negative_hue():
    spec = registry_get("Dark 3")
    assert spec.kind == "qualitative"
    assert spec.h1 == -180.0
    assert spec.l2 is None and spec.p2 is None


# ------------------------------------------------------------- lookups


def test_lookup_normalizes_case_space_and_dash():
    assert normalize_name("Blue-Yellow") == "blueyellow"
    for alias in ("blue-yellow", "Blue Yellow", "BLUEYELLOW", "blue  yellow"):
        assert registry_get(alias).name == "Blue-Yellow"
    assert registry_get("dark3").name == "Dark 3"


def test_lookup_with_overrides_leaves_stored_entry_alone():
    spec = registry_get("Viridis", {"h1": 200})
    assert spec.h1 == 200.0
    assert spec.h2 == 75.0
    assert registry_get("Viridis").h1 == 300.0


def test_override_can_clear_an_optional_field():
    base = registry_get("Viridis", {"cmax": 90, "c2": 20})
    assert base.cmax == 90.0 and base.c2 == 20.0
    cleared = registry_get("Viridis", {"cmax": None})
    assert cleared.cmax is None


def test_override_unknown_field_rejected():
    with pytest.raises(InvalidSpecError) as excinfo:
        registry_get("Viridis", {"hue": 10})
    assert excinfo.value.field == "hue"


def test_override_invalid_value_rejected_with_field():
    with pytest.raises(InvalidSpecError) as excinfo:
        registry_get("Viridis", {"cmax": 10})
    assert excinfo.value.field == "cmax"
    assert "cmax = 10" in str(excinfo.value)


def test_unknown_name_suggests_close_matches():
    with pytest.raises(UnknownPaletteError) as excinfo:
        registry_get("virids")
    assert excinfo.value.suggestions == ("Viridis",)
    assert "did you mean" in str(excinfo.value)
    assert "Viridis" in str(excinfo.value)


def test_unknown_name_without_neighbors_has_no_suggestions():
    with pytest.raises(UnknownPaletteError) as excinfo:
        registry_get("nosuchpalette")
    assert excinfo.value.suggestions == ()
    assert "did you mean" not in str(excinfo.value)


# ------------------------------------------------------------- parsing


def test_parse_minimal_file():
    reg = parse_registry(
        textwrap.dedent(
            """\
            # comment line
            sequential | Ocean | 250 180 60 20 - 25 95 1 1.2

            qualitative | Tints | 40 - 30 - - 85 - 1 -
            """
        )
    )
    assert reg.names() == ["Ocean", "Tints"]
    ocean = reg.get("ocean")
    assert ocean.h2 == 180.0 and ocean.cmax is None and ocean.p2 == 1.2
    tints = reg.get("tints")
    assert tints.h2 is None and tints.p2 is None


def test_parse_errors_carry_line_numbers():
    cases = [
        ("sequential | Solo", 1, "got 2 field(s)"),  # missing parameter block
        ("spiral | X | 0 - 50 - - 50 - 1 -", 1, "kind"),
        ("sequential |  | 0 - 50 - - 50 - 1 -", 1, "name"),
        ("sequential | X | 0 - 50 - - 50 -", 1, "expected 9 parameters"),
        ("sequential | X | 0 - fifty - - 50 - 1 -", 1, "fifty"),
        ("sequential | X | - - 50 - - 50 - 1 -", 1, "h1"),
        ("sequential | X | 0 - - - - 50 - 1 -", 1, "c1"),
        ("sequential | X | 0 - 50 - - - - 1 -", 1, "l1"),
    ]
    for line, number, needle in cases:
        with pytest.raises(RegistryFormatError) as excinfo:
            parse_registry(line)
        assert excinfo.value.line == number, line
        assert needle in str(excinfo.value), line


def test_parse_error_line_numbers_skip_comments():
    text = "# header\n\nsequential | A | 0 - 50 - - 50 - 1 -\nbadline\n"
    with pytest.raises(RegistryFormatError) as excinfo:
        parse_registry(text)
    assert excinfo.value.line == 4


def test_parse_rejects_duplicate_names():
    text = (
        "sequential | Sea | 250 - 60 - - 25 95 1 -\n"
        "diverging | sea | 250 0 60 - - 25 95 1 -\n"
    )
    with pytest.raises(RegistryFormatError) as excinfo:
        parse_registry(text)
    assert excinfo.value.line == 2
    assert "duplicate" in str(excinfo.value).lower()


def test_parse_wraps_spec_validation_with_line():
    text = "sequential | Bad | 300 75 40 95 10 15 90 1 1.1\n"
    with pytest.raises(RegistryFormatError) as excinfo:
        parse_registry(text)
    assert excinfo.value.line == 1
    assert "cmax" in str(excinfo.value)


def test_parse_default_p1():
    reg = parse_registry("sequential | A | 0 - 50 - - 50 - - -\n")
    assert reg.get("a").p1 == 1.0


# ------------------------------------------------------- env and cache


def test_env_var_points_at_alternate_registry(tmp_path, monkeypatch):
    alt = tmp_path / "alt.txt"
    alt.write_text("qualitative | Mine | 10 - 45 - - 65 - 1 -\n")
    monkeypatch.setenv(ENV_VAR, str(alt))
    reg = default_registry()
    assert reg.names() == ["Mine"]
    assert registry_get("mine").name == "Mine"
    monkeypatch.delenv(ENV_VAR)
    assert set(default_registry().names()) == EXPECTED_NAMES


def test_env_var_missing_file_raises(tmp_path, monkeypatch):
    monkeypatch.setenv(ENV_VAR, str(tmp_path / "absent.txt"))
    with pytest.raises(OSError):
        default_registry(refresh=True)


def test_explicit_path_wins_over_env(tmp_path, monkeypatch):
    a = tmp_path / "a.txt"
    a.write_text("qualitative | FromPath | 10 - 45 - - 65 - 1 -\n")
    b = tmp_path / "b.txt"
    b.write_text("qualitative | FromEnv | 10 - 45 - - 65 - 1 -\n")
    monkeypatch.setenv(ENV_VAR, str(b))
    assert load_registry(str(a)).names() == ["FromPath"]
    assert load_registry().names() == ["FromEnv"]
