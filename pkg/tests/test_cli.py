import json
import xml.etree.ElementTree as ET

import pytest

from colortool import registry
from colortool.cli import run

VIRIDIS7 = [
    "#4B0055", "#353E7C", "#007094", "#009B95", "#00BE7D", "#96D84B", "#FDE333",
]


def invoke(capsys, *argv):
    code = run(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# --------------------------------------------------------------- palette


def test_palette_by_name(capsys):
    code, out, err = invoke(capsys, "palette", "--kind", "sequential", "--name", "viridis", "-n", "7")
    assert code == 0
    assert err == ""
    assert out.splitlines() == VIRIDIS7


def test_palette_json(capsys):
    code, out, err = invoke(capsys, "palette", "--name", "viridis", "--json")
    assert code == 0
    assert json.loads(out) == VIRIDIS7


def test_palette_with_overrides(capsys):
    code, out, _ = invoke(
        capsys, "palette", "--name", "viridis",
        "--override", "cmax=90", "--override", "c2=20",
    )
    assert code == 0
    assert out.splitlines()[0] == "#4B0055"
    assert out.splitlines() != VIRIDIS7


def test_palette_custom_spec(capsys):
    code, out, _ = invoke(
        capsys, "palette", "--kind", "sequential", "-n", "3",
        "--override", "h1=300", "--override", "c1=40", "--override", "l1=15",
        "--override", "h2=75", "--override", "c2=95", "--override", "l2=90",
        "--override", "p2=1.1",
    )
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "#4B0055" and lines[-1] == "#FDE333"


def test_palette_reverse(capsys):
    code, out, _ = invoke(capsys, "palette", "--name", "viridis", "--reverse")
    assert code == 0
    assert out.splitlines() == VIRIDIS7[::-1]


def test_palette_custom_requires_anchor_parameters(capsys):
    code, out, err = invoke(capsys, "palette", "--kind", "sequential")
    assert code == 1
    assert out == ""
    assert "h1" in err and err.startswith("error:")


def test_palette_needs_name_or_kind(capsys):
    code, out, err = invoke(capsys, "palette", "-n", "5")
    assert code == 1
    assert "either --name or --kind" in err


def test_palette_kind_crosscheck(capsys):
    code, out, err = invoke(capsys, "palette", "--kind", "diverging", "--name", "viridis")
    assert code == 1
    assert out == ""
    assert "sequential" in err


def test_palette_unknown_name_suggests(capsys):
    code, out, err = invoke(capsys, "palette", "--kind", "sequential", "--name", "virids")
    assert code == 1
    assert out == ""
    assert "did you mean" in err and "Viridis" in err


def test_palette_unknown_name_without_neighbors_still_helps(capsys):
    code, out, err = invoke(capsys, "palette", "--kind", "sequential", "--name", "nosuch")
    assert code == 1
    assert out == ""
    assert "registry list" in err


def test_palette_bad_override_value(capsys):
    code, _, err = invoke(capsys, "palette", "--name", "viridis", "--override", "cmax=big")
    assert code == 1
    assert "not a number" in err
    code, _, err = invoke(capsys, "palette", "--name", "viridis", "--override", "up=1")
    assert code == 1
    assert "up" in err


# --------------------------------------------------------------- convert


def test_convert_hex_to_hcl(capsys):
    code, out, _ = invoke(capsys, "convert", "--from", "hex", "--to", "hcl", "#4B0055")
    assert code == 0
    h, c, l = (float(v) for v in out.split())
    assert h == pytest.approx(300, abs=1.5)
    assert c == pytest.approx(40, abs=1.5)
    assert l == pytest.approx(15, abs=1.5)
    assert all(len(v.split(".")[1]) == 4 for v in out.split())


def test_convert_hcl_to_hex(capsys):
    code, out, _ = invoke(capsys, "convert", "--from", "hcl", "--to", "hex", "300,40,15")
    assert code == 0
    assert out.strip() == "#4B0055"


def test_convert_accepts_bare_hex(capsys):
    code, out, _ = invoke(capsys, "convert", "--from", "hex", "--to", "srgb", "FF0000")
    assert code == 0
    assert out.strip() == "1.0000 0.0000 0.0000"


def test_convert_multiple_values(capsys):
    code, out, _ = invoke(
        capsys, "convert", "--from", "hex", "--to", "luv", "#FFFFFF", "#000000"
    )
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 2
    assert float(lines[0].split()[0]) == pytest.approx(100.0, abs=1e-3)
    assert lines[1] == "0.0000 0.0000 0.0000"


def test_convert_round_trips_all_spaces(capsys):
    for space in ("srgb", "linear", "xyz", "luv", "hcl", "hsv"):
        code, out, _ = invoke(capsys, "convert", "--from", "hex", "--to", space, "#35BA86")
        assert code == 0
        code, out, _ = invoke(
            capsys, "convert", "--from", space, "--to", "hex", out.strip().replace(" ", ",")
        )
        assert code == 0
        assert out.strip() == "#35BA86", space


def test_convert_bad_triple(capsys):
    code, out, err = invoke(capsys, "convert", "--from", "hcl", "--to", "hex", "1,2")
    assert code == 1
    assert out == ""
    assert "three comma-separated numbers" in err
    code, _, err = invoke(capsys, "convert", "--from", "hcl", "--to", "hex", "a,b,c")
    assert code == 1
    assert "non-numeric" in err


def test_convert_bad_space_is_usage_error(capsys):
    code, out, err = invoke(capsys, "convert", "--from", "cmyk", "--to", "hex", "0,0,0")
    assert code == 2
    assert out == ""


# ------------------------------------------------------ simulate / assess


def test_simulate_severity_zero_echoes_input(capsys):
    code, out, _ = invoke(
        capsys, "simulate", "--cvd", "deutan", "--severity", "0", "#FF0000", "00FF00"
    )
    assert code == 0
    assert out.splitlines() == ["#FF0000", "#00FF00"]


def test_simulate_full_deutan_changes_colors(capsys):
    code, out, _ = invoke(capsys, "simulate", "--cvd", "deutan", "#FF0000", "#00FF00")
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 2 and lines[0] != "#FF0000"


def test_assess_contrast(capsys):
    code, out, err = invoke(capsys, "assess", "contrast", "#FFFFFF", "#000000")
    assert code == 0
    assert out.strip() == "21.00"
    assert err == ""


def test_assess_contrast_needs_two_colors(capsys):
    code, out, err = invoke(capsys, "assess", "contrast", "#FFFFFF")
    assert code == 1
    assert "exactly two colors" in err


def test_assess_monotone_luminance_yes(capsys):
    code, out, _ = invoke(capsys, "palette", "--name", "blue-yellow")
    colors = out.split()
    code, out, _ = invoke(capsys, "assess", "monotone-luminance", *colors)
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "yes"
    lums = [float(v) for v in lines[1].split()]
    assert len(lums) == 7
    assert all(b > a for a, b in zip(lums, lums[1:]))


def test_assess_monotone_luminance_no(capsys):
    rainbow = ["#FF0000", "#FFDB00", "#49FF00", "#00FF92", "#0092FF", "#4900FF", "#0000FF"]
    code, out, _ = invoke(capsys, "assess", "monotone-luminance", *rainbow)
    assert code == 0
    assert out.splitlines()[0] == "no"


def test_assess_bad_hex(capsys):
    code, out, err = invoke(capsys, "assess", "contrast", "#FFFFFF", "#XYZ123")
    assert code == 1
    assert out == ""
    assert "error:" in err


# ------------------------------------------------------------ svg commands


def test_swatch_to_stdout(capsys):
    code, out, err = invoke(capsys, "swatch", "--name", "viridis", "--out", "-")
    assert code == 0
    assert out.startswith("<svg")
    ET.fromstring(out)
    assert err == ""


def test_swatch_to_file(capsys, tmp_path):
    target = tmp_path / "swatch.svg"
    code, out, _ = invoke(capsys, "swatch", "--name", "viridis", "--out", str(target))
    assert code == 0
    assert out.strip() == str(target)
    ET.fromstring(target.read_text())


def test_swatch_title_flag(capsys):
    code, out, _ = invoke(
        capsys, "swatch", "--name", "viridis", "--title", "My colors", "--out", "-"
    )
    assert code == 0
    assert "My colors" in out


def test_swatch_write_failure_is_data_error(capsys, tmp_path):
    target = tmp_path / "missing" / "swatch.svg"
    code, out, err = invoke(capsys, "swatch", "--name", "viridis", "--out", str(target))
    assert code == 1
    assert "error:" in err


def test_spec_command(capsys):
    code, out, _ = invoke(capsys, "spec", "--name", "viridis", "--out", "-")
    assert code == 0
    assert 'class="hue"' in out
    ET.fromstring(out)


def test_hclplot_rejects_qualitative(capsys):
    code, out, err = invoke(capsys, "hclplot", "--name", "warm", "--out", "-")
    assert code == 1
    assert out == ""
    assert "sequential" in err


def test_hclplot_writes_svg(capsys, tmp_path):
    target = tmp_path / "path.svg"
    code, out, _ = invoke(capsys, "hclplot", "--name", "viridis", "--out", str(target))
    assert code == 0
    assert target.exists()


def test_demo_heatmap(capsys):
    code, out, _ = invoke(capsys, "demo", "--name", "viridis", "--out", "-")
    assert code == 0
    assert out.count('class="cell"') == 400


def test_demo_rainbow_foil(capsys):
    code, out, _ = invoke(capsys, "demo", "--rainbow", "-n", "7", "--out", "-")
    assert code == 0
    assert out.count('class="cell"') == 400


def test_demo_comparison_grid(capsys):
    code, out, _ = invoke(capsys, "demo", "--grid", "--out", "-")
    assert code == 0
    assert out.count('class="cell"') == 2400
    assert "Deuteranope" in out


def test_demo_seed_changes_output(capsys):
    code, a, _ = invoke(capsys, "demo", "--name", "viridis", "--out", "-")
    code, b, _ = invoke(capsys, "demo", "--name", "viridis", "--seed", "7", "--out", "-")
    assert a != b


def test_svg_output_is_deterministic(capsys):
    _, a, _ = invoke(capsys, "spec", "--name", "viridis", "--out", "-")
    _, b, _ = invoke(capsys, "spec", "--name", "viridis", "--out", "-")
    assert a == b


# --------------------------------------------------------------- registry


def test_registry_list_groups_by_kind(capsys):
    code, out, err = invoke(capsys, "registry", "list")
    assert code == 0
    lines = out.splitlines()
    assert "qualitative:" in lines and "sequential:" in lines and "diverging:" in lines
    assert "  Viridis" in lines
    assert lines.index("qualitative:") < lines.index("sequential:") < lines.index("diverging:")


def test_registry_show(capsys):
    code, out, _ = invoke(capsys, "registry", "show", "viridis")
    assert code == 0
    assert "kind: sequential" in out
    assert "h1: 300" in out
    assert "cmax: none" in out


def test_registry_show_multiple(capsys):
    code, out, _ = invoke(capsys, "registry", "show", "viridis", "heat")
    assert code == 0
    assert out.count("kind: sequential") == 2
    assert "\n\n" in out


def test_registry_show_needs_name(capsys):
    code, _, err = invoke(capsys, "registry", "show")
    assert code == 1
    assert "needs a palette name" in err


def test_registry_env_var(capsys, tmp_path, monkeypatch):
    alt = tmp_path / "alt.txt"
    alt.write_text("qualitative | Solo | 10 - 45 - - 65 - 1 -\n")
    monkeypatch.setenv(registry.ENV_VAR, str(alt))
    code, out, _ = invoke(capsys, "registry", "list")
    assert code == 0
    assert "Solo" in out and "Viridis" not in out


# ------------------------------------------------------------- exit codes


def test_no_arguments_is_usage_error(capsys):
    code, out, err = invoke(capsys)
    assert code == 2
    assert out == ""


def test_unknown_subcommand_is_usage_error(capsys):
    code, out, err = invoke(capsys, "polish")
    assert code == 2
    assert out == ""


def test_unknown_flag_is_usage_error(capsys):
    code, out, err = invoke(capsys, "palette", "--name", "viridis", "--shiny")
    assert code == 2
    assert out == ""


def test_help_exits_zero(capsys):
    code, out, err = invoke(capsys, "--help")
    assert code == 0


def test_runs_as_a_module():
    import subprocess
    import sys

    proc = subprocess.run(
        [sys.executable, "-m", "colortool", "palette", "--name", "viridis", "-n", "3"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert len(proc.stdout.split()) == 3
