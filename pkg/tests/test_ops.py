import random

import pytest

import oracle
from colortool import (
    CVD_KINDS,
    HexParseError,
    InvalidInputError,
    adjust_luminance,
    contrast_ratio,
    cvd_matrix,
    desaturate,
    hex_to_hcl,
    relative_luminance,
    simulate_cvd,
)
from colortool.cvd_data import TABLE_SHA256, matrices_for, table_digest

RAINBOW7 = ["#FF0000", "#FFDB00", "#49FF00", "#00FF92", "#0092FF", "#4900FF", "#FF00DB"]


def random_hex(rng: random.Random) -> str:
    return "#{:06X}".format(rng.randrange(0x1000000))


# ------------------------------------------------------------ matrices


def test_embedded_table_digest_is_pinned():
    assert table_digest() == TABLE_SHA256


def test_matrix_row_sums_stay_near_one():
    worst = 0.0
    for kind in CVD_KINDS:
        for matrix in matrices_for(kind):
            for row in matrix:
                worst = max(worst, abs(sum(row) - 1.0))
    assert worst <= 1e-3


def test_severity_zero_is_identity_matrix():
    for kind in CVD_KINDS:
        assert cvd_matrix(kind, 0.0) == (
            (1.0, 0.0, 0.0), (0.0, 1.0, 0.0), (0.0, 0.0, 1.0)
        )


def test_grid_severity_returns_stored_matrix():
    table = matrices_for("deutan")
    assert cvd_matrix("deutan", 0.3) == table[3]  # 0.3 * 10 != 3.0 in floats
    assert cvd_matrix("deutan", 1.0) == table[10]
    assert cvd_matrix("tritan", 0.7) == matrices_for("tritan")[7]


def test_between_grid_severity_interpolates():
    lo = matrices_for("deutan")[5]
    hi = matrices_for("deutan")[6]
    got = cvd_matrix("deutan", 0.55)
    for r in range(3):
        for c in range(3):
            expected = lo[r][c] + 0.5 * (hi[r][c] - lo[r][c])
            assert got[r][c] == pytest.approx(expected, abs=1e-12)


def test_matrix_validation():
    with pytest.raises(InvalidInputError):
        cvd_matrix("deuteranomaly", 0.5)
    with pytest.raises(InvalidInputError):
        cvd_matrix("deutan", 1.2)
    with pytest.raises(InvalidInputError):
        cvd_matrix("deutan", -0.1)


# ----------------------------------------------------------- simulation


def test_simulate_severity_zero_is_identity():
    assert simulate_cvd(RAINBOW7, "protan", 0.0) == RAINBOW7


def test_simulate_preserves_order_and_count():
    out = simulate_cvd(RAINBOW7, "deutan", 1.0)
    assert len(out) == 7
    assert all(c.startswith("#") and len(c) == 7 for c in out)


def test_simulate_white_nearly_fixed():
    out = simulate_cvd(["#FFFFFF"], "deutan", 1.0)[0]
    r, g, b = (int(out[i : i + 2], 16) for i in (1, 3, 5))
    assert all(abs(v - 255) <= 1 for v in (r, g, b))


def test_simulate_collapses_red_green_for_deutan():
    red_hue = hex_to_hcl("#E16A86").h
    green_hue = hex_to_hcl("#00AA5A").h
    sim = simulate_cvd(["#E16A86", "#00AA5A"], "deutan", 1.0)
    sim_red = hex_to_hcl(sim[0]).h
    sim_green = hex_to_hcl(sim[1]).h

    def gap(a: float, b: float) -> float:
        d = abs(a - b) % 360.0
        return min(d, 360.0 - d)

    assert gap(red_hue, green_hue) >= 100.0
    assert gap(sim_red, sim_green) < 25.0


def test_simulate_reports_offending_color():
    with pytest.raises(HexParseError) as excinfo:
        simulate_cvd(["#FF0000", "oops"], "deutan", 1.0)
    assert "color 1:" in str(excinfo.value)


# --------------------------------------------------------- desaturation


def test_desaturate_amount_zero_round_trips():
    grays = ["#000000", "#777777", "#FFFFFF"]
    assert desaturate(grays, 0.0) == grays


def test_desaturate_full_amount_kills_chroma():
    out = desaturate(RAINBOW7, 1.0)
    for color in out:
        assert hex_to_hcl(color).c <= 1.0


def test_desaturate_is_idempotent_at_full_amount():
    once = desaturate(RAINBOW7, 1.0)
    assert desaturate(once, 1.0) == once


def test_desaturate_scales_chroma_linearly():
    chroma = hex_to_hcl("#E16A86").c
    half = hex_to_hcl(desaturate(["#E16A86"], 0.5)[0]).c
    assert half == pytest.approx(chroma / 2, abs=1.0)


def test_desaturate_validates_amount():
    with pytest.raises(InvalidInputError):
        desaturate(RAINBOW7, 1.5)
    with pytest.raises(InvalidInputError):
        desaturate(RAINBOW7, -0.2)


def test_desaturated_luminance_spread_is_tight():
    rng = random.Random(8)
    for _ in range(20):
        colors = [random_hex(rng) for _ in range(6)]
        gray = desaturate(colors, 1.0)
        for before, after in zip(colors, gray):
            delta = abs(hex_to_hcl(before).l - hex_to_hcl(after).l)
            assert delta <= 1.0


# ----------------------------------------------------------- luminance


def test_adjust_luminance_zero_is_identity():
    assert adjust_luminance(RAINBOW7, 0.0) == RAINBOW7


def test_adjust_luminance_limits():
    # full lift turns achromatic colors white; full drop turns anything black
    assert adjust_luminance(["#777777", "#000000"], 1.0) == ["#FFFFFF", "#FFFFFF"]
    assert adjust_luminance(RAINBOW7, -1.0) == ["#000000"] * 7


def test_adjust_luminance_moves_l_proportionally():
    before = hex_to_hcl("#777777").l
    after = hex_to_hcl(adjust_luminance(["#777777"], 0.5)[0]).l
    assert after == pytest.approx(before + 0.5 * (100 - before), abs=0.5)
    dropped = hex_to_hcl(adjust_luminance(["#777777"], -0.5)[0]).l
    assert dropped == pytest.approx(before * 0.5, abs=0.5)


def test_adjust_luminance_keeps_hue_for_gentle_shifts():
    for color in ("#E16A86", "#00AA5A", "#4900FF"):
        hue = hex_to_hcl(color).h
        shifted = hex_to_hcl(adjust_luminance([color], 0.2)[0]).h
        delta = abs(hue - shifted) % 360.0
        assert min(delta, 360.0 - delta) <= 1.0


def test_adjust_luminance_validates_amount():
    with pytest.raises(InvalidInputError):
        adjust_luminance(RAINBOW7, 1.01)


# ------------------------------------------------------- wcag contrast


def test_relative_luminance_reference_points():
    assert relative_luminance("#FFFFFF") == pytest.approx(1.0, abs=1e-9)
    assert relative_luminance("#000000") == pytest.approx(0.0, abs=1e-9)
    assert relative_luminance("#FF0000") == pytest.approx(0.2126, abs=1e-4)
    assert relative_luminance("#00FF00") == pytest.approx(0.7152, abs=1e-4)


def test_relative_luminance_matches_oracle():
    rng = random.Random(31)
    for _ in range(100):
        color = random_hex(rng)
        assert relative_luminance(color) == pytest.approx(
            oracle.wcag_luminance(color), abs=1e-12
        )


def test_contrast_black_on_white_is_21():
    assert contrast_ratio("#000000", "#FFFFFF") == pytest.approx(21.0, abs=1e-9)


def test_contrast_is_symmetric_and_reflexive():
    assert contrast_ratio("#123456", "#FEDCBA") == contrast_ratio("#FEDCBA", "#123456")
    assert contrast_ratio("#777777", "#777777") == 1.0


def test_contrast_gray_on_white():
    assert contrast_ratio("#777777", "#FFFFFF") == pytest.approx(4.48, abs=0.02)


def test_contrast_range_property():
    rng = random.Random(64)
    for _ in range(200):
        value = contrast_ratio(random_hex(rng), random_hex(rng))
        assert 1.0 <= value <= 21.0


def test_contrast_matches_oracle():
    rng = random.Random(65)
    for _ in range(100):
        a, b = random_hex(rng), random_hex(rng)
        assert contrast_ratio(a, b) == pytest.approx(oracle.wcag_contrast(a, b), abs=1e-12)
