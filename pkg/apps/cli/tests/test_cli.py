"""The lzlef command group, driven through click's test runner."""

from __future__ import annotations

import pytest

from lzlef_cli.render import render_ascii

THIRTEEN_TILINGS_IDEAL = "x^7,y^7,z^6,xy^4z^2,x^3yz^2,x^4yz"
NEVER_WLP = "x^5,y^5,z^5,xy^2z,xyz^2"


# ---------------------------------------------------------------------------
# region
# ---------------------------------------------------------------------------


def test_region_ascii(invoke, make_region):
    result = invoke("region", "xy,y^2,z^3", "4", "--render", "ascii")
    assert result.exit_code == 0
    assert result.output == render_ascii(make_region("xy,y^2,z^3", 4))


def test_region_to_file(invoke, tmp_path):
    out = tmp_path / "region.txt"
    result = invoke("region", "xy,y^2,z^3", "4", "--out", str(out))
    assert result.exit_code == 0
    assert out.read_text().count("##") == 8


def test_region_svg_with_tiling(invoke, tmp_path, svg_backend):
    out = tmp_path / "region.svg"
    result = invoke(
        "region",
        THIRTEEN_TILINGS_IDEAL,
        "8",
        "--render",
        "svg",
        "--tiling",
        "--out",
        str(out),
    )
    assert result.exit_code == 0
    assert b"<svg" in out.read_bytes()


def test_region_parse_error_exits_two(invoke):
    result = invoke("region", "x,q", "3")
    assert result.exit_code == 2
    assert "position 2" in result.output


def test_region_unwritable_path_exits_three(invoke, tmp_path):
    out = tmp_path / "missing" / "region.txt"
    result = invoke("region", "xy,y^2,z^3", "4", "--out", str(out))
    assert result.exit_code == 3


# ---------------------------------------------------------------------------
# wlp
# ---------------------------------------------------------------------------


def test_wlp_fails_in_char_five(invoke_json):
    payload = invoke_json("wlp", "--aci", "5,5,3,1,1,2", "--char", "5")
    assert payload["wlp"] is False
    assert payload["char"] == 5


def test_wlp_never_holds_for_general_ideal(invoke_json):
    payload = invoke_json("wlp", "--ideal", NEVER_WLP)
    assert payload["wlp"] is False
    assert payload["rule"] == "rank-scan"
    assert 6 in payload["peak_degrees"]


def test_wlp_holds_for_axes_central_example(invoke_json):
    payload = invoke_json("wlp", "--aci", "6,7,8,3,3,3")
    assert payload["wlp"] is True
    assert payload["rule"] == "(IV)"


def test_wlp_pretty_table(invoke):
    result = invoke("wlp", "--aci", "7,7,7,3,3,3", "--pretty")
    assert result.exit_code == 0
    assert "wlp" in result.output
    assert "(IV')" in result.output


@pytest.mark.parametrize(
    "args",
    [
        ("wlp", "--aci", "6,7,8,3,3,3", "--char", "4"),
        ("wlp", "--aci", "6,7,8,3,3,3", "--ideal", "x^2,y^2,z^2"),
        ("wlp",),
        ("wlp", "--aci", "6,7,8,3,3"),
        ("wlp", "--aci", "3,3,3,3,1,1"),
    ],
)
def test_wlp_bad_input_exits_two(invoke, args):
    assert invoke(*args).exit_code == 2


def test_wlp_is_deterministic(invoke):
    first = invoke("wlp", "--aci", "6,7,8,3,3,3")
    second = invoke("wlp", "--aci", "6,7,8,3,3,3")
    assert first.output == second.output


# ---------------------------------------------------------------------------
# bundle
# ---------------------------------------------------------------------------


def test_bundle_semistable_aci(invoke_json):
    payload = invoke_json("bundle", "--aci", "7,7,7,3,3,3")
    assert payload["semistable"] is True
    assert payload["splitting_type"] == [-11, -10, -9]
    assert payload["case"] == "semistable-3k-no-wlp"


def test_bundle_strictly_semistable_ideal(invoke_json):
    payload = invoke_json("bundle", "--ideal", "x^2,y^2,z^2,xy,xz", "--degree", "3")
    assert payload["semistable"] is True
    assert payload["stable"] is False
    assert payload["witness"] == ["x^2", "xy", "xz"]
    assert payload["splitting_type"] is None


def test_bundle_nonsemistable_aci(invoke_json):
    payload = invoke_json("bundle", "--aci", "4,5,5,3,1,1")
    assert payload["semistable"] is False
    assert payload["splitting_type"] == [-7, -6, -6]
    assert payload["case"] == "nonsemistable-iv"


def test_bundle_in_positive_characteristic(invoke_json):
    payload = invoke_json("bundle", "--aci", "6,7,8,3,3,3", "--char", "7")
    assert payload["splitting_type"] != [-10, -10, -10]
    assert sum(payload["splitting_type"]) == -30
    assert payload["case"] is None


def test_bundle_degree_needs_an_ideal(invoke):
    result = invoke("bundle", "--aci", "7,7,7,3,3,3", "--degree", "8")
    assert result.exit_code == 2
    assert "--degree only applies to --ideal" in result.output


def test_bundle_refuses_non_artinian_ideal(invoke):
    result = invoke("bundle", "--ideal", "x^2,y^2", "--degree", "3")
    assert result.exit_code == 2
    assert "Artinian" in result.output


# ---------------------------------------------------------------------------
# tilings
# ---------------------------------------------------------------------------


def test_tilings_count(invoke_json):
    payload = invoke_json("tilings", THIRTEEN_TILINGS_IDEAL, "8", "--count")
    assert payload == {"count": 13, "permanent": 13}


def test_tilings_of_unbalanced_region(invoke_json):
    payload = invoke_json("tilings", "x^9,y^9,z^9", "3")
    assert payload == {"count": 0, "permanent": None}


def test_tilings_list_respects_limit(invoke_json):
    payload = invoke_json(
        "tilings", THIRTEEN_TILINGS_IDEAL, "8", "--list", "--limit", "1"
    )
    assert len(payload["tilings"]) == 1
    lozenges = payload["tilings"][0]
    assert all(len(pair) == 2 for pair in lozenges)


def test_tilings_list_all(invoke_json):
    payload = invoke_json("tilings", THIRTEEN_TILINGS_IDEAL, "8", "--list")
    assert len(payload["tilings"]) == 13
