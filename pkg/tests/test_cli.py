import json

import pytest

from flexcurves.cli import run


def _json(capsys, argv, code=0):
    assert run(argv + ["--json"]) == code
    return json.loads(capsys.readouterr().out)


def test_check_pass(capsys):
    data = _json(capsys, ["check", "--ambient", "cp2", "--degree", "7", "--scheme", "<J + 2 + 1<1>>"])
    assert data["overall"] == "pass" and data["scheme"] == "<J + 1<1> + 2>"


def test_check_fail_exit_one(capsys):
    data = _json(capsys, ["check", "--degree", "3", "--scheme", "<J + 5>"], code=1)
    assert data["overall"] == "fail"


def test_check_text_output(capsys):
    assert run(["check", "--degree", "7", "--scheme", "<J + 2 + 1<1>>"]) == 0
    out = capsys.readouterr().out
    assert "overall: pass" in out and "combined l0+l- bound: 4" in out


@pytest.mark.parametrize(
    "argv",
    [
        ["check", "--degree", "7", "--scheme", "<J + 2"],
        ["check", "--degree", "4", "--scheme", "<J>"],
        ["check", "--degree", "5", "--nonorientable", "--scheme", "<J>"],
        ["check", "--degree", "5", "--chi", "0", "--scheme", "<J>"],
        ["check", "--scheme", "<J>"],
        ["bogus"],
        ["compare"],
        ["genus"],
        ["brown", "--form", "/nonexistent.json"],
        ["pipeline", "--degree", "4"],
        ["enumerate", "--ovals", "2", "--filter", "pass"],
    ],
)
def test_usage_errors_exit_two(argv, capsys):
    assert run(argv) == 2


def test_compare_rows(capsys):
    data = _json(capsys, ["compare", "--degrees", "7:9"])
    rows = [(r["m"], r["h"], r["vz"], r["s"], r["zvonilov"]) for r in data["rows"]]
    assert rows == [(7, 7, "4", "9", "6"), (9, 9, "9", "16", "12")]


def test_compare_mp(capsys):
    data = _json(capsys, ["compare", "--mp", "0"])
    assert data["mp"]["m"] == "552123" and data["mp"]["h"] == "169"
    assert data["mp"]["divisible_by_5"] and data["mp"]["divisible_by_7"]
    assert run(["compare", "--mp", "0"]) == 0
    assert "552123" in capsys.readouterr().out


def test_genus(capsys):
    data = _json(capsys, ["genus", "--range", "7:9", "--construct", "-5"])
    assert [(r["e"], r["value"], r["status"]) for r in data["table"]] == [(7, -1, "exact"), (8, 0, "exact"), (9, -2, "exact")]
    assert data["construction"]["achieved"] == {"e": -5, "chi": -1}


def test_brown_presets_and_gm(capsys):
    assert _json(capsys, ["brown", "--preset", "klein"])["betas"] == [0, 2, 6]
    data = _json(capsys, ["brown", "--preset", "rp2", "--gm", "1", "7"], code=1)
    assert data["guillou_marin"] == {"sigma": 1, "e": 7, "required": 5, "verdict": "contradiction"}
    assert run(["brown", "--preset", "klein", "--gm", "0", "0"]) == 0


def test_brown_form_file(tmp_path, capsys):
    f = tmp_path / "form.json"
    f.write_text(json.dumps({"rank": 2, "bilinear": [[1, 1], [1, 0]], "phi": [3, 2], "phi_choices": [[1, 3], [0, 2]]}))
    data = _json(capsys, ["brown", "--form", str(f)])
    assert data["beta"] == 6 and data["gauss_sum"] == "-2i"
    assert _json(capsys, ["brown", "--form", str(f), "--enumerate"])["betas"] == [0, 2, 6]
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"rank": 1, "bilinear": [[1]], "phi": [2]}))
    assert run(["brown", "--form", str(bad)]) == 2


def test_pipeline(capsys):
    data = _json(capsys, ["pipeline", "--ambient", "cp2", "--degree", "3"])
    assert (data["chi_Y"], data["sigma_Y"], data["b2_plus"], data["b2_minus"]) == (13, -9, 1, 10)
    data = _json(capsys, ["pipeline", "--ambient", "hyperboloid", "--bidegree", "1,1"])
    assert data["b2_plus"] == 1
    data = _json(capsys, ["pipeline", "--degree", "5", "--nonorientable", "--chi", "-10"])
    assert data["b2_plus"] == 4


def test_bounds(capsys):
    data = _json(capsys, ["bounds", "--degree", "9", "--all"])
    assert data["bounds"]["vz"] == "9" and data["bounds"]["novz-extremal"] == "8"
    assert _json(capsys, ["bounds", "--degree", "4"])["bounds"] == {"harnack": "4"}


def test_enumerate(capsys):
    data = _json(capsys, ["enumerate", "--ovals", "3"])
    assert data["count"] == 4
    data = _json(capsys, ["enumerate", "--ovals", "4", "--degree", "5", "--filter", "pass"])
    assert "<J + 4>" in data["schemes"] and "<J + 1<1<1<1>>>>" not in data["schemes"]


def test_negative_range(capsys):
    data = _json(capsys, ["genus", "--range", "-3:-1"])
    assert [r["value"] for r in data["table"]] == [0, 1, 1]
