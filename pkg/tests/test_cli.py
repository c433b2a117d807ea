import json
import subprocess
import sys

import pytest
from hypothesis import given

from gkptri.cli import main
from gkptri.core import GkpParams, triangle
from gkptri.formats import dump, load, normalize_rows

from strategies import params


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_gen_eulerian_csv(capsys):
    code, out, _ = run(capsys, "gen", "--params", "0,1,1,1,-1,0", "--n", "4", "--format", "csv")
    lines = out.splitlines()
    assert code == 0 and len(lines) == 5
    assert lines[-1].startswith("1,11,11,1")


def test_gen_narayana_bfile(capsys):
    code, out, _ = run(
        capsys, "gen", "--family", "narayana-e", "--args", "2,3,3", "--n", "3", "--normalize", "rising:3", "--format", "bfile"
    )
    vals = [line.split()[1] for line in out.splitlines()]
    idx = [int(line.split()[0]) for line in out.splitlines()]
    assert code == 0 and idx == list(range(10))
    assert vals[-4:] == ["1", "6", "6", "1"]


def test_gen_pascal_default_format(capsys):
    code, out, _ = run(capsys, "gen", "--params", "0,0,1,0,0,1", "--n", "2")
    assert out == "1\n1,1\n1,2,1\n"


def test_gen_json_and_rationals(capsys):
    code, out, _ = run(capsys, "gen", "--params", "1/2,1,-3,2,-1,1", "--n", "2", "--format", "json")
    doc = json.loads(out)
    assert doc["params"] == ["1/2", "1", "-3", "2", "-1", "1"] and doc["N"] == 2
    assert doc["rows"][2] == ["15/2", "-21/2", "2"]


def test_gen_abs_strips_signs(capsys):
    _, out, _ = run(capsys, "gen", "--family", "stirling", "--args", "1,0,0", "--n", "3", "--abs")
    assert out.splitlines()[-1] == "0,2,3,1"


def test_transform_rt_example(capsys):
    code, out, err = run(capsys, "transform", "--params", "0,1,0,1,-1,1", "--elem", "rt", "--n", "4")
    assert code == 0
    assert "params 0,1,1,1,-1,0" in err
    src = triangle(GkpParams.of(0, 1, 0, 1, -1, 1), 4)
    assert out == "".join(",".join(str(x) for x in reversed(r)) + "\n" for r in src.rows)


def test_transform_reports_normalization(capsys):
    code, _, err = run(capsys, "transform", "--params", "0,2,0,1,1,1", "--elem", "ubt")
    assert code == 2
    assert "beta' = -beta" in err and "--scale 1,-2" in err
    code, _, _ = run(capsys, "transform", "--params", "0,2,0,1,1,1", "--elem", "ubt", "--scale", "1,-2")
    assert code == 0


@pytest.mark.parametrize("fmt", ["csv", "json", "bfile"])
def test_round_trips(tmp_path, capsys, fmt):
    a, b, c, d = (tmp_path / f"{x}.{fmt}" for x in "abcd")
    assert main(["gen", "--params", "1/2,1,-3,2,-1,1", "--n", "6", "--format", fmt, "--out", str(a)]) == 0
    assert main(["transform", "--in", str(a), "--elem", "id", "--format", fmt, "--out", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()
    main(["transform", "--in", str(a), "--elem", "ubt", "--format", fmt, "--out", str(c)])
    main(["transform", "--in", str(c), "--elem", "ubt", "--format", fmt, "--out", str(d)])
    assert a.read_bytes() == d.read_bytes()
    capsys.readouterr()


@given(params(4, 7))
def test_format_functions_round_trip(p):
    tri = triangle(GkpParams.of(*p), 5)
    for fmt in ("csv", "json", "bfile"):
        back = load(dump(tri, fmt), fmt)
        assert back.rows == tri.rows
    assert load(dump(tri, "json"), "json").params == tri.params


def test_load_errors_name_position():
    with pytest.raises(ValueError, match="line 2 column 2"):
        load("1\n1,x\n", "csv")
    with pytest.raises(ValueError, match="line 2"):
        load("0 1\n5 1\n", "bfile")
    with pytest.raises(ValueError):
        load("0 1\n1 1\n", "bfile")


def test_normalize_rows():
    tri = triangle(GkpParams.of(0, 1, 1, 1, -1, 0), 3)
    fac = normalize_rows(tri, "factorial")
    assert [str(x) for x in fac.rows[3]] == ["1/6", "2/3", "1/6", "0"]
    assert normalize_rows(tri, "rising:2").rows[3] == tuple(x / 24 for x in tri.rows[3])
    with pytest.raises(ValueError):
        normalize_rows(tri, "bogus")


def test_verify_exit_codes(capsys):
    code, out, _ = run(capsys, "verify", "worpitzky", "--n", "6", "--samples", "10", "--seed", "1")
    assert code == 0 and "checks passed" in out and "FAIL" not in out
    code, out, _ = run(capsys, "verify", "s3_group", "--samples", "2")
    assert code == 0
    code, out, _ = run(capsys, "verify", "conjecture", "--p", "2")
    assert code == 0 and "no counterexample found" in out


def test_verify_is_deterministic(capsys):
    _, first, _ = run(capsys, "verify", "rank1", "--samples", "3", "--seed", "5")
    _, second, _ = run(capsys, "verify", "rank1", "--samples", "3", "--seed", "5")
    assert first == second


def test_egf_commands(capsys):
    code, out, _ = run(capsys, "egf", "--params", "0,1,1,1,-1,0", "--order", "4")
    assert code == 0 and out.splitlines()[2] == "z^2: 1/2 + 1/2*t"
    code, out, err = run(capsys, "egf", "--case", "B_E", "--args", "2,1,1", "--order", "4")
    assert code == 0 and "matches recurrence" in err
    code, out, err = run(capsys, "egf", "--case", "A1", "--params", "1,2,0,0,1,1", "--order", "4")
    assert code == 0


def test_closed_form_commands(capsys):
    code, out, _ = run(capsys, "closed-form", "--list")
    assert code == 0 and "S_12" in out
    code, out, _ = run(capsys, "closed-form", "S_12", "--set", "r=1", "--n", "3")
    assert out.splitlines() == ["1", "1,1", "0,3,1", "0,3,6,1"]
    code, out, _ = run(capsys, "closed-form", "S_12", "--set", "r=1", "--check")
    assert code == 0 and out.startswith("PASS")


@pytest.mark.parametrize(
    "argv",
    [
        ["gen", "--params", "1,2,x,4,5,6"],
        ["gen", "--params", "1,2,3"],
        ["gen"],
        ["gen", "--family", "nope"],
        ["gen", "--params", "0,1,1,1,-1,0", "--n", "-1"],
        ["transform", "--params", "0,1,0,1,-1,1", "--elem", "xx"],
        ["frobnicate"],
        ["closed-form", "nope"],
    ],
)
def test_usage_errors_exit_2(capsys, argv):
    assert main(argv) == 2
    capsys.readouterr()


def test_module_entry_point():
    res = subprocess.run(
        [sys.executable, "-m", "gkptri", "gen", "--params", "0,0,1,0,0,1", "--n", "1"], capture_output=True, text=True
    )
    assert res.returncode == 0 and res.stdout == "1\n1,1\n"
