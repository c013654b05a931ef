import io
import json
import subprocess
import sys

import jsonschema
import pytest

from lojasiewicz.cli import load_schema, run


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def test_exponent_json():
    code, out, _ = call("exponent", "x^2-y^3", "x", "--json")
    assert code == 0
    js = json.loads(out)
    assert (js["L"], js["L_plus"], js["L_minus"]) == ("3/2", "3/2", "1")
    jsonschema.validate(js, load_schema("exponent"))


def test_exponent_text_side():
    code, out, _ = call("exponent", "x^2-y^3", "x", "--side", "+")
    assert code == 0
    assert "L+ = 3/2" in out and "L- =" not in out
    assert out.strip().endswith("effective bound = 13")


def test_bound():
    assert call("bound", "2")[:2] == (0, "5\n")
    assert call("bound", "3", "--json")[1] == '{\n  "bound": "13",\n  "degree": 3\n}\n'


def test_exit_codes():
    assert call("exponent", "x^2*(x-y)", "x")[0] == 2
    assert call("exponent", "x+1", "x")[0] == 2
    assert call("exponent", "x^(1/2)", "x")[0] == 1
    assert call("exponent", "2x", "x")[0] == 1
    assert call("slide", "x - y - x*y", "--steps", "3")[0] == 0
    code, _, err = call("exponent", "x^3-x*y^4-y^6", "x-y^2")
    assert code == 4 and "--mode approx" in err
    # four branches peel off one level at a time
    nested = ("(x - y)*(x - y - y^2)*(x - y - y^2 - y^3)", "x - y - y^2 - y^3 - y^4")
    assert call("roots", *nested)[0] == 0
    assert call("roots", *nested, "--budget", "1")[0] == 3


def test_roots_json_schema():
    code, out, _ = call("roots", "x*(x-y^2)", "x*(x-y^2-y^3)", "--json")
    assert code == 0
    js = json.loads(out)
    jsonschema.validate(js, load_schema("roots"))
    assert js["plus"]["rho"][1][2] == "3"


def test_polygon_json_schema():
    code, out, _ = call("polygon", "(x-y)^2-y^3", "--json")
    js = json.loads(out)
    jsonschema.validate(js, load_schema("polygon"))
    assert js["edges"][0]["tan_theta"] == "1"
    assert js["axis_dot"] == [0, "2"]
    code, out, _ = call("polygon", "x^2-y^3", "--arc", "y^(3/2)", "--json")
    assert json.loads(out)["axis_dot"] is None


def test_slide_text():
    code, out, _ = call("slide", "(x-y)^2-y^3")
    assert code == 0
    assert out.splitlines()[-1] == "root: x = 1*y^(1) + 1*y^(3/2)"


def test_oracle_json(tmp_path):
    table = tmp_path / "rows.csv"
    code, out, _ = call("oracle", "x", "x-y^2", "--json", "--probes", "2", "--csv", str(table))
    assert code == 0
    js = json.loads(out)
    jsonschema.validate(js, load_schema("oracle"))
    assert abs(js["estimate_L"] - 2) < 0.1
    assert table.read_text().splitlines()[0] == "side,arc,y,D,E,logD,logE"


def test_oracle_arc():
    code, out, _ = call("oracle", "x", "x-y^2", "--arc", "7/10*y^2", "--json")
    js = json.loads(out)
    assert js["exact_ell"] == "2" and abs(js["slope"] - 2) < 0.05


def test_approx_mode_exponent():
    code, out, _ = call("exponent", "x^3-x*y^4-y^6", "x-y^2", "--mode", "approx", "--json")
    assert code == 0
    js = json.loads(out)
    jsonschema.validate(js, load_schema("exponent"))
    assert js["L"] == "2"


def test_deterministic_output():
    a = call("oracle", "x^2-y^3", "x", "--probes", "2", "--seed", "3")
    b = call("oracle", "x^2-y^3", "x", "--probes", "2", "--seed", "3")
    assert a == b


def test_seed_env_override(monkeypatch):
    monkeypatch.setenv("LOJASIEWICZ_SEED", "17")
    code, out, _ = call("oracle", "x", "x-y^2", "--probes", "0", "--json")
    assert json.loads(out)["seed"] == 17


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "lojasiewicz", "bound", "1"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout == "1\n"


def test_argparse_rejects_unknown_command():
    with pytest.raises(SystemExit):
        run(["frobnicate"])
