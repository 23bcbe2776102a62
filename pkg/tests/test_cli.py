import io
import json
import subprocess
import sys

import pytest

from paraweyl.cli import run

J1 = """vars n=1 p=1
ideal J: x1*d1 - s1; x1
prime P: s1 + 1
prime W: s1
point a: -1
"""

J3 = """vars n=2 p=2
ideal J: x1*d1 - s1; x2*d2 - s2; x1*x2
prime P: s1 + 1
"""

PRIMARY = """vars n=0 p=1
ideal q1: s1^2
prime q1: s1
ideal q2: s1 - 1
"""


@pytest.fixture
def files(tmp_path):
    out = {}
    for name, text in {"J1": J1, "J3": J3, "primary": PRIMARY}.items():
        path = tmp_path / f"{name}.ideal"
        path.write_text(text)
        out[name] = str(path)
    (tmp_path / "wrong.ideal").write_text("vars n=1 p=1\nprime W: s1\n")
    out["wrong"] = str(tmp_path / "wrong.ideal")
    return out


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def test_eliminate(files):
    assert call("eliminate", files["J1"]) == (0, "s1 + 1\n", "")
    code, out, _ = call("eliminate", files["J3"])
    assert out == "s2*s1 + s2 + s1 + 1\n"


def test_gb_and_reduce(files):
    assert call("gb", files["J1"])[1] == "x1\ns1 + 1\n"
    code, out, _ = call("reduce-gb", files["J3"], "--prime", "P")
    assert code == 0
    assert out.splitlines() == ["x1*d1 + 1", "x2*d2 - s2", "x2*x1", "x1*s2 + x1", "s1 + 1"]


def test_fiber_check(files):
    assert call("fiber-check", files["J1"], "--point", "-1")[1] == "NONZERO\n"
    assert call("fiber-check", files["J1"], "--point", "0")[1] == "ZERO\n"
    assert call("fiber-check", files["J1"], "--point", "a")[1] == "NONZERO\n"


def test_h_poly_and_specialize(files):
    assert call("h-poly", files["J3"], "--prime", "P")[1] == "s2 + 1\n"
    code, out, _ = call("specialize", files["J3"], "--prime", "P", "--point", "-1,5")
    assert code == 0 and out.splitlines() == ["x1*d1 + 1", "x2*d2 - 5", "x2*x1", "x1"]
    code, out, _ = call("specialize", files["J3"], "--prime", "P", "--point", "-1,-1")
    assert code == 1 and "witness: s2 + 1" in out


def test_verify_lemma24(files):
    assert call("verify-lemma24", files["J1"], "--prime", "P") == (0, "TRUE\n", "")
    code, out, _ = call("verify-lemma24", files["J1"], "--prime", "W")
    assert code == 1
    assert out == "FALSE\nwitness: 1 ∈ (J+Rp)∩A\n"
    code, out, _ = call("verify-lemma24", files["J1"], "--prime", files["wrong"])
    assert code == 1


def test_dense_open(files):
    code, out, _ = call("dense-open", files["J3"], "--prime", "P", "--samples", "3")
    assert code == 0
    assert out.splitlines() == ["h: s2 + 1", "-1,0: NONZERO", "-1,1: NONZERO", "-1,2: NONZERO"]
    code, out, _ = call("dense-open", files["J1"], "--prime", "W")
    assert code == 1


def test_primary_commands(files):
    assert call("lemma21", files["primary"], "--ideal", "q1", "--prime", "q1")[1] == "s1\n"
    assert call("thm22-h", files["primary"], "--index", "1")[1] == "s1^2 - s1\n"
    assert call("thm22-h", files["primary"], "--components", "q2")[1] == "1\n"


def test_oracle_member(files):
    code, out, _ = call("oracle-member", files["J1"], "--target", "s1+1", "--max-degree", "2")
    assert out.splitlines() == ["IN", "cofactor 1: -1", "cofactor 2: d1"]
    code, out, _ = call("oracle-member", files["J1"], "--target", "s1", "--max-degree", "3")
    assert out == "NOT-WITHIN-BOUND\n"


def test_json_output(files):
    code, out, _ = call("dense-open", files["J3"], "--prime", "P", "--samples", "2", "--json")
    doc = json.loads(out)
    assert doc["format"] == 1 and doc["ok"] and doc["command"] == "dense-open"
    assert doc["result"]["samples"][0] == {"fiber": "NONZERO", "point": ["-1/1", "0/1"]}
    assert list(doc) == sorted(doc)
    code, out, _ = call("verify-lemma24", files["J1"], "--prime", "W", "--json")
    doc = json.loads(out)
    assert code == 1 and not doc["ok"] and doc["result"]["witness"] == "1 ∈ (J+Rp)∩A"


def test_determinism(files):
    for argv in (["gb", files["J3"]], ["dense-open", files["J3"], "--prime", "P", "--json"]):
        assert call(*argv) == call(*argv)


def test_usage_and_parse_errors(files, tmp_path):
    bad = tmp_path / "bad.ideal"
    bad.write_text("vars n=1 p=1\nideal J: x1 +\n")
    code, _, err = call("gb", str(bad))
    assert code == 2 and "line 2" in err
    assert call("nonsense", files["J1"])[0] == 2
    assert call("gb", str(tmp_path / "missing.ideal"))[0] == 2
    assert call("fiber-check", files["J1"], "--point", "1,2")[0] == 2


def test_module_entry_point(files):
    proc = subprocess.run(
        [sys.executable, "-m", "paraweyl", "eliminate", files["J1"]], capture_output=True, text=True
    )
    assert proc.returncode == 0 and proc.stdout == "s1 + 1\n"
