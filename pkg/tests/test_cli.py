import io
import json
import subprocess
import sys

import pytest

from q3nef.cli import run


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def test_chern():
    code, out, _ = call("chern", "O^4 - 2*O(-1)")
    assert code == 0
    assert out.splitlines()[:4] == ["rank 2", "c1 2h", "c2h 6", "c3 8"]


def test_chern_json_and_twist():
    code, out, _ = call("chern", "S", "--twist", "1", "--format", "json")
    data = json.loads(out)
    assert (data["rank"], data["c1"], data["c2h"], data["c3"]) == (2, "3h", 5, 0)


def test_chern_q2():
    code, out, _ = call("chern", "O(1,1) + O(1,0)", "--format", "json")
    assert json.loads(out) == {"space": "Q2", "rank": 2, "c1": [2, 1], "c2": 1}


@pytest.mark.parametrize(
    "args, expected",
    [(("S", "0"), "4"), (("S", "1"), "16"), (("O", "-3"), "-1"), (("k(p)",), "1"),
     (("O(2)", "--spinor"), "16"), (("O(1,1)",), "4")],
)
def test_chi(args, expected):
    code, out, _ = call("chi", *args)
    assert (code, out.strip()) == (0, expected)


def test_chi_routes_json():
    code, out, _ = call("chi", "4*O - 2*O(-1)", "-1", "--format", "json")
    data = json.loads(out)
    assert data["chi"] == 0 and set(data["routes"].values()) == {0}


@pytest.mark.parametrize(
    "args, expected",
    [(("S(1)",), "h^0=16 h^1=0 h^2=0 h^3=0  chi=16"), (("O", "-4"), "h^0=0 h^1=0 h^2=0 h^3=5  chi=-5"),
     (("O(-2,-2)",), "h^0=0 h^1=0 h^2=1  chi=1")],
)
def test_table(args, expected):
    code, out, _ = call("table", *args)
    assert (code, out.strip()) == (0, expected)


def test_table_rejects_sums():
    assert call("table", "O + S")[0] == 2


def test_ext():
    code, out, _ = call("ext", "--e", "4,0,0,0", "--sdual", "0,0,0,0", "--m1", "0,0,0,0",
                        "--m2", "0,0,2,0", "--format", "json")
    assert json.loads(out)["rows"] == [[4, 0, 0, 0], [0, 0, 0, 0], [0, 0, 0, 2], [0, 0, 0, 0]]
    assert call("ext", "--e", "?,0,0,0", "--sdual", "0", "--m1", "0", "--m2", "0")[0] == 2


def test_bondal():
    code, out, _ = call("bondal", "--dims", "3,0,0,0/0,0,0,0/0,0,1,5/0,0,0,0", "--target", "3*O - O(-2)")
    assert code == 0 and "pass" in out
    code, _, _ = call("bondal", "--dims", "3,0,0,0/0,0,0,0/0,0,1,5/0,0,0,0", "--target", "3*O")
    assert code == 1
    assert call("bondal", "--case", "9", "--a", "3", "--rank", "4")[0] == 0
    assert call("bondal", "--case", "3", "--a", "7")[0] == 2


def test_verify_cases_json():
    code, out, _ = call("verify-cases", "--theorem", "q3", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert len(data) == 9 and all(rep["pass"] for rep in data)
    assert json.dumps(data, indent=2, sort_keys=True) + "\n" == out


def test_verify_cases_options():
    code, out, _ = call("verify-cases", "--rank", "3", "--a", "1", "--twist", "2")
    assert code == 0 and "Q3(5)" in out
    code, out, _ = call("verify-cases", "--theorem", "q2", "--count", "2")
    assert code == 0 and out.splitlines()[-1] == "40 reports, 0 failing"
    assert call("verify-cases", "--a", "2")[0] == 2
    assert call("verify-cases", "--rank", "0")[0] == 2


def test_restrict():
    code, out, _ = call("restrict", "4*O - 2*O(-1)", "--format", "json")
    data = json.loads(out)
    assert (data["c2"], data["chi"], data["q2_matches"]) == (6, 4, ["Q2(8)", "Q2(9)"])


def test_wedge():
    code, out, _ = call("wedge-check")
    assert code == 0 and "5" in out.splitlines()[1]


@pytest.mark.parametrize("argv", [["chern", "O("], ["chern", "O(1,1) + S"], ["nope"], [], ["chi", "S", "x"]])
def test_usage_errors(argv):
    code, _, err = call(*argv)
    assert code == 2


def test_parse_error_message():
    _, _, err = call("chern", "O + ")
    assert "position 4" in err


def test_console_script():
    proc = subprocess.run([sys.executable, "-m", "q3nef.cli", "chi", "S"], capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.strip() == "4"
