import io
import json
import subprocess
import sys

import pytest

from knotsurgery.cli import main


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def test_alex():
    assert run("alex", "--c", "2,3", "--central", "-1") == (
        0, '{"-2":3,"-1":2,"0":-11,"1":2,"2":3}\n')


def test_oracle_check():
    assert run("oracle", "--c", "1", "--central", "+1", "--check") == (0, "MATCH\n")


def test_oracle_on_diagram_file(tmp_path):
    code, text = run("diagram", "--c", "1,-1")
    assert code == 0
    path = tmp_path / "k.pd"
    path.write_text(text)
    code, out = run("oracle", str(path), "--c", "1,-1", "--check")
    assert (code, out) == (0, "MATCH\n")
    code, out = run("oracle", str(path))
    assert code == 0
    assert out == run("alex", "--c", "1,-1")[1]
    assert json.loads(out) == {"-2": 1, "-1": -1, "0": 1, "1": -1, "2": 1}


def test_oracle_mismatch(tmp_path):
    path = tmp_path / "k.pd"
    path.write_text(run("diagram", "--c", "1")[1])
    assert run("oracle", str(path), "--c", "2", "--check")[0] == 11


def test_ledger_csv():
    code, out = run("ledger", "--c", "3,3")
    assert code == 0
    assert out.splitlines()[-1] == "TOTAL,30,176,376"


def test_constants(tmp_path):
    path = tmp_path / "k.json"
    code, out = run("constants", "--grid", "d<=3,|c|<=2", "--constants-file", str(path))
    assert code == 0
    data = json.loads(out)
    assert (data["A1"], data["A2"], data["A3"]) == (278, 28, 4)
    assert json.loads(path.read_text()) == data
    code, out = run("bounds", "--n", "40000", "--constants-file", str(path))
    assert code == 0


def test_bounds_zero():
    code, out = run("bounds", "--n", "0")
    assert code == 0
    assert out.splitlines()[1] == "0,NA,0,NA,NA,0,0"


def test_bounds_json_list():
    code, out = run("bounds", "--n-list", "100,3000", "--format", "json")
    rows = json.loads(out)
    assert code == 0 and [r["exact_count"] for r in rows] == [0, 26]


def test_census_formats():
    code, out = run("census", "--n", "3000")
    lines = out.splitlines()
    assert code == 0 and lines[0] == "d,c,complexity_bound,poly" and len(lines) == 27
    code, out = run("census", "--n", "3000", "--format", "json")
    rows = json.loads(out)
    assert rows[0]["params"] == {"c": [1], "central": -1}


@pytest.mark.parametrize("argv,code", [
    (["alex", "--c", "2,x"], 3),
    (["alex", "--c", "2", "--central", "5"], 3),
    (["oracle", "/nonexistent/file.pd"], 12),
    (["census", "--n", "100000", "--max-records", "10"], 8),
    (["bounds", "--n", "-1"], 2),
    (["oracle"], 2),
])
def test_error_exit_codes(argv, code):
    assert run(*argv)[0] == code


def test_malformed_diagram_exit_code(tmp_path):
    path = tmp_path / "bad.pd"
    path.write_text("X[+1](1,2,2,2)\nX[+1](2,1\n")
    assert run("oracle", str(path))[0] == 4


def test_usage_errors_exit_2():
    with pytest.raises(SystemExit) as err:
        main(["constants", "--grid", "nonsense"])
    assert err.value.code == 2
    with pytest.raises(SystemExit) as err:
        main(["bounds"])
    assert err.value.code == 2


def test_console_entry_point():
    proc = subprocess.run([sys.executable, "-m", "knotsurgery.cli", "alex", "--c", "1"],
                          capture_output=True, text=True, check=True)
    assert proc.stdout == '{"-1":1,"0":-3,"1":1}\n'
