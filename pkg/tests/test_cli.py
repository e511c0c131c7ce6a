import csv
import io
import json
import subprocess
import sys

import jsonschema
import pytest

from smallorbits import cli


def run(args, capsys):
    code = cli.main(args)
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.fixture(scope="module")
def schema():
    return cli.load_schema()


@pytest.mark.parametrize("args", [
    ["orbits", "--n", "4"],
    ["orbits", "--n", "2"],
    ["spectrum", "--n", "4", "--orbit", "3,2,2,1", "--psi", "3", "--cutoff", "4"],
    ["spectrum", "--n", "4", "--orbit", "2,2,2,2:II", "--xi", "II'", "--cutoff", "3"],
    ["verify", "matchup", "--n", "4", "--cutoff", "8"],
    ["verify", "clifford", "--n", "4"],
    ["verify", "pinrep", "--p", "3"],
    ["verify", "--suite", "bgg", "--n", "4", "--samples", "50"],
])
def test_json_valid_and_deterministic(args, capsys, schema):
    c1, o1, _ = run(args + ["--format", "json"], capsys)
    c2, o2, _ = run(args + ["--format", "json"], capsys)
    assert c1 == c2 == 0
    assert o1 == o2
    rep = json.loads(o1)
    jsonschema.validate(rep, schema)
    assert rep["summary"]["failed"] == 0


def test_orbits_rows(capsys):
    _, out, _ = run(["orbits", "--n", "4", "--format", "json"], capsys)
    rows = {r["item"]: r for r in json.loads(out)["results"]}
    r = rows["[3,2,2,1]"]
    assert (r["dim"], r["A_Spin"], r["lambda_O"]) == (16, "Z2xZ2", "(3/2, 1/2 | 1, 0)")
    assert rows["[2,2,2,2]_I"]["dim"] == 12 and rows["[2,2,2,2]_I"]["A_Spin"] == "Z2"


def test_table_and_csv_carry_same_rows(capsys):
    args = ["spectrum", "--n", "4", "--orbit", "3,2,2,1", "--psi", "1", "--cutoff", "3"]
    _, js, _ = run(args + ["--format", "json"], capsys)
    _, cs, _ = run(args + ["--format", "csv"], capsys)
    _, tb, _ = run(args, capsys)
    items = [r["item"] for r in json.loads(js)["results"]]
    assert [r["item"] for r in csv.DictReader(io.StringIO(cs))] == items
    for it in items:
        assert it in tb


def test_findings_exit_zero(capsys):
    code, out, _ = run(["verify", "pinrep", "--p", "3", "--format", "json"], capsys)
    rep = json.loads(out)
    assert code == 0
    assert [f["id"] for f in rep["findings"]] == ["pinrep-p3"]


def test_bad_selector_exit(capsys):
    code, _, err = run(["spectrum", "--n", "4", "--orbit", "3,2,2,1", "--psi", "9"], capsys)
    assert code == 2 and "unknown psi" in err
    code, _, err = run(["spectrum", "--n", "4", "--orbit", "3,3,1,1"], capsys)
    assert code == 2
    code, _, _ = run(["orbits", "--n", "17"], capsys)
    assert code == 2


def test_capacity_notice(capsys):
    code, _, err = run(["verify", "oracle", "--n", "6"], capsys)
    assert code == 3 and "capacity" in err


def test_out_file(tmp_path, capsys):
    p = tmp_path / "r.json"
    code, out, _ = run(["orbits", "--n", "3", "--format", "json", "--out", str(p)], capsys)
    assert code == 0 and out == ""
    assert json.loads(p.read_text())["command"] == "orbits"


def test_timing_opt_in(capsys, schema):
    _, out, _ = run(["verify", "clifford", "--n", "2", "--format", "json", "--timing"], capsys)
    rep = json.loads(out)
    jsonschema.validate(rep, schema)
    assert set(rep["timing"]) == {"clifford"}
    _, out, _ = run(["verify", "clifford", "--n", "2", "--format", "json"], capsys)
    assert "timing" not in json.loads(out)


def test_module_entry_point():
    r = subprocess.run([sys.executable, "-m", "smallorbits", "orbits", "--n", "3"], capture_output=True, text=True)
    assert r.returncode == 0
    assert "[2,2,1,1]" in r.stdout
