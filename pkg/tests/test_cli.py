import json
import os
import random
import shutil
import subprocess
import sys

import pytest

from gamma_hyperlab.formats import emit_structure, parse_structure
from gamma_hyperlab.sampling import random_any
from support import CASES, FIXTURES, GOLDEN, run_cli as run


@pytest.fixture
def in_fixtures(monkeypatch):
    monkeypatch.chdir(FIXTURES)


@pytest.mark.parametrize("name", sorted(CASES))
def test_golden_reports(name, in_fixtures):
    argv, expected_code = CASES[name]
    code, out, err = run(argv)
    path = GOLDEN / f"{name}.txt"
    if os.environ.get("GAMMA_HYPERLAB_UPDATE_GOLDEN"):
        path.write_text(out, encoding="utf-8")
    assert err == ""
    assert code == expected_code
    assert out == path.read_text(encoding="utf-8")


def test_documented_examples(in_fixtures):
    code, out, _ = run(["check", "--axioms", "max.json"])
    assert code == 0 and out.splitlines()[0] == "associative: yes, hypergroup: no"
    code, out, _ = run(["ideal", "--left", "--subset", "chi0.json", "max.json"])
    assert code == 1 and "a=1" in out
    code, out, _ = run(["quotient", "--relation", "{0,1}|{2}", "--strong", "max.json"])
    assert code == 0
    Q = parse_structure(out[out.index("{"):])
    assert [sorted(Q.cell(a, 0, b).grades) for a in range(2) for b in range(2)] == [[0, 1]] * 4
    assert [Q.cell(a, 0, b).grades.index(1) for a in range(2) for b in range(2)] == [0, 1, 1, 1]


def test_every_negative_verdict_carries_a_witness(in_fixtures):
    for name, (argv, expected) in CASES.items():
        if expected != 1:
            continue
        code, out, _ = run(argv)
        if "--json" in argv:
            assert json.loads(out)["witnesses"]
        else:
            assert " witness: " in out


@pytest.mark.parametrize("argv", [
    [],
    ["bogus"],
    ["check"],
    ["check", "missing.json"],
    ["cut", "--p", "2", "max.json"],
    ["cut", "--p", "x", "max.json"],
    ["relation", "--relation", "0,1", "max.json"],
    ["relation", "--relation", "0|0,1,2", "max.json"],
    ["ideal", "--subset", "9=1", "max.json"],
    ["compose", "max.json", "0", "nope", "1"],
    ["convert", "--to", "fuzzy", "truncated_sum.json"],
    ["enumerate", "--size", "3", "--budget", "1000"],
    ["quotient", "--crisp", "--fuzzy", "--relation", "0|1|2", "max.json"],
])
def test_usage_errors_exit_2(argv, in_fixtures):
    code, out, err = run(argv)
    assert code == 2 and out == "" and err


def test_format_error_exits_2_and_names_the_cell(tmp_path):
    doc = json.loads((FIXTURES / "max.json").read_text())
    doc["table"]["0|g|1"] = {"1": 5}
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps(doc))
    code, out, err = run(["check", str(bad)])
    assert code == 2 and "0|g|1" in err


def test_json_reports_match_text_verdicts(in_fixtures):
    for argv in (["check", "max.json"], ["relation", "--relation", "0,1|2", "pair_union.json"]):
        code_t, text, _ = run(argv)
        code_j, doc, _ = run(["--json"] + argv)
        doc = json.loads(doc)
        assert code_t == code_j == doc["exit"]
        line = ", ".join(f"{k}: {'yes' if v else 'no'}" for k, v in doc["verdicts"].items())
        assert text.splitlines()[0] == line


def test_round_trip_through_cli(tmp_path):
    rng = random.Random(31)
    for i in range(20):
        H = random_any(rng, rng.randint(1, 3), rng.randint(1, 2), rng.randint(1, 5))
        path = tmp_path / f"h{i}.json"
        path.write_text(emit_structure(H))
        code, out, _ = run(["convert", "--to", "crisp", str(path)])
        assert code == 0 and parse_structure(out.split("\n", 1)[1]).is_crisp_valued()


def test_console_script_runs(in_fixtures):
    exe = shutil.which("gamma-hyperlab")
    argv = [exe] if exe else [sys.executable, "-m", "gamma_hyperlab.cli"]
    proc = subprocess.run(argv + ["check", "max.json"], capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout == (GOLDEN / "check_max.txt").read_text()
