import json
import os
import subprocess
import sys

import pytest

from updown.cli import main
from updown.oscillating import OscillatingTableau, enumerate_oscillating
from updown.sundaram import sun_details

RUN_JSON = "[[],[1],[1,1],[2,1],[2],[1],[2],[2,1],[2,1,1],[2,1]]"


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.mark.parametrize(
    "argv,count",
    [
        (["--n", "1", "--r", "3", "--shape", "[1]"], 2),
        (["--n", "1", "--r", "4", "--shape", "[]"], 2),
        (["--r", "0", "--shape", "[]"], 1),
    ],
)
def test_enumerate_counts(capsys, argv, count):
    code, out, _ = run(capsys, "enumerate", *argv, "--format", "json")
    lines = [json.loads(line) for line in out.splitlines()]
    assert code == 0
    assert lines[-1] == {"count": count}
    assert len(lines) == count + 1


def test_enumerate_limit_and_families(capsys):
    code, out, _ = run(capsys, "enumerate", "--n", "2", "--r", "6", "--shape", "[]", "--limit", "2")
    assert code == 0
    # 15 matchings of six points, minus the one with three nested arcs
    assert out.splitlines()[-1] == "count: 14" and len(out.splitlines()) == 3
    code, out, _ = run(capsys, "enumerate", "--family", "syt", "--shape", "[3,1]")
    assert out.splitlines()[-1] == "count: 3"
    code, out, _ = run(capsys, "enumerate", "--family", "lr", "--shape", "[1]", "--outer", "[2,1]",
                       "--weight", "[1,1]", "--n", "1", "--format", "json")
    assert json.loads(out.splitlines()[0]) == {"inner": [1], "rows": [[None, 1], [2]]}


def test_enumerate_usage_errors(capsys):
    code, _, err = run(capsys, "enumerate", "--shape", "[1,2]")
    assert code == 2 and "invalid shape" in err
    code, _, err = run(capsys, "enumerate", "--shape", "not json")
    assert code == 2
    code, _, _ = run(capsys, "enumerate", "--family", "lr")
    assert code == 2
    code, _, _ = run(capsys, "bogus")
    assert code == 2


def test_sundaram_running_example(capsys):
    code, out, _ = run(capsys, "sundaram", RUN_JSON, "--format", "json")
    lines = [json.loads(line) for line in out.splitlines()]
    assert code == 0
    steps, final = lines[:-1], lines[-1]
    assert [s["k"] for s in steps] == list(range(1, 10))
    assert steps[3] == {"k": 4, "step": "contraction", "box": [2, 1], "iota": [[2, 4]], "T": [[1, 3]]}
    assert final["word"] == [1, 2, 1, -2, -1, 1, 2, 3, -3]
    assert final["iota"] == [[1, 5], [2, 4], [8, 9]]
    assert final["T"] == [[3, 6], [7]]
    assert final["I"] == [[1, 8], [2, 9], [4], [5]]
    assert final["Q"] == [[1, 3, 6], [2, 7], [4, 8], [5, 9]]
    assert final["S"] == {"inner": [2, 1], "rows": [[None, None, 1], [None, 2], [1, 3], [2, 4]]}
    assert final["des_T"] == final["des_Q"] == [1, 3, 4, 6, 7, 8]
    assert final["round_trip"] is True


def test_sundaram_small_and_errors(capsys):
    code, out, _ = run(capsys, "sundaram", "[[],[1]]")
    assert code == 0 and "Q      1" in out
    code, _, err = run(capsys, "sundaram", RUN_JSON, "--n", "2")
    assert code == 2 and "step 8" in err
    code, _, err = run(capsys, "sundaram", "[[],[1],[2,1]]")
    assert code == 2 and "step 2" in err


def test_sundaram_random_round_trips(capsys):
    for t in list(enumerate_oscillating(7, 2, (1,)))[::7]:
        code, out, _ = run(capsys, "sundaram", json.dumps(t.to_json()), "--format", "json")
        assert code == 0 and json.loads(out.splitlines()[-1])["round_trip"] is True


def test_roby_running_example(capsys):
    code, out, _ = run(capsys, "roby", RUN_JSON)
    assert code == 0
    assert "kappa  (∅,1,2,21,31,41,411,421,431,441)" in out
    assert "tau    (∅,∅,∅,1,1,1,11,21,21,21)" in out
    assert "nu     (∅,1,2,2,3,4,4,4,41,42)" in out
    assert "A      [1, 2, 4, 5, 8, 9]" in out
    assert out.splitlines()[0].split() == ["∅", "1", "2", "21", "31", "41", "411", "421", "431", "441"]
    code, out, _ = run(capsys, "roby", "[[]]", "--format", "json")
    assert code == 0 and json.loads(out)["A"] == []


def test_roby_agrees_with_sundaram_cli(capsys):
    for t in list(enumerate_oscillating(6, 2, ()))[::3]:
        text = json.dumps(t.to_json())
        main(["roby", text, "--format", "json"])
        a = json.loads(capsys.readouterr().out)
        main(["sundaram", text, "--format", "json"])
        b = json.loads(capsys.readouterr().out.splitlines()[-1])
        assert (a["iota"], a["T"], a["Q"], a["I"]) == (b["iota"], b["T"], b["Q"], b["I"])


def test_render_growth(capsys):
    code, out, _ = run(capsys, "render-growth", "[[],[1],[]]")
    assert code == 0
    assert out.splitlines() == ["∅   1   2", "      X", "∅   1   1", "  X", "∅   ∅   ∅"]
    code, out, _ = run(capsys, "render-growth", RUN_JSON, "--format", "json")
    assert json.loads(out)["rows"] == 9


@pytest.mark.parametrize(
    "argv",
    [
        ["descents", "--n", "1", "--r", "5"],
        ["frobenius", "--n", "1", "--r", "3", "--shape", "[1]"],
        ["berele", "--n", "1", "--r", "3"],
        ["roby", "--n", "2", "--r", "5"],
        ["schur-qsym", "--r", "4"],
        ["eq5", "--r", "4"],
        ["invariant", "--n", "2", "--r", "4"],
        ["rs-lemmas", "--r", "5", "--seed", "3"],
    ],
)
def test_verify_passes(capsys, argv):
    code, out, _ = run(capsys, "verify", *argv)
    assert code == 0
    assert out.strip() and all(line.startswith("PASS") for line in out.splitlines())


def test_verify_frobenius_reports_schur_expansion(capsys):
    code, out, _ = run(capsys, "verify", "frobenius", "--n", "1", "--r", "3", "--shape", "[1]", "--format", "json")
    assert json.loads(out) == {"identity": "frobenius", "n": 1, "r": 3, "shape": [1],
                               "result": "PASS", "detail": "both sides s_21"}


def test_verify_usage_errors(capsys):
    assert run(capsys, "verify", "descents", "--n", "9")[0] == 2
    assert run(capsys, "verify", "berele", "--r", "20")[0] == 2
    assert run(capsys, "verify", "nonsense")[0] == 2


def test_verify_failure_exit_code(capsys, monkeypatch):
    import updown.cli as cli

    monkeypatch.setitem(cli.CHECKS, "berele", lambda n, r, s, k=None: (False, "forced"))
    code, out, _ = run(capsys, "verify", "berele", "--n", "1", "--r", "1")
    assert code == 1 and "FAIL" in out and "forced" in out


def test_verify_parallel_output_is_deterministic():
    cmd = [sys.executable, "-m", "updown", "verify", "descents", "--n", "2", "--r", "5"]
    serial = subprocess.run(cmd, capture_output=True, text=True)
    parallel = subprocess.run(cmd, capture_output=True, text=True, env={**os.environ, "OSC_THREADS": "3"})
    assert serial.returncode == parallel.returncode == 0
    assert serial.stdout == parallel.stdout


def test_sun_details_matches_cli_trace():
    t = OscillatingTableau.from_shapes(json.loads(RUN_JSON))
    assert sun_details(t).partial == ((3, 6), (7,))
