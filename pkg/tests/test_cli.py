import json
import subprocess
import sys

import pytest

from noncross.cli import main


def run(*args):
    proc = subprocess.run([sys.executable, "-m", "noncross", *args], capture_output=True, text=True)
    return proc.returncode, proc.stdout, proc.stderr


def test_count():
    assert run("count", "--family", "A", "--n", "3") == (0, "5\n", "")


def test_count_both_methods(capsys):
    assert main(["count", "--family", "D", "--n", "3", "--method", "both"]) == 0
    assert capsys.readouterr().out == "14\n"


def test_expected_blocks_rendering(capsys):
    assert main(["formula", "--name", "expected-blocks", "--n", "5", "--k", "3"]) == 0
    assert capsys.readouterr().out == "16/4 = 4\n"


@pytest.mark.parametrize(
    "args, out",
    [
        (["--name", "family-count", "--family", "B", "--n", "2"], "6"),
        (["--name", "block-total", "--family", "D", "--n", "3", "--t", "1"], "11"),
        (["--name", "block-total-given-m", "--family", "A", "--n", "3", "--t", "1", "--m", "2"], "3"),
        (["--name", "zero-block-total", "--family", "B", "--n", "2", "--t", "1"], "2"),
        (["--name", "d-subfamily-block-total", "--n", "3", "--t", "1", "--subfamily", "D2"], "9"),
        (["--name", "type-count", "--family", "D", "--n", "3", "--r", "1,1,0"], "6"),
        (["--name", "expected-blocks-of-size", "--n", "4", "--t", "1"], "100/70 = 10/7"),
        (["--name", "total-block-sum", "--n", "2"], "3"),
        (["--name", "first-two", "--n", "3"], "2"),
        (["--name", "identity", "--kind", "chu", "--n", "1", "--x", "3", "--y", "2", "--s", "1"], "5 = 5"),
        (["--name", "identity", "--kind", "lemma1", "--n", "3", "--m", "2", "--t", "1"], "1 = 1"),
        (["--name", "asymptotic", "--n", "4", "--t", "1"], "1.0"),
    ],
)
def test_formula_names(capsys, args, out):
    assert main(["formula", *args]) == 0
    assert capsys.readouterr().out.strip() == out


def test_enumerate_json_lines():
    code, out, _ = run("enumerate", "--family", "B", "--n", "2")
    rows = [json.loads(line) for line in out.splitlines()]
    assert code == 0 and len(rows) == 6
    assert set(rows[0]) == {"family", "n", "k", "blocks"}
    assert {"family": "B", "n": 2, "k": 1, "blocks": [[1, -1], [2], [-2]]} in rows


def test_census_csv(capsys):
    assert main(["census", "--family", "A", "--n", "2", "--k", "2"]) == 0
    assert capsys.readouterr().out.splitlines() == ["family,n,k,t,m,s,count", "A,2,2,1,2,0,4", "A,2,2,2,1,0,1"]


def test_verify_exit_codes():
    code, out, _ = run("verify", "--suite", "theorem1", "--max-points", "12")
    assert code == 0 and out.splitlines()[-1].endswith("0 fail")
    code, _, err = run("verify", "--suite", "nope")
    assert code == 2 and "unknown suite" in err


def test_verify_json(capsys):
    assert main(["verify", "--suite", "p0d", "--max-points", "8", "--format", "json"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert json.loads(lines[0])["status"] == "pass"


def test_bijections(capsys):
    assert main(["bijection", "--op", "glue", "--partition", "[[1,2],[3,4]]"]) == 0
    assert json.loads(capsys.readouterr().out)["blocks"] == [[1, 2]]
    assert main(["bijection", "--op", "split", "--k", "1", "--partition", '{"blocks": [[1, 2]]}']) == 0
    assert json.loads(capsys.readouterr().out)["blocks"] == [[1, 2], [3, 4]]
    assert main(["bijection", "--op", "abs", "--partition", "[[1,-1],[2],[-2]]"]) == 0
    assert json.loads(capsys.readouterr().out)["blocks"] == [[1], [2]]
    assert main(["bijection", "--op", "kreweras-decompose", "--partition", "[[1,2],[3,4]]"]) == 0
    assert [json.loads(x)["blocks"] for x in capsys.readouterr().out.splitlines()] == [[[1, 2]], [[1], [2]]]


def test_kreweras(capsys):
    assert main(["kreweras", "--partition", "[[1],[2],[3]]"]) == 0
    assert json.loads(capsys.readouterr().out)["blocks"] == [[1, 2, 3]]


def test_sample(capsys):
    args = ["sample", "--family", "A", "--n", "4", "--statistic", "blocks_of_size_t", "--t", "1", "--trials", "2000", "--seed", "11"]
    assert main(args) == 0
    first = json.loads(capsys.readouterr().out)
    assert main(args) == 0
    assert json.loads(capsys.readouterr().out) == first
    assert first["algorithm"] == "numpy.PCG64" and first["trials"] == 2000


@pytest.mark.parametrize(
    "args",
    [
        ["count", "--n", "3"],
        ["count", "--family", "A", "--n", "20", "--method", "enumerate"],
        ["bijection", "--op", "glue", "--partition", "[[1,3],[2,4]]"],
        ["bijection", "--op", "glue", "--partition", "not json"],
        ["formula", "--name", "block-total", "--family", "A", "--n", "3"],
        ["count", "--family", "A", "--n", "2", "--k", "2", "--mode", "all"],
    ],
)
def test_usage_errors_exit_2(args):
    code, _, err = run(*args)
    assert code == 2 and err


def test_guard_env_override():
    import os

    cmd = [sys.executable, "-m", "noncross", "count", "--family", "A", "--n", "4", "--method", "enumerate"]
    low = subprocess.run(cmd, capture_output=True, text=True, env=dict(os.environ, NONCROSS_MAX_POINTS="3"))
    assert low.returncode == 2 and "guard" in low.stderr
    ok = subprocess.run(cmd, capture_output=True, text=True, env=dict(os.environ, NONCROSS_MAX_POINTS="4"))
    assert ok.stdout == "14\n"
