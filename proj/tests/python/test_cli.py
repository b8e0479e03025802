import json
import os
import subprocess

import pytest

CLI = os.environ.get("MVLAB_CLI", "mvlab")


def run(*args, stdin=None):
    p = subprocess.run([CLI, *args], input=stdin, capture_output=True, text=True, timeout=600)
    return p.returncode, p.stdout


def zero(n):
    return json.dumps({"n": n, "a": {}})


def test_enumerate_streams_ndjson():
    code, out = run("enumerate", "--n", "2", "--max-height", "2")
    assert code == 0
    lines = [json.loads(l) for l in out.splitlines()]
    assert len(lines) == 10
    assert all(l["schema"] == "mvlab.lusztig/1" for l in lines)


def test_apply_identity():
    _, a = run("apply", "--ops", "f1 f2 f2 f1", stdin=zero(2))
    _, b = run("apply", "--ops", "f2 f1 f1 f2", stdin=zero(2))
    assert a == b
    assert json.loads(a)["a"] == {"1,2": 1, "1,3": 1, "2,3": 1}


def test_apply_bottom():
    code, out = run("apply", "--ops", "f1 e1 e1", stdin=zero(2))
    assert code == 3
    doc = json.loads(out)
    assert doc["bottom"] is True and doc["failed_at"] == 2


def test_psi_zero():
    code, out = run("psi", stdin=zero(3))
    assert code == 0
    doc = json.loads(out)
    assert doc["flavor"] == "e"
    assert set(doc["M"].values()) == {0}
    assert len(doc["M"]) == 14


def test_polytope_from_lusztig_and_bz():
    code, out = run("polytope", stdin=json.dumps({"n": 2, "a": {"1,2": 1}}))
    assert code == 0
    P = json.loads(out)
    assert len(P["vertices"]) == 6
    _, bz = run("psi", stdin=json.dumps({"n": 2, "a": {"1,2": 1}}))
    code, out2 = run("polytope", stdin=bz)
    assert code == 0 and json.loads(out2) == P


def test_quiver():
    code, out = run("quiver", "--n", "3", "--maya", "2,4")
    assert code == 0
    doc = json.loads(out)
    assert doc["out"] == [2] and doc["in"] == [1, 3]
    assert "braid_path_from_lex" in doc


def test_lagrangian():
    code, out = run("lagrangian", "--seed", "7", stdin=json.dumps({"n": 2, "a": {"1,3": 2, "2,3": 1}}))
    assert code == 0
    doc = json.loads(out)
    assert doc["moment_map_zero"] and doc["all_match"]
    assert len(doc["records"]) == 6
    assert {"a", "K", "p", "seed", "m_k_point", "m_k_psi", "match"} <= set(doc["records"][0])


def test_verify_bz_axioms():
    code, out = run("verify", "--suite", "bz-axioms", "--n", "3", "--max-height", "5")
    assert code == 0
    doc = json.loads(out)
    assert doc["passed"] and doc["instances"] > 0
    assert "wall_seconds" not in doc
    _, again = run("verify", "--suite", "bz-axioms", "--n", "3", "--max-height", "5", "--jobs", "2")
    assert again == out


@pytest.mark.parametrize(
    "args,stdin",
    [
        (("apply", "--ops", "f3"), zero(2)),
        (("apply", "--ops", "x1"), zero(2)),
        (("psi",), "{not json"),
        (("psi",), ""),
        (("quiver", "--n", "2", "--maya", "1,2,3"), None),
        (("quiver", "--n", "2", "--maya", "a"), None),
        (("verify", "--suite", "nope"), None),
        (("enumerate", "--n", "0", "--max-height", "1"), None),
        (("lagrangian", "--p", "65535"), zero(2)),
    ],
)
def test_invalid_input_exit_1(args, stdin):
    code, out = run(*args, stdin=stdin)
    assert code == 1
    assert json.loads(out)["schema"] == "mvlab.error/1"
