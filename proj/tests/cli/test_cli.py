import json
import os
import subprocess

import pytest

CLI = os.environ.get("THETAWPO_CLI", "thetawpo")


def run(*args, stdin=None):
    p = subprocess.run([CLI, *args], input=stdin, capture_output=True, text=True, timeout=300)
    return p.returncode, p.stdout, p.stderr


@pytest.mark.parametrize(
    "args, code, out",
    [
        (["ord", "cmp", "v(0)", "v(v(0))"], 0, "LT\n"),
        (["ord", "cmp", "v(v(0))", "v(0)"], 0, "GT\n"),
        (["ord", "k", "O"], 0, "v(0)\n"),
        (["ord", "g", "v(0)"], 0, "o[o]\n"),
        (["ord", "complexity", "0"], 0, "0\n"),
        (["ord", "validate", "v(0)"], 0, "valid\n"),
        (["tree", "leq", "o", "o[o]"], 0, "true\n"),
        (["tree", "leq", "o[o]", "o"], 1, "false\n"),
        (["tree", "enum", "--size", "3"], 0, "o\no[o]\no[o[o]]\n"),
        (["gap", "iso-to", "o[(o, o[(o, o)])]"], 0, "(0 (1 (0) (0 (1 (0) (0)))))\n"),
        (["gap", "iso-from", "(0 (0))"], 0, "o[o]\n"),
        (["gap", "check-t2bar", "(1)"], 1, "false\n"),
        (["gap", "leq", "(0 (1) (0))", "(0 (0) (1))"], 1, "false\n"),
        (["gap", "leq", "(0 (1) (0))", "(0 (0) (1))", "--unstructured"], 0, "true\n"),
        (["higman", "1,2", "0,3,3"], 0, "true\n"),
        (["higman", "0,1", "1,0", "--poset", "P{2;}"], 1, "false\n"),
    ],
)
def test_commands(args, code, out):
    rc, stdout, _ = run(*args)
    assert (rc, stdout) == (code, out)


def test_invalid_term_reports_clause():
    rc, stdout, _ = run("ord", "validate", "O^0*1")
    assert rc == 1
    assert stdout.startswith("invalid (sum-length)")


def test_parse_error_has_caret():
    rc, stdout, stderr = run("ord", "cmp", "v(0", "1")
    assert rc == 2 and stdout == ""
    assert stderr.splitlines() == ["error: at 3: expected ')'", "  v(0", "     ^"]


def test_usage_error_exits_2():
    assert run("nope")[0] == 2
    assert run("ord", "cmp", "0")[0] == 2


def test_json_and_batch():
    rc, stdout, _ = run("ord", "cmp", "--json", stdin="v(0)\t1\n0\tv(0)\n")
    assert rc == 0
    recs = [json.loads(line) for line in stdout.splitlines()]
    assert [r["result"] for r in recs] == ["EQ", "LT"]
    assert recs[1]["inputs"] == ["0", "v(0)"]


def test_batch_exit_code_is_worst():
    rc, stdout, _ = run("tree", "leq", stdin="o\to[o]\no[o]\to\n")
    assert rc == 1 and stdout == "true\nfalse\n"


def test_dot():
    rc, stdout, _ = run("gap", "iso-to", "o[o]", "--dot")
    assert rc == 0 and stdout.startswith("digraph T {")
    rc, stdout, _ = run("ord", "g", "v(0)", "--dot")
    assert rc == 0 and "digraph" in stdout


def test_verify():
    rc, stdout, _ = run("verify", "iso", "--size", "6", "--json")
    assert rc == 0
    report = json.loads(stdout)
    assert report["suite"] == "iso" and report["failures"] == []
    assert run("verify", "no-such-suite")[0] == 2
