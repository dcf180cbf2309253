from __future__ import annotations

import json

from adequate.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_eval_base(capsys):
    code, out, err = run(capsys, "eval", "a")
    assert code == 0 and err == ""
    assert out.strip() == (
        '{"alphabet":"ab","n":2,"start":0,"end":1,"edges":[{"l":"a","s":0,"t":1}]}'
    )


def test_eval_branching(capsys):
    code, out, _ = run(capsys, "eval", "(a)+a")
    assert code == 0
    assert out.strip() == (
        '{"alphabet":"ab","n":3,"start":0,"end":2,'
        '"edges":[{"l":"a","s":0,"t":1},{"l":"a","s":0,"t":2}]}'
    )


def test_eval_parse_error(capsys):
    code, out, err = run(capsys, "eval", "(a")
    assert code == 2 and out == ""
    assert err.strip() == "UnbalancedParenthesis at offset 2"


def test_prune_formula_and_json(capsys):
    code, out, _ = run(capsys, "prune", "(a)+a")
    assert code == 0
    assert out.strip() == (
        '{"alphabet":"ab","n":2,"start":0,"end":1,"edges":[{"l":"a","s":0,"t":1}]}'
    )
    base_json = out.strip()
    code, out, _ = run(capsys, "prune", base_json)
    assert code == 0 and out.strip() == base_json


def test_prune_malformed_json(capsys):
    code, _, err = run(capsys, "prune", '{"alphabet":"ab"}')
    assert code == 2 and err


def test_nf(capsys):
    code, out, _ = run(capsys, "nf", "(b)+(a)+")
    assert code == 0 and out.strip() == "(a)+(b)+"


def test_eq_exit_codes(capsys):
    alphabet = ("--alphabet", "xy")
    assert run(capsys, *alphabet, "eq", "(x)+x", "x")[0] == 0
    assert run(capsys, *alphabet, "eq", "x", "y")[0] == 1
    assert run(capsys, "eq", "(a", "a")[0] == 2


def test_eq_output_words(capsys):
    _, out, _ = run(capsys, "--alphabet", "xy", "eq", "(x)+x", "x")
    assert out.strip() == "equal"


def test_morph(capsys):
    code, out, _ = run(capsys, "morph", "(a)+a", "a")
    assert code == 0
    assert json.loads(out) == {"exists": True, "map": [0, 1, 1]}
    code, out, _ = run(capsys, "morph", "a", "(a)+")
    assert code == 1
    assert json.loads(out) == {"exists": False, "map": None}


def test_check_identity(capsys):
    assert run(capsys, "check-identity", "(xy)+", "(x(y)+)+")[0] == 0
    assert run(capsys, "check-identity", "x", "y")[0] == 1


def test_check_identity_respects_mode(capsys):
    code, _, err = run(capsys, "--mode", "left", "check-identity", "(x)+x", "x")
    assert code == 2 and "OpNotInSignature" in err


def test_gen_deterministic_and_valid(capsys):
    code, out1, _ = run(capsys, "--seed", "41", "gen", "--edges", "30")
    assert code == 0
    _, out2, _ = run(capsys, "--seed", "41", "gen", "--edges", "30")
    assert out1 == out2
    _, out3, _ = run(capsys, "--seed", "42", "gen", "--edges", "30")
    assert out1 != out3
    parsed = json.loads(out1)
    assert parsed["n"] == 31 and len(parsed["edges"]) == 30


def test_gen_trivial(capsys):
    _, out, _ = run(capsys, "--seed", "1", "gen", "--edges", "0")
    assert json.loads(out) == {"alphabet": "ab", "n": 1, "start": 0, "end": 0, "edges": []}


def test_dot_output(capsys, tmp_path):
    dot_file = tmp_path / "tree.dot"
    code, _, _ = run(capsys, "eval", "(a)+a", "--dot", str(dot_file))
    assert code == 0
    dot = dot_file.read_text()
    assert dot.startswith("digraph")
    assert "0 [shape=diamond];" in dot and "2 [shape=doublecircle];" in dot


def test_file_reference(capsys, tmp_path):
    src = tmp_path / "formula.txt"
    src.write_text("(b)+(a)+")
    code, out, _ = run(capsys, "nf", f"@{src}")
    assert code == 0 and out.strip() == "(a)+(b)+"


def test_bench_format_and_reps_guard(capsys):
    code, out, _ = run(capsys, "bench", "--sizes", "8,16", "--reps", "1")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "size,eq_mean_s,prune_mean_s"
    assert len(lines) == 4 and lines[-1].startswith("slope,")
    assert run(capsys, "bench", "--reps", "0")[0] == 2
    assert run(capsys, "bench", "--sizes", "")[0] == 2


def test_seed_guard(capsys):
    assert run(capsys, "--seed", "-1", "gen", "--edges", "1")[0] == 2
    assert run(capsys, "--seed", str(2**64), "gen", "--edges", "1")[0] == 2


def test_selftest(capsys):
    code, out, _ = run(capsys, "selftest")
    assert code == 0
    assert "morphism-oracle" in out and "0 disagreements" in out
    assert "pruning-oracle" in out
    assert "identity-suite" in out and "0 failures" in out


def test_console_entry_point():
    import subprocess
    import sys

    proc = subprocess.run(
        [sys.executable, "-m", "adequate.cli", "nf", "(b)+(a)+"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout.strip() == "(a)+(b)+"
