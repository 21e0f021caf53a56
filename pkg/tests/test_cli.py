"""Command-line surface: exit codes, renderings, JSON round-trips."""

import json
import subprocess
import sys

import pytest

from degseq.cli import main


def run_main(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_check_exit_codes(capsys):
    code, out, _ = run_main(capsys, "check", "--pattern", "k5-p3", "--seq", "4,3^2,2^3")
    assert code == 1
    assert "decision: not-potentially" in out
    assert "3.1(2):(4,3^2,2^3)" in out

    code, out, _ = run_main(capsys, "check", "--pattern", "k5-k3", "--seq", "4^5")
    assert code == 0
    assert "decision: potentially" in out

    code, out, _ = run_main(capsys, "check", "--pattern", "c4", "--seq", "2^5")
    assert code == 1
    assert "2.3(3):(2^n)" in out


def test_check_with_oracle(capsys):
    code, out, _ = run_main(
        capsys, "check", "--pattern", "k5-a3", "--seq", "5,3^3,2^2", "--oracle"
    )
    assert code == 1
    assert "oracle: not-potentially" in out
    assert "agreement: yes" in out


def test_check_oracle_only_mode(capsys):
    code, out, _ = run_main(capsys, "check", "--pattern", "c5", "--seq", "2^5", "--oracle")
    assert code == 0
    assert "source: oracle" in out
    # without --oracle there is no closed form for c5
    code, _, err = run_main(capsys, "check", "--pattern", "c5", "--seq", "2^5")
    assert code == 2
    assert "--oracle" in err


def test_check_input_errors(capsys):
    code, _, err = run_main(capsys, "check", "--pattern", "k5-p3", "--seq", "4,x")
    assert code == 2 and "error:" in err
    code, _, err = run_main(capsys, "check", "--pattern", "k5-p3", "--seq", "4^4,1")
    assert code == 2 and "not graphic" in err
    code, _, err = run_main(capsys, "check", "--pattern", "k5-p3", "--seq", "4^4,2^2,0")
    assert code == 2


def test_realize(capsys):
    code, out, _ = run_main(capsys, "realize", "--seq", "2^5")
    assert code == 0
    edges = out.strip().splitlines()
    assert len(edges) == 5

    code, out, _ = run_main(capsys, "realize", "--seq", "4,3^4")
    assert code == 0
    assert len(out.strip().splitlines()) == 8

    code, _, err = run_main(capsys, "realize", "--seq", "3^3,1")
    assert code == 2
    assert "Erdos-Gallai violation at k=2" in err

    code, _, err = run_main(capsys, "realize", "--seq", "3^3")
    assert code == 2
    assert "odd degree sum" in err


def test_witness(capsys):
    code, out, _ = run_main(capsys, "witness", "--pattern", "k5-2k2", "--seq", "4,3^4")
    assert code == 0
    assert "embedding:" in out
    assert len([l for l in out.splitlines() if "-" in l and "embedding" not in l]) == 8

    code, out, _ = run_main(capsys, "witness", "--pattern", "k5-a3", "--seq", "5,3^3,2^2")
    assert code == 1
    assert out.strip() == "no witness"

    code, out, _ = run_main(capsys, "witness", "--pattern", "k5-k13", "--seq", "4,3^3,1")
    assert code == 0

    code, out, _ = run_main(
        capsys, "witness", "--pattern", "k5-p3", "--seq", "4^5", "--budget-nodes", "1"
    )
    assert code == 4
    assert out.strip() == "budget exhausted"


def test_witness_embedding_is_valid(capsys):
    code, out, _ = run_main(
        capsys, "witness", "--pattern", "k5-k3", "--seq", "4^2,3^2,2", "--json"
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["found"] is True
    edges = {tuple(map(int, e.split("-"))) for e in doc["edges"]}
    from degseq.patterns import PatternId, pattern_graph

    phi = doc["embedding"]
    for u, v in pattern_graph(PatternId.K5_K3).edges:
        a, b = sorted((phi[u], phi[v]))
        assert (a, b) in edges


def test_verify(capsys):
    code, out, _ = run_main(capsys, "verify", "--pattern", "k5-p3", "--n-lo", "5", "--n-hi", "6")
    assert code == 0
    assert "mismatches: 0" in out
    assert "result: verified" in out

    code, _, err = run_main(capsys, "verify", "--pattern", "k5-p3", "--n-lo", "4", "--n-hi", "5")
    assert code == 2


def test_sigma(capsys):
    code, out, _ = run_main(capsys, "sigma", "--pattern", "k5-p3", "--n", "6")
    assert code == 0
    assert "empirical: 20" in out and "formula: 20" in out and "match: yes" in out

    code, out, _ = run_main(capsys, "sigma", "--pattern", "k311", "--n", "6")
    assert code == 0
    assert "empirical: 26" in out and "witness: 4^6" in out

    code, out, _ = run_main(capsys, "sigma", "--pattern", "c5", "--n", "5")
    assert code == 0
    assert "empirical: 16" in out and "formula: 16" in out

    code, out, _ = run_main(capsys, "sigma", "--pattern", "k5-a3", "--n", "6")
    assert code == 0
    assert "formula: none" in out and "match: n/a" in out


def test_patterns_listing(capsys):
    code, out, _ = run_main(capsys, "patterns")
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 10
    assert any(line.startswith("k5-p3") for line in lines)
    assert any("alias of k5-2k2" in line for line in lines)
    assert not any("k5-e" in line for line in lines)


@pytest.mark.parametrize(
    "argv",
    [
        ("check", "--pattern", "k5-p3", "--seq", "4,3^2,2^3"),
        ("check", "--pattern", "k311", "--seq", "4^6", "--oracle"),
        ("check", "--pattern", "c5", "--seq", "2^6", "--oracle"),
        ("realize", "--seq", "4,3^4"),
        ("witness", "--pattern", "k5-2k2", "--seq", "4,3^4"),
        ("witness", "--pattern", "k5-a3", "--seq", "5,3^3,2^2"),
        ("verify", "--pattern", "c4", "--n-lo", "4", "--n-hi", "6"),
        ("sigma", "--pattern", "k311", "--n", "6"),
        ("patterns",),
    ],
)
def test_json_round_trips(capsys, argv):
    _, out, _ = run_main(capsys, *argv, "--json")
    doc = json.loads(out)
    assert doc["schema"] == "v1"
    assert json.dumps(doc, indent=2) + "\n" == out


def test_workers_do_not_change_output(capsys):
    _, base, _ = run_main(capsys, "sigma", "--pattern", "k5-p3", "--n", "6", "--json")
    _, multi, _ = run_main(
        capsys, "sigma", "--pattern", "k5-p3", "--n", "6", "--workers", "3", "--json"
    )
    assert base == multi

    _, base, _ = run_main(capsys, "verify", "--pattern", "c4", "--n-lo", "4", "--n-hi", "6", "--json")
    _, multi, _ = run_main(
        capsys,
        "verify", "--pattern", "c4", "--n-lo", "4", "--n-hi", "6",
        "--workers", "2", "--json",
    )
    assert base == multi


def test_workers_env_default(capsys, monkeypatch):
    monkeypatch.setenv("DEGSEQ_WORKERS", "2")
    _, out, _ = run_main(capsys, "verify", "--pattern", "k5-k3", "--n-lo", "5", "--n-hi", "6", "--json")
    monkeypatch.delenv("DEGSEQ_WORKERS")
    _, baseline, _ = run_main(capsys, "verify", "--pattern", "k5-k3", "--n-lo", "5", "--n-hi", "6", "--json")
    assert out == baseline


def test_format_flags_mutually_exclusive():
    proc = subprocess.run(
        [sys.executable, "-m", "degseq.cli", "patterns", "--json", "--text"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 2


def test_unknown_pattern_token_is_an_input_error():
    # k5-e exists in the library but has no CLI surface
    proc = subprocess.run(
        [sys.executable, "-m", "degseq.cli", "sigma", "--pattern", "k5-e", "--n", "5"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 2


def test_console_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "degseq.cli", "check", "--pattern", "k5-k3", "--seq", "4^5"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert "potentially" in proc.stdout
