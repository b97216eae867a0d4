import json
import os
import subprocess
import sys
from pathlib import Path

import pytest

from grundylab.cli import main

FIXTURES = Path(__file__).parent / "fixtures"


def run(argv, capsys):
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


def test_invariants_c4(capsys):
    code, out, _ = run(["invariants", str(FIXTURES / "c4.g6")], capsys)
    assert code == 0
    row = json.loads(out)
    assert row["graph6"] == "Cl"
    assert (row["gamma"], row["psi"], row["col"], row["chi"], row["omega"]) == (2, 2, 3, 2, 2)


def test_invariants_edge_list_and_csv(capsys):
    code, out, _ = run(["invariants", str(FIXTURES / "c4.edges"), "--format", "csv", "--no-grundy"], capsys)
    assert code == 0
    header, row = out.strip().splitlines()
    fields = dict(zip(header.split(","), row.split(",")))
    assert fields["graph6"] == "Cl" and fields["gamma"] == ""


def test_invariants_bad_input(tmp_path, capsys):
    bad = tmp_path / "bad.g6"
    bad.write_text("C!\n")
    code, _, err = run(["invariants", str(bad)], capsys)
    assert code == 2 and "error" in err
    code, _, _ = run(["invariants", str(tmp_path / "missing.g6")], capsys)
    assert code == 2


def test_generate_stdout(capsys):
    code, out, _ = run(["generate", "--family", "ng_sharp", "--n", "6", "--k", "3", "--check"], capsys)
    g6, meta = out.strip().splitlines()
    meta = json.loads(meta)
    assert code == 0 and g6 == "E~z_" and meta["matches"] is True
    assert meta["expected"]["gamma"] + meta["expected"]["chi_complement"] == 7


def test_generate_sidecar(tmp_path, capsys):
    target = tmp_path / "b5.g6"
    code, out, _ = run(["generate", "--family", "b_graph", "--k", "5", "--check", "-o", str(target)], capsys)
    assert code == 0 and out == ""
    meta = json.loads((tmp_path / "b5.json").read_text())
    assert meta["family"] == "b_graph" and meta["params"] == {"k": 5}
    assert meta["computed"]["gamma"] == 5
    assert target.read_text().strip() == meta["graph6"]


def test_generate_bad_params(capsys):
    assert run(["generate", "--family", "zaker_soltani", "--k", "1", "--n", "4"], capsys)[0] == 2
    assert run(["generate", "--family", "cycle"], capsys)[0] == 2


def test_verify_json_and_csv(tmp_path, capsys):
    code, out, err = run(["verify", "--suite", "eq2,thm46", "--max-n", "4"], capsys)
    assert code == 0 and "0 violations" in err
    report = json.loads(out)
    assert report["graphs"] == 1 + 2 + 4 + 11 and report["violations"] == []
    assert "elapsed" not in report

    target = tmp_path / "out.csv"
    code, out, _ = run(["verify", "--suite", "eq2", "--max-n", "3", "--format", "csv", "-o", str(target)], capsys)
    lines = target.read_text().splitlines()
    assert code == 0 and out == "" and len(lines) == 1 + 1 + 2 + 4


def test_verify_corpus_file(capsys):
    code, out, _ = run(["verify", "--suite", "conj2", "--corpus", str(FIXTURES / "c4.g6"), "--timing"], capsys)
    report = json.loads(out)
    assert code == 0 and report["counts"]["conj2"]["skipped"] == 1 and "elapsed" in report


def test_verify_exit_one_on_violation(monkeypatch, capsys):
    from grundylab import verify

    monkeypatch.setitem(verify.CHECKS, "always_false", lambda g, s: (False, False, {}))
    monkeypatch.setattr(verify, "ALL_CHECKS", verify.ALL_CHECKS + ("always_false",))
    monkeypatch.setattr("grundylab.cli.ALL_CHECKS", verify.ALL_CHECKS)
    code, out, _ = run(["verify", "--suite", "always_false", "--max-n", "2"], capsys)
    assert code == 1 and len(json.loads(out)["violations"]) == 3


def test_verify_usage_errors(capsys):
    assert run(["verify", "--suite", "nope", "--max-n", "3"], capsys)[0] == 2
    assert run(["verify", "--suite", "all"], capsys)[0] == 2
    assert run(["verify", "--max-n", "9"], capsys)[0] == 2


def test_search(capsys):
    code, out, _ = run(["search", "--conjecture", "conj2", "--max-n", "5"], capsys)
    assert code == 0 and json.loads(out)["witness"] is None
    assert run(["search", "--conjecture", "conj1", "--max-n", "9"], capsys)[0] == 2


@pytest.mark.slow
def test_numpy_fallback_subprocess():
    env = dict(os.environ, GLAB_DISABLE_JIT="1")
    proc = subprocess.run(
        [sys.executable, "-m", "grundylab", "invariants", str(FIXTURES / "p4.g6")],
        env=env, capture_output=True, text=True, check=True,
    )
    row = json.loads(proc.stdout)
    assert (row["gamma"], row["psi"]) == (3, 3)
    probe = "from grundylab import _jit, kernels; print(_jit.USE_JIT, kernels.max_first_fit is kernels.max_first_fit_numpy)"
    out = subprocess.run([sys.executable, "-c", probe], env=env, capture_output=True, text=True, check=True).stdout
    assert out.split() == ["False", "True"]
