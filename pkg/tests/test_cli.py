"""Command-line surface: every verb, the exit-code contract, golden stdout
for the reducer, and byte-identical JSON artifacts for seeded runs.

Exit codes: 0 pass, 1 check failed, 2 usage/syntax, 3 degenerate value,
4 structural misuse, 5 file/format trouble.
"""

from __future__ import annotations

import json
import shutil
import subprocess

import pytest

from uqson import cli


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


# -- pass paths -----------------------------------------------------------------


def test_pbw_reduce_golden_stdout(capsys):
    code, out, _ = run(capsys, "pbw-reduce", "--n", "3", "I32*I21")
    assert code == 0
    assert out == "q*I21*I32 - q^(1/2)*I31\n"


def test_pbw_reduce_infers_minus_variant(capsys):
    code, out, _ = run(capsys, "pbw-reduce", "--n", "3", "Im31")
    assert code == 0
    assert out == "Im31\n"


def test_relations_verify_summary(capsys):
    code, out, _ = run(capsys, "relations-verify", "--n", "4")
    assert code == 0
    assert "serre-a[2]: exact-zero: true" in out
    assert out.rstrip().endswith("relations-verify n=4 variant=plus: PASS (5 relations)")


def test_commrel_verify_both_variants(capsys):
    for variant in ("plus", "minus"):
        code, out, _ = run(capsys, "commrel-verify", "--n", "4", "--variant", variant)
        assert code == 0
        assert f"commrel-verify n=4 variant={variant}: PASS (15 identities)" in out


def test_assoc_fuzz_seeded_pass(capsys):
    code, out, _ = run(capsys, "assoc-fuzz", "--n", "3", "--degree", "3",
                       "--trials", "40", "--seed", "11")
    assert code == 0
    assert "assoc-fuzz n=3 degree=3 trials=40 seed=11 variant=plus: PASS" in out
    again, out2, _ = run(capsys, "assoc-fuzz", "--n", "3", "--degree", "3",
                         "--trials", "40", "--seed", "11")
    assert (again, out2) == (code, out)


def test_rep_pipeline_and_artifact_determinism(capsys, tmp_path):
    params = tmp_path / "omega.json"
    rep = tmp_path / "rep.json"
    report = tmp_path / "report.json"

    code, out, _ = run(capsys, "params-sample", "--n", "3", "--order", "5",
                       "--seed", "7", "--out", str(params))
    assert code == 0
    assert "parameters=3" in out

    code, out, _ = run(capsys, "rep-build", "--params", str(params), "--out", str(rep))
    assert code == 0
    assert "dim=5" in out

    code, out, _ = run(capsys, "rep-verify", "--rep", str(rep), "--q-order", "5",
                       "--commutant", "--out", str(report))
    assert code == 0
    assert "commutant-dim: 1" in out
    assert "PASS" in out

    code, out, _ = run(capsys, "rep-commutant", "--rep", str(rep))
    assert code == 0
    assert "commutant-dim: 1" in out

    # identical seeds must reproduce identical bytes
    params2 = tmp_path / "omega2.json"
    rep2 = tmp_path / "rep2.json"
    report2 = tmp_path / "report2.json"
    run(capsys, "params-sample", "--n", "3", "--order", "5", "--seed", "7",
        "--out", str(params2))
    run(capsys, "rep-build", "--params", str(params2), "--out", str(rep2))
    run(capsys, "rep-verify", "--rep", str(rep2), "--q-order", "5",
        "--commutant", "--out", str(report2))
    assert params.read_bytes() == params2.read_bytes()
    assert rep.read_bytes() == rep2.read_bytes()
    assert report.read_bytes() == report2.read_bytes()


def test_params_sample_counts(capsys, tmp_path):
    for n, expected in [(3, 3), (4, 6), (5, 10), (6, 15)]:
        out_path = tmp_path / f"p{n}.json"
        code, out, _ = run(capsys, "params-sample", "--n", str(n), "--order", "5",
                           "--seed", "1", "--out", str(out_path))
        assert code == 0
        assert f"parameters={expected}" in out
        data = json.loads(out_path.read_text())
        assert len(data["mTop"]) + len(data["h"]) + len(data["c"]) == expected


def test_embed_and_psi_reports(capsys, tmp_path):
    out_path = tmp_path / "embed.json"
    code, out, _ = run(capsys, "embed-verify", "--n", "3", "--out", str(out_path))
    assert code == 0
    assert "embed-verify n=3: PASS (4 checks)" in out
    assert len(json.loads(out_path.read_text())) == 4

    code, out, _ = run(capsys, "psi-verify", "--twoj", "4", "--seed", "9")
    assert code == 0
    assert "psi-verify twoj=4 samples=10 seed=9 tol=1.0e-10: PASS" in out


# -- failure and error paths ------------------------------------------------------


def test_exit_1_when_tolerance_is_unreachable(capsys, tmp_path):
    params = tmp_path / "omega.json"
    rep = tmp_path / "rep.json"
    run(capsys, "params-sample", "--n", "3", "--order", "3", "--seed", "2",
        "--out", str(params))
    run(capsys, "rep-build", "--params", str(params), "--out", str(rep))
    code, out, _ = run(capsys, "rep-verify", "--rep", str(rep), "--q-order", "3",
                       "--tol", "1e-30")
    assert code == 1
    assert "FAIL" in out


def test_exit_2_on_syntax_and_usage(capsys):
    code, _, err = run(capsys, "pbw-reduce", "--n", "4", "I43*(")
    assert code == 2
    assert "column 5" in err
    assert run(capsys, "no-such-verb")[0] == 2
    assert run(capsys, "assoc-fuzz", "--n", "4")[0] == 2  # --seed is mandatory
    assert run(capsys)[0] == 2


def test_exit_3_on_degenerate_order(capsys, tmp_path):
    params = tmp_path / "omega.json"
    run(capsys, "params-sample", "--n", "4", "--order", "2", "--seed", "1",
        "--out", str(params))
    code, _, err = run(capsys, "rep-build", "--params", str(params),
                       "--out", str(tmp_path / "rep.json"))
    assert code == 3
    assert "degenerate" in err.lower()


def test_exit_4_on_structural_misuse(capsys):
    code, _, err = run(capsys, "pbw-reduce", "--n", "3", "I43*I21")
    assert code == 4
    assert "exceeds rank 3" in err
    code, _, _ = run(capsys, "pbw-reduce", "--n", "3", "Ip31*Im21")
    assert code == 4


def test_exit_5_on_missing_or_malformed_files(capsys, tmp_path):
    code, _, _ = run(capsys, "rep-build", "--params", str(tmp_path / "nope.json"),
                     "--out", str(tmp_path / "out.json"))
    assert code == 5

    junk = tmp_path / "junk.json"
    junk.write_text("{not json")
    code, _, _ = run(capsys, "rep-verify", "--rep", str(junk), "--q-order", "3")
    assert code == 5

    # valid JSON with the wrong schema
    wrong = tmp_path / "wrong.json"
    wrong.write_text('{"n": 4}')
    code, _, _ = run(capsys, "rep-build", "--params", str(wrong),
                     "--out", str(tmp_path / "out.json"))
    assert code == 5


# -- installed entry point ---------------------------------------------------------


@pytest.mark.skipif(shutil.which("uqson") is None, reason="console script not installed")
def test_console_script_matches_module_invocation():
    proc = subprocess.run(
        ["uqson", "pbw-reduce", "--n", "3", "I32*I21"],
        capture_output=True, text=True, timeout=60,
    )
    assert proc.returncode == 0
    assert proc.stdout == "q*I21*I32 - q^(1/2)*I31\n"
