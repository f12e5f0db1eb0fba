import io
import json
import subprocess
import sys
from contextlib import redirect_stdout

import pytest

from ncinv.cli import build_parser, emit, main, run


def invoke(*argv):
    """Run the CLI in-process; returns (exit status, stdout bytes)."""
    buf = io.StringIO()
    with redirect_stdout(buf):
        status = main(list(argv))
    return status, buf.getvalue().encode()


def test_beta_subcommand_json():
    status, out = invoke("beta", "--algebra", "skew", "--n", "3", "--max-multiple", "5")
    assert status == 0
    data = json.loads(out)
    assert data["beta"] == 9
    assert data["algebra"] == {"kind": "skew", "n": 3}
    assert [d["degree"] for d in data["degrees"]] == list(range(1, 16))


def test_verify_kernel_exit_zero():
    status, out = invoke("verify", "--target", "kernel-2n", "--algebra", "skew", "--n", "4")
    assert status == 0
    assert json.loads(out)["failures"] == []


def test_verify_beta_theorem():
    status, out = invoke(
        "verify", "--target", "beta-theorem", "--algebra", "downup",
        "--alpha", "0", "--beta", "1", "--n", "2",
    )
    assert status == 0
    data = json.loads(out)
    assert data["expected"] == data["computed"] == 4


def test_invariants_downup_0_minus1_degree_4():
    status, out = invoke(
        "invariants", "--algebra", "downup", "--alpha", "0", "--beta", "-1",
        "--n", "1", "--degree", "4",
    )
    assert status == 0
    data = json.loads(out)
    assert data["dimension"] == data["trace_dimension"] == 5
    assert len(data["basis"]) == 5


def test_explore_reproduces_question_values():
    status, out = invoke("explore", "--n", "1", "--max-multiple", "6")
    assert status == 0
    data = json.loads(out)
    betas = {e["algebra"]["alpha"]: e["beta"] for e in data["explorations"]}
    assert betas == {"0": 4, "2": 2}


def test_invalid_inputs_exit_2():
    assert invoke("beta", "--algebra", "skew", "--n", "0")[0] == 2
    assert invoke("beta", "--algebra", "downup", "--n", "2")[0] == 2  # missing alpha/beta
    assert invoke("beta", "--algebra", "skew", "--n", "2", "--alpha", "1")[0] == 2
    assert invoke("verify", "--target", "kernel-2n", "--algebra", "skew", "--n", "6")[0] == 2
    assert invoke("beta", "--algebra", "downup", "--alpha", "1", "--beta", "0", "--n", "1")[0] == 2
    with pytest.raises(SystemExit) as exc:
        build_parser().parse_args(["verify", "--target", "bogus", "--n", "2"])
    assert exc.value.code == 2


def test_byte_determinism_across_runs_and_widths():
    base = invoke("explore", "--n", "1", "--max-multiple", "4")
    for argv in (
        ["explore", "--n", "1", "--max-multiple", "4"],
        ["explore", "--n", "1", "--max-multiple", "4", "--threads", "1"],
        ["explore", "--n", "1", "--max-multiple", "4", "--threads", "4"],
    ):
        assert invoke(*argv) == base
    a = invoke("beta", "--algebra", "skew", "--n", "4", "--format", "csv")
    b = invoke("beta", "--algebra", "skew", "--n", "4", "--format", "csv", "--threads", "3")
    assert a == b


def test_csv_format():
    status, out = invoke("beta", "--algebra", "skew", "--n", "2", "--format", "csv")
    lines = out.decode().splitlines()
    assert lines[0] == "degree,inv_dim,product_dim,new_gens"
    assert lines[1] == "1,0,0,0"
    assert lines[2] == "2,2,0,2"
    assert len(lines) == 11


def test_csv_empty_report_is_header_only():
    report = {"algebra": {"kind": "skew", "n": 2}, "n": 2, "degrees": [],
              "beta": 0, "exhausted": False}
    assert emit(report, "csv") == "degree,inv_dim,product_dim,new_gens\n"


def test_table_format_mentions_beta():
    status, out = invoke("beta", "--algebra", "skew", "--n", "2", "--format", "table")
    assert b"beta = 2" in out


def test_verification_failure_exit_code_is_1(monkeypatch):
    # the identities all hold, so force a wrong beta to exercise the contract
    import ncinv.cli as cli

    class Stub:
        beta = 7

    monkeypatch.setattr(cli, "compute_beta", lambda act, mm: Stub())
    parser = build_parser()
    args = parser.parse_args(
        ["verify", "--target", "beta-theorem", "--algebra", "skew", "--n", "3"]
    )
    status, text = run(args)
    assert status == 1
    report = json.loads(text)
    assert report["failures"][0]["closed_form"] == "9"
    assert report["failures"][0]["engine"] == "7"


def test_installed_entry_point_end_to_end():
    proc = subprocess.run(
        [sys.executable, "-m", "ncinv.cli", "beta", "--algebra", "skew", "--n", "2"],
        capture_output=True,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["beta"] == 2
    bad = subprocess.run(
        [sys.executable, "-m", "ncinv.cli", "beta", "--algebra", "skew", "--n", "-1"],
        capture_output=True,
    )
    assert bad.returncode == 2


def test_threads_env_override():
    proc = subprocess.run(
        [sys.executable, "-m", "ncinv.cli", "explore", "--n", "1",
         "--max-multiple", "4"],
        capture_output=True,
        env={"PATH": "/usr/bin:/bin", "NCINV_THREADS": "2"},
    )
    assert proc.returncode == 0
    ref = invoke("explore", "--n", "1", "--max-multiple", "4")[1]
    assert proc.stdout == ref
    bad = subprocess.run(
        [sys.executable, "-m", "ncinv.cli", "explore", "--n", "1"],
        capture_output=True,
        env={"PATH": "/usr/bin:/bin", "NCINV_THREADS": "zero"},
    )
    assert bad.returncode == 2
