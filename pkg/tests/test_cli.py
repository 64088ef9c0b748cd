"""Command line behaviour: outputs, determinism, exit codes."""

import io
import json
from contextlib import redirect_stderr, redirect_stdout

import pytest

from symfai.cli import main


def run_cli(argv):
    out, err = io.StringIO(), io.StringIO()
    with redirect_stdout(out), redirect_stderr(err):
        code = main(argv)
    return code, out.getvalue(), err.getvalue()


def test_analyze_sigma4():
    code, out, _ = run_cli(["analyze", "--n", "8", "--f", "sigma:4"])
    assert code == 0
    payload = json.loads(out)
    assert payload["deg"] == 4 and payload["ai"] == 4 and payload["fai"] == 6
    assert payload["bounds_ok"] is True
    assert any(c["name"] == "fai_sandwich" for c in payload["bounds"])


def test_analyze_pretty_has_indentation():
    code, out, _ = run_cli(["analyze", "--n", "5", "--f", "majority", "--format", "pretty"])
    assert code == 0 and out.startswith("{\n ")


def test_attack_lists_certificates():
    code, out, _ = run_cli(["attack", "--n", "8", "--f", "sigma:4"])
    assert code == 0
    payload = json.loads(out)
    assert [c["source"] for c in payload] == ["thm5-multiplier"]
    assert payload[0]["h"] == "000001000"


def test_attack_residue_filter():
    code, out, _ = run_cli(["attack", "--n", "6", "--f", "0000001", "--k", "2"])
    assert code == 0
    payload = json.loads(out)
    assert [c["params"]["k"] for c in payload] == [2]


def test_convert_both_directions():
    code, out, _ = run_cli(["convert", "--n", "2", "--f", "101"])
    assert code == 0 and out == "v:110\n"
    code, out, _ = run_cli(["convert", "--n", "2", "--f", "v:110"])
    assert code == 0 and out == "101\n"


def test_search_n5_clean_exit():
    code, out, _ = run_cli(["search", "--n", "5"])
    assert code == 0
    payload = json.loads(out)
    assert payload["max_fai"] == 4 and payload["violations"] == []


def test_search_n6_reports_violations():
    code, out, err = run_cli(["search", "--n", "6"])
    assert code == 4
    assert json.loads(out)["max_fai"] == 6
    assert "fai_below_n" in err


def test_analyze_flags_failing_bound():
    # threshold 4 on n=6 trips the strict below-n check; the profile is
    # still emitted and the exit code signals the violation
    code, out, _ = run_cli(["analyze", "--n", "6", "--f", "sigma:4"])
    assert code == 4
    payload = json.loads(out)
    assert payload["bounds_ok"] is False
    assert payload["fai"] == 6


def test_search_out_writes_jsonl(tmp_path):
    path = tmp_path / "profiles.jsonl"
    code, out, _ = run_cli(["search", "--n", "3", "--out", str(path)])
    assert code == 0 and out == ""
    lines = path.read_text().splitlines()
    assert len(lines) == (1 << 4) + 1


def test_tables_csv_default():
    code, out, _ = run_cli(["tables"])
    assert code == 0
    assert out.splitlines()[0] == "degree_band,upper_ai"
    assert "128-255,128" in out


def test_stat_deterministic_bytes():
    args = ["stat", "--n", "21", "--samples", "300", "--seed", "9"]
    first = run_cli(args)
    second = run_cli(args)
    assert first == second and first[0] == 0
    payload = json.loads(first[1])
    assert payload["samples"] == 300 and payload["seed"] == 9


def test_parse_errors_exit_2():
    code, _, err = run_cli(["analyze", "--n", "4", "--f", "010"])  # wrong length
    assert code == 2 and "error" in err
    code, _, _ = run_cli(["convert", "--n", "3", "--f", "01x1"])
    assert code == 2
    code, _, _ = run_cli(["stat", "--n", "10", "--samples", "10"])
    assert code == 2  # even n


def test_capability_errors_exit_3():
    code, _, err = run_cli(["analyze", "--n", "20", "--f", "sigma:4"])
    assert code == 3 and "capability" in err
    code, _, _ = run_cli(["search", "--n", "11"])
    assert code == 3


def test_search_budget_exit_3():
    from symfai.search import _reports

    _reports.pop(2, None)
    code, _, err = run_cli(["search", "--n", "2", "--budget-seconds", "-1"])
    assert code == 3 and "budget" in err


def test_unknown_command_exits_2():
    with pytest.raises(SystemExit) as info:
        run_cli(["frobnicate"])
    assert info.value.code == 2


def test_out_file_matches_stdout(tmp_path):
    path = tmp_path / "out.json"
    code, out, _ = run_cli(["analyze", "--n", "5", "--f", "majority"])
    code2, out2, _ = run_cli(["analyze", "--n", "5", "--f", "majority", "--out", str(path)])
    assert code == code2 == 0 and out2 == ""
    assert path.read_text() == out


def test_cross_process_determinism(tmp_path):
    import subprocess
    import sys

    outputs = []
    for name in ("a.jsonl", "b.jsonl"):
        path = tmp_path / name
        proc = subprocess.run(
            [sys.executable, "-m", "symfai.cli", "search", "--n", "4", "--out", str(path)],
            capture_output=True,
            timeout=120,
        )
        assert proc.returncode == 0, proc.stderr.decode()
        outputs.append(path.read_bytes())
    assert outputs[0] == outputs[1]
