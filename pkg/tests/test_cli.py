"""Black-box tests of the command-line interface.

Every test invokes the CLI in a subprocess, exactly as a user would,
and checks the documented contract: JSON/CSV payloads, determinism of
repeated runs, and the exit codes 0 (ok), 1 (verification failure),
2 (usage/parse error), 3 (budget exceeded).
"""

import json
import os
import subprocess
import sys

import pytest

CLI = [sys.executable, "-m", "stacksimplex"]


def run_cli(*args, env_extra=None, timeout=240):
    env = os.environ.copy()
    env.pop("STACKSORT_BUDGET", None)
    if env_extra:
        env.update(env_extra)
    return subprocess.run(
        CLI + list(args), capture_output=True, text=True, env=env, timeout=timeout
    )


class TestAnalyze:
    def test_231_json_payload(self):
        proc = run_cli("analyze", "231")
        assert proc.returncode == 0
        report = json.loads(proc.stdout)
        assert report["meta"]["command"] == "analyze"
        assert report["permutation"] == "2 3 1"
        assert report["index"] == 2
        assert report["dimension"] == 2
        assert report["relative_volume"] == {"num": 1, "den": 1}
        assert report["euclidean_volume_squared"] == {"num": 3, "den": 1}
        assert report["euclidean_volume_display"] == "sqrt(3)"
        assert report["lattice_points_t1"] == 4
        assert report["h_star"] == [1, 1, 0]
        assert report["hollow"] is True
        assert report["triangulation"]["search_status"] == "found"
        assert report["budget_exceeded"] == []

    def test_repeat_runs_byte_identical(self):
        a = run_cli("analyze", "3241")
        b = run_cli("analyze", "3241")
        assert a.returncode == b.returncode == 0
        assert a.stdout == b.stdout

    def test_12543_relative_volume(self):
        proc = run_cli("analyze", "12543", "--no-triangulation")
        assert proc.returncode == 0
        assert json.loads(proc.stdout)["relative_volume"] == {"num": 2, "den": 1}

    def test_flagship_count_exceeds_256(self):
        proc = run_cli(
            "analyze", "2 3 4 5 8 6 7 9 1", "--no-triangulation", "--no-hstar"
        )
        assert proc.returncode == 0
        assert json.loads(proc.stdout)["lattice_points_t1"] == 267

    def test_stage_flags_null_fields(self):
        proc = run_cli("analyze", "231", "--no-hstar", "--no-triangulation")
        assert proc.returncode == 0
        report = json.loads(proc.stdout)
        assert report["h_star"] is None
        assert report["triangulation"] is None

    def test_parse_error_exit_2(self):
        proc = run_cli("analyze", "1 2 2")
        assert proc.returncode == 2
        assert proc.stdout == ""
        assert "1 2 2" in proc.stderr or "bijection" in proc.stderr.lower()

    def test_budget_flag_exit_3(self):
        proc = run_cli("analyze", "23451", "--budget", "3")
        assert proc.returncode == 3
        report = json.loads(proc.stdout)
        assert "points" in report["budget_exceeded"]
        assert report["lattice_points_t1"] is None

    def test_budget_env_applies(self):
        proc = run_cli("analyze", "23451", env_extra={"STACKSORT_BUDGET": "3"})
        assert proc.returncode == 3

    def test_flag_beats_env(self):
        proc = run_cli(
            "analyze", "231", "--budget", "1000000",
            env_extra={"STACKSORT_BUDGET": "3"},
        )
        assert proc.returncode == 0

    def test_malformed_env_budget_exit_2(self):
        proc = run_cli("analyze", "231", env_extra={"STACKSORT_BUDGET": "lots"})
        assert proc.returncode == 2
        assert "STACKSORT_BUDGET" in proc.stderr


class TestSweep:
    def test_summary_and_csv(self, tmp_path):
        out = tmp_path / "rows.csv"
        proc = run_cli("sweep", "3", "--csv", str(out))
        assert proc.returncode == 0
        summary = json.loads(proc.stdout)
        assert summary["meta"]["command"] == "sweep"
        assert summary["total"] == 6
        assert summary["index_histogram"] == {"0": 1, "1": 4, "2": 1}
        lines = out.read_text().splitlines()
        assert lines[0].startswith("permutation,n,index,")
        assert len(lines) == 7

    def test_csv_deterministic_and_parallel_equal(self, tmp_path):
        runs = {}
        for tag, jobs in [("serial", "1"), ("parallel", "3"), ("again", "1")]:
            out = tmp_path / f"{tag}.csv"
            proc = run_cli("sweep", "4", "--jobs", jobs, "--csv", str(out))
            assert proc.returncode == 0
            runs[tag] = (proc.stdout, out.read_bytes())
        assert runs["serial"] == runs["again"]
        assert runs["serial"] == runs["parallel"]

    def test_filter_ln1(self):
        proc = run_cli("sweep", "4", "--filter", "Ln1")
        assert proc.returncode == 0
        summary = json.loads(proc.stdout)
        assert summary["total"] == 2

    def test_rejects_bad_filter(self):
        proc = run_cli("sweep", "4", "--filter", "weird")
        assert proc.returncode == 2

    def test_budget_rows_flagged_exit_3(self, tmp_path):
        out = tmp_path / "rows.csv"
        proc = run_cli("sweep", "4", "--budget", "3", "--csv", str(out))
        assert proc.returncode == 3
        summary = json.loads(proc.stdout)
        assert summary["rows_budget_exceeded"] > 0
        # flagged rows leave the unavailable geometry fields empty
        assert any(",,," in line for line in out.read_text().splitlines()[1:])


class TestVerify:
    def test_all_claims_small_range(self):
        proc = run_cli("verify", "--claims", "all", "--n", "2..5")
        assert proc.returncode == 0
        verdict = json.loads(proc.stdout)
        assert verdict["passed"] is True
        assert len(verdict["claims"]) == 8
        for claim in verdict["claims"]:
            assert claim["passed"] is True
            assert claim["first_failure"] is None

    def test_single_claim(self):
        proc = run_cli("verify", "--claims", "parallelepiped-det", "--n", "2..12")
        assert proc.returncode == 0
        verdict = json.loads(proc.stdout)
        names = {c["name"] for c in verdict["claims"]}
        assert names == {"parallelepiped-det"}

    def test_unknown_claim_exit_2(self):
        proc = run_cli("verify", "--claims", "no-such-claim")
        assert proc.returncode == 2

    def test_malformed_range_exit_2(self):
        proc = run_cli("verify", "--claims", "ln1-volume", "--n", "x..y")
        assert proc.returncode == 2

    def test_verify_deterministic(self):
        a = run_cli("verify", "--claims", "ln1-volume,point-bound", "--n", "2..5")
        b = run_cli("verify", "--claims", "ln1-volume,point-bound", "--n", "2..5")
        assert a.returncode == b.returncode == 0
        assert a.stdout == b.stdout


class TestTopLevel:
    def test_version_flag(self):
        proc = run_cli("--version")
        assert proc.returncode == 0
        assert "stacksimplex" in proc.stdout

    def test_unknown_subcommand_exit_2(self):
        proc = run_cli("frobnicate")
        assert proc.returncode == 2

    def test_no_arguments_exit_2(self):
        proc = run_cli()
        assert proc.returncode == 2
