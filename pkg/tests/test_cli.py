"""End-to-end CLI behavior through real subprocesses.

Exit code contract: 0 success, 1 verification failed or infeasible,
2 usage error or inadmissible parameters, 3 node budget exhausted.
"""

import os
import subprocess
import sys

import pytest

from ucycles.core import CycleWord
from ucycles.searchgen import generate_subset_ucycle
from ucycles.ucyfile import save_ucy

from goldens import BASE_WORD_4


def run_cli(*args, env_extra=None):
    env = dict(os.environ)
    if env_extra:
        env.update(env_extra)
    return subprocess.run(
        [sys.executable, "-m", "ucycles", *args],
        capture_output=True,
        text=True,
        env=env,
        timeout=240,
    )


@pytest.fixture(scope="module")
def base_file(tmp_path_factory):
    p = tmp_path_factory.mktemp("ucy") / "base4.ucy"
    save_ucy(p, CycleWord(4, BASE_WORD_4), 3)
    return str(p)


@pytest.fixture(scope="module")
def subset_file(tmp_path_factory):
    p = tmp_path_factory.mktemp("ucy") / "subset8.ucy"
    save_ucy(p, generate_subset_ucycle(8, 3), 3)
    return str(p)


class TestGen:
    def test_inductive(self, tmp_path):
        out = tmp_path / "w.ucy"
        r = run_cli("gen", "--n", "10", "--t", "3", "--method", "inductive", "--out", str(out))
        assert r.returncode == 0
        body = out.read_text().splitlines()
        assert body[0] == "10 3"
        assert len(body[1].split()) == 220
        assert out.with_suffix(".provenance").read_text() == "n=10 path=pattern\n"

    def test_doubling(self):
        r = run_cli("gen", "--n", "8", "--t", "3", "--method", "doubling")
        assert r.returncode == 0
        assert len(r.stdout.splitlines()[1].split()) == 120

    def test_auto_picks_inadmissible_apart(self):
        r = run_cli("gen", "--n", "9", "--t", "3", "--method", "auto")
        assert r.returncode == 2
        assert "inadmissible" in r.stderr

    def test_method_preconditions(self):
        assert run_cli("gen", "--n", "8", "--t", "3", "--method", "inductive").returncode == 2
        assert run_cli("gen", "--n", "13", "--t", "3", "--method", "doubling").returncode == 2

    def test_budget_exhaustion(self):
        r = run_cli("gen", "--n", "13", "--t", "3", "--method", "search", "--budget", "100")
        assert r.returncode == 3
        assert "budget" in r.stderr

    def test_env_budget(self):
        r = run_cli(
            "gen", "--n", "13", "--t", "3", "--method", "search",
            env_extra={"UCYCLE_BUDGET": "100"},
        )
        assert r.returncode == 3

    def test_env_budget_malformed(self):
        r = run_cli(
            "gen", "--n", "13", "--t", "3", "--method", "search",
            env_extra={"UCYCLE_BUDGET": "lots"},
        )
        assert r.returncode == 2

    def test_round_trip_with_verify(self, tmp_path):
        out = tmp_path / "w.ucy"
        r = run_cli("gen", "--n", "7", "--t", "3", "--method", "auto", "--out", str(out))
        assert r.returncode == 0
        r2 = run_cli("verify", "--input", str(out), "--kind", "multiset")
        assert r2.returncode == 0


class TestVerify:
    def test_ok(self, base_file):
        r = run_cli("verify", "--input", base_file, "--kind", "multiset")
        assert r.returncode == 0
        assert "ok: true" in r.stdout

    def test_subset_kind(self, subset_file):
        r = run_cli("verify", "--input", subset_file, "--kind", "subset")
        assert r.returncode == 0

    def test_truncated_word_fails(self, tmp_path, base_file):
        lines = open(base_file).read().splitlines()
        words = lines[1].split()
        bad = tmp_path / "short.ucy"
        bad.write_text(lines[0] + "\n" + " ".join(words[:-1]) + "\n")
        r = run_cli("verify", "--input", str(bad), "--kind", "multiset")
        assert r.returncode == 1
        assert "missing_count: " in r.stdout
        assert "missing_count: 0" not in r.stdout

    def test_malformed_file(self, tmp_path):
        bad = tmp_path / "bad.ucy"
        bad.write_text("garbage\nnot numbers\n")
        assert run_cli("verify", "--input", str(bad), "--kind", "multiset").returncode == 2

    def test_missing_file(self):
        assert run_cli("verify", "--input", "/nonexistent.ucy", "--kind", "subset").returncode == 2


class TestPairs:
    def test_report(self, subset_file):
        r = run_cli("pairs", "--input", subset_file)
        assert r.returncode == 0
        assert "matching_ok: true" in r.stdout
        assert "missing_count:" in r.stdout

    def test_rejects_non_subset_word(self, base_file):
        assert run_cli("pairs", "--input", base_file).returncode == 1


class TestCount:
    def test_exhaustive(self):
        r = run_cli("count", "--n", "4", "--t", "3")
        assert r.returncode == 0
        fields = r.stdout.split()
        assert fields[:5] == ["4", "3", "2", "2", "true"]
        assert int(fields[5]) > 0
        # byte-identical on a repeat run, node count included
        assert run_cli("count", "--n", "4", "--t", "3").stdout == r.stdout

    def test_inadmissible(self):
        assert run_cli("count", "--n", "3", "--t", "3").returncode == 2

    def test_budget_starved(self):
        r = run_cli("count", "--n", "5", "--t", "3", "--budget", "1000")
        assert r.returncode == 3
        assert "false" in r.stdout.split()

    def test_reflect_flag(self):
        r = run_cli("count", "--n", "3", "--t", "2", "--reflect")
        assert r.returncode == 0
        assert "reflections" in r.stderr


def test_usage_error_without_subcommand():
    assert run_cli().returncode == 2
