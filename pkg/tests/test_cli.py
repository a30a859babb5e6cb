"""Command-line interface: reports, determinism, and exit codes."""

import json

import pytest

from hallcanon.cli import main, parse_quiver


def run(capsys, *argv):
    rc = main(list(argv))
    out = capsys.readouterr().out
    return rc, out


class TestParsing:
    def test_parse_quiver(self):
        q = parse_quiver("1->2,2->3")
        assert q.n == 3
        assert tuple(q.arrows) == ((0, 1), (1, 2))

    def test_parallel_arrows(self):
        q = parse_quiver("0->1,0->1")
        assert q.n == 2 and len(q.arrows) == 2


class TestExitCodes:
    def test_usage_error_on_bad_family(self, capsys):
        rc = main(["canonical", "--family", "dynkin", "--dim", "1,1"])
        assert rc == 4  # missing --quiver

    def test_usage_error_on_bad_args(self, capsys):
        assert main(["nonsense"]) == 4

    def test_success_a2(self, capsys, tmp_path):
        rc, out = run(capsys, "canonical", "--family", "dynkin",
                      "--quiver", "1->2", "--dim", "1,1",
                      "--cache-dir", str(tmp_path / "c.jsonl"))
        assert rc == 0
        report = json.loads(out)
        assert all(c["status"] == "pass" for c in report["checks"])
        assert len(report["results"]) == 2


class TestReports:
    def test_json_deterministic(self, capsys, tmp_path):
        args = ["canonical", "--family", "dynkin", "--quiver", "1->2,2->3",
                "--dim", "1,1,1", "--cache-dir", str(tmp_path / "c.jsonl")]
        rc1, out1 = run(capsys, *args)
        rc2, out2 = run(capsys, *args)
        assert rc1 == rc2 == 0
        assert out1 == out2

    def test_table_output(self, capsys, tmp_path):
        rc, out = run(capsys, "canonical", "--family", "dynkin",
                      "--quiver", "1->2", "--dim", "1,1", "--out", "table",
                      "--cache-dir", str(tmp_path / "c.jsonl"))
        assert rc == 0
        assert "[pass]" in out

    def test_hall_subcommand(self, capsys, tmp_path):
        rc, out = run(capsys, "hall", "--family", "dynkin",
                      "--quiver", "1->2", "--total", "M11",
                      "--quot", "S1", "--sub", "S2",
                      "--cache-dir", str(tmp_path / "c.jsonl"))
        assert rc == 0
        report = json.loads(out)
        assert report["checks"][0]["status"] == "pass"
        per_prime = report["results"][0]["per_prime"]
        assert per_prime and all(e["count"] == 1 for e in per_prime)

    def test_verify_serre_single_family(self, capsys, tmp_path):
        rc, out = run(capsys, "verify", "serre", "--family", "dynkin",
                      "--quiver", "1->2",
                      "--cache-dir", str(tmp_path / "c.jsonl"))
        assert rc == 0
        report = json.loads(out)
        assert report["checks"][0]["status"] == "pass"

    def test_verify_kostka_small(self, capsys):
        rc, out = run(capsys, "verify", "kostka", "--max-weight", "2")
        assert rc == 0
        report = json.loads(out)
        assert all(c["status"] == "pass" for c in report["checks"])

    def test_cyclic_canonical(self, capsys, tmp_path):
        rc, out = run(capsys, "canonical", "--family", "cyclic", "--n", "1",
                      "--dim", "1,1",
                      "--cache-dir", str(tmp_path / "c.jsonl"))
        assert rc == 0
        report = json.loads(out)
        assert all(c["status"] == "pass" for c in report["checks"])

    def test_kronecker_canonical(self, capsys):
        rc, out = run(capsys, "canonical", "--family", "kronecker",
                      "--dim", "1,1")
        assert rc == 0
        report = json.loads(out)
        assert all(c["status"] == "pass" for c in report["checks"])
