from __future__ import annotations

import json

import pytest

from c4free import parse_graph
from c4free.cli import main
from helpers import cycle


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestGen:
    def test_cycle_power_to_stdout(self, capsys):
        code, out, _ = run_cli(capsys, "gen", "cycle-power", "--k", "1")
        assert code == 0
        assert parse_graph(out) == cycle(5)

    def test_w5_to_file(self, capsys, tmp_path):
        target = tmp_path / "g.txt"
        code, _, _ = run_cli(capsys, "gen", "w5", "--sizes", "0,1,1,1,1,1", "-o", str(target))
        assert code == 0
        assert parse_graph(target.read_text()) == cycle(5)

    def test_substitute(self, capsys, tmp_path):
        base = tmp_path / "base.txt"
        base.write_text("5 5\n0 1\n0 4\n1 2\n2 3\n3 4\n")
        code, out, _ = run_cli(
            capsys, "gen", "substitute", "--base", str(base), "--sizes", "2,1,1,1,1"
        )
        assert code == 0
        assert parse_graph(out).n == 6

    def test_random_deterministic(self, capsys):
        args = ("gen", "random", "--n", "12", "--p", "1/3", "--seed", "7")
        _, out1, _ = run_cli(capsys, *args)
        _, out2, _ = run_cli(capsys, *args)
        assert out1 == out2

    def test_bad_k_is_usage_error(self, capsys):
        code, _, err = run_cli(capsys, "gen", "cycle-power", "--k", "0")
        assert code == 2
        assert "error" in err


class TestCheck:
    def test_c4free_graph(self, capsys, tmp_path):
        f = tmp_path / "c5.txt"
        f.write_text("5 5\n0 1\n0 4\n1 2\n2 3\n3 4\n")
        code, out, _ = run_cli(capsys, "check", "c4free", str(f))
        assert code == 0
        assert out.strip() == "c4-free"

    def test_c4_witness(self, capsys, tmp_path):
        f = tmp_path / "c4.txt"
        f.write_text("4 4\n0 1\n1 2\n2 3\n0 3\n")
        code, out, _ = run_cli(capsys, "check", "c4free", str(f))
        assert code == 1
        assert out.startswith("induced-c4:")

    def test_parse_error_exit_code(self, capsys, tmp_path):
        f = tmp_path / "bad.txt"
        f.write_text("3 1\n0 9\n")
        code, _, err = run_cli(capsys, "check", "c4free", str(f))
        assert code == 2
        assert "line 2" in err


class TestClique:
    def test_exact(self, capsys, tmp_path):
        f = tmp_path / "g.txt"
        f.write_text("5 5\n0 1\n0 4\n1 2\n2 3\n3 4\n")
        code, out, _ = run_cli(capsys, "clique", "exact", str(f))
        assert code == 0
        payload = json.loads(out)
        assert payload == {"clique": [0, 1], "size": 2}

    def test_exact_respects_oracle_limit(self, capsys, tmp_path):
        f = tmp_path / "g.txt"
        f.write_text("5 5\n0 1\n0 4\n1 2\n2 3\n3 4\n")
        code, _, err = run_cli(capsys, "clique", "exact", str(f), "--oracle-limit", "4")
        assert code == 2
        assert "oracle limit" in err

    def test_extract_auto_picks_regular(self, capsys, tmp_path):
        f = tmp_path / "g.txt"
        main(["gen", "cycle-power", "--k", "2", "-o", str(f)])
        code, out, _ = run_cli(capsys, "clique", "extract", str(f))
        assert code == 0
        payload = json.loads(out)
        assert payload["method"] == "regular"
        assert payload["size"] == 3
        assert payload["verified"]

    def test_extract_auto_falls_back_to_general(self, capsys, tmp_path):
        f = tmp_path / "g.txt"
        f.write_text("4 3\n0 1\n1 2\n2 3\n")
        code, out, _ = run_cli(capsys, "clique", "extract", str(f))
        assert code == 0
        assert json.loads(out)["method"] == "general"

    def test_extract_large_alpha_with_set(self, capsys, tmp_path):
        f = tmp_path / "g.txt"
        f.write_text("5 5\n0 1\n0 4\n1 2\n2 3\n3 4\n")
        code, out, _ = run_cli(
            capsys,
            "clique", "extract", str(f),
            "--method", "large-alpha",
            "--epsilon", "1/4",
            "--independent-set", "0,2",
        )
        assert code == 0
        payload = json.loads(out)
        assert payload["method"] == "large-alpha"
        assert payload["witness"]["epsilon"] == "1/4"

    def test_extract_not_c4free_is_input_error(self, capsys, tmp_path):
        f = tmp_path / "g.txt"
        f.write_text("4 4\n0 1\n1 2\n2 3\n0 3\n")
        code, _, err = run_cli(capsys, "clique", "extract", str(f), "--method", "general")
        assert code == 2
        assert "4-cycle" in err

    def test_stdin_pipeline(self, capsys, monkeypatch, tmp_path):
        import io

        f = tmp_path / "g.txt"
        main(["gen", "random", "--n", "10", "--p", "2/5", "--seed", "3", "-o", str(f)])
        monkeypatch.setattr("sys.stdin", io.StringIO(f.read_text()))
        code, out, _ = run_cli(capsys, "clique", "extract", "--method", "general", "-")
        assert code == 0
        assert json.loads(out)["verified"]


class TestStructure:
    def test_p4_certificate(self, capsys, tmp_path):
        f = tmp_path / "p4.txt"
        f.write_text("4 3\n0 1\n1 2\n2 3\n")
        code, out, _ = run_cli(capsys, "structure", str(f))
        assert code == 0
        payload = json.loads(out)
        assert payload["kind"] == "complement-bipartite"
        assert payload["parts"] == [[0, 1], [2, 3]]

    def test_alpha_above_two(self, capsys, tmp_path):
        f = tmp_path / "g.txt"
        main(["gen", "cycle-power", "--k", "2", "-o", str(f)])
        code, out, err = run_cli(capsys, "structure", str(f))
        assert code == 1
        assert out.strip() == "alpha>2"
        assert "witness" in err


class TestVerify:
    def test_passing_suite(self, capsys, tmp_path):
        out_json = tmp_path / "report.json"
        code, out, _ = run_cli(
            capsys,
            "verify", "--suite", "cycle-powers",
            "--seed", "1", "--samples", "1", "--max-n", "25",
            "--json", str(out_json),
        )
        assert code == 0
        assert "6/6 pass" in out
        payload = json.loads(out_json.read_text())
        assert payload["failed"] == 0

    def test_json_report_deterministic(self, capsys, tmp_path):
        f1, f2 = tmp_path / "a.json", tmp_path / "b.json"
        for f in (f1, f2):
            code, _, _ = run_cli(
                capsys,
                "verify", "--suite", "bounds-general",
                "--seed", "5", "--samples", "10", "--max-n", "20",
                "--json", str(f),
            )
            assert code == 0
        assert f1.read_bytes() == f2.read_bytes()

    def test_unknown_suite_usage_error(self, capsys):
        code, _, err = run_cli(capsys, "verify", "--suite", "bogus")
        assert code == 2
        assert "unknown suite" in err
