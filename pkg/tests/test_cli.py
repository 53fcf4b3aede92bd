"""Command-line interface: subcommands, output formats, exit codes."""

import json

import pytest

from hstarlib.cli import main

K3_TEXT = "p 3 3\ne 1 2\ne 1 3\ne 2 3\n"
K2_TEXT = "p 2 1\ne 1 2\n"
CHAIN2_TEXT = "p 2 1\nr 1 2\n"


@pytest.fixture
def k3_file(tmp_path):
    path = tmp_path / "k3.graph"
    path.write_text(K3_TEXT)
    return str(path)


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out


class TestChromatic:
    def test_k3_text(self, capsys, k3_file):
        code, out = run(capsys, "chromatic", k3_file)
        assert code == 0
        assert "chi = [0, 2, -3, 1]" in out
        assert "h = [0, 0, 0, 6]" in out

    def test_k2_text(self, capsys, tmp_path):
        path = tmp_path / "k2.graph"
        path.write_text(K2_TEXT)
        code, out = run(capsys, "chromatic", str(path))
        assert code == 0
        assert "chi = [0, -1, 1]" in out
        assert "h = [0, 0, 2]" in out

    def test_single_vertex_padding(self, capsys, tmp_path):
        path = tmp_path / "one.graph"
        path.write_text("p 1 0\n")
        code, out = run(capsys, "chromatic", str(path))
        assert code == 0
        assert "chi = [0, 1]" in out
        assert "h = [0, 1]" in out

    def test_json_round_trip(self, capsys, k3_file):
        code, out = run(capsys, "chromatic", k3_file, "--format", "json-lines")
        assert code == 0
        record = json.loads(out)
        assert record["chi"] == ["0", "2", "-3", "1"]
        assert record["h"] == ["0", "0", "0", "6"]
        assert all(isinstance(c, str) for c in record["chi"])

    def test_malformed_file_exit_2(self, capsys, tmp_path):
        path = tmp_path / "bad.graph"
        path.write_text("not a graph\n")
        assert main([str("chromatic"), str(path)]) == 2

    def test_missing_file_exit_2(self, tmp_path):
        assert main(["chromatic", str(tmp_path / "absent.graph")]) == 2


class TestHstar:
    def test_simplex_file(self, capsys, tmp_path):
        path = tmp_path / "tri.poly"
        path.write_text("simplex 2\n0 0\n2 0\n0 2\n")
        code, out = run(capsys, "hstar", str(path))
        assert code == 0
        assert "hstar = [1, 3]" in out

    def test_order_file(self, capsys, tmp_path):
        (tmp_path / "anti3.poset").write_text("p 3 0\n")
        path = tmp_path / "op.poly"
        path.write_text("order anti3.poset\n")
        code, out = run(capsys, "hstar", str(path))
        assert code == 0
        assert "hstar = [1, 4, 1]" in out


class TestDecompose:
    def test_graph_k2(self, capsys, tmp_path):
        path = tmp_path / "k2.graph"
        path.write_text(K2_TEXT)
        code, out = run(capsys, "decompose", "graph", str(path))
        assert code == 0
        assert "a = [0, -2, -2]" in out
        assert "b = [2, 2, 2]" in out
        assert "signs = PASS" in out

    def test_order_chain2(self, capsys, tmp_path):
        path = tmp_path / "chain2.poset"
        path.write_text(CHAIN2_TEXT)
        code, out = run(capsys, "decompose", "order", str(path))
        assert code == 0
        assert "a = [0, -1, -1]" in out
        assert "b = [1, 1, 1]" in out
        assert "signs = PASS" in out

    def test_stapledon_coeffs(self, capsys):
        code, out = run(capsys, "decompose", "stapledon", "--coeffs", "1,3", "--d", "2")
        assert code == 0
        assert "a = [1, 4, 1]" in out
        assert "b = [2]" in out
        assert "d = 2, s = 1, l = 2" in out

    def test_open_kind(self, capsys):
        code, out = run(capsys, "decompose", "open", "--coeffs", "1,3", "--d", "2")
        assert code == 0
        assert "a = [1, 4, 4, 1]" in out
        assert "b = [1, 4, 1]" in out

    def test_sign_failure_exit_1(self, capsys):
        code, out = run(capsys, "decompose", "stapledon", "--coeffs", "1,1,5", "--d", "2")
        assert code == 1
        assert "signs = FAIL" in out

    def test_json_mode(self, capsys, tmp_path):
        path = tmp_path / "k2.graph"
        path.write_text(K2_TEXT)
        code, out = run(capsys, "decompose", "graph", str(path), "--format", "json-lines")
        assert code == 0
        record = json.loads(out)
        assert record["a"] == ["0", "-2", "-2"]
        assert record["signs"] == "PASS"

    def test_missing_arguments_exit_2(self, capsys):
        assert main(["decompose", "stapledon"]) == 2
        assert main(["decompose", "order"]) == 2


class TestVerify:
    def test_posets_summary(self, capsys):
        code, out = run(capsys, "verify", "--posets", "3", "--checks", "thm1.2")
        assert code == 0
        assert "19 inputs, 0 failures" in out

    def test_posets_219(self, capsys):
        code, out = run(capsys, "verify", "--posets", "4", "--checks", "thm1.2")
        assert code == 0
        assert "219 inputs, 0 failures" in out

    def test_graphs_two_checks(self, capsys):
        code, out = run(capsys, "verify", "--graphs", "4", "--checks", "thm1.4,conj6.4")
        assert code == 0
        assert "64 inputs, 0 failures" in out

    def test_mutate_selftest_exit_1(self, capsys):
        code, out = run(
            capsys, "verify", "--graphs", "3", "--checks", "conj6.1", "--mutate-selftest"
        )
        assert code == 1
        assert "FAIL" in out
        assert "0 failures" not in out.splitlines()[-1]

    def test_random_corpus(self, capsys):
        code, out = run(
            capsys, "verify", "--random", "graph,5,3", "--seed", "7", "--checks", "thm1.4"
        )
        assert code == 0
        assert "3 inputs, 0 failures" in out

    def test_json_lines_stream(self, capsys):
        code, out = run(
            capsys,
            "verify",
            "--posets",
            "2",
            "--checks",
            "thm1.2",
            "--format",
            "json-lines",
        )
        assert code == 0
        records = [json.loads(line) for line in out.strip().splitlines()]
        assert [r["type"] for r in records] == ["report"] * 3 + ["summary"]
        assert records[-1]["failures"] == 0

    def test_text_and_json_verdicts_agree(self, capsys):
        code_text, _ = run(
            capsys, "verify", "--graphs", "2", "--checks", "conj6.1", "--mutate-selftest"
        )
        code_json, out = run(
            capsys,
            "verify",
            "--graphs",
            "2",
            "--checks",
            "conj6.1",
            "--mutate-selftest",
            "--format",
            "json-lines",
        )
        assert code_text == code_json == 1
        summary = json.loads(out.strip().splitlines()[-1])
        assert summary["failures"] > 0

    def test_no_corpus_exit_2(self, capsys):
        assert main(["verify"]) == 2

    def test_oversized_corpus_exit_2(self, capsys):
        assert main(["verify", "--posets", "7"]) == 2


class TestRandom:
    def test_deterministic_output(self, capsys):
        _, first = run(capsys, "random", "graph", "--d", "6", "--count", "2", "--seed", "3")
        _, again = run(capsys, "random", "graph", "--d", "6", "--count", "2", "--seed", "3")
        assert first == again
        assert first.startswith("c instance 0\np 6 ")

    def test_poset_instances_parse_back(self, capsys):
        from hstarlib.poset import Poset

        code, out = run(
            capsys,
            "random",
            "poset",
            "--d",
            "5",
            "--count",
            "2",
            "--seed",
            "9",
            "--format",
            "json-lines",
        )
        assert code == 0
        for line in out.strip().splitlines():
            record = json.loads(line)
            poset = Poset.from_text(record["text"])
            assert poset.d == 5


class TestUsage:
    def test_unknown_flag_exits_2(self):
        with pytest.raises(SystemExit) as info:
            main(["chromatic", "--bogus"])
        assert info.value.code == 2

    def test_unknown_subcommand_exits_2(self):
        with pytest.raises(SystemExit) as info:
            main(["frobnicate"])
        assert info.value.code == 2
