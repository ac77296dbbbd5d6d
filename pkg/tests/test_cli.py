import json
import os

import pytest

from wgraphs.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


class TestStats:
    def test_bc3_row(self, capsys):
        code, out, _ = run(capsys, "stats", "--type", "bc", "--rank", "3", "--family", "m")
        assert code == 0
        assert out.strip() == "m,BC,3,20,36,{1},2,8,8"

    def test_a5_n_row(self, capsys):
        code, out, _ = run(capsys, "stats", "--type", "a", "--rank", "5", "--family", "n")
        assert code == 0
        assert out.strip() == "n,A,5,26,57,{1},3,7,7"


class TestEnumerate:
    def test_s2(self, capsys):
        code, out, _ = run(capsys, "enumerate", "--type", "a", "--rank", "2")
        assert code == 0
        assert out.splitlines() == ["2,1,4,3", "3,4,1,2"]


class TestBuild:
    def test_json_stdout(self, capsys):
        code, out, _ = run(
            capsys, "build", "--type", "bc", "--rank", "3", "--family", "m", "--format", "json"
        )
        assert code == 0
        payload = json.loads(out)
        assert len(payload["vertices"]) == 20
        assert len(payload["edges"]) == 36

    def test_export_alias(self, capsys):
        _, a, _ = run(capsys, "build", "--type", "a", "--rank", "3", "--family", "m")
        _, b, _ = run(capsys, "export", "--type", "a", "--rank", "3", "--family", "m")
        assert a == b

    def test_out_file(self, capsys, tmp_path):
        target = tmp_path / "g.json"
        code, out, _ = run(
            capsys, "build", "--type", "a", "--rank", "3", "--family", "m", "--out", str(target)
        )
        assert code == 0 and out == ""
        assert json.loads(target.read_text())["rank"] == 3
        assert not [p for p in tmp_path.iterdir() if p.name.startswith(".wgraphs-")]

    def test_out_dir_env(self, capsys, tmp_path, monkeypatch):
        monkeypatch.setenv("WGRAPHS_OUT_DIR", str(tmp_path))
        code, _, _ = run(
            capsys, "build", "--type", "a", "--rank", "3", "--family", "m", "--out", "sub/g.dot",
            "--format", "dot",
        )
        assert code == 0
        assert (tmp_path / "sub" / "g.dot").exists()

    def test_byte_identical_runs(self, capsys):
        _, a, _ = run(capsys, "build", "--type", "d", "--rank", "3", "--family", "n", "--format", "dot")
        _, b, _ = run(capsys, "build", "--type", "d", "--rank", "3", "--family", "n", "--format", "dot")
        assert a == b

    def test_tilde_family(self, capsys):
        code, out, _ = run(
            capsys, "build", "--type", "d", "--rank", "3", "--family", "n-tilde", "--format", "csv"
        )
        assert code == 0
        assert out.splitlines()[1].startswith("n-tilde,D,3,10,14")


class TestPartitions:
    def test_cells(self, capsys):
        code, out, _ = run(capsys, "cells", "--type", "a", "--rank", "4", "--family", "m")
        assert code == 0
        assert len(out.splitlines()) == 5
        assert out.startswith("cell 0 (size ")

    def test_molecules(self, capsys):
        code, out, _ = run(capsys, "molecules", "--type", "d", "--rank", "4", "--family", "m")
        assert code == 0
        assert len(out.splitlines()) == 11


class TestVerify:
    def test_duality_pass(self, capsys):
        code, out, _ = run(capsys, "verify", "duality", "--type", "bc", "--rank", "2")
        assert code == 0
        assert out.startswith("PASS")

    def test_axioms_pass(self, capsys):
        code, out, _ = run(capsys, "verify", "axioms", "--type", "d", "--rank", "2")
        assert code == 0
        assert out.count("PASS") == 2

    def test_table_pass(self, capsys):
        code, out, _ = run(
            capsys, "verify", "table", "--type", "a", "--rank", "4", "--family", "n"
        )
        assert code == 0
        assert "n,A,4,10,13,{1},3,5,5" in out

    def test_phi_pass(self, capsys):
        code, out, _ = run(capsys, "verify", "phi", "--type", "bc", "--rank", "2")
        assert code == 0

    def test_admissible_pass(self, capsys):
        code, out, _ = run(
            capsys, "verify", "admissible", "--type", "a", "--rank", "3", "--family", "m"
        )
        assert code == 0

    def test_trace_pass(self, capsys):
        code, out, _ = run(capsys, "verify", "trace", "--type", "a", "--rank", "3")
        assert code == 0
        assert out.splitlines()[0] == "class_rep,size,trace_m,trace_n,square_roots"

    def test_trace_d4_recorded_not_asserted(self, capsys):
        code, out, _ = run(capsys, "verify", "trace", "--type", "d", "--rank", "4")
        assert code == 0


class TestUsageErrors:
    def test_duality_needs_bc_or_d(self, capsys):
        code, _, err = run(capsys, "verify", "duality", "--type", "a", "--rank", "3")
        assert code == 2
        assert "bc or" in err

    def test_tilde_needs_type_d(self, capsys):
        code, _, err = run(
            capsys, "build", "--type", "a", "--rank", "3", "--family", "m-tilde"
        )
        assert code == 2
        assert "require --type d" in err

    def test_rank_cap_names_the_cap(self, capsys):
        code, _, err = run(capsys, "stats", "--type", "bc", "--rank", "7", "--family", "m")
        assert code == 2
        assert "cap 5" in err and "--max-rank" in err

    def test_max_rank_override(self, capsys):
        code, out, _ = run(
            capsys, "enumerate", "--type", "bc", "--rank", "6", "--max-rank", "6"
        )
        assert code == 0
        assert len(out.splitlines()) == 1384


class TestTraceVerb:
    def test_s4(self, capsys):
        code, out, _ = run(capsys, "trace", "--type", "a", "--rank", "4")
        assert code == 0
        assert "1,2,3,4,1,10,10,10" in out
