import json

import pytest

from latsim.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestCount:
    def test_fast(self, capsys):
        code, out, _ = run(capsys, "count", "--set", "all", "--max-height", "2")
        assert code == 0 and out.strip() == "4"

    def test_bruteforce(self, capsys):
        code, out, _ = run(capsys, "count", "--set", "wr", "--max-height", "10",
                           "--method", "bruteforce")
        assert code == 0 and out.strip() == "17"

    def test_memory_mode_and_jobs(self, capsys):
        code, out, _ = run(capsys, "count", "--set", "semistable",
                           "--max-height", "20",
                           "--memory-mode", "prefix_tables", "--jobs", "3")
        code2, out2, _ = run(capsys, "count", "--set", "semistable",
                             "--max-height", "20")
        assert code == code2 == 0 and out == out2

    def test_env_sieve_bound(self, capsys, monkeypatch):
        monkeypatch.setenv("LATSIM_SIEVE_BOUND", "50")
        code, out, _ = run(capsys, "count", "--set", "all", "--max-height", "2")
        assert code == 0 and out.strip() == "4"


class TestEnumerate:
    def test_jsonl_roundtrip_through_classify(self, capsys):
        code, out, _ = run(capsys, "enumerate", "--set", "all",
                           "--max-height", "2", "--format", "jsonl")
        assert code == 0
        records = [json.loads(line) for line in out.strip().splitlines()]
        assert len(records) == 4
        for rec in records:
            tau = f"{rec['a']},{rec['b']},{rec['c']},{rec['d']}"
            code2, out2, _ = run(capsys, "classify", "--tau", tau)
            assert code2 == 0
            assert out2.split()[0] == rec["kind"]

    def test_wr_heights_use_pair_convention(self, capsys):
        _, out, _ = run(capsys, "enumerate", "--set", "wr",
                        "--max-height", "3", "--format", "jsonl")
        records = [json.loads(line) for line in out.strip().splitlines()]
        assert [(r["a"], r["b"], r["height"]) for r in records] == \
            [(0, 1, 1), (1, 2, 2), (1, 3, 3)]


class TestClassify:
    def test_wr_prints_both_heights(self, capsys):
        code, out, _ = run(capsys, "classify", "--tau", "1,2,3,4")
        assert code == 0
        assert out.strip() == "WellRounded height_quadruple=4 height_pair=2"

    def test_usage_error_exit_code(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["classify", "--tau", "2,4,1,1"])
        assert exc.value.code == 2


class TestReduce:
    def test_square_lattice(self, capsys):
        code, out, _ = run(capsys, "reduce", "--basis", "1,0,5,1")
        assert code == 0
        assert "re=0 im_sq=1" in out
        assert "well_rounded=True" in out

    def test_fractional_basis(self, capsys):
        code, out, _ = run(capsys, "reduce", "--basis", "1,0,1/2,3/2")
        assert code == 0
        assert "im_sq=9/4" in out


class TestJAndHeight:
    def test_j_of_square_class(self, capsys):
        code, out, _ = run(capsys, "j", "--tau", "0,1,1,1")
        assert code == 0 and out.startswith("j=1728")

    def test_j_normalized(self, capsys):
        # j(rho) = 0, so the normalized value prints as a tiny real
        code, out, _ = run(capsys, "j", "--tau", "1,2,3,4", "--normalized")
        assert code == 0 and out.startswith("j=")
        assert "e-" in out.split()[0]

    def test_height(self, capsys):
        code, out, _ = run(capsys, "height", "--tau", "1,2,3,4")
        assert code == 0
        assert "weil_height_bound=4" in out
        assert "ceiling=8.94427191" in out


class TestVerify:
    def test_haar_suite_passes(self, capsys):
        code, out, _ = run(capsys, "verify", "--suite", "haar")
        assert code == 0
        assert "0.04507034144" in out
        assert all(line.startswith("[PASS]")
                   for line in out.strip().splitlines())

    def test_verify_is_deterministic(self, capsys):
        _, out1, _ = run(capsys, "verify", "--suite", "haar")
        _, out2, _ = run(capsys, "verify", "--suite", "haar")
        assert out1 == out2
