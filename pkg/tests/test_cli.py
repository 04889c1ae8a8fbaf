import csv
import json
import pytest

from fullow import harness
from fullow.cli import main


def read_rows(path):
    with open(path) as fh:
        assert fh.readline().strip() == "# schema=1"
        return list(csv.DictReader(fh))


class TestSolve:
    def test_rosenbrock(self, tmp_path, capsys):
        out = tmp_path / "h.csv"
        assert main(["solve", "rosenbrock", "smooth", "fullow", "--seed", "1", "--out", str(out)]) == 0
        pairs = harness.read_history(out)
        assert pairs[0][0] == 1 and pairs[0][1] == pytest.approx(24.2, rel=1e-14)
        assert pairs[-1][1] < 1e-8
        assert "best f" in capsys.readouterr().out

    def test_unknown_solver(self, tmp_path):
        with pytest.raises(SystemExit) as exc:
            main(["solve", "rosenbrock", "smooth", "newton"])
        assert exc.value.code != 0

    def test_unknown_problem(self, tmp_path):
        assert main(["solve", "nope", "smooth", "fullow", "--out", str(tmp_path / "h.csv")]) == 2

    def test_budget_too_small(self, tmp_path, capsys):
        code = main(["solve", "watson_n9", "smooth", "fullow", "--budget", "10",
                     "--out", str(tmp_path / "h.csv")])
        assert code == 2
        assert "budget too small" in capsys.readouterr().err

    def test_set_override(self, tmp_path):
        assert main(["solve", "rosenbrock", "smooth", "pds", "--set", "theta_contract=0.25",
                     "--budget", "50", "--out", str(tmp_path / "h.csv")]) == 0
        assert main(["solve", "rosenbrock", "smooth", "pds", "--set", "bogus=1",
                     "--out", str(tmp_path / "h.csv")]) == 2


class TestBench:
    def test_row_count_and_determinism(self, tmp_path):
        a, b = tmp_path / "a.csv", tmp_path / "b.csv"
        args = ["bench", "--suite", "smooth53", "--budget-multiplier", "15", "--seeds", "4"]
        assert main(args + ["--out", str(a)]) == 0
        assert main(args + ["--out", str(b)]) == 0
        rows = read_rows(a)
        assert len(rows) == 159
        assert {r["solver"] for r in rows} == {"fullow", "bfgs-fd", "pds"}
        assert a.read_bytes() == b.read_bytes()
        ha, hb = harness.histories_dir(a), harness.histories_dir(b)
        names = sorted(p.name for p in ha.iterdir())
        assert len(names) == 159
        assert names == sorted(p.name for p in hb.iterdir())
        for name in names:
            assert (ha / name).read_bytes() == (hb / name).read_bytes()
        for r in rows:
            assert int(r["evals_used"]) == int(r["budget"]) == 15 * int(r["n"])

    def test_noisy_eps_column(self, tmp_path):
        out = tmp_path / "n.csv"
        assert main(["bench", "--suite", "multiplicative-deterministic", "--solvers", "pds",
                     "--budget-multiplier", "5", "--out", str(out)]) == 0
        rows = read_rows(out)
        assert len(rows) == 53
        assert {float(r["eps_f"]) for r in rows} == {1e-3}


def toy_results(path):
    """Two problems and two solvers giving t = [[10, 20], [inf, 5]]."""
    def row(problem, solver, hist):
        return ({"problem": problem, "n": 1, "variant": "smooth", "eps_f": 0.0, "solver": solver,
                 "seed": 0, "budget": 100, "evals_used": 100, "best_f": hist[-1][1], "f0": 10.0},
                hist)
    runs = [
        row("p1", "s1", [(1, 10.0), (10, 0.0)]),
        row("p1", "s2", [(1, 10.0), (20, 0.0)]),
        row("p2", "s1", [(1, 10.0), (50, 5.0)]),
        row("p2", "s2", [(1, 10.0), (5, 0.0)]),
    ]
    harness.write_results(path, runs)


class TestProfile:
    def test_toy_performance_profile(self, tmp_path):
        res = tmp_path / "toy.csv"
        toy_results(res)
        prefix = tmp_path / "out"
        assert main(["profile", str(res), "--tau", "0.01", "--out-prefix", str(prefix)]) == 0
        summary = json.loads((tmp_path / "out.summary.json").read_text())
        assert summary["solvers"]["s1"]["at_1"] == 0.5
        assert summary["solvers"]["s2"]["at_1"] == 0.5
        assert summary["solvers"]["s2"]["at_2"] == 1.0
        assert summary["solvers"]["s1"]["final"] == 0.5
        rows = read_rows(tmp_path / "out.profile.csv")
        assert {r["solver"] for r in rows} == {"s1", "s2"}

    def test_data_profile(self, tmp_path):
        res = tmp_path / "toy.csv"
        toy_results(res)
        prefix = tmp_path / "d"
        assert main(["profile", str(res), "--tau", "0.01", "--kind", "data",
                     "--out-prefix", str(prefix)]) == 0
        rows = read_rows(tmp_path / "d.profile.csv")
        val = {(float(r["alpha"]), r["solver"]): float(r["value"]) for r in rows}
        assert val[(5.0, "s1")] == 0.5
        assert val[(3.0, "s2")] == 0.5
        assert val[(10.0, "s2")] == 1.0

    def test_single_solver(self, tmp_path):
        res = tmp_path / "one.csv"
        assert main(["bench", "--suite", "scalable", "--n", "8", "--solvers", "pds",
                     "--budget-multiplier", "20", "--out", str(res)]) == 0
        prefix = tmp_path / "one"
        assert main(["profile", str(res), "--tau", "0.1", "--out-prefix", str(prefix)]) == 0
        summary = json.loads((tmp_path / "one.summary.json").read_text())
        assert list(summary["solvers"]) == ["pds"]
        # a lone solver defines fL, so it solves every problem at ratio 1
        assert summary["solvers"]["pds"]["at_1"] == 1.0

    @pytest.mark.parametrize("tau", ["0", "1", "1.5", "-0.1"])
    def test_tau_out_of_range(self, tmp_path, tau):
        res = tmp_path / "toy.csv"
        toy_results(res)
        with pytest.raises(SystemExit) as exc:
            main(["profile", str(res), "--tau", tau])
        assert exc.value.code != 0

    def test_missing_schema_line(self, tmp_path, capsys):
        bad = tmp_path / "bad.csv"
        bad.write_text(",".join(harness.RESULT_COLUMNS) + "\n")
        assert main(["profile", str(bad), "--tau", "0.1"]) == 2
        assert "schema" in capsys.readouterr().err
