"""
Tests for the command-line interface, the task runner and the reference tables.

Solvers are replaced by fakes so every command runs in milliseconds; the
real solvers are exercised in tests/integration.
"""

import importlib
import io
import json
import logging
import math

import pandas as pd
import pytest

from cfwave.cli import main
from cfwave.cli.reference import FIGURES, K_TABLE_1, TABLES, reference_value
from cfwave.cli.reproduce import reproduce_figure, reproduce_table
from cfwave.cli.runner import RowTask, build_tasks, run_task, run_tasks
from cfwave.foundation.config import NumericsConfig, RunConfig, SolverId
from cfwave.foundation.exceptions import NoPlateauError
from cfwave.foundation.logging import setup_logging
from cfwave.phaseshift import PhaseShiftResult

SOLVER_OFFSET = {SolverId.KFTEE: 0.0, SolverId.MCDMM: 0.01, SolverId.FMCC: -0.02, SolverId.BN: -0.03}


def fake_result(channel, solver, numerics, delta):
    solver = SolverId(solver)
    return PhaseShiftResult(
        channel=channel, solver=solver, h=numerics.h, tan_delta=math.tan(delta), delta=delta, principal=delta
    )


def fake_run(channel, solver, numerics):
    """Deterministic phase from the channel and solver."""
    delta = 0.5 * channel.k + 0.1 * channel.l + 0.01 * channel.S + SOLVER_OFFSET[SolverId(solver)]
    return fake_result(channel, solver, numerics, delta)


def reference_run(channel, solver, numerics):
    """Published value plus 1e-4, failing where the table reports an unstable cell."""
    value = reference_value(channel.l, channel.S, channel.k, SolverId(solver), numerics.h)
    if value is None:
        raise NoPlateauError(error_code="NUM-007", module="test", message="unstable cell")
    return fake_result(channel, solver, numerics, value + 1e-4)


@pytest.fixture(autouse=True)
def isolated(monkeypatch):
    """No run file from the environment; default logging restored afterwards."""
    monkeypatch.delenv("CFWAVE_CONFIG", raising=False)
    yield
    for handler in logging.getLogger("cfwave").handlers:
        handler.close()
    setup_logging()


@pytest.fixture
def fake_solver(monkeypatch):
    """Replace the solver used by the runner."""
    monkeypatch.setattr("cfwave.cli.runner.run_solver", fake_run)


class TestParser:
    """Tests for argument handling."""

    def test_missing_command(self):
        """Test a missing subcommand exits with status 1."""
        with pytest.raises(SystemExit) as exc_info:
            main([])
        assert exc_info.value.code == 1

    def test_bad_table(self, capsys):
        """Test an unknown table number is a usage error."""
        with pytest.raises(SystemExit) as exc_info:
            main(["reproduce", "--table", "7"])
        assert exc_info.value.code == 1
        assert "invalid choice" in capsys.readouterr().err

    def test_table_and_figure_exclusive(self):
        """Test --table and --figure cannot be combined."""
        with pytest.raises(SystemExit) as exc_info:
            main(["reproduce", "--table", "1", "--figure", "1"])
        assert exc_info.value.code == 1

    def test_missing_config(self, tmp_path, capsys):
        """Test a missing run file returns 1 with the error code."""
        code = main(["phaseshift", "--config", str(tmp_path / "missing.toml")])

        assert code == 1
        assert "CFG-001" in capsys.readouterr().err

    def test_invalid_value(self, capsys):
        """Test an invalid flag value is reported as a schema error."""
        code = main(["phaseshift", "--k", "0.5", "--h", "0.5"])

        assert code == 1
        assert "CFG-004" in capsys.readouterr().err

    def test_negative_k(self, capsys):
        """Test a negative wavenumber is reported as a schema error."""
        code = main(["phaseshift", "--k", "-0.5"])

        assert code == 1
        err = capsys.readouterr().err
        assert "CFG-004" in err
        assert "'k.0'" in err


class TestRowCommands:
    """Tests for phaseshift and sweep."""

    def test_no_channels(self, fake_solver, capsys):
        """Test an empty selection writes only the header."""
        assert main(["phaseshift"]) == 0
        assert capsys.readouterr().out == "k,l,S,solver,h,delta,tan_delta,branch,converged,plateau_spread\n"

    def test_sweep_order(self, fake_solver, capsys):
        """Test rows come out in (k, l, S) order."""
        assert main(["sweep", "--k", "0.6", "0.5", "--l", "0:1", "--spin", "both"]) == 0

        df = pd.read_csv(io.StringIO(capsys.readouterr().out))
        assert len(df) == 8
        assert list(df["k"]) == [0.5] * 4 + [0.6] * 4
        assert list(df["l"][:4]) == [0, 0, 1, 1]
        assert list(df["S"][:4]) == [0, 1, 0, 1]
        assert df["delta"].iloc[3] == pytest.approx(0.25 + 0.1 + 0.01)

    def test_config_file_with_override(self, fake_solver, tmp_path, capsys):
        """Test flags win over the run file."""
        run_file = tmp_path / "run.toml"
        run_file.write_text('k = [0.3]\nspin = "both"\nformat = "json"\n', encoding="utf-8")

        assert main(["phaseshift", "--config", str(run_file), "--spin", "1", "--deterministic"]) == 0
        records = json.loads(capsys.readouterr().out)
        assert [(r["k"], r["S"]) for r in records] == [(0.3, 1)]
        assert records[0]["wall_time"] is None

    def test_output_file(self, fake_solver, tmp_path):
        """Test --output writes the CSV to disk."""
        path = tmp_path / "results" / "sweep.csv"

        assert main(["sweep", "--k-range", "0.1:0.3:0.1", "--spin", "0", "-o", str(path)]) == 0
        assert len(pd.read_csv(path)) == 3

    def test_strict(self, monkeypatch, capsys):
        """Test --strict exits 2 when a row failed and 0 without it."""

        def failing(channel, solver, numerics):
            raise NoPlateauError(error_code="NUM-007", module="test", message="no plateau")

        monkeypatch.setattr("cfwave.cli.runner.run_solver", failing)

        assert main(["phaseshift", "--k", "0.5", "--spin", "0"]) == 0
        assert main(["phaseshift", "--k", "0.5", "--spin", "0", "--strict"]) == 2
        out = capsys.readouterr().out
        assert ",False," in out


class TestCompare:
    """Tests for the compare command."""

    def test_all_solvers(self, fake_solver, capsys):
        """Test one column per solver plus differences to kftee."""
        assert main(["compare", "--k", "0.5", "--spin", "0"]) == 0

        df = pd.read_csv(io.StringIO(capsys.readouterr().out))
        assert list(df.columns) == [
            "k",
            "l",
            "S",
            "delta_kftee",
            "delta_mcdmm",
            "delta_fmcc",
            "delta_bn",
            "diff_mcdmm",
            "diff_fmcc",
            "diff_bn",
        ]
        assert df["diff_mcdmm"].iloc[0] == pytest.approx(0.01)
        assert df["diff_bn"].iloc[0] == pytest.approx(-0.03)

    def test_kftee_added(self, fake_solver, capsys):
        """Test kftee is always part of the comparison."""
        assert main(["compare", "--k", "0.5", "--spin", "1", "--solver", "bn"]) == 0

        df = pd.read_csv(io.StringIO(capsys.readouterr().out))
        assert list(df.columns) == ["k", "l", "S", "delta_kftee", "delta_bn", "diff_bn"]


class TestOtherCommands:
    """Tests for sensitivity, wavefunction and reproduce."""

    def test_sensitivity(self, monkeypatch, capsys):
        """Test the default steps 0.8h, h and 1.2h."""
        monkeypatch.setattr("cfwave.solvers.run_solver", fake_run)

        assert main(["sensitivity", "--k", "0.1", "--spin", "0", "--solver", "mcdmm"]) == 0
        df = pd.read_csv(io.StringIO(capsys.readouterr().out))
        assert list(df["h"]) == pytest.approx([0.0048, 0.006, 0.0072])
        assert set(df["stable_digits"]) == {15}

    def test_wavefunction_needs_k(self, capsys):
        """Test wavefunction without a channel is a usage error."""
        assert main(["wavefunction"]) == 1
        assert "--k" in capsys.readouterr().err

    def test_wavefunction_numerical_failure(self, monkeypatch, capsys):
        """Test a solver failure in wavefunction exits 3 with its error code."""

        def failing(channel, solver, numerics):
            raise NoPlateauError(error_code="NUM-007", module="test", message="D(r) did not settle")

        monkeypatch.setattr(importlib.import_module("cfwave.cli.main"), "solve_channel", failing)

        assert main(["wavefunction", "--k", "0.5"]) == 3
        assert "NUM-007" in capsys.readouterr().err

    def test_reproduce_failed_rows(self, monkeypatch, capsys):
        """Test failing channels in reproduce become unconverged rows, not an error exit."""

        def failing(channel, solver, numerics):
            raise NoPlateauError(error_code="NUM-007", module="test", message="D(r) did not settle")

        monkeypatch.setattr("cfwave.cli.runner.run_solver", failing)

        assert main(["reproduce", "--table", "1"]) == 0
        assert "0/" in capsys.readouterr().err

    def test_reproduce_figure(self, fake_solver, capsys):
        """Test figure curves for explicit wavenumbers."""
        assert main(["reproduce", "--figure", "3", "--k", "0.2", "0.4"]) == 0

        df = pd.read_csv(io.StringIO(capsys.readouterr().out))
        assert list(df.columns) == ["k", "delta_kftee", "delta_bnle", "delta_fmccle"]
        assert df["delta_kftee"].iloc[0] == pytest.approx(0.1 + 0.1)

    def test_reproduce_table_report(self, monkeypatch, tmp_path, capsys):
        """Test the published layout, unstable cells and the deviation report."""
        monkeypatch.setattr("cfwave.cli.runner.run_solver", reference_run)
        report = tmp_path / "table3.csv"

        assert main(["reproduce", "--table", "3", "--report", str(report), "--strict"]) == 2
        captured = capsys.readouterr()
        assert "unstable" in captured.out.splitlines()[1]
        assert "max |delta - published| = 1.000e-04" in captured.err

        cells = pd.read_csv(report)
        assert len(cells) == 80
        assert cells["deviation"].max() == pytest.approx(1e-4)


class TestRunner:
    """Tests for task building and execution."""

    def test_build_tasks(self):
        """Test the (k, l, S, solver, h) product order."""
        config = RunConfig(k=[0.5], l="0,2", spin=1, solvers=["kftee", "mcdmm"], h=[0.004, 0.006])
        tasks = build_tasks(config)

        assert len(tasks) == 8
        assert tasks[0] == RowTask(0.5, 0, 1, SolverId.KFTEE, 0.004)
        assert tasks[-1] == RowTask(0.5, 2, 1, SolverId.MCDMM, 0.006)
        assert tasks[0].channel.label == "k=0.5,l=0,S=1"

    def test_failed_task(self, monkeypatch):
        """Test a raising solver becomes a failed row."""

        def failing(channel, solver, numerics):
            raise ArithmeticError("overflow")

        monkeypatch.setattr("cfwave.cli.runner.run_solver", failing)
        row = run_task(RowTask(0.5, 0, 0, SolverId.KFTEE, 0.006), NumericsConfig())

        assert not row.converged
        assert row.error == "overflow"
        assert row.wall_time is not None

    def test_task_step(self, fake_solver):
        """Test each task supplies its own base step."""
        tasks = [RowTask(0.5, 0, 0, SolverId.MCDMM, h) for h in (0.004, 0.008)]
        rows = run_tasks(tasks, NumericsConfig())

        assert [row.h for row in rows] == [0.004, 0.008]

    def test_no_tasks(self):
        """Test an empty task list runs nothing."""
        assert run_tasks([], NumericsConfig(), jobs=4) == []


class TestReference:
    """Tests for the published tables."""

    def test_table_shapes(self):
        """Test wavenumbers and column counts of every table."""
        assert TABLES[1].k == K_TABLE_1
        assert len(K_TABLE_1) == 15
        for table in TABLES.values():
            assert len(table.columns) == 8
            for column in table.columns:
                assert len(column.values) == len(table.k)

    @pytest.mark.parametrize(
        "l, S, k, expected",
        [(0, 0, 0.5, 1.168257), (0, 0, 0.2, 2.034071), (0, 1, 1.0, 1.507213), (1, 1, 0.5, 0.311150)],
    )
    def test_anchor_values(self, l, S, k, expected):
        """Test the canonical column at the anchor cells."""
        assert reference_value(l, S, k) == expected

    def test_numerov_columns(self):
        """Test Numerov-code cells by step, including unstable ones."""
        assert reference_value(0, 0, 0.1, SolverId.MCDMM, 0.008) == 1.171174
        assert reference_value(4, 0, 0.1, SolverId.MCDMM) is None

    def test_unknown_cell(self):
        """Test a missing cell raises KeyError."""
        with pytest.raises(KeyError, match="no reference cell"):
            reference_value(7, 0, 0.5)

    def test_figures(self):
        """Test figure ids map onto (l, S)."""
        assert FIGURES == {1: (0, 0), 2: (0, 1), 3: (1, 0), 4: (1, 1)}

    def test_reproduce_unknown(self):
        """Test unknown table and figure ids raise KeyError."""
        with pytest.raises(KeyError):
            reproduce_table(9)
        with pytest.raises(KeyError):
            reproduce_figure(9)
