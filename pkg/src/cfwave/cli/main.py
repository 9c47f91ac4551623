"""
Command-line interface for cfwave.

Usage:
    cfwave phaseshift --k 0.5 --l 0 --spin 0
    cfwave sweep --k-range 0.1:1.5:0.1 --l 0:2 --spin both --jobs 4 --output sweep.csv
    cfwave compare --k 0.3 0.6 0.9 --l 0
    cfwave reproduce --table 2 --report table2_deviation.csv
    cfwave sensitivity --k 0.1 --solver mcdmm --h 0.004 0.006 0.008
    cfwave wavefunction --k 0.5 --l 1 --spin 1 --output wave.csv

Exit codes: 0 success, 1 usage or configuration error, 2 unconverged rows
under --strict, 3 a numerical failure that left no result to write.
"""

import argparse
import sys
from collections.abc import Sequence
from typing import Any, NoReturn

import pandas as pd
from pydantic import TypeAdapter

from cfwave.baselines import SensitivityReport, steplength_sensitivity
from cfwave.foundation.config import ConfigManager, OriginMode, OutputFormat, RatioMode, RunConfig, SolverId
from cfwave.foundation.exceptions import CFWaveError, ConfigError, NumericalError
from cfwave.foundation.logging import get_logger, setup_logging
from cfwave.potentials import ChannelSpec
from cfwave.solvers import solve_channel

from .output import emit, frame_to_csv, render_rows
from .reference import K_TABLE_1
from .reproduce import reproduce_figure, reproduce_table
from .runner import build_tasks, run_tasks

logger = get_logger(__name__)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_UNCONVERGED = 2
EXIT_NUMERICAL = 3


class _Parser(argparse.ArgumentParser):
    """ArgumentParser that reports usage errors with exit status 1."""

    def error(self, message: str) -> NoReturn:
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def print_error(msg: str) -> None:
    """Print error message."""
    print(f"[ERROR] {msg}", file=sys.stderr)


def print_info(msg: str) -> None:
    """Print an informational line to stderr (stdout carries results)."""
    print(f"[INFO] {msg}", file=sys.stderr)


# ============================================================================
# Argument parsing
# ============================================================================


def _common_options() -> argparse.ArgumentParser:
    """Flags shared by every subcommand; unset flags stay None so the config file wins."""
    common = argparse.ArgumentParser(add_help=False)

    channels = common.add_argument_group("channel selection")
    channels.add_argument("--k", type=float, nargs="+", metavar="K", help="Wavenumbers (a.u.)")
    channels.add_argument("--k-range", metavar="START:STOP:STEP", help="Wavenumber range, stop inclusive")
    channels.add_argument("--l", metavar="SPEC", help="Partial waves: 0, 0,2 or 0:5")
    channels.add_argument("--spin", choices=["0", "1", "both"], help="Total spin")
    channels.add_argument(
        "--solver", nargs="+", choices=[s.value for s in SolverId], help="Solvers (default: kftee)"
    )

    numerics = common.add_argument_group("numerics")
    numerics.add_argument("--h", type=float, nargs="+", metavar="H", help="Base steps (default: 0.006)")
    numerics.add_argument("--r0", type=float, help="Canonical start radius (default: 1.0)")
    numerics.add_argument("--rmax", type=float, help="Outer mesh radius (default: 40.8)")
    numerics.add_argument("--origin-mode", choices=[m.value for m in OriginMode], help="Origin limit condition")
    numerics.add_argument(
        "--ratio-mode", choices=[m.value for m in RatioMode], help="Condition fixing D (default: value)"
    )
    numerics.add_argument("--no-exchange", action="store_true", default=None, help="Drop every exchange term")
    numerics.add_argument(
        "--no-polarization", action="store_true", default=None, help="Drop the polarization potential"
    )

    output = common.add_argument_group("configuration and output")
    output.add_argument("--config", metavar="PATH", help="TOML run file (default: $CFWAVE_CONFIG)")
    output.add_argument("--output", "-o", metavar="PATH", help="Output file (default: stdout)")
    output.add_argument("--format", choices=[f.value for f in OutputFormat], help="Output format (default: csv)")
    output.add_argument("--jobs", "-j", type=int, metavar="N", help="Worker processes (default: 1)")
    output.add_argument("--strict", action="store_true", default=None, help="Exit 2 if any row did not converge")
    output.add_argument(
        "--deterministic", action="store_true", default=None, help="Omit wall times from JSON output"
    )
    output.add_argument("--log-level", choices=["DEBUG", "INFO", "WARNING", "ERROR"], help="Console log level")
    output.add_argument("--log-dir", metavar="DIR", help="Write rotating text and JSON logs here")
    return common


def build_parser() -> argparse.ArgumentParser:
    """Top-level parser with one subparser per command."""
    common = _common_options()
    parser = _Parser(
        prog="cfwave",
        description="Electron-hydrogen phase shifts with exact exchange by canonical functions",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  # Singlet s-wave phase shift at k = 0.5 a.u.
  %(prog)s phaseshift --k 0.5 --l 0 --spin 0

  # Sweep l = 0..2 for both spins on four workers
  %(prog)s sweep --k-range 0.1:1.5:0.1 --l 0:2 --spin both --jobs 4 -o sweep.csv

  # Recompute table 1 and write the deviation report
  %(prog)s reproduce --table 1 --report table1_deviation.csv

  # Local-exchange comparison curves of figure 3
  %(prog)s reproduce --figure 3 -o figure3.csv
        """,
    )
    commands = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    commands.add_parser("phaseshift", parents=[common], help="Phase shifts of the selected channels")
    commands.add_parser("sweep", parents=[common], help="Phase shifts over k, l and S ranges (parallel with --jobs)")
    commands.add_parser("compare", parents=[common], help="All solvers side by side with differences to kftee")

    reproduce = commands.add_parser("reproduce", parents=[common], help="Recompute a published table or figure")
    target = reproduce.add_mutually_exclusive_group(required=True)
    target.add_argument("--table", type=int, choices=[1, 2, 3, 4], help="Table to recompute")
    target.add_argument("--figure", type=int, choices=[1, 2, 3, 4], help="Figure curves to recompute")
    reproduce.add_argument("--report", metavar="PATH", help="Write the per-cell deviation report here")

    commands.add_parser("sensitivity", parents=[common], help="Phase-shift spread across base steps")
    commands.add_parser("wavefunction", parents=[common], help="Normalized radial functions of one channel")
    return parser


def _overrides(args: argparse.Namespace) -> dict[str, Any]:
    """Map parsed flags onto RunConfig keys (None means not given)."""
    return {
        "k": args.k,
        "k_range": args.k_range,
        "l": args.l,
        "spin": args.spin,
        "solvers": args.solver,
        "h": args.h,
        "r0": args.r0,
        "r_max": args.rmax,
        "origin_mode": args.origin_mode,
        "ratio_mode": args.ratio_mode,
        "exchange": False if args.no_exchange else None,
        "polarization": False if args.no_polarization else None,
        "output": args.output,
        "format": args.format,
        "jobs": args.jobs,
        "strict": args.strict,
        "deterministic": args.deterministic,
        "log_level": args.log_level,
        "log_dir": args.log_dir,
    }


# ============================================================================
# Commands
# ============================================================================


def _frame_text(df: pd.DataFrame, fmt: OutputFormat, na_rep: str = "") -> str:
    if fmt is OutputFormat.JSON:
        return df.to_json(orient="records", indent=2) + "\n"
    return frame_to_csv(df, na_rep=na_rep)


def cmd_rows(config: RunConfig) -> int:
    """phaseshift / sweep: one row per (k, l, S, solver, h)."""
    rows = run_tasks(build_tasks(config), config.to_numerics(), config.jobs)
    emit(render_rows(rows, config.format, config.deterministic), config.output)
    unconverged = sum(not row.converged for row in rows)
    if unconverged:
        logger.warning("unconverged rows", extra={"count": unconverged, "rows": len(rows)})
    return EXIT_UNCONVERGED if config.strict and unconverged else EXIT_OK


def cmd_compare(config: RunConfig) -> int:
    """Every requested solver per channel, with differences to kftee."""
    if SolverId.KFTEE not in config.solvers:
        config.solvers = [SolverId.KFTEE, *config.solvers]
    config.h = config.h[:1]
    rows = run_tasks(build_tasks(config), config.to_numerics(), config.jobs)
    if not rows:
        emit(_frame_text(pd.DataFrame(columns=["k", "l", "S"]), config.format), config.output)
        return EXIT_OK

    long = pd.DataFrame([{"k": r.k, "l": r.l, "S": r.S, "solver": r.solver.value, "delta": r.delta} for r in rows])
    wide = long.pivot(index=["k", "l", "S"], columns="solver", values="delta")
    wide = wide[[s.value for s in config.solvers]].astype(float)
    for solver in config.solvers:
        if solver is not SolverId.KFTEE:
            wide[f"diff_{solver.value}"] = wide[solver.value] - wide[SolverId.KFTEE.value]
    wide = wide.rename(columns={s.value: f"delta_{s.value}" for s in config.solvers}).reset_index()
    wide.columns.name = None
    emit(_frame_text(wide, config.format), config.output)

    unconverged = sum(not row.converged for row in rows)
    return EXIT_UNCONVERGED if config.strict and unconverged else EXIT_OK


def cmd_reproduce(config: RunConfig, table: int | None, figure: int | None, report: str | None) -> int:
    """Published table (with deviation report) or figure curves."""
    numerics = config.to_numerics()
    if figure is not None:
        k_values = tuple(config.wavenumbers) or K_TABLE_1
        curves = reproduce_figure(figure, numerics, k_values, config.jobs)
        emit(_frame_text(curves, config.format), config.output)
        return EXIT_OK

    assert table is not None
    result = reproduce_table(table, numerics, config.jobs)
    emit(_frame_text(result.layout(), config.format, na_rep="unstable"), config.output)
    if report is not None:
        emit(frame_to_csv(result.cells), report)

    summary = result.summary()
    for record in summary.itertuples(index=False):
        print_info(
            f"{record.column}: {record.converged}/{record.cells} converged, "
            f"max |delta - published| = {record.max_deviation:.3e}"
        )
    if (spread := result.step_spread()).size:
        print_info(f"Numerov-code step spread: max {spread['spread'].max():.3e}, mean {spread['spread'].mean():.3e}")

    unconverged = int((~result.cells["converged"]).sum())
    return EXIT_UNCONVERGED if config.strict and unconverged else EXIT_OK


def cmd_sensitivity(config: RunConfig) -> int:
    """Spread of delta across base steps (default 0.8h, h, 1.2h)."""
    steps = config.h if len(config.h) > 1 else [round(f * config.h[0], 12) for f in (0.8, 1.0, 1.2)]
    numerics = config.to_numerics()
    reports: list[SensitivityReport] = []
    failures = 0
    for k, l, S in config.channels():
        for solver in config.solvers:
            channel = ChannelSpec(k=k, l=l, S=S)
            try:
                reports.append(steplength_sensitivity(channel, solver, steps, numerics))
            except CFWaveError as e:
                failures += 1
                logger.warning("sensitivity run failed", extra={"channel": channel.label, "error": str(e)})

    if config.format is OutputFormat.JSON:
        text = TypeAdapter(list[SensitivityReport]).dump_json(reports, indent=2).decode() + "\n"
    else:
        frames = [r.to_dataframe().assign(spread=r.spread, stable_digits=r.stable_digits) for r in reports]
        text = frame_to_csv(pd.concat(frames, ignore_index=True)) if frames else ""
    emit(text, config.output)

    unconverged = failures + sum(not all(r.converged) for r in reports)
    return EXIT_UNCONVERGED if config.strict and unconverged else EXIT_OK


def cmd_wavefunction(config: RunConfig) -> int:
    """Normalized (r, f1, f1', f2, f2') of the first selected channel and solver."""
    channels = config.channels()
    if not channels:
        print_error("wavefunction needs one channel: give --k")
        return EXIT_USAGE
    k, l, S = channels[0]
    out = solve_channel(ChannelSpec(k=k, l=l, S=S), config.solvers[0], config.to_numerics())
    assert out.wave is not None
    wave = out.wave
    frame = pd.DataFrame(
        {"r": wave.r, "f1": wave.f1, "f1_prime": wave.f1_prime, "f2": wave.f2, "f2_prime": wave.f2_prime}
    )
    emit(_frame_text(frame, config.format), config.output)
    return EXIT_UNCONVERGED if config.strict and not out.result.converged else EXIT_OK


# ============================================================================
# Entry point
# ============================================================================


def main(argv: Sequence[str] | None = None) -> int:
    """Main entry point."""
    args = build_parser().parse_args(argv)

    try:
        config = ConfigManager(args.config).load(_overrides(args))
    except ConfigError as e:
        print_error(str(e))
        return EXIT_USAGE

    setup_logging(level=config.log_level, log_dir=config.log_dir)
    logger.debug("configuration loaded", extra={"command": args.command, "config": config.to_dict()})

    try:
        if args.command in ("phaseshift", "sweep"):
            return cmd_rows(config)
        if args.command == "compare":
            if args.solver is None:
                config.solvers = list(SolverId)
            return cmd_compare(config)
        if args.command == "reproduce":
            return cmd_reproduce(config, args.table, args.figure, args.report)
        if args.command == "sensitivity":
            return cmd_sensitivity(config)
        return cmd_wavefunction(config)
    except NumericalError as e:
        logger.error("solver failed", extra={"command": args.command, "error_code": e.error_code})
        print_error(str(e))
        return EXIT_NUMERICAL
    except CFWaveError as e:
        print_error(str(e))
        return EXIT_USAGE
    except KeyboardInterrupt:
        print_error("Interrupted")
        return 130


if __name__ == "__main__":
    sys.exit(main())
