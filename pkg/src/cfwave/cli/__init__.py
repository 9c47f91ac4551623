"""
Command-line front end: phase-shift rows, solver comparison, table and
figure reproduction, steplength sensitivity and wavefunction export.

Quick Start:
    ```python
    from cfwave.cli import main

    main(["phaseshift", "--k", "0.5", "--l", "0", "--spin", "0"])
    ```
"""

from .main import build_parser, main
from .output import CSV_COLUMNS, ResultRow, render_rows, rows_from_json, rows_to_csv, rows_to_dataframe, rows_to_json
from .reference import FIGURES, TABLES, ReferenceColumn, ReferenceTable, reference_value
from .reproduce import TableReproduction, reproduce_figure, reproduce_table
from .runner import RowTask, build_tasks, run_task, run_tasks

__all__ = [
    # Entry point
    "main",
    "build_parser",
    # Rows
    "ResultRow",
    "CSV_COLUMNS",
    "rows_to_dataframe",
    "rows_to_csv",
    "rows_to_json",
    "rows_from_json",
    "render_rows",
    # Execution
    "RowTask",
    "build_tasks",
    "run_task",
    "run_tasks",
    # Reference data
    "TABLES",
    "FIGURES",
    "ReferenceTable",
    "ReferenceColumn",
    "reference_value",
    # Reproduction
    "TableReproduction",
    "reproduce_table",
    "reproduce_figure",
]
