"""
Recompute the published comparison tables and the local-exchange curves.
"""

from dataclasses import dataclass

import numpy as np
import pandas as pd

from cfwave.foundation.config import NumericsConfig, SolverId
from cfwave.foundation.logging import get_logger

from .reference import FIGURES, K_TABLE_1, TABLES, ReferenceTable
from .runner import RowTask, run_tasks

logger = get_logger(__name__)

FIGURE_SOLVERS = {
    "delta_kftee": SolverId.KFTEE,
    "delta_bnle": SolverId.BN,
    "delta_fmccle": SolverId.FMCC,
}


@dataclass(frozen=True, eq=False)
class TableReproduction:
    """
    Recomputed table with its deviation report.

    Attributes:
        table: Reference table that was reproduced
        cells: One row per cell: column, solver, l, S, h, k, reference,
            computed, deviation, converged
    """

    table: ReferenceTable
    cells: pd.DataFrame

    def layout(self) -> pd.DataFrame:
        """Computed values in the published layout (k, then one column per reference column)."""
        wide = self.cells.pivot(index="k", columns="column", values="computed")
        order = [column.label for column in self.table.columns]
        return wide[order].reset_index()

    def summary(self) -> pd.DataFrame:
        """Per column: cells, converged count, max and mean |computed - reference|."""
        grouped = self.cells.groupby("column", sort=False)
        return pd.DataFrame(
            {
                "solver": grouped["solver"].first(),
                "cells": grouped.size(),
                "converged": grouped["converged"].sum(),
                "max_deviation": grouped["deviation"].max(),
                "mean_deviation": grouped["deviation"].mean(),
            }
        ).reset_index()

    def step_spread(self) -> pd.DataFrame:
        """Numerov-code spread (max - min) across base steps per (l, S, k)."""
        numerov = self.cells[self.cells["solver"] == SolverId.MCDMM.value]
        grouped = numerov.groupby(["l", "S", "k"])["computed"]
        return (grouped.max() - grouped.min()).rename("spread").reset_index()

    @property
    def max_kftee_deviation(self) -> float:
        kftee = self.cells[self.cells["solver"] == SolverId.KFTEE.value]
        return float(kftee["deviation"].max())


def reproduce_table(table_id: int, numerics: NumericsConfig | None = None, jobs: int = 1) -> TableReproduction:
    """
    Run every cell of a reference table.

    Args:
        table_id: 1, 2, 3 or 4
        numerics: Shared settings (each column supplies its own h)
        jobs: Worker processes

    Raises:
        KeyError: If ``table_id`` is not a known table
    """
    table = TABLES[table_id]
    numerics = numerics or NumericsConfig()
    tasks = [RowTask(k, column.l, column.S, column.solver, column.h) for column in table.columns for k in table.k]
    rows = iter(run_tasks(tasks, numerics, jobs))

    records = []
    for column in table.columns:
        for k, reference in zip(table.k, column.values):
            row = next(rows)
            computed = row.delta
            deviation = abs(computed - reference) if computed is not None and reference is not None else np.nan
            records.append(
                {
                    "column": column.label,
                    "solver": column.solver.value,
                    "l": column.l,
                    "S": column.S,
                    "h": column.h,
                    "k": k,
                    "reference": np.nan if reference is None else reference,
                    "computed": np.nan if computed is None else computed,
                    "deviation": deviation,
                    "converged": row.converged,
                }
            )
    result = TableReproduction(table=table, cells=pd.DataFrame(records))
    logger.info(
        "table reproduced",
        extra={"table": table_id, "cells": len(records), "max_kftee_deviation": result.max_kftee_deviation},
    )
    return result


def reproduce_figure(
    figure_id: int,
    numerics: NumericsConfig | None = None,
    k_values: tuple[float, ...] = K_TABLE_1,
    jobs: int = 1,
) -> pd.DataFrame:
    """
    Exact- and local-exchange phase shifts against k for one figure.

    Returns:
        Frame with columns k, delta_kftee, delta_bnle, delta_fmccle
        (NaN where a solver did not converge)

    Raises:
        KeyError: If ``figure_id`` is not a known figure
    """
    l, S = FIGURES[figure_id]
    numerics = numerics or NumericsConfig()
    tasks = [RowTask(k, l, S, solver, numerics.h) for solver in FIGURE_SOLVERS.values() for k in k_values]
    deltas = iter(row.delta for row in run_tasks(tasks, numerics, jobs))

    frame = {"k": list(k_values)}
    for name in FIGURE_SOLVERS:
        frame[name] = [np.nan if (d := next(deltas)) is None else d for _ in k_values]
    return pd.DataFrame(frame)
