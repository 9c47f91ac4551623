"""
Row execution for sweeps: one task per (k, l, S, solver, h).

Tasks run serially or in a process pool; results always come back in task
order, and a failing task becomes a failed row instead of aborting the run.
"""

import time
from collections.abc import Sequence
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import repeat

from cfwave.foundation.config import NumericsConfig, RunConfig, SolverId
from cfwave.foundation.exceptions import CFWaveError
from cfwave.foundation.logging import get_logger
from cfwave.potentials import ChannelSpec
from cfwave.solvers import run_solver

from .output import ResultRow

logger = get_logger(__name__)


@dataclass(frozen=True)
class RowTask:
    """One solver run."""

    k: float
    l: int
    S: int
    solver: SolverId
    h: float

    @property
    def channel(self) -> ChannelSpec:
        return ChannelSpec(k=self.k, l=self.l, S=self.S)


def build_tasks(config: RunConfig) -> list[RowTask]:
    """Tasks in (k, l, S, solver, h) order."""
    return [
        RowTask(k, l, S, SolverId(solver), h)
        for k, l, S in config.channels()
        for solver in config.solvers
        for h in config.h
    ]


def run_task(task: RowTask, numerics: NumericsConfig) -> ResultRow:
    """Run one task; numerical failures are returned as a failed row."""
    started = time.perf_counter()
    try:
        result = run_solver(task.channel, task.solver, numerics.model_copy(update={"h": task.h}))
    except (CFWaveError, ValueError, ArithmeticError) as e:
        logger.warning(
            "solver failed",
            extra={"channel": f"k={task.k:g},l={task.l},S={task.S}", "solver": task.solver.value, "error": str(e)},
        )
        return ResultRow.failed(task.k, task.l, task.S, task.solver, task.h, e, time.perf_counter() - started)
    return ResultRow.from_result(result, wall_time=time.perf_counter() - started)


def run_tasks(tasks: Sequence[RowTask], numerics: NumericsConfig, jobs: int = 1) -> list[ResultRow]:
    """
    Run every task and return the rows in task order.

    Args:
        tasks: Tasks to run
        numerics: Settings shared by all tasks (``h`` comes from each task)
        jobs: Worker processes; 1 runs in-process
    """
    if not tasks:
        return []
    logger.info("running tasks", extra={"tasks": len(tasks), "jobs": jobs})
    if jobs <= 1 or len(tasks) == 1:
        return [run_task(task, numerics) for task in tasks]
    with ProcessPoolExecutor(max_workers=min(jobs, len(tasks))) as pool:
        return list(pool.map(run_task, tasks, repeat(numerics)))
