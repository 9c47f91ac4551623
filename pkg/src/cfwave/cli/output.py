"""
Result rows and their CSV/JSON serialization.
"""

import io
from collections.abc import Sequence
from pathlib import Path
from typing import Annotated

import pandas as pd
from pydantic import BaseModel, ConfigDict, Field, TypeAdapter, model_validator

from cfwave.foundation.config import OutputFormat, SolverId
from cfwave.phaseshift import PhaseShiftResult

CSV_COLUMNS = ["k", "l", "S", "solver", "h", "delta", "tan_delta", "branch", "converged", "plateau_spread"]
"""Header of every result CSV, in order"""

FLOAT_FORMAT = "%.9g"


class ResultRow(BaseModel):
    """
    One (channel, solver, h) result.

    ``delta``, ``tan_delta`` and ``branch`` are set only for converged rows;
    failed rows carry the error text instead.

    Example:
        ```python
        row = ResultRow.from_result(run_solver(channel, "kftee"), wall_time=1.2)
        row.delta  # 1.168...
        ```
    """

    k: Annotated[float, Field(gt=0)]
    l: Annotated[int, Field(ge=0)]
    S: Annotated[int, Field(ge=0, le=1)]
    solver: SolverId
    h: Annotated[float, Field(gt=0)]
    delta: float | None = None
    tan_delta: float | None = None
    branch: int | None = None
    converged: bool = False
    plateau_spread: float | None = None
    unstable: bool = False
    wall_time: float | None = None
    error: str | None = None

    model_config = ConfigDict(frozen=True)

    @model_validator(mode="after")
    def validate_delta(self) -> "ResultRow":
        """delta is present exactly when the row converged."""
        if self.converged != (self.delta is not None):
            raise ValueError("delta must be set if and only if the row converged")
        return self

    @classmethod
    def from_result(cls, result: PhaseShiftResult, wall_time: float | None = None) -> "ResultRow":
        """Row from a solver result (values dropped when it did not converge)."""
        channel = result.channel
        converged = result.converged
        return cls(
            k=channel.k,
            l=channel.l,
            S=channel.S,
            solver=result.solver,
            h=result.h,
            delta=result.delta if converged else None,
            tan_delta=result.tan_delta if converged else None,
            branch=result.branch_n if converged else None,
            converged=converged,
            plateau_spread=result.plateau_spread,
            unstable=result.unstable,
            wall_time=wall_time,
        )

    @classmethod
    def failed(
        cls, k: float, l: int, S: int, solver: SolverId, h: float, error: Exception, wall_time: float | None = None
    ) -> "ResultRow":
        """Row for a solver that raised."""
        return cls(k=k, l=l, S=S, solver=solver, h=h, error=str(error), wall_time=wall_time)


_ROWS = TypeAdapter(list[ResultRow])


def rows_to_dataframe(rows: Sequence[ResultRow]) -> pd.DataFrame:
    """Rows as a frame with exactly the CSV columns."""
    records = [row.model_dump(mode="json", include=set(CSV_COLUMNS)) for row in rows]
    df = pd.DataFrame(records, columns=CSV_COLUMNS)
    df["branch"] = df["branch"].astype("Int64")
    return df


def rows_to_csv(rows: Sequence[ResultRow]) -> str:
    """CSV text with the fixed header and 9 significant digits."""
    buffer = io.StringIO()
    rows_to_dataframe(rows).to_csv(buffer, index=False, float_format=FLOAT_FORMAT, lineterminator="\n")
    return buffer.getvalue()


def rows_to_json(rows: Sequence[ResultRow], deterministic: bool = False) -> str:
    """JSON array of rows; wall times are nulled when ``deterministic``."""
    if deterministic:
        rows = [row.model_copy(update={"wall_time": None}) for row in rows]
    return _ROWS.dump_json(list(rows), indent=2).decode() + "\n"


def rows_from_json(text: str | bytes) -> list[ResultRow]:
    """Parse rows written by ``rows_to_json``."""
    return _ROWS.validate_json(text)


def frame_to_csv(df: pd.DataFrame, na_rep: str = "") -> str:
    """CSV text of a report frame with the result float format."""
    buffer = io.StringIO()
    df.to_csv(buffer, index=False, float_format=FLOAT_FORMAT, na_rep=na_rep, lineterminator="\n")
    return buffer.getvalue()


def render_rows(rows: Sequence[ResultRow], fmt: OutputFormat, deterministic: bool = False) -> str:
    """Serialize rows in the requested format."""
    if OutputFormat(fmt) is OutputFormat.JSON:
        return rows_to_json(rows, deterministic)
    return rows_to_csv(rows)


def emit(text: str, output: Path | None) -> None:
    """Write ``text`` to ``output`` (parents created) or to stdout."""
    if output is None:
        print(text, end="")
        return
    output = Path(output)
    output.parent.mkdir(parents=True, exist_ok=True)
    output.write_text(text, encoding="utf-8")
