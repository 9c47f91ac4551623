"""
Reproduction of the published phase-shift tables by the canonical solver.

Anchor cells run by default; the full tables are marked slow.
"""

import math

import pytest

from cfwave.cli.reference import TABLES, reference_value
from cfwave.foundation.config import SolverId
from cfwave.potentials import ChannelSpec
from cfwave.solvers import run_solver

TOLERANCE = {1: 5e-3, 2: 2e-3, 3: 2e-4, 4: 2e-4}
"""Allowed |delta - published| (rad) per table"""

# The l = 3 triplet cell at k = 1.0 breaks the smooth trend of its column.
IRREGULAR_CELLS = {(3, 1, 1.0)}


def _kftee_cells():
    for table_id, table in TABLES.items():
        for column in table.columns:
            if column.solver is not SolverId.KFTEE:
                continue
            for k, value in zip(table.k, column.values):
                marks = []
                if (column.l, column.S, k) in IRREGULAR_CELLS:
                    marks.append(pytest.mark.xfail(reason="published cell off its column trend", strict=False))
                yield pytest.param(
                    table_id, column.l, column.S, k, value, marks=marks, id=f"t{table_id}-l{column.l}-S{column.S}-k{k}"
                )


class TestAnchors:
    """Spot checks of the canonical column."""

    @pytest.mark.parametrize(
        "l, S, k",
        [(0, 0, 0.2), (0, 0, 0.5), (0, 1, 1.0), (1, 1, 0.5), (3, 0, 0.5), (2, 1, 1.0)],
    )
    def test_anchor(self, l, S, k):
        """Test anchor cells within their table tolerance."""
        table_id = 1 if l == 0 else 2 if l == 1 else 3 if S == 0 else 4
        result = run_solver(ChannelSpec(k=k, l=l, S=S), SolverId.KFTEE)

        assert result.converged
        assert result.delta == pytest.approx(reference_value(l, S, k), abs=TOLERANCE[table_id])

    def test_second_branch(self):
        """Test the singlet s-wave at k = 0.2 lies one branch above the principal value."""
        result = run_solver(ChannelSpec(k=0.2, l=0, S=0), SolverId.KFTEE)

        assert result.branch_n == 1
        assert math.tan(result.delta) == pytest.approx(result.tan_delta, rel=1e-10, abs=1e-12)

    def test_triplet_low_energy(self):
        """Test the triplet s-wave at k = 0.1 is resolved near pi."""
        result = run_solver(ChannelSpec(k=0.1, l=0, S=1), SolverId.KFTEE)

        assert result.delta == pytest.approx(2.948757, abs=5e-3)

    def test_principal_value_modulo_pi(self):
        """Test tan(delta) at k = 1.0 for the singlet s-wave."""
        result = run_solver(ChannelSpec(k=1.0, l=0, S=0), SolverId.KFTEE)

        assert math.tan(result.delta) == pytest.approx(math.tan(0.670122), abs=5e-3)


@pytest.mark.slow
class TestFullTables:
    """Every canonical cell of tables 1 to 4."""

    @pytest.mark.parametrize("table_id, l, S, k, published", list(_kftee_cells()))
    def test_cell(self, table_id, l, S, k, published):
        """Test one cell within its table tolerance."""
        result = run_solver(ChannelSpec(k=k, l=l, S=S), SolverId.KFTEE)

        assert result.converged
        assert result.delta == pytest.approx(published, abs=TOLERANCE[table_id])
