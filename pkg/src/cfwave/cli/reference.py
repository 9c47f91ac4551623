"""
Published phase shifts (rad) of the comparison tables.

Tables 1 and 2 hold l = 0 and l = 1 for both spins, with the Numerov-code
values at three base steps; tables 3 and 4 hold l = 2..5 for the singlet and
the triplet with the Numerov-code values at h = 0.006 only. ``None`` marks a
cell reported as unstable.
"""

from dataclasses import dataclass

from cfwave.foundation.config import SolverId


@dataclass(frozen=True)
class ReferenceColumn:
    """One column of a reference table."""

    solver: SolverId
    l: int
    S: int
    h: float
    values: tuple[float | None, ...]

    @property
    def label(self) -> str:
        if self.solver is SolverId.KFTEE:
            return f"l{self.l}_S{self.S}_kftee"
        return f"l{self.l}_S{self.S}_{self.solver.value}_h{self.h:g}"


@dataclass(frozen=True)
class ReferenceTable:
    """A reference table: wavenumbers and columns over them."""

    table_id: int
    caption: str
    k: tuple[float, ...]
    columns: tuple[ReferenceColumn, ...]


K_TABLE_1 = tuple(round(0.1 * i, 1) for i in range(1, 16))
K_TABLES_2_4 = tuple(round(0.1 * i, 1) for i in range(1, 11))
STEPS = (0.004, 0.006, 0.008)
KFTEE_STEP = 0.006


def _step_columns(l: int, S: int, rows: list[tuple[float | None, ...]]) -> tuple[ReferenceColumn, ...]:
    """Columns h=.004/.006/.008 (Numerov code) then KFTEE from row tuples."""
    cells = list(zip(*rows))
    numerov = tuple(ReferenceColumn(SolverId.MCDMM, l, S, h, tuple(cells[i])) for i, h in enumerate(STEPS))
    return numerov + (ReferenceColumn(SolverId.KFTEE, l, S, KFTEE_STEP, tuple(cells[3])),)


def _pair_columns(S: int, rows: list[tuple[float | None, ...]]) -> tuple[ReferenceColumn, ...]:
    """(Numerov code, KFTEE) column pairs for l = 2..5."""
    cells = list(zip(*rows))
    columns: list[ReferenceColumn] = []
    for index, l in enumerate(range(2, 6)):
        columns.append(ReferenceColumn(SolverId.MCDMM, l, S, KFTEE_STEP, tuple(cells[2 * index])))
        columns.append(ReferenceColumn(SolverId.KFTEE, l, S, KFTEE_STEP, tuple(cells[2 * index + 1])))
    return tuple(columns)


# fmt: off
_TABLE_1_S0 = [
    (1.138750, 1.134672, 1.171174, 2.527441),
    (1.996521, 1.995936, 1.996479, 2.034071),
    (1.649999, 1.650124, 1.650246, 1.665189),
    (1.372797, 1.372837, 1.372796, 1.384975),
    (1.157391, 1.157409, 1.157391, 1.168257),
    (0.991071, 0.991079, 0.991087, 1.000723),
    (0.865011, 0.865016, 0.865020, 0.873758),
    (0.772639, 0.772644, 0.772644, 0.779612),
    (0.708203, 0.708203, 0.708199, 0.713415),
    (0.666187, 0.666189, 0.666178, 0.670122),
    (0.641285, 0.641284, 0.641271, 0.644246),
    (0.628568, 0.628567, 0.628552, 0.630856),
    (0.623787, 0.623786, 0.623773, 0.625395),
    (0.623565, 0.623563, 0.623551, 0.624628),
    (0.625441, 0.625439, 0.625429, 0.626161),
]
_TABLE_1_S1 = [
    (2.944466, 2.944487, 2.944556, 2.948757),
    (2.735678, 2.735645, 2.735678, 2.735060),
    (2.527570, 2.527588, 2.527605, 2.523228),
    (2.329332, 2.329341, 2.329332, 2.322439),
    (2.146210, 2.146215, 2.146210, 2.137332),
    (1.980222, 1.980225, 1.980228, 1.969819),
    (1.831592, 1.831594, 1.831596, 1.819917),
    (1.699554, 1.699556, 1.699556, 1.743484),
    (1.582765, 1.582765, 1.582763, 1.621901),
    (1.479626, 1.479627, 1.479620, 1.507213),
    (1.388498, 1.388498, 1.388489, 1.407830),
    (1.307821, 1.307820, 1.307809, 1.320019),
    (1.236182, 1.236181, 1.236170, 1.242529),
    (1.172346, 1.172343, 1.172333, 1.174116),
    (1.115244, 1.115242, 1.115232, 1.113588),
]
_TABLE_2_S0 = [
    (0.006806, 0.006806, 0.006805, 0.006873),
    (0.018017, 0.018017, 0.018016, 0.018043),
    (0.023633, 0.023633, 0.023633, 0.023657),
    (0.021210, 0.021210, 0.021209, 0.021230),
    (0.013588, 0.013588, 0.013588, 0.013606),
    (0.005301, 0.005301, 0.005301, 0.005314),
    (0.000175, 0.000175, 0.000175, 0.000185),
    (0.000478, 0.000478, 0.000478, 0.000486),
    (0.006922, 0.006922, 0.006922, 0.006933),
    (0.019049, 0.019049, 0.019049, 0.019062),
]
_TABLE_2_S1 = [
    (0.011107, 0.011107, 0.011105, 0.011161),
    (0.050578, 0.050577, 0.050576, 0.050605),
    (0.121599, 0.121599, 0.121599, 0.121611),
    (0.215073, 0.215072, 0.215072, 0.215060),
    (0.311177, 0.311177, 0.311176, 0.311150),
    (0.391342, 0.391342, 0.391342, 0.391291),
    (0.447613, 0.447613, 0.447613, 0.447559),
    (0.481454, 0.481454, 0.481453, 0.481395),
    (0.498186, 0.498186, 0.498186, 0.498122),
    (0.503268, 0.503268, 0.503268, 0.503206),
]
_TABLE_3 = [
    (0.001287, 0.001344, 0.000334, 0.000449, None,     0.000204, None,     0.000110),
    (0.005231, 0.005269, 0.001765, 0.001795, 0.000776, 0.000816, 0.000401, 0.000439),
    (0.011215, 0.011234, 0.004005, 0.004028, 0.001817, 0.001837, 0.000962, 0.000988),
    (0.018215, 0.018227, 0.007071, 0.007085, 0.003247, 0.003264, 0.001743, 0.001758),
    (0.025156, 0.025163, 0.010797, 0.010806, 0.005074, 0.005084, 0.002733, 0.002745),
    (0.031323, 0.031322, 0.014959, 0.014962, 0.007255, 0.007263, 0.003942, 0.003949),
    (0.036537, 0.036534, 0.019299, 0.019301, 0.009737, 0.009741, 0.005354, 0.005360),
    (0.041023, 0.041016, 0.023616, 0.023610, 0.012437, 0.012436, 0.006953, 0.006958),
    (0.045182, 0.045174, 0.027784, 0.027781, 0.015271, 0.015269, 0.008710, 0.008711),
    (0.049394, 0.049382, 0.031763, 0.031756, 0.018163, 0.018158, 0.010593, 0.010591),
]
_TABLE_4 = [
    (0.001295, 0.001358, 0.000334, 0.000449, None,     0.000204, None,     0.000110),
    (0.005456, 0.005492, 0.001768, 0.001798, 0.000776, 0.000816, 0.000401, 0.000439),
    (0.012687, 0.012706, 0.004035, 0.004059, 0.001818, 0.001837, 0.000962, 0.000988),
    (0.023298, 0.023310, 0.007249, 0.007262, 0.003254, 0.003270, 0.001743, 0.001758),
    (0.037315, 0.037320, 0.011437, 0.011446, 0.005110, 0.005120, 0.002735, 0.002748),
    (0.054197, 0.054200, 0.016625, 0.016628, 0.007384, 0.007392, 0.003953, 0.003961),
    (0.072899, 0.072899, 0.022758, 0.022760, 0.010084, 0.010088, 0.005389, 0.005396),
    (0.092140, 0.092132, 0.029699, 0.029696, 0.013194, 0.013197, 0.007049, 0.007053),
    (0.110743, 0.110721, 0.037226, 0.037223, 0.016684, 0.016684, 0.008925, 0.008928),
    (0.127837, 0.127824, 0.044079, 0.045069, 0.020494, 0.020494, 0.011006, 0.011007),
]
# fmt: on

TABLES: dict[int, ReferenceTable] = {
    1: ReferenceTable(
        1,
        "Phase shifts for l = 0: Numerov code at three steps and KFTEE",
        K_TABLE_1,
        _step_columns(0, 0, _TABLE_1_S0) + _step_columns(0, 1, _TABLE_1_S1),
    ),
    2: ReferenceTable(
        2,
        "Phase shifts for l = 1: Numerov code at three steps and KFTEE",
        K_TABLES_2_4,
        _step_columns(1, 0, _TABLE_2_S0) + _step_columns(1, 1, _TABLE_2_S1),
    ),
    3: ReferenceTable(3, "Singlet phase shifts for l = 2..5 at h = 0.006", K_TABLES_2_4, _pair_columns(0, _TABLE_3)),
    4: ReferenceTable(4, "Triplet phase shifts for l = 2..5 at h = 0.006", K_TABLES_2_4, _pair_columns(1, _TABLE_4)),
}

FIGURES: dict[int, tuple[int, int]] = {1: (0, 0), 2: (0, 1), 3: (1, 0), 4: (1, 1)}
"""Figure id -> (l, S) of the local-exchange comparison curves"""


def reference_value(l: int, S: int, k: float, solver: SolverId = SolverId.KFTEE, h: float = KFTEE_STEP) -> float | None:
    """
    Published phase shift for one cell.

    Raises:
        KeyError: If no table holds the cell
    """
    for table in TABLES.values():
        for column in table.columns:
            if column.solver is solver and column.l == l and column.S == S and abs(column.h - h) < 1e-12:
                for kk, value in zip(table.k, column.values):
                    if abs(kk - k) < 1e-9:
                        return value
    raise KeyError(f"no reference cell for l={l}, S={S}, k={k}, solver={solver.value}, h={h}")
