"""Interval-scale statistics and the tabular datasets behind the five figures.

The mass ratios compare, over every odd x in [0, 2**L - 1], the block
complexity (rld) and the mirror bit length of x against its 3x+1 successor.
Because x and 3x+1 never share an interval, the frame used for rld is a
convention: "minimal" measures each value in its own bit length, "fixed"
measures both in the common frame L+2. Reports record which mode was used.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .core import (
    UndefinedInputError,
    binary_length,
    check_frame,
    trailing_zeros,
)
from .reflection import reflect
from .runlength import digit_sum_distribution, rld, rld_sequence
from .report import CheckReport

FRAME_MINIMAL = "minimal"
FRAME_FIXED = "fixed"
FRAME_MODES = (FRAME_MINIMAL, FRAME_FIXED)

MATERIALIZED_MAX_L = 20
STREAMING_MAX_L = 24


def _check_mode(frame_mode: str) -> str:
    if frame_mode not in FRAME_MODES:
        raise ValueError(f"frame_mode must be one of {FRAME_MODES}, got {frame_mode!r}")
    return frame_mode


@dataclass
class MassRatioReport:
    """Sign-class counts over the odd residues of one interval.

    The p fields classify rld(3x+1) - rld(x); the q fields classify the
    mirror length gap. Fields are None when the corresponding half was not
    computed. Counts in each computed half sum to 2**(L-1).
    """

    L: int
    frame_mode: str
    p_less: int | None = None
    p_greater: int | None = None
    p_equal: int | None = None
    q_less: int | None = None
    q_greater: int | None = None
    q_equal: int | None = None
    gap_histogram: dict[int, int] | None = None

    @property
    def odd_count(self) -> int:
        return 1 << (self.L - 1)

    @property
    def p_ratio(self) -> Fraction:
        if self.p_less is None or self.p_greater is None:
            raise ValueError("p counts not computed")
        return Fraction(self.p_less, self.p_greater)

    @property
    def q_ratio(self) -> Fraction | None:
        if self.q_less is None or self.q_greater is None:
            raise ValueError("q counts not computed")
        if self.q_greater == 0:
            return None
        return Fraction(self.q_less, self.q_greater)

    @property
    def gap_mean(self) -> Fraction:
        if self.gap_histogram is None:
            raise ValueError("gap histogram not computed")
        total = sum(g * c for g, c in self.gap_histogram.items())
        return Fraction(total, self.odd_count)

    def to_dict(self) -> dict:
        out: dict = {"L": self.L, "frame_mode": self.frame_mode}
        if self.p_less is not None:
            out.update(p_less=self.p_less, p_greater=self.p_greater, p_equal=self.p_equal,
                       p_ratio=str(self.p_ratio), p_ratio_float=float(self.p_ratio))
        if self.q_less is not None:
            q = self.q_ratio
            out.update(q_less=self.q_less, q_greater=self.q_greater, q_equal=self.q_equal,
                       q_ratio=None if q is None else str(q),
                       q_gap_mean=str(self.gap_mean), q_gap_mean_float=float(self.gap_mean),
                       gap_histogram={str(k): v for k, v in sorted(self.gap_histogram.items())})
        return out


def _rld_in_mode(value: int, L: int, frame_mode: str) -> int:
    if frame_mode == FRAME_MINIMAL:
        return rld(value, binary_length(value))
    return rld(value, L + 2)


def mass_ratio_p(L: int, frame_mode: str = FRAME_MINIMAL) -> MassRatioReport:
    """Classify sign(rld(3x+1) - rld(x)) over odd x in [0, 2**L - 1]."""
    check_frame(L)
    _check_mode(frame_mode)
    if L < 3:
        raise ValueError("mass ratios need L >= 3")
    less = greater = equal = 0
    for x in range(1, 1 << L, 2):
        d = _rld_in_mode(3 * x + 1, L, frame_mode) - _rld_in_mode(x, L, frame_mode)
        if d < 0:
            less += 1
        elif d > 0:
            greater += 1
        else:
            equal += 1
    return MassRatioReport(L, frame_mode, p_less=less, p_greater=greater, p_equal=equal)


def mirror_length_gap(x: int) -> int:
    """binary_length(3x+1) minus the bit length of its mirror image, for odd x.

    With the minimal frame this equals t(3x+1), hence is always >= 1.
    """
    if x < 1 or x % 2 == 0:
        raise UndefinedInputError("defined for positive odd x only")
    y = 3 * x + 1
    ly = binary_length(y)
    return ly - binary_length(reflect(y, ly))


def mass_ratio_q(L: int, frame_mode: str = FRAME_MINIMAL) -> MassRatioReport:
    """Classify the mirror length gap of 3x+1 over odd x in [0, 2**L - 1].

    In minimal mode the gap is t(3x+1) > 0, so the sign counts are all
    "greater"; the gap magnitude histogram carries the usable information
    and is always included. Fixed mode reflects 3x+1 in the frame L+2,
    where zero and negative gaps occur.
    """
    check_frame(L)
    _check_mode(frame_mode)
    if L < 3:
        raise ValueError("mass ratios need L >= 3")
    less = greater = equal = 0
    histogram: dict[int, int] = {}
    for x in range(1, 1 << L, 2):
        if frame_mode == FRAME_MINIMAL:
            gap = mirror_length_gap(x)
        else:
            y = 3 * x + 1
            gap = binary_length(y) - binary_length(reflect(y, L + 2))
        if gap < 0:
            less += 1
        elif gap > 0:
            greater += 1
        else:
            equal += 1
        histogram[gap] = histogram.get(gap, 0) + 1
    return MassRatioReport(L, frame_mode, q_less=less, q_greater=greater, q_equal=equal,
                           gap_histogram=histogram)


def mass_ratio(L: int, frame_mode: str = FRAME_MINIMAL) -> MassRatioReport:
    """Full report: both sign classifications plus the gap histogram."""
    p = mass_ratio_p(L, frame_mode)
    q = mass_ratio_q(L, frame_mode)
    return MassRatioReport(L, frame_mode, p.p_less, p.p_greater, p.p_equal,
                           q.q_less, q.q_greater, q.q_equal, q.gap_histogram)


@dataclass
class FigureDataset:
    """Column-labeled series for one figure; all columns have equal length."""

    figure_id: str
    columns: dict[str, list]
    metadata: dict

    def __post_init__(self):
        lengths = {name: len(values) for name, values in self.columns.items()}
        if len(set(lengths.values())) > 1:
            raise ValueError(f"column lengths differ: {lengths}")

    @property
    def n_rows(self) -> int:
        return len(next(iter(self.columns.values())))


def _check_materialized(L: int) -> int:
    check_frame(L)
    if L > MATERIALIZED_MAX_L:
        raise ValueError(f"materialized datasets capped at L <= {MATERIALIZED_MAX_L}")
    return L


def figure1_dataset(L: int) -> FigureDataset:
    """Series (x, largest power-of-two divisor of x) for x in [1, 2**L]."""
    _check_materialized(L)
    xs = list(range(1, (1 << L) + 1))
    return FigureDataset("1", {"x": xs, "pow2_factor": [x & -x for x in xs]}, {"L": L})


def figure2_dataset(L: int) -> FigureDataset:
    """Trailing zeros of every reflected index, with its sorted twin.

    The reflected_tzs column equals the descending sort of the direct
    trailing-zeros sequence; both are emitted so the overlay can be drawn.
    """
    _check_materialized(L)
    ns = list(range(1 << L))
    reflected = [trailing_zeros(reflect(n, L), frame=L) for n in ns]
    direct = [trailing_zeros(n, frame=L) for n in ns]
    return FigureDataset(
        "2",
        {"n": ns, "reflected_tzs": reflected, "sorted_tzs": sorted(direct, reverse=True)},
        {"L": L},
    )


def figure3_dataset(L: int) -> FigureDataset:
    """Scatter pairs (reflect(x-1), reflect(x)) for x in [1, 2**L - 1]."""
    _check_materialized(L)
    xs = list(range(1, 1 << L))
    table = [reflect(x, L) for x in range(1 << L)]
    return FigureDataset(
        "3",
        {
            "x": xs,
            "reflect_prev": [table[x - 1] for x in xs],
            "reflect_curr": [table[x] for x in xs],
        },
        {"L": L},
    )


def figure4_dataset(L: int) -> tuple[FigureDataset, FigureDataset]:
    """The rld sequence over the interval (4a) and its histogram next to the binomial (4b)."""
    _check_materialized(L)
    seq = rld_sequence(L)
    part_a = FigureDataset("4a", {"n": list(range(1 << L)), "rld": seq}, {"L": L})
    rld_counts: dict[int, int] = {}
    for v in seq:
        rld_counts[v] = rld_counts.get(v, 0) + 1
    digit_counts = digit_sum_distribution(L)
    values = list(range(L + 1))
    part_b = FigureDataset(
        "4b",
        {
            "value": values,
            "rld_count": [rld_counts.get(v, 0) for v in values],
            "digit_sum_count": [digit_counts.get(v, 0) for v in values],
        },
        {"L": L},
    )
    return part_a, part_b


def figure5_dataset(Lmin: int = 4, Lmax: int = 20,
                    frame_mode: str = FRAME_MINIMAL) -> FigureDataset:
    """Mass-ratio summary per interval: p sign counts, p ratio, mean mirror gap."""
    _check_mode(frame_mode)
    if not 4 <= Lmin <= Lmax <= STREAMING_MAX_L:
        raise ValueError(f"need 4 <= Lmin <= Lmax <= {STREAMING_MAX_L}")
    columns: dict[str, list] = {
        "L": [], "p_less": [], "p_greater": [], "p_equal": [],
        "p_ratio": [], "q_gap_mean": [],
    }
    for L in range(Lmin, Lmax + 1):
        report = mass_ratio(L, frame_mode)
        columns["L"].append(L)
        columns["p_less"].append(report.p_less)
        columns["p_greater"].append(report.p_greater)
        columns["p_equal"].append(report.p_equal)
        columns["p_ratio"].append(float(report.p_ratio))
        columns["q_gap_mean"].append(float(report.gap_mean))
    return FigureDataset("5", columns, {"Lmin": Lmin, "Lmax": Lmax, "frame_mode": frame_mode})
