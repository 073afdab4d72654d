import re

import pytest

from hailstone.core import UndefinedInputError, trailing_zeros
from hailstone.experiments import (
    FRAME_FIXED,
    FRAME_MINIMAL,
    FigureDataset,
    figure1_dataset,
    figure2_dataset,
    figure3_dataset,
    figure4_dataset,
    figure5_dataset,
    mass_ratio,
    mass_ratio_p,
    mass_ratio_q,
    mirror_length_gap,
)
from hailstone.reflection import reflect


def oracle_block_count(x, L):
    s = format(x, f"0{L}b")
    return len(re.findall("0+|1+", s))


def oracle_p_counts(L, frame_mode):
    less = greater = equal = 0
    for x in range(1, 1 << L, 2):
        y = 3 * x + 1
        if frame_mode == FRAME_MINIMAL:
            d = oracle_block_count(y, y.bit_length()) - oracle_block_count(x, x.bit_length())
        else:
            d = oracle_block_count(y, L + 2) - oracle_block_count(x, L + 2)
        if d < 0:
            less += 1
        elif d > 0:
            greater += 1
        else:
            equal += 1
    return less, greater, equal


def test_mass_ratio_p_small_case():
    report = mass_ratio_p(3)
    assert (report.p_less, report.p_greater, report.p_equal) == (1, 3, 0)
    assert report.frame_mode == FRAME_MINIMAL


def test_mass_ratio_p_rejects_degenerate_interval():
    with pytest.raises(ValueError):
        mass_ratio_p(1)


@pytest.mark.parametrize("frame_mode", [FRAME_MINIMAL, FRAME_FIXED])
@pytest.mark.parametrize("L", range(3, 9))
def test_mass_ratio_p_against_oracle(L, frame_mode):
    report = mass_ratio_p(L, frame_mode)
    assert (report.p_less, report.p_greater, report.p_equal) == oracle_p_counts(L, frame_mode)
    assert report.p_less + report.p_greater + report.p_equal == 1 << (L - 1)


def test_mirror_length_gap_examples():
    assert mirror_length_gap(1) == 2
    assert mirror_length_gap(5) == 4
    assert mirror_length_gap(3) == 1


def test_mirror_length_gap_rejects_even():
    with pytest.raises(UndefinedInputError):
        mirror_length_gap(6)


def test_mirror_length_gap_equals_trailing_zeros():
    for x in range(1, 1 << 20, 2):
        assert mirror_length_gap(x) == trailing_zeros(3 * x + 1)


def test_mass_ratio_q_small_case():
    report = mass_ratio_q(3)
    assert report.gap_histogram == {1: 2, 2: 1, 4: 1}
    assert (report.q_less, report.q_greater, report.q_equal) == (0, 4, 0)
    assert report.q_ratio == 0


def test_mass_ratio_q_minimal_is_always_positive():
    for L in range(3, 13):
        report = mass_ratio_q(L)
        assert report.q_less == 0 and report.q_equal == 0
        assert report.q_greater == 1 << (L - 1)
        assert sum(report.gap_histogram.values()) == 1 << (L - 1)
        assert min(report.gap_histogram) >= 1


def test_mass_ratio_q_fixed_mode_has_all_signs():
    report = mass_ratio_q(4, FRAME_FIXED)
    # gap in frame L+2 is l2(y) + t(y) - (L+2); recount directly
    less = greater = equal = 0
    for x in range(1, 16, 2):
        y = 3 * x + 1
        gap = y.bit_length() + trailing_zeros(y) - 6
        less += gap < 0
        greater += gap > 0
        equal += gap == 0
    assert (report.q_less, report.q_greater, report.q_equal) == (less, greater, equal)


def test_mass_ratio_merges_both_halves():
    report = mass_ratio(5)
    assert None not in (report.p_less, report.q_less)
    assert report.p_ratio is not None
    assert report.gap_mean * report.odd_count == sum(
        g * c for g, c in report.gap_histogram.items()
    )
    d = report.to_dict()
    assert d["L"] == 5 and "p_ratio" in d and "q_gap_mean" in d


def test_figure_dataset_rejects_ragged_columns():
    with pytest.raises(ValueError):
        FigureDataset("1", {"a": [1, 2], "b": [1]}, {})


def test_figure1():
    ds = figure1_dataset(3)
    assert ds.columns["x"][:8] == [1, 2, 3, 4, 5, 6, 7, 8]
    assert ds.columns["pow2_factor"] == [1, 2, 1, 4, 1, 2, 1, 8]
    assert ds.n_rows == 8
    for L in range(1, 8):
        ds = figure1_dataset(L)
        assert ds.n_rows == 1 << L
        for x, f in zip(ds.columns["x"], ds.columns["pow2_factor"]):
            assert f == 1 << trailing_zeros(x)
            if x & (x - 1) == 0:
                assert f == x


def test_figure2():
    ds = figure2_dataset(2)
    assert ds.columns["reflected_tzs"] == [2, 1, 0, 0]
    for L in range(1, 13):
        ds = figure2_dataset(L)
        assert ds.columns["reflected_tzs"][0] == L
        assert ds.columns["reflected_tzs"] == ds.columns["sorted_tzs"]
        direct = [trailing_zeros(n, frame=L) for n in range(1 << L)]
        assert ds.columns["sorted_tzs"] == sorted(direct, reverse=True)


def test_figure3():
    ds = figure3_dataset(2)
    pairs = list(zip(ds.columns["reflect_prev"], ds.columns["reflect_curr"]))
    assert pairs == [(0, 2), (2, 1), (1, 3)]
    for L in range(1, 15):
        ds = figure3_dataset(L)
        assert ds.n_rows == (1 << L) - 1
        for x, prev, curr in zip(ds.columns["x"], ds.columns["reflect_prev"],
                                 ds.columns["reflect_curr"]):
            assert prev != curr
            assert curr - prev == (3 << (L - trailing_zeros(x) - 1)) - (1 << L)


def test_figure4():
    part_a, part_b = figure4_dataset(3)
    assert part_a.columns["rld"] == [1, 2, 3, 2, 2, 3, 2, 1]
    assert part_b.columns["value"] == [0, 1, 2, 3]
    assert part_b.columns["rld_count"] == [0, 2, 4, 2]
    assert part_b.columns["digit_sum_count"] == [1, 3, 3, 1]
    part_a, part_b = figure4_dataset(10)
    assert sum(part_b.columns["rld_count"]) == 1 << 10
    assert part_b.columns["digit_sum_count"][5] == 252


def test_figure5():
    ds = figure5_dataset(4, 8)
    assert ds.columns["L"] == [4, 5, 6, 7, 8]
    for L, less, greater, equal in zip(ds.columns["L"], ds.columns["p_less"],
                                       ds.columns["p_greater"], ds.columns["p_equal"]):
        assert less + greater + equal == 1 << (L - 1)
    assert ds.metadata == {"Lmin": 4, "Lmax": 8, "frame_mode": "minimal"}
    assert figure5_dataset(4, 8).columns == ds.columns
    with pytest.raises(ValueError):
        figure5_dataset(2, 8)
    with pytest.raises(ValueError):
        figure5_dataset(4, 30)


def test_figure_caps():
    with pytest.raises(ValueError):
        figure1_dataset(21)
