import pytest

from cliquecover import (
    complete_graph,
    format_ratio_table,
    max_cover_sum,
    ordered_pairs_inv,
    ratio_row,
    ratio_table,
    vertex_sum_bound,
)


def test_ratio_row_at_plane_sizes():
    for p, n in [(2, 7), (3, 13), (5, 31), (7, 57), (11, 133)]:
        row = ratio_row(n)
        assert row.p == p
        assert row.plane_n == n
        assert row.lower == n * (p + 1)
        assert row.upper == float(row.lower)
        assert row.ratio == 1.0


def test_ratio_row_between_planes():
    row = ratio_row(132)
    assert row.p == 7
    assert row.plane_n == 57
    assert row.lower == 57 * 8 + 75  # 531, plane plus padding
    # closed form: 132 * (1 + sqrt(525)) / 2
    assert row.upper == pytest.approx(1578.2499793354, rel=1e-12)
    assert row.ratio == pytest.approx(531 / 1578.2499793354, rel=1e-12)


def test_ratio_row_lower_is_achievable():
    # at n=7 the constructive bound meets the exact optimum
    row = ratio_row(7)
    res = max_cover_sum(complete_graph(7), 7)
    assert row.lower <= res.best_sum == 21


def test_ratio_row_bounds_sane():
    for n in (7, 9, 40, 500, 12345):
        row = ratio_row(n)
        assert 0 < row.ratio <= 1 + 1e-9
        assert row.upper == pytest.approx(vertex_sum_bound(n).total)
        assert row.upper == pytest.approx(n * ordered_pairs_inv(n - 1), rel=1e-9)


def test_ratio_row_requires_a_plane():
    for n in (0, 3, 6):
        with pytest.raises(ValueError, match="n >= 7"):
            ratio_row(n)


def test_ratio_table_rows():
    rows = ratio_table(7, 13, 3)
    assert [r.n for r in rows] == [7, 10, 13]
    assert rows[0].ratio == 1.0
    assert rows[2].ratio == 1.0
    single = ratio_table(13, 13, 1)
    assert len(single) == 1 and single[0].p == 3


def test_ratio_table_errors():
    with pytest.raises(ValueError, match="step"):
        ratio_table(7, 20, 0)
    with pytest.raises(ValueError, match="empty range"):
        ratio_table(20, 7, 1)


def test_format_ratio_table():
    text = format_ratio_table(ratio_table(7, 7, 1))
    assert text == "n\tp\tplane_n\tlower\tupper\tratio\n7\t2\t7\t21\t21.000000\t1.000000\n"
    text13 = format_ratio_table(ratio_table(13, 13, 1))
    assert text13.splitlines()[1] == "13\t3\t13\t52\t52.000000\t1.000000"
