import pytest
from hypothesis import given, settings

from dyckab.paths import DyckPath, enumerate_paths
from dyckab.ops import (
    BOTTOM,
    add_area_cell,
    add_column_cell,
    bounce_boost,
    down,
    existence_scan_down,
    existence_scan_up,
    is_bottom,
    remove_area_cell,
    remove_column_cell,
    shift,
    unshift,
    up,
)
from _strategies import dyck_paths


def blocks(n, alpha):
    return DyckPath.from_composition(n, alpha)


def w(word):
    return DyckPath.from_word(word)


def bounce_index_count(p):
    return len(p.bounce_points()) - 1


# -- cell operators -----------------------------------------------------------


def test_add_area_cell():
    assert add_area_cell(w("NENE"), 2) == w("NNEE")


def test_add_area_cell_row_one_always_bottom():
    for p in enumerate_paths(4):
        assert add_area_cell(p, 1) is BOTTOM


def test_remove_area_cell():
    assert remove_area_cell(w("NNEE"), 2) == w("NENE")
    assert remove_area_cell(w("NENE"), 2) is BOTTOM


def test_add_column_cell():
    assert add_column_cell(w("NENE"), 1) == w("NNEE")


def test_add_column_cell_full_path_bottom():
    full = blocks(4, (4,))
    for col in range(1, 5):
        assert add_column_cell(full, col) is BOTTOM


def test_remove_column_cell():
    assert remove_column_cell(w("NNEE"), 1) == w("NENE")
    assert remove_column_cell(w("NENE"), 1) is BOTTOM


def test_out_of_range_is_usage_error_not_bottom():
    p = w("NNEE")
    for fn in (add_area_cell, remove_area_cell, add_column_cell, remove_column_cell):
        with pytest.raises(ValueError):
            fn(p, 0)
        with pytest.raises(ValueError):
            fn(p, 3)
    for fn in (shift, unshift, up, down):
        with pytest.raises(ValueError):
            fn(p, 0)


def test_cell_ops_invert_each_other_exhaustive():
    for p in enumerate_paths(5):
        for r in range(1, 6):
            q = add_area_cell(p, r)
            if q is not BOTTOM:
                assert q.area() == p.area() + 1
                assert remove_area_cell(q, r) == p
            q = add_column_cell(p, r)
            if q is not BOTTOM:
                assert q.area() == p.area() + 1
                assert remove_column_cell(q, r) == p


# -- shift ---------------------------------------------------------------------


def test_shift_swaps_adjacent_blocks():
    result = shift(blocks(5, (3, 2)), 1)
    assert result == blocks(5, (2, 3))
    assert result.area() == 4 and result.bounce() == 3


def test_shift_single_segment_bottom():
    for n in (1, 3, 6):
        assert shift(blocks(n, (n,)), 1) is BOTTOM


def test_shift_repeated_swaps_parts():
    # delta applications swap a larger part past the next smaller one
    for alpha, i in [((3, 1), 1), ((4, 2, 1), 1), ((4, 2, 1), 2), ((5, 2), 1)]:
        n = sum(alpha)
        delta = alpha[i - 1] - alpha[i]
        cur = blocks(n, alpha)
        for _ in range(delta):
            cur = shift(cur, i)
            assert cur is not BOTTOM
        swapped = list(alpha)
        swapped[i - 1], swapped[i] = swapped[i], swapped[i - 1]
        assert cur == blocks(n, tuple(swapped))


def test_unshift_examples():
    assert unshift(blocks(5, (2, 3)), 1) == blocks(5, (3, 2))
    assert unshift(blocks(4, (4,)), 1) is BOTTOM


def test_shift_unshift_exhaustive():
    for n in range(1, 8):
        for p in enumerate_paths(n):
            for i in range(1, bounce_index_count(p) + 1):
                q = shift(p, i)
                if q is not BOTTOM:
                    assert q.area() == p.area()
                    assert q.bounce() == p.bounce() + 1
                    pts = p.bounce_points()
                    assert q.bounce_points() == pts[:i] + (pts[i] - 1,) + pts[i + 1 :]
                    assert unshift(q, i) == p
                q = unshift(p, i)
                if q is not BOTTOM:
                    assert shift(q, i) == p


# -- bounce boost -----------------------------------------------------------------


def test_boost_zero_is_identity():
    p = w("NNNEENENEENNEE")
    assert bounce_boost(p, 1, 0) == p


def test_boost_single_shift():
    assert bounce_boost(blocks(5, (3, 2)), 1, 1) == blocks(5, (2, 3))


def test_boost_block_decomposition():
    # gaps 2, 1, 2 after the first part: budget 4 spends 2, then 1, then 1
    p = blocks(11, (4, 2, 3, 2))
    expected = p
    for index, times in ((1, 2), (2, 1), (3, 1)):
        for _ in range(times):
            expected = shift(expected, index)
    got = bounce_boost(p, 1, 4)
    assert got == expected
    assert got.bounce() == p.bounce() + 4
    assert got.area() == p.area()


def test_boost_exhausts_budget_or_bottom():
    for n in range(2, 7):
        for p in enumerate_paths(n):
            for i in range(1, bounce_index_count(p) + 1):
                for k in range(0, 5):
                    q = bounce_boost(p, i, k)
                    if q is not BOTTOM:
                        assert q.bounce() == p.bounce() + k
                        assert q.area() == p.area()


# -- up/down -----------------------------------------------------------------------


def test_up_example():
    result = up(blocks(5, (3, 1, 1)), 1)
    assert result == blocks(5, (2, 2, 1))
    assert result.bounce_points() == (0, 2, 4, 5)


def test_up_full_path_removes_corner_cell():
    # the lone class member must admit an up, per the no-up shape lemma
    for n in (2, 4, 6):
        full = blocks(n, (n,))
        assert up(full, 1) == remove_column_cell(full, 1)


def test_up_region_move_matches_operator_word():
    # column heights (7,7,8,8,8,8,8,11,11,11,11,14,14,14); bounce (0,7,11,14)
    p = DyckPath.from_column_heights(
        (7, 7, 8, 8, 8, 8, 8, 11, 11, 11, 11, 14, 14, 14)
    )
    assert p.bounce_points() == (0, 7, 11, 14)
    steps = p
    for col, times in ((1, 1), (2, 1), (3, 2), (4, 2)):
        for _ in range(times):
            steps = remove_column_cell(steps, col)
    for row, times in ((9, 2), (10, 2), (11, 1)):
        for _ in range(times):
            steps = add_area_cell(steps, row)
    assert up(p, 1) == steps
    # the second corner fails because column 11 cannot lose its top cell
    assert remove_column_cell(p, 11) is BOTTOM
    assert up(p, 2) is BOTTOM


def test_down_example():
    assert down(blocks(5, (2, 2, 1)), 1) == blocks(5, (3, 1, 1))


def test_up_down_exhaustive():
    for n in range(1, 8):
        for p in enumerate_paths(n):
            for i in range(1, bounce_index_count(p) + 1):
                q = up(p, i)
                if q is not BOTTOM:
                    assert q.area() == p.area() - 1
                    assert q.bounce() == p.bounce() + 1
                    assert down(q, i) == p
                q = down(p, i)
                if q is not BOTTOM:
                    assert q.area() == p.area() + 1
                    assert q.bounce() == p.bounce() - 1
                    assert up(q, i) == p


# -- existence scans -----------------------------------------------------------------


def test_scan_down_skips_blocked_corners():
    p = w("NNENEENENE")
    assert down(p, 1) is BOTTOM
    assert down(p, 2) is BOTTOM
    assert existence_scan_down(p, 1) == 3
    assert down(p, 3) is not BOTTOM


def test_scan_up_immediate_case():
    # hypothesis holds at i and the corner touches: the scan returns i
    p = w("NNENEE")
    assert p.column_heights()[1] == p.bounce_points()[2]
    assert existence_scan_up(p, 1) == 1
    assert up(p, 1) == w("NENNEE")


def test_scans_exhaustive():
    for n in range(1, 8):
        for p in enumerate_paths(n):
            pts = p.bounce_points()
            m = len(pts) - 1
            a = p.area_sequence()
            h = p.column_heights()
            for i in range(1, m):
                if a[pts[i]] == pts[i] - pts[i - 1] - 1:
                    j = existence_scan_down(p, i)
                    assert j is not None and i <= j <= m - 1
                    assert down(p, j) is not BOTTOM
                if h[pts[i] - 1] == pts[i + 1]:
                    j = existence_scan_up(p, i)
                    assert j is not None and 1 <= j <= i
                    assert up(p, j) is not BOTTOM


# -- bottom handling -----------------------------------------------------------------


def test_bottom_absorption():
    assert add_area_cell(BOTTOM, 1) is BOTTOM
    assert remove_area_cell(BOTTOM, 1) is BOTTOM
    assert add_column_cell(BOTTOM, 1) is BOTTOM
    assert remove_column_cell(BOTTOM, 1) is BOTTOM
    assert shift(BOTTOM, 1) is BOTTOM
    assert unshift(BOTTOM, 1) is BOTTOM
    assert bounce_boost(BOTTOM, 1, 2) is BOTTOM
    assert up(BOTTOM, 1) is BOTTOM
    assert down(BOTTOM, 1) is BOTTOM


def test_bottom_is_falsy_singleton():
    assert not BOTTOM
    assert is_bottom(BOTTOM)
    assert repr(BOTTOM) == "bottom"
    assert not is_bottom(w("NE"))


# -- randomized properties --------------------------------------------------------------


@given(dyck_paths(max_n=8))
@settings(max_examples=60)
def test_shift_preserves_area_random(p):
    for i in range(1, bounce_index_count(p) + 1):
        q = shift(p, i)
        if q is not BOTTOM:
            assert (q.area(), q.bounce()) == (p.area(), p.bounce() + 1)


@given(dyck_paths(max_n=8))
@settings(max_examples=60)
def test_up_down_trade_one_unit_random(p):
    for i in range(1, bounce_index_count(p) + 1):
        q = up(p, i)
        if q is not BOTTOM:
            assert (q.area(), q.bounce()) == (p.area() - 1, p.bounce() + 1)
            assert down(q, i) == p
