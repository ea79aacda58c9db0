import math

from dyckab.paths import catalan, iter_area_bounce
from dyckab.qbell import (
    DISTINCT_AB_FIRST_TWENTY,
    BivariateTable,
    ab_interval_width,
    bell_number,
    distinct_ab_count,
    minimizing_composition,
    poly_eval,
    poly_to_string,
    q_bell,
    q_binomial,
    qt_catalan,
    qt_flip_closure,
)


# -- gaussian polynomials ---------------------------------------------------------


def test_q_binomial_small():
    assert q_binomial(2, 1) == (1, 1)
    assert q_binomial(4, 2) == (1, 1, 2, 1, 1)
    assert q_binomial(5, 0) == (1,)
    assert q_binomial(5, 5) == (1,)


def test_q_binomial_out_of_range_is_zero():
    assert q_binomial(3, 4) == ()
    assert q_binomial(3, -1) == ()


def test_q_binomial_degree_and_positivity():
    for m in range(10):
        for k in range(m + 1):
            coeffs = q_binomial(m, k)
            assert len(coeffs) == k * (m - k) + 1
            assert all(c > 0 for c in coeffs)
            assert poly_eval(coeffs, 1) == math.comb(m, k)


def test_q_binomial_symmetry():
    for m in range(9):
        for k in range(m + 1):
            assert q_binomial(m, k) == q_binomial(m, m - k)


# -- q-bell ------------------------------------------------------------------------


def test_q_bell_base_cases():
    assert q_bell(0) == (1,)
    assert q_bell(1) == (1,)
    assert q_bell(3) == (4, 1)


def test_q_bell_weight_one_is_bell():
    for n in range(16):
        assert poly_eval(q_bell(n), 1) == bell_number(n)


def test_bell_numbers():
    assert [bell_number(n) for n in range(7)] == [1, 1, 2, 5, 15, 52, 203]


def test_q_bell_support_is_gap_free():
    for n in range(21):
        coeffs = q_bell(n)
        assert len(coeffs) == ab_interval_width(n) + 1
        assert all(c > 0 for c in coeffs)


# -- the width recursion ---------------------------------------------------------------


def test_width_values():
    assert ab_interval_width(0) == 0
    assert ab_interval_width(2) == 0
    assert ab_interval_width(4) == 2
    assert [ab_interval_width(n) + 1 for n in range(20)] == list(
        DISTINCT_AB_FIRST_TWENTY
    )


def test_minimizing_composition():
    for n in range(1, 15):
        alpha = minimizing_composition(n)
        assert sum(alpha) == n
        total = 0
        pos = 0
        for part in alpha:
            pos += part
            total += (part - 1) * (n - pos)
        assert total == ab_interval_width(n)


def test_distinct_ab_reference_sequence():
    assert tuple(distinct_ab_count(n) for n in range(20)) == DISTINCT_AB_FIRST_TWENTY
    assert distinct_ab_count(2) == 1


def test_distinct_ab_matches_brute_force():
    for n in range(10):
        totals = {a + b for a, b in iter_area_bounce(n)}
        assert len(totals) == distinct_ab_count(n)


# -- bivariate tables --------------------------------------------------------------------


def test_qt_catalan_two():
    table = qt_catalan(2)
    assert table.at(1, 0) == 1
    assert table.at(0, 1) == 1
    assert table.total() == 2
    assert table.evaluate(1, 1) == 2


def test_qt_catalan_totals_and_symmetry():
    for n in range(9):
        table = qt_catalan(n)
        assert table.total() == catalan(n)
        assert table.is_symmetric()
        assert table.transpose().rows == table.rows


def test_qt_catalan_support():
    for n in range(1, 9):
        lo, hi = qt_catalan(n).support_totals()
        assert hi == math.comb(n, 2)
        assert lo == math.comb(n, 2) - ab_interval_width(n)


def test_qt_flip_closure_symmetry():
    for n in range(1, 9):
        assert qt_flip_closure(n).is_symmetric()


def test_csv_emission():
    table = qt_catalan(2)
    assert table.to_csv() == "area\\bounce,0,1\n0,0,1\n1,1,0\n"


def test_poly_to_string():
    assert poly_to_string(()) == "0"
    assert poly_to_string((4, 1)) == "4 + q"
    assert poly_to_string((0, 2, 0, 1)) == "2*q + q^3"


def test_from_pairs_round_trip():
    pairs = [(0, 1), (1, 0), (1, 0)]
    table = BivariateTable.from_pairs(2, pairs)
    assert table.at(1, 0) == 2
    assert table.at(0, 1) == 1
    assert not table.is_symmetric()
