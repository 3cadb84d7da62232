from fractions import Fraction

import pytest

from mslab.bounds import (
    PRIOR_CLAIMED,
    PROVED_HERE,
    STAR_UNCERTAIN,
    alpha_window,
    build_f_alpha,
    compute_b,
    counterexample_check,
    gamma_known,
    in_b_range,
    interval_integer,
    upper_bound_sum,
)
from mslab.combinatorics import binomial
from mslab.errors import DomainError
from mslab.weights import count_dplus

F = Fraction


def scan_interval(lo, hi):
    """Integers in (lo, hi], found by direct scan."""
    return [x for x in range(int(lo) - 1, int(hi) + 2) if lo < x <= hi]


def test_interval_integer_examples():
    assert interval_integer(8, 3, 1) == 5
    assert interval_integer(10, 3, 1) is None
    assert scan_interval(F(2 * 9, 3), F(2 * 10, 3)) == []
    assert interval_integer(10, 3, 2) == 6
    assert F(2, 3) * 8 < 6 <= F(2, 3) * 9


def test_interval_integer_against_scan():
    for n in range(1, 25):
        for d in range(2, 8):
            for k in range(1, n + 1):
                found = scan_interval(F(d - 1, d) * (n - k), F(d - 1, d) * (n - k + 1))
                got = interval_integer(n, d, k)
                assert (got is None) == ((n - k) % d == 0)
                assert found == ([] if got is None else [got])


def test_interval_integer_domain():
    with pytest.raises(DomainError):
        interval_integer(5, 3, 6)
    with pytest.raises(DomainError):
        interval_integer(5, 1, 2)


def scan_b(n, d, r):
    return [b for b in range(1, n + 1) if F(d - 1, d) * (n - b) < r <= F(d - 1, d) * (n - b + 1)]


@pytest.mark.parametrize("n,d,r,b", [(8, 3, 5, 1), (12, 3, 6, 4), (12, 4, 9, 1), (6, 2, 3, 1)])
def test_compute_b_examples(n, d, r, b):
    assert scan_b(n, d, r) == [b]
    assert compute_b(n, d, r) == b


def test_compute_b_domain():
    with pytest.raises(DomainError):
        compute_b(8, 3, 6)
    with pytest.raises(DomainError):
        compute_b(8, 3, 2)


def test_alpha_window_examples():
    assert min(F(5), F(3, 1) - 1, 3 * (5 - F(14, 3))) == 1 == alpha_window(8, 3, 5)
    assert min(F(6, 4), F(3, 2) - 1, F(3, 4) * (6 - F(16, 3))) == F(1, 2) == alpha_window(12, 3, 6)
    assert min(F(9), F(4) - 1, 4 * (9 - F(33, 4))) == 3 == alpha_window(12, 4, 9)


def test_build_f_alpha_examples():
    f = build_f_alpha(8, 3, 5, F(1, 2))
    assert f.values == (1, 1, 1, 1, 1, F(-1, 2), F(-9, 4), F(-9, 4))
    assert f.total() == 0 and f.r == 5
    g = build_f_alpha(6, 2, 3, F(1, 4))
    assert g.values == (1, 1, 1, F(-1, 4), F(-11, 8), F(-11, 8))
    with pytest.raises(DomainError):
        build_f_alpha(8, 3, 5, 1)
    with pytest.raises(DomainError):
        build_f_alpha(8, 3, 5, 0)


def test_upper_bound_sum_examples():
    assert upper_bound_sum(8, 3, 5) == 1 * 10 + 1 * 10 == 20
    assert upper_bound_sum(12, 3, 6) == 1 * 20 + 4 * 15 + 6 * 6 == 116
    assert upper_bound_sum(12, 4, 9) == binomial(9, 4) + binomial(9, 3) == 210


def b_range_cases(n_max):
    return [
        (n, d, r)
        for n in range(2, n_max + 1)
        for d in range(2, n + 1)
        for r in range(d, n + 1)
        if in_b_range(n, d, r)
    ]


def test_construction_attains_formula_up_to_n20():
    """Ten alphas per case; each count is a brute-force enumeration of all d-subsets."""
    for n, d, r in b_range_cases(20):
        b = compute_b(n, d, r)
        assert 1 <= b <= n - r - 1
        assert F(d - 1, d) * (n - b) < r <= F(d - 1, d) * (n - b + 1)
        upper = alpha_window(n, d, r)
        target = upper_bound_sum(n, d, r)
        for j in range(1, 11):
            f = build_f_alpha(n, d, r, upper * F(j, 11))
            assert f.r == r and f.total() == 0
            assert count_dplus(f, d) == target, (n, d, r, j)


def test_b_equal_one_gives_two_term_bound():
    for n, d, r in b_range_cases(20):
        if compute_b(n, d, r) == 1:
            assert upper_bound_sum(n, d, r) == binomial(r, d) + binomial(r, d - 1)


@pytest.mark.parametrize(
    "n,d,r,value,status",
    [
        (8, 3, 5, 20, PROVED_HERE),
        (6, 2, 3, 6, PROVED_HERE),
        (9, 3, 6, 35, PROVED_HERE),
        (8, 3, 6, 20, PRIOR_CLAIMED),
        (8, 3, 1, 21, PRIOR_CLAIMED),
        (8, 4, 2, 35, STAR_UNCERTAIN),
    ],
)
def test_gamma_known_cases(n, d, r, value, status):
    case = gamma_known(n, d, r)
    assert (case.value, case.status) == (value, status)


def test_gamma_known_open_and_small_r_rows():
    assert gamma_known(8, 3, 4) is None
    # r <= d < n with r < n/(n-d): (5, 4, 2) gives C(3, 2)
    case = gamma_known(5, 4, 2)
    assert (case.value, case.status) == (binomial(3, 2), PRIOR_CLAIMED)


def test_gamma_known_star_only_in_first_row():
    for n in range(1, 15):
        for d in range(1, n + 1):
            for r in range(1, n + 1):
                case = gamma_known(n, d, r)
                if case is not None and case.status == STAR_UNCERTAIN:
                    assert r <= d <= n / 2


def test_proved_cases_match_two_term_formula():
    for d in range(2, 8):
        n, r = 2 * d + 2, 2 * d - 1
        assert gamma_known(n, d, r).value == binomial(r, d) + binomial(r, d - 1) == upper_bound_sum(n, d, r)


def test_counterexample_check():
    assert counterexample_check(3) and binomial(5, 3) + binomial(5, 2) == 20 < 21 == binomial(7, 2)
    assert not counterexample_check(2) and binomial(3, 2) + binomial(3, 1) == 6 > 5 == binomial(5, 1)
    assert counterexample_check(4) and binomial(7, 4) + binomial(7, 3) == 70 < 84 == binomial(9, 3)
    assert all(counterexample_check(d) for d in range(3, 20))
