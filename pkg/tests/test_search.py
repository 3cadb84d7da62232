from itertools import combinations

import pytest

from mslab.bounds import PROVED_HERE, gamma_known, upper_bound_sum
from mslab.cache import ResultCache
from mslab.combinatorics import binomial
from mslab.errors import DomainError
from mslab.search import (
    SearchConfig,
    SearchReport,
    check_upper_bound_consistency,
    minimize_phi,
    psi_bracket,
    restart_seeds,
    sweep_alpha,
)
from mslab.weights import count_dplus

from conftest import brute_phi

FAST = SearchConfig(restarts=300, seed=5)


@pytest.mark.parametrize("n,d,r,expected", [(8, 3, 5, 20), (12, 4, 9, 210), (12, 3, 6, 116)])
def test_sweep_alpha(n, d, r, expected):
    rep = sweep_alpha(n, d, r, 10)
    assert rep.best_phi == expected == upper_bound_sum(n, d, r)
    assert brute_phi(rep.best_f.values, d) == expected


@pytest.mark.parametrize("n,d,r,expected", [(8, 3, 5, 20), (6, 2, 3, 6), (4, 2, 1, 3)])
def test_minimize_phi_examples(n, d, r, expected):
    rep = minimize_phi(n, d, r)
    assert rep.best_phi == expected
    assert rep.gamma_known_match is True


def test_report_is_sound():
    for n, d, r in [(7, 3, 4), (9, 3, 5), (10, 4, 7), (5, 2, 5)]:
        rep = minimize_phi(n, d, r, FAST)
        f = rep.best_f
        assert f.total() >= 0 and f.r == r
        assert brute_phi(f.values, d) == rep.best_phi
        assert check_upper_bound_consistency(rep)


def test_determinism_and_thread_invariance():
    a = minimize_phi(9, 3, 5, FAST)
    b = minimize_phi(9, 3, 5, FAST)
    c = minimize_phi(9, 3, 5, FAST, threads=4)
    assert a == b == c
    assert restart_seeds(5, 10) == restart_seeds(5, 10)
    assert restart_seeds(5, 10) != restart_seeds(6, 10)


def test_floor_respected_on_proved_cells():
    for n in range(4, 11):
        for d in range(2, n):
            for r in range(1, n + 1):
                case = gamma_known(n, d, r)
                if case and case.status == PROVED_HERE:
                    rep = minimize_phi(n, d, r, SearchConfig(restarts=100, seed=1))
                    assert rep.restart_min >= case.value
                    assert rep.best_phi == case.value


def test_domain_errors():
    with pytest.raises(DomainError):
        minimize_phi(6, 2, 0)
    with pytest.raises(DomainError):
        minimize_phi(15, 2, 3)
    with pytest.raises(DomainError):
        SearchConfig(restarts=0)


def test_psi_8_3_below_c72():
    psi = psi_bracket(8, 3, FAST)
    assert psi.upper <= 20 < binomial(7, 2)


def test_psi_6_3_equals_complement_pairing_floor():
    # Pair each triple with its complement: the two sums add to the total >= 0,
    # so one of them is nonnegative and psi(6, 3) >= C(6, 3) / 2 = 10.
    triples = list(combinations(range(6), 3))
    pairs = {frozenset((t, tuple(sorted(set(range(6)) - set(t))))) for t in triples}
    floor = len(pairs)
    assert floor == 10
    psi = psi_bracket(6, 3, FAST)
    assert psi.upper == floor


def test_psi_8_2_reaches_c71():
    psi = psi_bracket(8, 2, FAST)
    assert psi.upper == binomial(7, 1) == 7


def test_report_record_round_trip(tmp_path):
    rep = minimize_phi(8, 3, 5, FAST)
    assert SearchReport.from_record(rep.to_record()) == rep
    cache = ResultCache(tmp_path / "c.jsonl")
    assert cache.get(8, 3, 5, FAST) is None
    cache.put(rep, FAST)
    assert cache.get(8, 3, 5, FAST) == rep
    assert cache.get(8, 3, 5, SearchConfig(restarts=300, seed=6)) is None
    assert cache.best_upper_bounds() == {(8, 3, 5): 20}
    assert count_dplus(cache.get(8, 3, 5, FAST).best_f, 3) == 20
