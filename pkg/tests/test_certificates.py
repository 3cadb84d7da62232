import dataclasses
import random
from fractions import Fraction

import pytest

from mslab.certificates import (
    PartitionSystem,
    Row,
    build_configuration,
    build_partition_systems,
    candidate_blocks,
    certified_row_floor,
    verify_configuration,
    verify_partition_systems,
)
from mslab.combinatorics import QString, binomial
from mslab.errors import DomainError, HypothesisError
from mslab.sampling import random_weight_function, sample_row_hypothesis
from mslab.weights import count_dplus, make_weight_function

from conftest import brute_phi

F = Fraction
S = QString.parse


def test_configuration_d4_first_row():
    c = build_configuration(4)
    assert len(c.rows) == 35
    assert c.render()[0] == "123|1\t567|2\t4|3"


def test_configuration_d2_from_one_pac():
    c = build_configuration(2)
    # 1-PAC {1->3, 2->1, 3->2} over n = 6, r = 3
    assert [(r.a_part, r.c_part, r.tail) for r in c.rows] == [
        (S("14"), S("35"), S("26")),
        (S("24"), S("15"), S("36")),
        (S("34"), S("25"), S("16")),
    ]


@pytest.mark.parametrize("d", range(2, 6))
def test_configuration_valid(d):
    c = build_configuration(d)
    assert verify_configuration(c).ok
    assert len(c.rows) == binomial(2 * d - 1, d - 1)
    for row in c.rows:
        assert (len(row.a_part), len(row.c_part), len(row.tail)) == (d, d, 2)


def test_configuration_tampering_detected():
    c = build_configuration(4)
    first = c.rows[0]
    bad_row = Row(first.a_part, first.c_part, QString((1, 10)))
    broken = dataclasses.replace(c, rows=(bad_row,) + c.rows[1:])
    assert not verify_configuration(broken).ok
    short = dataclasses.replace(c, rows=c.rows[:-1])
    res = verify_configuration(short)
    assert not res.ok and any("row count" in v for v in res.violations)


def test_row_floor_example():
    f = make_weight_function([1] * 5 + [F(-9, 8)] * 3)
    assert f.total() > 0
    c = build_configuration(3)
    assert certified_row_floor(f, c) == 10 == binomial(5, 2)
    assert brute_phi(f.values, 3) >= 20


def test_row_floor_hypothesis_gate():
    c = build_configuration(3)
    f = make_weight_function([1] * 5 + [F(-1, 2), F(-9, 4), F(-9, 4)])
    g = make_weight_function([3] + [1] * 4 + [F(-1)] * 2 + [F(-2)])
    with pytest.raises(HypothesisError, match="k=1"):
        certified_row_floor(g, c)
    assert certified_row_floor(f, c) == 10
    with pytest.raises(HypothesisError):
        certified_row_floor(make_weight_function([1, 1, -1]), c)


def test_row_certificate_agrees_with_direct_count():
    rng = random.Random(2024)
    c = build_configuration(3)
    for _ in range(200):
        f = sample_row_hypothesis(3, rng)
        assert certified_row_floor(f, c) == 10
        assert count_dplus(f, 3) >= 20


def test_partition_system_6_2_is_cyclic():
    p = build_partition_systems(6, 2)
    assert p.render() == ["1|1 2|2 3|3", "1|2 2|3 3|1", "1|3 2|1 3|2"]
    ok, floor = verify_partition_systems(p)
    assert ok.ok and floor == 3 == binomial(3, 1)


def test_partition_system_9_3_consumes_all_blocks():
    p = build_partition_systems(9, 3)
    assert len(p.partitions) == 15 and all(len(part) == 3 for part in p.partitions)
    used = sorted(b for part in p.partitions for b in part)
    assert len(used) == 45 == binomial(6, 2) * 3
    assert used == candidate_blocks(9, 3)
    ok, floor = verify_partition_systems(p)
    assert ok.ok and floor == 15 == binomial(6, 2) == binomial(5, 1) * 3


@pytest.mark.parametrize("n,d", [(4, 2), (8, 2), (6, 3), (8, 4), (3, 3)])
def test_other_partition_systems(n, d):
    p = build_partition_systems(n, d)
    ok, _ = verify_partition_systems(p)
    assert ok.ok and len(p.partitions) == p.expected_count


def test_partition_system_requires_divisibility():
    with pytest.raises(DomainError):
        build_partition_systems(8, 3)


def test_duplicated_block_rejected():
    p = build_partition_systems(6, 2)
    dup = PartitionSystem(6, 2, p.partitions[:2] + (p.partitions[0],))
    ok, floor = verify_partition_systems(dup)
    assert not ok.ok and floor == 0


@pytest.mark.parametrize("n,d", [(6, 2), (9, 3)])
def test_every_partition_has_nonnegative_block(n, d):
    p = build_partition_systems(n, d)
    rng = random.Random(n * 100 + d)
    for _ in range(200):
        f = random_weight_function(n, p.r, rng)
        ok, floor = verify_partition_systems(p, f)
        assert ok.ok and floor == binomial(p.r, d - 1)
        assert count_dplus(f, d) >= binomial(p.r, d) + floor


def test_floor_requires_matching_weight_function():
    p = build_partition_systems(6, 2)
    ok, floor = verify_partition_systems(p, make_weight_function([1, 1, -1, -1, 0, 0]))
    assert not ok.ok and floor == 0


@pytest.mark.parametrize("d", range(3, 7))
def test_improvement_over_earlier_estimate(d):
    n, r = 2 * d + 2, 2 * d - 1
    earlier = binomial(n - 2 - 1, d - 1)
    assert earlier == binomial(r, d - 1)
    assert binomial(r, d) + binomial(r, d - 1) > earlier
