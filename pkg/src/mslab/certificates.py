"""Lower-bound witnesses for phi(f, d) and their verifiers.

Two certificate kinds are built here:

* the row configuration for n = 2d+2, r = 2d-1, derived from a (d-1)-PAC on
  {1..r}: each row is a partition of I_n into ``A|1``, ``C|2`` and ``i|3``;
* block-disjoint partition systems for r = (d-1)n/d, where every partition
  splits I_n into n-r blocks of d-1 nonnegative indices plus one negative index.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .combinatorics import QString, binomial, residual_element
from .errors import CapacityError, ConstructionError, DomainError, HypothesisError, InvariantViolation
from .pac import CheckResult, build_qpac
from .weights import WeightFunction, bar_notation, subset_sum

PARTITION_MAX_N = 9


@dataclass(frozen=True)
class Row:
    a_part: QString  # A|1
    c_part: QString  # C|2
    tail: QString  # i|3


@dataclass(frozen=True)
class Configuration:
    d: int
    rows: tuple[Row, ...]
    method: str = ""

    @property
    def n(self) -> int:
        return 2 * self.d + 2

    @property
    def r(self) -> int:
        return 2 * self.d - 1

    def render(self) -> list[str]:
        return [
            "\t".join(bar_notation(p, self.r, self.n) for p in (row.a_part, row.c_part, row.tail))
            for row in self.rows
        ]


def build_configuration(d: int) -> Configuration:
    """Rows (A_s|1, phi(A_s)|2, i_s|3) from a (d-1)-PAC on {1..2d-1}, in bar notation over n = 2d+2."""
    if d < 2:
        raise DomainError(f"row configuration needs d >= 2, got {d}")
    q = d - 1
    r = 2 * q + 1
    pac = build_qpac(q)
    rows = []
    for A, C in pac.pairs:
        i = residual_element(A, C, r)
        rows.append(Row(QString(A + (r + 1,)), QString(C + (r + 2,)), QString((i, r + 3))))
    return Configuration(d, tuple(rows), pac.method)


def verify_configuration(c: Configuration) -> CheckResult:
    """Row count, per-row partition of I_n with part types d+/d+/2, and distinctness of the d-strings."""
    violations: list[str] = []
    d, n, r = c.d, c.n, c.r
    p = binomial(r, d - 1)
    if len(c.rows) != p:
        violations.append(f"row count {len(c.rows)} != C({r},{d - 1}) = {p}")
    ground = set(range(1, n + 1))
    for s, row in enumerate(c.rows, start=1):
        a, cc, t = set(row.a_part), set(row.c_part), set(row.tail)
        if a & cc or a & t or cc & t:
            violations.append(f"row {s}: parts are not pairwise disjoint")
        if a | cc | t != ground:
            violations.append(f"row {s}: parts do not cover 1..{n}")
        if len(row.a_part) != d or row.a_part[-1] != r + 1 or len(row.c_part) != d or row.c_part[-1] != r + 2:
            violations.append(f"row {s}: d-strings are not of the form A|1, C|2")
        if len(row.tail) != 2 or row.tail[-1] != r + 3:
            violations.append(f"row {s}: last part is not of the form i|3")
    strings = [row.a_part for row in c.rows] + [row.c_part for row in c.rows]
    if len(set(strings)) != len(strings):
        violations.append("d-strings across rows are not pairwise distinct")
    return CheckResult(not violations, violations)


def check_row_hypothesis(f: WeightFunction, d: int) -> None:
    """Raise :class:`HypothesisError` unless n = 2d+2, r = 2d-1 and x_k + y_3 < 0 for every k."""
    n, r = 2 * d + 2, 2 * d - 1
    if f.n != n or f.r != r:
        raise HypothesisError(f"row certificate needs n={n}, r={r}; got n={f.n}, r={f.r}")
    y_last = f.values[-1]
    for k in range(1, r + 1):
        if f[k] + y_last >= 0:
            raise HypothesisError(f"x_{k} + y_3 = {f[k] + y_last} is not negative (k={k})")


def certified_row_floor(f: WeightFunction, c: Configuration) -> int:
    """Check every row has a nonnegative d-string and return the row count.

    Under the hypothesis each ``i|3`` sums to a negative value, so one of the two
    d-strings of the row must be nonnegative. Together with the C(r, d)
    all-nonnegative d-strings this certifies phi(f, d) >= C(r, d) + C(r, d-1).
    """
    check_row_hypothesis(f, c.d)
    for s, row in enumerate(c.rows, start=1):
        if subset_sum(f, row.tail) >= 0:
            raise InvariantViolation(f"row {s}: tail {row.tail} has nonnegative sum under the hypothesis")
        if subset_sum(f, row.a_part) < 0 and subset_sum(f, row.c_part) < 0:
            raise InvariantViolation(f"row {s}: neither d-string is nonnegative")
    return len(c.rows)


# -- partition systems -----------------------------------------------------------

@dataclass(frozen=True)
class PartitionSystem:
    n: int
    d: int
    partitions: tuple[tuple[QString, ...], ...]

    @property
    def r(self) -> int:
        return (self.d - 1) * self.n // self.d

    @property
    def expected_count(self) -> int:
        return binomial(self.r - 1, self.d - 2) * (self.n - self.r)

    def render(self) -> list[str]:
        return [" ".join(bar_notation(b, self.r, self.n) for b in part) for part in self.partitions]


def _partition_params(n: int, d: int) -> int:
    if d < 2 or n < d or n % d:
        raise DomainError(f"partition systems need d >= 2 and d | n, got n={n}, d={d}")
    if n > PARTITION_MAX_N:
        raise CapacityError(f"partition systems support n <= {PARTITION_MAX_N}, got n={n}")
    return (d - 1) * n // d


def candidate_blocks(n: int, d: int) -> list[QString]:
    """All d-strings with d-1 elements in 1..r and one in r+1..n, lexicographically."""
    r = _partition_params(n, d)
    return sorted(QString(pos + (k,)) for pos in combinations(range(1, r + 1), d - 1) for k in range(r + 1, n + 1))


def build_partition_systems(n: int, d: int) -> PartitionSystem:
    """Block-disjoint partitions of I_n into n-r blocks of type (d-1 nonnegative, 1 negative).

    Backtracking with lexicographic branching: each new partition opens with the
    smallest unused block and is completed by covering the smallest uncovered
    element first. The requested count uses every candidate block exactly once,
    so the search is an exact cover of the candidate set by partitions.
    """
    r = _partition_params(n, d)
    target = binomial(r - 1, d - 2) * (n - r)
    blocks = candidate_blocks(n, d)
    by_element: dict[int, list[int]] = {x: [] for x in range(1, n + 1)}
    for idx, blk in enumerate(blocks):
        for x in blk:
            by_element[x].append(idx)
    masks = [sum(1 << (x - 1) for x in blk) for blk in blocks]
    full = (1 << n) - 1
    used = [False] * len(blocks)
    partitions: list[list[int]] = []

    def fill(current: list[int], covered: int) -> bool:
        if covered == full:
            partitions.append(list(current))
            if len(partitions) == target or open_partition():
                return True
            partitions.pop()
            return False
        x = next(e for e in range(1, n + 1) if not covered >> (e - 1) & 1)
        for idx in by_element[x]:
            if used[idx] or masks[idx] & covered:
                continue
            used[idx] = True
            current.append(idx)
            if fill(current, covered | masks[idx]):
                return True
            current.pop()
            used[idx] = False
        return False

    def open_partition() -> bool:
        first = next((i for i, u in enumerate(used) if not u), None)
        if first is None:
            return False
        used[first] = True
        if fill([first], masks[first]):
            return True
        used[first] = False
        return False

    if target == 0 or not open_partition():
        raise ConstructionError(f"no block-disjoint partition system found for n={n}, d={d}")
    system = tuple(tuple(sorted(blocks[i] for i in part)) for part in partitions)
    return PartitionSystem(n, d, system)


def verify_partition_systems(p: PartitionSystem, f: WeightFunction | None = None) -> tuple[CheckResult, int]:
    """Check the system's invariants and, given ``f``, that each partition holds a nonnegative block.

    Returns the check result and the certified floor C(r-1, d-2)(n-r), or 0 when
    the system fails or ``f`` does not satisfy the preconditions.
    """
    violations: list[str] = []
    n, d = p.n, p.d
    if d < 2 or n % d:
        return CheckResult(False, [f"d={d} does not divide n={n}"]), 0
    r = p.r
    ground = set(range(1, n + 1))
    if len(p.partitions) != p.expected_count:
        violations.append(f"partition count {len(p.partitions)} != C({r - 1},{d - 2})*{n - r} = {p.expected_count}")
    seen: set[QString] = set()
    for s, part in enumerate(p.partitions, start=1):
        if len(part) != n - r:
            violations.append(f"partition {s}: {len(part)} blocks, expected {n - r}")
        covered: list[int] = [x for blk in part for x in blk]
        if len(covered) != len(set(covered)) or set(covered) != ground:
            violations.append(f"partition {s}: blocks do not partition 1..{n}")
        for blk in part:
            if len(blk) != d or sum(1 for x in blk if x <= r) != d - 1:
                violations.append(f"partition {s}: block {blk} is not of type (d-1)+ 1-")
            if blk in seen:
                violations.append(f"block {blk} appears in more than one partition")
            seen.add(blk)
    floor = p.expected_count if not violations else 0
    if f is not None and not violations:
        if f.n != n or f.r != r:
            violations.append(f"weight function has n={f.n}, r={f.r}; expected n={n}, r={r}")
        else:
            for s, part in enumerate(p.partitions, start=1):
                if all(subset_sum(f, blk) < 0 for blk in part):
                    violations.append(f"partition {s}: no block has nonnegative sum")
        if violations:
            floor = 0
    return CheckResult(not violations, violations), floor
