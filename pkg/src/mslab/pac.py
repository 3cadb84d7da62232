"""q-pairings of almost-complementaries (q-PACs) on Omega = {1..2q+1}.

A q-PAC is a bijection of Omega^(q) onto itself sending each q-string to a
q-string disjoint from it. Two constructions are provided: the greedy scan
(:func:`greedy_qpac`), which is not known to always succeed, and a perfect
matching in the "disjoint q-strings" bipartite graph (:func:`matching_qpac`),
whose existence follows from Hall's condition.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import maximum_bipartite_matching

from .combinatorics import QString, binomial, complement_family, enumerate_qstrings
from .errors import CapacityError, DomainError, InvariantViolation

PAC_MAX_Q = 8
CENSUS_MAX_Q = 6


@dataclass(frozen=True)
class PacMapping:
    q: int
    pairs: tuple[tuple[QString, QString], ...]
    method: str = "unknown"

    @property
    def ground(self) -> int:
        return 2 * self.q + 1

    def as_dict(self) -> dict[QString, QString]:
        return dict(self.pairs)

    def __len__(self) -> int:
        return len(self.pairs)

    def __iter__(self) -> Iterator[tuple[QString, QString]]:
        return iter(self.pairs)


@dataclass
class CheckResult:
    """Outcome of a verifier: ``ok`` plus human-readable violations."""

    ok: bool
    violations: list[str] = field(default_factory=list)

    def __bool__(self) -> bool:
        return self.ok


class GreedyFailure(Exception):
    """The greedy scan found no unused almost-complementary for some q-string."""

    def __init__(self, q: int, index: int, stuck: QString, partial: list[tuple[QString, QString]]):
        self.q = q
        self.index = index
        self.stuck = stuck
        self.partial = partial
        super().__init__(f"greedy q-PAC (q={q}) stuck at position {index + 1}: {stuck}")


def _check_q(q: int, limit: int = PAC_MAX_Q) -> None:
    if q < 1:
        raise DomainError(f"q must be positive, got {q}")
    if q > limit:
        raise CapacityError(f"q={q} exceeds capacity {limit} (C(2q+1, q) = {binomial(2 * q + 1, q)} strings)")


def greedy_qpac(q: int) -> PacMapping:
    """Run the greedy scan.

    Domain strings are visited in increasing lexicographic order; for each one the
    almost-complementaries are tried in decreasing lexicographic order and the
    first one not yet used as an image is taken.

    Raises:
        GreedyFailure: if some domain string has all its candidates already used.
    """
    _check_q(q)
    N = 2 * q + 1
    used: set[QString] = set()
    pairs: list[tuple[QString, QString]] = []
    for i, A in enumerate(enumerate_qstrings(N, q)):
        for C in complement_family(A, N):
            if C not in used:
                used.add(C)
                pairs.append((A, C))
                break
        else:
            raise GreedyFailure(q, i, A, pairs)
    return PacMapping(q, tuple(pairs), "greedy")


def matching_qpac(q: int) -> PacMapping:
    """A q-PAC from a perfect matching of domain strings to disjoint image strings."""
    _check_q(q)
    N = 2 * q + 1
    strings = enumerate_qstrings(N, q)
    rank = {s: i for i, s in enumerate(strings)}
    indptr, cols = [0], []
    for A in strings:
        cols.extend(rank[C] for C in reversed(complement_family(A, N)))
        indptr.append(len(cols))
    size = len(strings)
    graph = csr_matrix((np.ones(len(cols), dtype=np.int8), cols, indptr), shape=(size, size))
    # Hopcroft-Karp; rows and columns are in lexicographic order, so the result is reproducible
    match = maximum_bipartite_matching(graph, perm_type="column").tolist()
    if -1 in match:
        raise InvariantViolation(f"no perfect matching found for q={q}; Hall's condition guarantees one")
    return PacMapping(q, tuple((A, strings[m]) for A, m in zip(strings, match)), "matching")


def build_qpac(q: int) -> PacMapping:
    """Greedy q-PAC, falling back to the matching construction if the greedy scan gets stuck."""
    try:
        return greedy_qpac(q)
    except GreedyFailure:
        return matching_qpac(q)


def verify_qpac(m: PacMapping) -> CheckResult:
    """Check that the domain side lists Omega^(q) in order, images are distinct, and pairs are disjoint."""
    violations: list[str] = []
    q, N = m.q, 2 * m.q + 1
    expected = enumerate_qstrings(N, q) if q >= 1 else []
    domain = [A for A, _ in m.pairs]
    if domain != expected:
        violations.append(f"domain is not Omega^({q}) in lexicographic order")
    seen: dict[QString, QString] = {}
    for A, C in m.pairs:
        if len(C) != q or any(not 1 <= c <= N for c in C):
            violations.append(f"image {C} of {A} is not a {q}-string on 1..{N}")
        if set(A) & set(C):
            violations.append(f"{A} and its image {C} are not disjoint")
        if C in seen:
            violations.append(f"image {C} used by both {seen[C]} and {A}")
        else:
            seen[C] = A
    return CheckResult(not violations, violations)


def degree_census(q: int) -> dict[QString, int]:
    """For each q-string C on Omega, the number of almost-complementary families containing C."""
    _check_q(q, CENSUS_MAX_Q)
    N = 2 * q + 1
    census = {C: 0 for C in enumerate_qstrings(N, q)}
    for A in enumerate_qstrings(N, q):
        for C in complement_family(A, N):
            census[C] += 1
    return census


def format_pac(m: PacMapping, fmt: str = "paper") -> str:
    """Render as ``"123 ---> 567;"`` lines (N <= 9 only) or ``"1,2,3\\t5,6,7"`` TSV lines."""
    if fmt == "paper":
        if m.ground > 9:
            raise DomainError("paper format needs 2q+1 <= 9")
        return "".join(f"{A.compact()} ---> {C.compact()};\n" for A, C in m.pairs)
    if fmt == "tsv":
        return "".join(f"{A}\t{C}\n" for A, C in m.pairs)
    raise DomainError(f"unknown format {fmt!r}")
