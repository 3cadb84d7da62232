"""Exact integer combinatorics on q-strings.

A q-string is a strictly increasing tuple of positive integers. Elements are
1-based, so ``QString((1, 2, 3))`` denotes the subset {1, 2, 3} of I_n.
"""
from __future__ import annotations

import math
from itertools import combinations
from typing import Iterable

from .errors import CapacityError, DomainError

BINOMIAL_MAX_N = 40


def binomial(n: int, k: int) -> int:
    """Exact C(n, k), zero when ``k > n``.

    Raises:
        CapacityError: if ``n`` exceeds :data:`BINOMIAL_MAX_N`.
        DomainError: for negative arguments.
    """
    if n < 0 or k < 0:
        raise DomainError(f"binomial arguments must be nonnegative, got ({n}, {k})")
    if n > BINOMIAL_MAX_N:
        raise CapacityError(f"binomial: n={n} exceeds capacity {BINOMIAL_MAX_N}")
    return math.comb(n, k)


class QString(tuple):
    """Strictly increasing tuple of distinct positive integers.

    ``bound`` (the ground-set size N) is checked on construction but not stored.
    ``str()`` gives the canonical comma form; :meth:`compact` the digit form.
    """

    __slots__ = ()

    def __new__(cls, elements: Iterable[int], bound: int | None = None) -> QString:
        items = tuple(int(e) for e in elements)
        for a, b in zip(items, items[1:]):
            if a >= b:
                raise DomainError(f"q-string elements must be strictly increasing: {items}")
        if items and items[0] < 1:
            raise DomainError(f"q-string elements must be positive: {items}")
        if bound is not None and items and items[-1] > bound:
            raise DomainError(f"q-string {items} exceeds ground set bound {bound}")
        return super().__new__(cls, items)

    @classmethod
    def parse(cls, text: str, bound: int | None = None) -> QString:
        """Parse ``"1,2,3"`` or the compact digit form ``"123"``."""
        text = text.strip()
        if "," in text:
            return cls((int(t) for t in text.split(",")), bound)
        if not text.isdigit():
            raise DomainError(f"cannot parse q-string {text!r}")
        return cls((int(ch) for ch in text), bound)

    def compact(self) -> str:
        if any(e > 9 for e in self):
            raise DomainError("compact digit form requires all elements <= 9")
        return "".join(str(e) for e in self)

    def __str__(self) -> str:
        return ",".join(str(e) for e in self)

    def __repr__(self) -> str:
        return f"QString({tuple(self)!r})"


def _check_ground(N: int) -> None:
    if N < 1:
        raise DomainError(f"ground set size must be >= 1, got {N}")


def enumerate_qstrings(N: int, q: int) -> list[QString]:
    """All q-strings on {1..N} in increasing lexicographic order."""
    _check_ground(N)
    if not 1 <= q <= N:
        raise DomainError(f"need 1 <= q <= N, got q={q}, N={N}")
    return [QString(c) for c in combinations(range(1, N + 1), q)]


def complement_family(A: QString, N: int) -> list[QString]:
    """The q+1 almost-complementaries of ``A`` in {1..2q+1}, in decreasing lexicographic order."""
    q = len(A)
    if N != 2 * q + 1:
        raise DomainError(f"complement family needs N = 2q+1 = {2 * q + 1}, got N={N}")
    A = QString(A, N)
    rest = [x for x in range(1, N + 1) if x not in A]
    return [QString(c) for c in reversed(list(combinations(rest, q)))]


def residual_element(A: QString, C: QString, N: int) -> int:
    """The single element of {1..N} outside two disjoint q-strings, N = 2q+1."""
    q = len(A)
    if len(C) != q or N != 2 * q + 1:
        raise DomainError(f"residual_element needs two q-strings over N=2q+1, got {A}, {C}, N={N}")
    union = set(QString(A, N)) | set(QString(C, N))
    if len(union) != 2 * q:
        raise DomainError(f"q-strings {A} and {C} are not disjoint")
    (missing,) = set(range(1, N + 1)) - union
    return missing
