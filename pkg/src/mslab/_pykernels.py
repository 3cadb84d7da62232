"""Pure-Python subset-sign counter, used when the compiled core is unavailable."""
from __future__ import annotations

from itertools import combinations
from typing import Sequence


def count_nonneg_subsets(values: Sequence[int], d: int, lo: int = 0, hi: int | None = None) -> int:
    """Count d-subsets of ``values`` with nonnegative sum whose smallest index is in [lo, hi)."""
    n = len(values)
    if d < 1 or d > n:
        return 0
    hi = n if hi is None else min(hi, n)
    count = 0
    for first in range(lo, hi):
        if first + d > n:
            break
        head = values[first]
        if d == 1:
            count += head >= 0
            continue
        for rest in combinations(values[first + 1:], d - 1):
            if head + sum(rest) >= 0:
                count += 1
    return count


def _vector(pos: list[int], neg: list[int]) -> list[int]:
    if not neg:
        return list(pos)
    P, M = sum(pos), sum(neg)
    return [k * M for k in pos] + [-m * P for m in neg]


def local_descent(
    pos: Sequence[int], neg: Sequence[int], d: int, coords: Sequence[int], steps: Sequence[int]
) -> tuple[int, list[int], list[int]]:
    """Apply +-1 moves to the integer search state, keeping only strict decreases of the count.

    ``pos`` are numerators of the nonnegative values, ``neg`` the raw negative
    weights that get rescaled to a zero total. Move i nudges coordinate
    ``coords[i]`` (0..n-1, nonnegative block first) by ``steps[i]``. Moves that
    would leave the feasible region (a negative numerator, a zero positive mass,
    or a raw negative weight below 1) are skipped.
    """
    pos, neg = list(pos), list(neg)
    r = len(pos)
    phi = count_nonneg_subsets(_vector(pos, neg), d)
    if not neg:
        return phi, pos, neg
    mass = sum(pos)
    for j, step in zip(coords, steps):
        if j < r:
            if pos[j] + step < 0 or mass + step <= 0:
                continue
            pos[j] += step
            trial = count_nonneg_subsets(_vector(pos, neg), d)
            if trial < phi:
                phi = trial
                mass += step
            else:
                pos[j] -= step
        else:
            j -= r
            if neg[j] + step < 1:
                continue
            neg[j] += step
            trial = count_nonneg_subsets(_vector(pos, neg), d)
            if trial < phi:
                phi = trial
            else:
                neg[j] -= step
    return phi, pos, neg
