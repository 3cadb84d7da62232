"""Random rational weight functions for property checks and certificate sweeps."""
from __future__ import annotations

import random
from fractions import Fraction

from .weights import WeightFunction, make_weight_function


def random_weight_function(n: int, r: int, rng: random.Random, denominator: int = 64) -> WeightFunction:
    """Uniform-ish rational weight function with exactly r nonnegative values (1 <= r <= n).

    Negative values are drawn first and scaled down if needed so the total stays >= 0.
    Zeros and repeated values occur with positive probability.
    """
    D = denominator
    pos = [Fraction(rng.randint(0, D), D) for _ in range(r)]
    if sum(pos) == 0:
        pos[0] = Fraction(rng.randint(1, D), D)
    neg = [Fraction(rng.randint(1, D), D) for _ in range(n - r)]
    mass, debt = sum(pos), sum(neg)
    if debt > mass:
        scale = mass / debt * Fraction(rng.randint(1, D), D)
        neg = [m * scale for m in neg]
    return make_weight_function(pos + [-m for m in neg])


def sample_row_hypothesis(d: int, rng: random.Random, denominator: int = 64) -> WeightFunction:
    """Weight function with n = 2d+2, r = 2d-1 and x_k + y_3 < 0 for every k."""
    D = denominator
    r = 2 * d - 1
    while True:
        pos = [Fraction(rng.randint(1, D), D) for _ in range(r)]
        y3 = -(max(pos) + Fraction(rng.randint(1, D), D * D))
        budget = sum(pos) + y3
        if budget <= 0:
            continue
        cap = min(-y3, budget / 2)
        others = [-cap * Fraction(rng.randint(1, D), D) for _ in range(2)]
        return make_weight_function(pos + others + [y3])


def sample_prop_conforming(n: int, r: int, rng: random.Random, denominator: int = 64) -> WeightFunction:
    """Weight function with f+ = r and x_1 + y_{n-r} >= 0, i.e. no negative value exceeds x_1 in size."""
    D = denominator
    pos = [Fraction(rng.randint(0, D), D) for _ in range(r)]
    top = max(pos)
    if top == 0:
        top = pos[0] = Fraction(rng.randint(1, D), D)
    neg = [top * Fraction(rng.randint(1, D), D) for _ in range(n - r)]
    mass, debt = sum(pos), sum(neg)
    if debt > mass:
        neg = [m * mass / debt for m in neg]
    return make_weight_function(pos + [-m for m in neg])
