"""Arithmetic of gamma(n, d, r): b(r), the alpha-family construction and known values.

All interval comparisons are exact. Intervals are left-open, right-closed:
``(d-1)(n-b)/d < r <= (d-1)(n-b+1)/d``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .combinatorics import binomial
from .errors import DomainError
from .weights import RationalLike, WeightFunction, make_weight_function

PROVED_HERE = "proved-here"
PRIOR_CLAIMED = "prior-claimed"
STAR_UNCERTAIN = "star-uncertain"


@dataclass(frozen=True)
class GammaCase:
    value: int
    status: str
    rule: str

    def __str__(self) -> str:
        return f"{self.value} {self.status}"


def _frac(d: int, m: int) -> Fraction:
    """(d-1) * m / d."""
    return Fraction((d - 1) * m, d)


def interval_integer(n: int, d: int, k: int) -> Optional[int]:
    """The unique integer in ((d-1)(n-k)/d, (d-1)(n-k+1)/d], or None when n-k = 0 mod d."""
    if d < 2:
        raise DomainError(f"interval_integer needs d >= 2, got {d}")
    if not 1 <= k <= n:
        raise DomainError(f"need 1 <= k <= n, got k={k}, n={n}")
    if (n - k) % d == 0:
        return None
    return ((d - 1) * (n - k + 1)) // d


def in_b_range(n: int, d: int, r: int) -> bool:
    """Whether d <= r <= (d-1)n/d, the range where b(r) is defined."""
    return d >= 1 and d <= r and r <= _frac(d, n)


def compute_b(n: int, d: int, r: int) -> int:
    """The unique b in 1..n-r-1 with (d-1)(n-b)/d < r <= (d-1)(n-b+1)/d."""
    if not in_b_range(n, d, r):
        raise DomainError(f"b(r) needs d <= r <= (d-1)n/d, got n={n}, d={d}, r={r}")
    found = [b for b in range(1, n - r) if _frac(d, n - b) < r <= _frac(d, n - b + 1)]
    if len(found) != 1:
        raise DomainError(f"no unique b(r) for n={n}, d={d}, r={r}: {found}")
    return found[0]


def alpha_window(n: int, d: int, r: int) -> Fraction:
    """Exclusive upper bound on alpha for which the alpha-family attains the upper bound sum."""
    b = compute_b(n, d, r)
    h = min(b, d - 1)
    upper = min(
        Fraction(r, b),
        Fraction(d, h) - 1,
        Fraction(d, b) * (r - _frac(d, n - b)),
    )
    if upper <= 0:
        raise DomainError(f"empty alpha window for n={n}, d={d}, r={r}")
    return upper


def default_alpha(n: int, d: int, r: int) -> Fraction:
    return alpha_window(n, d, r) / 2


def build_f_alpha(n: int, d: int, r: int, alpha: RationalLike | None = None) -> WeightFunction:
    """r ones, b(r) copies of -alpha, and n-r-b(r) copies of -beta with total sum exactly 0.

    ``alpha`` defaults to the midpoint of the open window.
    """
    b = compute_b(n, d, r)
    upper = alpha_window(n, d, r)
    alpha = default_alpha(n, d, r) if alpha is None else Fraction(alpha)
    if not 0 < alpha < upper:
        raise DomainError(f"alpha={alpha} outside the open window (0, {upper})")
    beta = (r - b * alpha) / (n - r - b)
    values = [Fraction(1)] * r + [-alpha] * b + [-beta] * (n - r - b)
    f = make_weight_function(values)
    assert f.total() == 0 and f.r == r
    return f


def upper_bound_sum(n: int, d: int, r: int) -> int:
    """sum_{j=0}^{min(b, d-1)} C(b, j) C(r, d-j)."""
    b = compute_b(n, d, r)
    h = min(b, d - 1)
    return sum(binomial(b, j) * binomial(r, d - j) for j in range(h + 1))


def gamma_known(n: int, d: int, r: int) -> Optional[GammaCase]:
    """Known value of gamma(n, d, r), if one of the catalogued cases applies.

    Cases are tried in priority order, so the two proved-here cases win over
    prior claims when they overlap.
    """
    if not (1 <= d <= n and 1 <= r <= n):
        raise DomainError(f"need 1 <= d, r <= n, got n={n}, d={d}, r={r}")
    if n == 2 * d + 2 and r == 2 * d - 1:
        return GammaCase(binomial(r, d) + binomial(r, d - 1), PROVED_HERE, "n=2d+2, r=2d-1")
    if (d - 1) * n % d == 0 and r == (d - 1) * n // d and r >= d:
        return GammaCase(binomial(r, d) + binomial(r, d - 1), PROVED_HERE, "r=(d-1)n/d")
    if r == 1:
        return GammaCase(binomial(n - 1, d - 1), PRIOR_CLAIMED, "r=1")
    if r <= d < n and r * (n - d) < n:
        return GammaCase(binomial(n - r, d - r), PRIOR_CLAIMED, "r<=d<n, r<n/(n-d)")
    if d < r < n and r > _frac(d, n):
        return GammaCase(binomial(r, d), PRIOR_CLAIMED, "d<r<n, r>(d-1)n/d")
    if r <= d and 2 * d <= n:
        return GammaCase(binomial(n - 1, d - 1), STAR_UNCERTAIN, "r<=d<=n/2")
    return None


def counterexample_check(d: int) -> bool:
    """Whether C(2d-1, d) + C(2d-1, d-1) < C(2d+1, d-1), i.e. the C(n-1, d-1) floor fails at n=2d+2."""
    if d < 2:
        raise DomainError(f"counterexample_check needs d >= 2, got {d}")
    r = 2 * d - 1
    return binomial(r, d) + binomial(r, d - 1) < binomial(2 * d + 1, d - 1)
