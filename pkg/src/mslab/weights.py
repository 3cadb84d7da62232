"""Weight functions over I_n with exact rational values, and the phi counter.

A weight function is stored in canonical form: values sorted non-increasingly,
so the ``r`` nonnegative values (zeros included) occupy indices 1..r and the
negative values occupy r+1..n.
"""
from __future__ import annotations

import math
import os
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence, Union

from . import kernels
from .combinatorics import QString
from .errors import CapacityError, DomainError, ValidationError

RationalLike = Union[Fraction, int, str]

COUNT_MAX_N = 20


@dataclass(frozen=True)
class WeightFunction:
    values: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if not self.values:
            raise ValidationError("a weight function needs at least one value")
        if any(a < b for a, b in zip(self.values, self.values[1:])):
            raise ValidationError("values are not in canonical (non-increasing) order")
        if sum(self.values) < 0:
            raise ValidationError(f"total weight {sum(self.values)} is negative")

    @property
    def n(self) -> int:
        return len(self.values)

    @property
    def r(self) -> int:
        return sum(1 for v in self.values if v >= 0)

    @property
    def nonnegative(self) -> tuple[Fraction, ...]:
        return self.values[: self.r]

    @property
    def negative(self) -> tuple[Fraction, ...]:
        return self.values[self.r:]

    def __getitem__(self, index: int) -> Fraction:
        """1-based access, matching the index conventions of I_n."""
        if not 1 <= index <= self.n:
            raise DomainError(f"index {index} outside 1..{self.n}")
        return self.values[index - 1]

    def total(self) -> Fraction:
        return sum(self.values, Fraction(0))

    def scaled(self, factor: RationalLike) -> WeightFunction:
        factor = Fraction(factor)
        if factor <= 0:
            raise DomainError("scale factor must be positive")
        return WeightFunction(tuple(v * factor for v in self.values))

    def integer_vector(self) -> list[int]:
        """Values multiplied by the lcm of their denominators.

        Subset sums of the result have the same signs as those of ``values``.
        """
        lcm = math.lcm(*(v.denominator for v in self.values))
        return [v.numerator * (lcm // v.denominator) for v in self.values]


def to_rational(x: RationalLike) -> Fraction:
    if isinstance(x, float):
        raise ValidationError("floats are not accepted; pass ints, Fractions or 'p/q' strings")
    return Fraction(x)


def make_weight_function(raw: Iterable[RationalLike]) -> WeightFunction:
    """Canonicalize raw values into a :class:`WeightFunction`.

    >>> make_weight_function([-3, 1, 1, 1]).values
    (Fraction(1, 1), Fraction(1, 1), Fraction(1, 1), Fraction(-3, 1))
    """
    values = [to_rational(x) for x in raw]
    if not values:
        raise ValidationError("a weight function needs at least one value")
    if sum(values) < 0:
        raise ValidationError(f"total weight {sum(values)} is negative; not a weight function")
    return WeightFunction(tuple(sorted(values, reverse=True)))


def f_plus(f: WeightFunction) -> int:
    return f.r


def _check_subset(f: WeightFunction, S: Sequence[int]) -> QString:
    S = QString(S)
    if S and S[-1] > f.n:
        raise DomainError(f"subset {S} is not contained in 1..{f.n}")
    return S


def subset_sum(f: WeightFunction, S: Sequence[int]) -> Fraction:
    S = _check_subset(f, S)
    return sum((f.values[i - 1] for i in S), Fraction(0))


def _check_d(f: WeightFunction, d: int) -> None:
    if not 1 <= d <= f.n:
        raise DomainError(f"need 1 <= d <= n={f.n}, got d={d}")
    if f.n > COUNT_MAX_N:
        raise CapacityError(f"exhaustive counting supports n <= {COUNT_MAX_N}, got n={f.n}")


def count_dplus(f: WeightFunction, d: int, threads: int = 1) -> int:
    """phi(f, d): the number of d-subsets of I_n with nonnegative f-sum.

    Every one of the C(n, d) subsets is enumerated. Signs are taken on the
    exact integer rescaling of ``f``, so zero-sum ties count as nonnegative.
    """
    _check_d(f, d)
    return kernels.count_nonneg_subsets(f.integer_vector(), d, threads=threads)


def list_dplus(f: WeightFunction, d: int) -> list[QString]:
    """The d-subsets counted by :func:`count_dplus`, in lexicographic order."""
    _check_d(f, d)
    ints = f.integer_vector()
    return [
        QString(i + 1 for i in c)
        for c in combinations(range(f.n), d)
        if sum(ints[i] for i in c) >= 0
    ]


def bar_notation(S: Sequence[int], r: int, n: int | None = None) -> str:
    """Render a string as ``i1..ik|(j1-r)..(jl-r)``.

    Digits are concatenated when every printed number is a single digit,
    otherwise the two parts are comma-joined.
    """
    S = QString(S, n)
    head = [i for i in S if i <= r]
    tail = [j - r for j in S if j > r]
    if all(x <= 9 for x in head + tail):
        return "".join(map(str, head)) + "|" + "".join(map(str, tail))
    return ",".join(map(str, head)) + "|" + ",".join(map(str, tail))


def format_string(f: WeightFunction, S: Sequence[int]) -> str:
    """Bar notation of ``S`` relative to the nonnegative count of ``f``."""
    _check_subset(f, S)
    return bar_notation(S, f.r, f.n)


# -- weight file format ----------------------------------------------------------

class WeightFileError(ValidationError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


def parse_weight_text(text: str) -> WeightFunction:
    """Parse the plain-text weight format.

    The first non-comment line holds ``n r``; the remaining lines hold ``n``
    rationals (``p/q`` or integers) in any order. ``#`` starts a comment line.
    """
    header: tuple[int, int] | None = None
    header_line = 0
    raw: list[Fraction] = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        tokens = stripped.split()
        if header is None:
            if len(tokens) != 2:
                raise WeightFileError("header must be 'n r'", lineno)
            try:
                header = (int(tokens[0]), int(tokens[1]))
            except ValueError:
                raise WeightFileError(f"header must hold two integers, got {stripped!r}", lineno) from None
            header_line = lineno
            continue
        for tok in tokens:
            try:
                raw.append(Fraction(tok))
            except (ValueError, ZeroDivisionError):
                raise WeightFileError(f"cannot parse rational {tok!r}", lineno) from None
            if "." in tok or "e" in tok.lower():
                raise WeightFileError(f"decimal literal {tok!r}; write values as p/q", lineno)
    if header is None:
        raise WeightFileError("missing 'n r' header")
    n, r = header
    if len(raw) != n:
        raise WeightFileError(f"header declares n={n} but {len(raw)} values were given", header_line)
    try:
        f = make_weight_function(raw)
    except ValidationError as exc:
        raise WeightFileError(str(exc), header_line) from None
    if f.r != r:
        raise WeightFileError(f"header declares r={r} but the values have {f.r} nonnegative entries", header_line)
    return f


def format_weight_text(f: WeightFunction) -> str:
    return f"{f.n} {f.r}\n" + " ".join(str(v) for v in f.values) + "\n"


def load_weight_file(path: str | os.PathLike) -> WeightFunction:
    with open(path, encoding="utf-8") as fh:
        return parse_weight_text(fh.read())


def save_weight_file(f: WeightFunction, path: str | os.PathLike) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_weight_text(f))
