"""Backend selection for the subset-sign counting kernel.

The compiled extension ``mslab._ckernels`` is used when it imports; otherwise the
pure-Python :mod:`mslab._pykernels` takes over. Setting ``MSLAB_PURE_PYTHON=1``
forces the fallback.
"""
from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from typing import Sequence

from . import _pykernels

_INT64_SAFE = 1 << 62

if os.environ.get("MSLAB_PURE_PYTHON", "") not in ("", "0"):
    _native = None
else:
    try:
        from . import _ckernels as _native
    except ImportError:
        _native = None

BACKEND = "cython" if _native is not None else "python"


def _fits_int64(values: Sequence[int], d: int) -> bool:
    return not values or max(abs(v) for v in values) * max(d, 1) < _INT64_SAFE


def count_nonneg_subsets(values: Sequence[int], d: int, threads: int = 1) -> int:
    """Number of d-subsets of integer ``values`` whose sum is >= 0.

    The enumeration is split by smallest index across ``threads`` workers; the
    compiled kernel releases the GIL so the split runs in parallel. Inputs too
    large for 64-bit partial sums go to the arbitrary-precision fallback.
    """
    values = list(values)
    n = len(values)
    impl = _native if _native is not None and _fits_int64(values, d) else _pykernels
    if threads <= 1 or n < 2:
        return impl.count_nonneg_subsets(values, d)
    bounds = [round(i * n / threads) for i in range(threads + 1)]
    spans = [(a, b) for a, b in zip(bounds, bounds[1:]) if b > a]
    with ThreadPoolExecutor(max_workers=len(spans)) as pool:
        parts = pool.map(lambda s: impl.count_nonneg_subsets(values, d, s[0], s[1]), spans)
        return sum(parts)


def local_descent(
    pos: Sequence[int], neg: Sequence[int], d: int, coords: Sequence[int], steps: Sequence[int]
) -> tuple[int, list[int], list[int]]:
    """Run the integer local search; see :func:`mslab._pykernels.local_descent`."""
    n = len(pos) + len(neg)
    top = max(list(pos) + list(neg), default=0) + len(coords)
    if _native is not None and top * top * n * n * max(d, 1) < _INT64_SAFE:
        return _native.local_descent(list(pos), list(neg), d, list(coords), list(steps))
    return _pykernels.local_descent(pos, neg, d, coords, steps)
