"""Compare the compiled and pure-Python kernels.

    python benchmarks/bench_kernels.py [--repeat 3]

Reports the best wall time per workload and the speedup. Both backends must
agree on every result; a mismatch aborts the run.
"""
from __future__ import annotations

import argparse
import random
import sys
import timeit

from mslab import _pykernels

try:
    from mslab import _ckernels
except ImportError:
    _ckernels = None


def count_workloads(rng: random.Random):
    for n, d in ((12, 6), (16, 8), (20, 10)):
        yield f"count n={n} d={d}", (lambda k, v=[rng.randint(-500, 500) for _ in range(n)], d=d: k.count_nonneg_subsets(v, d))


def descent_workloads(rng: random.Random):
    for n, d, r, iters in ((8, 3, 5, 50), (10, 4, 7, 50), (12, 4, 9, 50)):
        pos = [rng.randint(1, 64) for _ in range(r)]
        neg = [rng.randint(1, 64) for _ in range(n - r)]
        coords = [rng.randrange(n) for _ in range(iters)]
        steps = [rng.choice((-1, 1)) for _ in range(iters)]
        yield (
            f"descent n={n} d={d} iters={iters}",
            lambda k, a=(pos, neg, d, coords, steps): k.local_descent(list(a[0]), list(a[1]), a[2], a[3], a[4]),
        )


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--seed", type=int, default=1)
    args = ap.parse_args(argv)
    if _ckernels is None:
        print("compiled extension not built; run `pip install -e . --no-build-isolation` first", file=sys.stderr)
        return 1
    rng = random.Random(args.seed)
    print(f"{'workload':<30}{'python s':>12}{'cython s':>12}{'speedup':>10}")
    for name, job in [*count_workloads(rng), *descent_workloads(rng)]:
        if job(_pykernels) != job(_ckernels):
            print(f"{name}: backends disagree", file=sys.stderr)
            return 1
        py = min(timeit.repeat(lambda: job(_pykernels), number=1, repeat=args.repeat))
        cy = min(timeit.repeat(lambda: job(_ckernels), number=1, repeat=args.repeat))
        print(f"{name:<30}{py:>12.4f}{cy:>12.4f}{py / cy:>9.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
