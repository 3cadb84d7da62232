# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled subset-sign counter. Mirrors :mod:`mslab._pykernels`."""
from libc.stdlib cimport malloc, free


cdef long long _count_range(const long long* v, int n, int d, int lo, int hi) noexcept nogil:
    cdef long long count = 0
    cdef int first, k
    cdef int* idx = <int*> malloc(d * sizeof(int))
    cdef long long* partial = <long long*> malloc((d + 1) * sizeof(long long))
    if idx == NULL or partial == NULL:
        free(idx)
        free(partial)
        return -1
    for first in range(lo, hi):
        if first + d > n:
            break
        if d == 1:
            if v[first] >= 0:
                count += 1
            continue
        idx[0] = first
        partial[1] = v[first]
        k = 1
        idx[1] = first
        while True:
            idx[k] += 1
            if idx[k] > n - d + k:
                k -= 1
                if k == 0:
                    break
                continue
            partial[k + 1] = partial[k] + v[idx[k]]
            if k == d - 1:
                if partial[d] >= 0:
                    count += 1
            else:
                k += 1
                idx[k] = idx[k - 1]
    free(idx)
    free(partial)
    return count


def count_nonneg_subsets(values, int d, int lo=0, hi=None):
    """Count d-subsets of ``values`` with nonnegative sum whose smallest index is in [lo, hi).

    ``values`` must be Python ints whose d-fold sums fit in a signed 64-bit integer;
    the caller is responsible for that check.
    """
    cdef int n = len(values)
    cdef int h = n if hi is None else min(<int> hi, n)
    cdef long long result
    if d < 1 or d > n:
        return 0
    cdef long long* buf = <long long*> malloc(n * sizeof(long long))
    if buf == NULL:
        raise MemoryError()
    try:
        for i in range(n):
            buf[i] = values[i]
        with nogil:
            result = _count_range(buf, n, d, lo, h)
    finally:
        free(buf)
    if result < 0:
        raise MemoryError()
    return result


cdef void _fill(long long* out, const long long* pos, int r, const long long* neg, int m) noexcept nogil:
    cdef long long P = 0, M = 0
    cdef int i
    for i in range(r):
        P += pos[i]
    for i in range(m):
        M += neg[i]
    if m == 0:
        for i in range(r):
            out[i] = pos[i]
        return
    for i in range(r):
        out[i] = pos[i] * M
    for i in range(m):
        out[r + i] = -neg[i] * P


def local_descent(pos, neg, int d, coords, steps):
    """Compiled twin of :func:`mslab._pykernels.local_descent`."""
    cdef int r = len(pos), m = len(neg), n = r + m, T = len(coords)
    cdef int i, j, s
    cdef long long phi, trial, mass = 0
    cdef long long* p = <long long*> malloc((r + 1) * sizeof(long long))
    cdef long long* q = <long long*> malloc((m + 1) * sizeof(long long))
    cdef long long* v = <long long*> malloc((n + 1) * sizeof(long long))
    cdef int* cs = <int*> malloc((T + 1) * sizeof(int))
    cdef int* st = <int*> malloc((T + 1) * sizeof(int))
    if p == NULL or q == NULL or v == NULL or cs == NULL or st == NULL:
        free(p); free(q); free(v); free(cs); free(st)
        raise MemoryError()
    try:
        for i in range(r):
            p[i] = pos[i]
            mass += p[i]
        for i in range(m):
            q[i] = neg[i]
        for i in range(T):
            cs[i] = coords[i]
            st[i] = steps[i]
        with nogil:
            _fill(v, p, r, q, m)
            phi = _count_range(v, n, d, 0, n)
            if m > 0:
                for i in range(T):
                    j = cs[i]
                    s = st[i]
                    if j < r:
                        if p[j] + s < 0 or mass + s <= 0:
                            continue
                        p[j] += s
                        _fill(v, p, r, q, m)
                        trial = _count_range(v, n, d, 0, n)
                        if trial < phi:
                            phi = trial
                            mass += s
                        else:
                            p[j] -= s
                    else:
                        j -= r
                        if q[j] + s < 1:
                            continue
                        q[j] += s
                        _fill(v, p, r, q, m)
                        trial = _count_range(v, n, d, 0, n)
                        if trial < phi:
                            phi = trial
                        else:
                            q[j] -= s
        return phi, [p[i] for i in range(r)], [q[i] for i in range(m)]
    finally:
        free(p); free(q); free(v); free(cs); free(st)
