# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled versions of the kernels in ``_kernels_py``; same signatures and results."""

from libc.stdlib cimport malloc, free

DEF MAXN = 64


cdef bint _is_baxter(int* p, int n) nogil:
    cdef int i, j, k, a, c, hi, lo
    cdef bint desc
    for j in range(n - 1):
        hi = p[j]
        lo = p[j + 1]
        desc = hi > lo
        if not desc:
            hi, lo = lo, hi
        for i in range(j):
            a = p[i]
            if not (lo < a < hi):
                continue
            for k in range(j + 2, n):
                c = p[k]
                if desc and a < c < hi:
                    return False
                if not desc and lo < c < a:
                    return False
    return True


def is_baxter(perm):
    cdef int n = len(perm)
    cdef int buf[MAXN]
    cdef int i
    if n > MAXN:
        from ._kernels_py import is_baxter as slow
        return slow(perm)
    for i in range(n):
        buf[i] = perm[i]
    return _is_baxter(buf, n)


cdef bint _next_perm(int* p, int n) nogil:
    cdef int i = n - 2
    cdef int j, tmp, lo, hi
    while i >= 0 and p[i] >= p[i + 1]:
        i -= 1
    if i < 0:
        return False
    j = n - 1
    while p[j] <= p[i]:
        j -= 1
    tmp = p[i]; p[i] = p[j]; p[j] = tmp
    lo = i + 1
    hi = n - 1
    while lo < hi:
        tmp = p[lo]; p[lo] = p[hi]; p[hi] = tmp
        lo += 1
        hi -= 1
    return True


def baxter_census(int n):
    if n == 0:
        return [1], [1], 1
    if n > 16:
        raise ValueError("census is only meant for small n")
    cdef int p[MAXN]
    cdef long long by_desc[MAXN]
    cdef long long sym[MAXN]
    cdef long long alt = 0
    cdef int i, d
    cdef bint alternating, symmetric
    for i in range(n):
        p[i] = i + 1
        by_desc[i] = 0
        sym[i] = 0
    with nogil:
        while True:
            if _is_baxter(p, n):
                d = 0
                alternating = True
                for i in range(n - 1):
                    if p[i] > p[i + 1]:
                        d += 1
                        if i % 2 == 0:
                            alternating = False
                    elif i % 2 == 1:
                        alternating = False
                by_desc[d] += 1
                symmetric = True
                for i in range(n):
                    if p[i] + p[n - 1 - i] != n + 1:
                        symmetric = False
                        break
                if symmetric:
                    sym[d] += 1
                if alternating:
                    alt += 1
            if not _next_perm(p, n):
                break
    return [by_desc[i] for i in range(n)], [sym[i] for i in range(n)], alt


cdef long long _rec(int step, int i, int r, int length, int* px, int* py, int* ex, int* ey, bint below) nogil:
    cdef long long total = 0
    cdef int x, y, nx, ny, j, s
    cdef bint clash
    if i == r:
        if step + 1 == length:
            return 1
        return _rec(step + 1, 0, r, length, px, py, ex, ey, below)
    x = px[i]
    y = py[i]
    for s in range(2):
        nx = x + 1 - s
        ny = y + s
        if nx > ex[i] or ny > ey[i] or (below and ny > nx):
            continue
        clash = False
        for j in range(i):
            if px[j] == nx and py[j] == ny:
                clash = True
                break
        if clash:
            continue
        px[i] = nx
        py[i] = ny
        total += _rec(step, i + 1, r, length, px, py, ex, ey, below)
        px[i] = x
        py[i] = y
    return total


def count_nonintersecting(starts, ends, below_diagonal=False):
    cdef int r = len(starts)
    cdef int length = (ends[0][0] + ends[0][1]) - (starts[0][0] + starts[0][1])
    cdef int i
    cdef long long out
    cdef bint below = bool(below_diagonal)
    for (a, b), (c, d) in zip(starts, ends):
        if (c + d) - (a + b) != length or c < a or d < b:
            return 0
        if below and (b > a or d > c):
            return 0
    if len(set(map(tuple, starts))) != r:
        return 0
    if length == 0:
        return 1
    cdef int* px = <int*> malloc(4 * r * sizeof(int))
    if px == NULL:
        raise MemoryError()
    cdef int* py = px + r
    cdef int* ex = px + 2 * r
    cdef int* ey = px + 3 * r
    try:
        for i in range(r):
            px[i] = starts[i][0]
            py[i] = starts[i][1]
            ex[i] = ends[i][0]
            ey[i] = ends[i][1]
        with nogil:
            out = _rec(0, 0, r, length, px, py, ex, ey, below)
    finally:
        free(px)
    return out
