"""Pure-Python reference kernels.

The compiled module ``_ckernels`` implements the same functions with the same
signatures; :mod:`baxterlab.kernels` picks one at import time.
"""


def is_baxter(perm) -> bool:
    """No i < j, j+1 < k with p[j+1] < p[i] < p[k] < p[j] or the mirror inequalities."""
    p = list(perm)
    n = len(p)
    for j in range(n - 1):
        hi, lo = p[j], p[j + 1]
        if hi < lo:
            hi, lo = lo, hi
        desc = p[j] > p[j + 1]
        for i in range(j):
            a = p[i]
            if not lo < a < hi:
                continue
            for k in range(j + 2, n):
                c = p[k]
                if desc and a < c < hi:
                    return False
                if not desc and lo < c < a:
                    return False
    return True


def _next_permutation(p) -> bool:
    n = len(p)
    i = n - 2
    while i >= 0 and p[i] >= p[i + 1]:
        i -= 1
    if i < 0:
        return False
    j = n - 1
    while p[j] <= p[i]:
        j -= 1
    p[i], p[j] = p[j], p[i]
    p[i + 1:] = reversed(p[i + 1:])
    return True


def baxter_census(n: int):
    """Scan S_n once.

    Returns ``(by_descents, symmetric_by_descents, alternating)`` where the
    lists are indexed by the number of descents.
    """
    by_desc = [0] * max(n, 1)
    sym = [0] * max(n, 1)
    alt = 0
    if n == 0:
        return [1], [1], 1
    p = list(range(1, n + 1))
    while True:
        if is_baxter(p):
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
            if all(p[i] + p[n - 1 - i] == n + 1 for i in range(n)):
                sym[d] += 1
            if alternating:
                alt += 1
        if not _next_permutation(p):
            break
    return by_desc, sym, alt


def count_nonintersecting(starts, ends, below_diagonal: bool = False) -> int:
    """Count vertex-disjoint tuples of upright paths ``starts[i] -> ends[i]``.

    All starts lie on one antidiagonal, so the paths move in lockstep and
    disjointness means distinct positions at every step.
    """
    r = len(starts)
    length = (ends[0][0] + ends[0][1]) - (starts[0][0] + starts[0][1])
    for (a, b), (c, d) in zip(starts, ends):
        if (c + d) - (a + b) != length or c < a or d < b:
            return 0
        if below_diagonal and (b > a or d > c):
            return 0
    pos = [list(s) for s in starts]

    def rec(step, i):
        if i == r:
            if step + 1 == length:
                return 1
            return rec(step + 1, 0)
        x, y = pos[i]
        ex, ey = ends[i]
        total = 0
        for dx, dy in ((1, 0), (0, 1)):
            nx, ny = x + dx, y + dy
            if nx > ex or ny > ey or (below_diagonal and ny > nx):
                continue
            if any(pos[j][0] == nx and pos[j][1] == ny for j in range(i)):
                continue
            pos[i] = [nx, ny]
            total += rec(step, i + 1)
            pos[i] = [x, y]
        return total

    if len(set(map(tuple, starts))) != r:
        return 0
    if length == 0:
        return 1
    return rec(0, 0)
