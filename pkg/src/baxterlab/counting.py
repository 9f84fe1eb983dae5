"""Exact counting formulas and Gessel-Viennot determinants.

Integer arithmetic only.  Every closed form is evaluated in at least two
algebraically different ways and the results are cross-checked.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb, factorial

from .errors import CountMismatch, DomainError, SingularConfig

__all__ = [
    "binom",
    "catalan",
    "narayana",
    "theta",
    "baxter",
    "determinant",
    "path_count",
    "gessel_viennot",
    "narayana_determinant",
    "theta_determinant",
    "schnyder_determinant",
    "theta_symmetric",
    "theta_symmetric_gv",
    "theta_symmetric_as_printed",
    "schnyder_count",
    "alternating_baxter_count",
]


def binom(n: int, k: int) -> int:
    """Binomial coefficient, zero outside ``0 <= k <= n``."""
    if n < 0 or k < 0 or k > n:
        return 0
    return comb(n, k)


def _exact(num: int, den: int) -> int:
    q, r = divmod(num, den)
    if r:
        raise CountMismatch(f"{num}/{den} is not an integer")
    return q


def _agree(*values):
    if len(set(values)) != 1:
        raise CountMismatch(f"formula forms disagree: {values}")
    return values[0]


def catalan(n: int) -> int:
    if n < 0:
        raise DomainError("catalan needs n >= 0")
    return _agree(_exact(binom(2 * n, n), n + 1), binom(2 * n, n) - binom(2 * n, n + 1))


def narayana(n: int, k: int) -> int:
    """N(n, k) = C(n, k) C(n, k-1) / n for 1 <= k <= n."""
    if n < 1 or not 1 <= k <= n:
        raise DomainError(f"narayana needs 1 <= k <= n, got n={n}, k={k}")
    return _agree(
        _exact(binom(n, k) * binom(n, k - 1), n),
        binom(n - 1, k - 1) ** 2 - binom(n - 1, k) * binom(n - 1, k - 2),
    )


def theta(k: int, l: int) -> int:
    """Baxter permutations of [k+l+1] with k descents and l rises."""
    if k < 0 or l < 0:
        raise DomainError("theta needs k, l >= 0")
    n = k + l
    fact = _exact(
        2 * factorial(n) * factorial(n + 1) * factorial(n + 2),
        factorial(k) * factorial(k + 1) * factorial(k + 2) * factorial(l) * factorial(l + 1) * factorial(l + 2),
    )
    by_k = _exact(2 * binom(n, k) * binom(n + 1, k) * binom(n + 2, k), (k + 1) ** 2 * (k + 2))
    by_n = _exact(2 * binom(n + 2, k) * binom(n + 2, k + 1) * binom(n + 2, k + 2), (n + 1) * (n + 2) ** 2)
    return _agree(fact, by_k, by_n)


def baxter(n: int) -> int:
    """The Baxter number B_n, n >= 1."""
    if n < 1:
        raise DomainError("baxter needs n >= 1")
    return sum(theta(k, n - 1 - k) for k in range(n))


# ---------------------------------------------------------------------------
# determinants


def determinant(m) -> int:
    """Integer determinant by fraction-free (Bareiss) elimination."""
    a = [list(row) for row in m]
    n = len(a)
    if any(len(row) != n for row in a):
        raise SingularConfig("matrix must be square")
    if n == 0:
        return 1
    sign, prev = 1, 1
    for i in range(n - 1):
        if a[i][i] == 0:
            swap = next((r for r in range(i + 1, n) if a[r][i] != 0), None)
            if swap is None:
                return 0
            a[i], a[swap] = a[swap], a[i]
            sign = -sign
        for r in range(i + 1, n):
            for c in range(i + 1, n):
                a[r][c] = _exact(a[r][c] * a[i][i] - a[r][i] * a[i][c], prev)
        prev = a[i][i]
    return sign * a[n - 1][n - 1]


def path_count(start, end, constraint=None) -> int:
    """Upright paths from ``start`` to ``end``, optionally staying in ``y <= x``."""
    (a, b), (c, d) = start, end
    right, up = c - a, d - b
    if right < 0 or up < 0:
        return 0
    total = binom(right + up, right)
    if constraint is None:
        return total
    if constraint != "below-diagonal":
        raise ValueError(f"unknown constraint {constraint!r}")
    if b > a or d > c:
        return 0
    # reflect the start across y = x + 1
    return total - binom(right + up, c - (b - 1))


def gessel_viennot(starts, ends, constraint=None) -> int:
    """Determinant of the matrix of path counts ``starts[i] -> ends[j]``."""
    if len(starts) != len(ends):
        raise SingularConfig("need as many end points as start points")
    return determinant([[path_count(s, e, constraint) for e in ends] for s in starts])


def narayana_determinant(k: int, l: int) -> int:
    n = k + l
    return determinant([[binom(n, k), binom(n, k - 1)], [binom(n, k + 1), binom(n, k)]])


def theta_determinant(k: int, l: int) -> int:
    n = k + l
    return determinant([[binom(n, k - j + i) for j in range(3)] for i in range(3)])


def schnyder_determinant(n: int) -> int:
    c = lambda i: binom(2 * n, i)  # noqa: E731
    return determinant([[c(n) - c(n - 1), c(n + 1) - c(n - 2)], [c(n - 1) - c(n - 2), c(n) - c(n - 3)]])


# ---------------------------------------------------------------------------
# symmetric counts


def _sym_sum(kappa, lam, extra):
    s = kappa + lam + 2
    total = Fraction(0)
    r = 1
    while binom(s, kappa - r + 1) or binom(s, kappa + r + 1):
        num = (2 * r**3 + extra(r)) * binom(s, kappa + 1) * binom(s, kappa - r + 1) * binom(s, kappa + r + 1)
        total += Fraction(num, (kappa + lam + 1) * (kappa + lam + 2) ** 2)
        r += 1
    if total.denominator != 1:
        raise CountMismatch(f"symmetric sum is not integral: {total}")
    return int(total)


def theta_symmetric(k: int, l: int) -> int:
    """Symmetric non-intersecting triples; closed case formulas.

    The mixed-parity cases carry the extra term divided by ``kappa + r + 2``
    (see :func:`theta_symmetric_as_printed` for the form without it).
    """
    return _theta_symmetric(k, l, corrected=True)


def theta_symmetric_as_printed(k: int, l: int) -> int:
    """Case formulas without the ``kappa + r + 2`` divisor in the mixed-parity cases.

    Kept for comparison only: it overcounts whenever k and l have different parity.
    """
    return _theta_symmetric(k, l, corrected=False)


def _theta_symmetric(k, l, corrected):
    if k < 0 or l < 0:
        raise DomainError("theta_symmetric needs k, l >= 0")
    if k % 2 and l % 2:
        return 0
    if k % 2 == 0 and l % 2 == 0:
        return _sym_sum(k // 2, l // 2, lambda r: 0)
    if k % 2:
        kappa, lam, other = (k - 1) // 2, l // 2, l // 2
    else:
        kappa, lam, other = k // 2, (l - 1) // 2, k // 2
    # mixed parity is symmetric under swapping k and l; "other" is the even half
    if not corrected:
        return _sym_sum(kappa, lam, lambda r: (other - r + 1) * r * (r + 1) * (2 * r + 1))
    if k % 2 == 0:
        return _theta_symmetric(l, k, corrected)
    return _sym_sum(kappa, lam, lambda r: Fraction((lam - r + 1) * r * (r + 1) * (2 * r + 1), kappa + r + 2))


def theta_symmetric_gv(k: int, l: int) -> int:
    """Symmetric triples counted by cutting at the center and summing determinants."""
    if k < 0 or l < 0:
        raise DomainError("theta_symmetric_gv needs k, l >= 0")
    if k % 2 and l % 2:
        return 0
    if k % 2 == 0 and l % 2 == 1:
        return theta_symmetric_gv(l, k)
    starts = ((0, 2), (1, 1), (2, 0))
    kappa, lam = k // 2, l // 2
    mid = (kappa + 1, lam + 1)
    total = 0
    for r in range(1, kappa + lam + 3):
        ends = [((kappa + 1 - r, lam + 1 + r), mid, (kappa + 1 + r, lam + 1 - r))]
        if k % 2:
            ends.append(((kappa + 1 - r, lam + 1 + r), mid, (kappa + 2 + r, lam - r)))
        total += sum(gessel_viennot(starts, e) for e in ends)
    return total


# ---------------------------------------------------------------------------


def schnyder_count(n: int) -> int:
    """V_n: Schnyder woods on triangulations with n+3 vertices."""
    if n < 0:
        raise DomainError("schnyder_count needs n >= 0")
    diff = catalan(n + 2) * catalan(n) - catalan(n + 1) ** 2
    quot = _exact(
        6 * factorial(2 * n) * factorial(2 * n + 2),
        factorial(n) * factorial(n + 1) * factorial(n + 2) * factorial(n + 3),
    )
    return _agree(diff, quot)


def alternating_baxter_count(m: int) -> int:
    """Alternating Baxter permutations of [m]."""
    if m < 0:
        raise DomainError("alternating_baxter_count needs m >= 0")
    n = m + 1
    if n % 2 == 0:
        k = n // 2
        return catalan(k - 1) * catalan(k)
    k = (n + 1) // 2
    return catalan(k - 1) ** 2
