"""0/1 strings: fingerprints, bodyprints and the dominance order.

Bit strings are plain ``str`` objects over the alphabet ``"01"``; indexing
is 0-based throughout.
"""

from itertools import accumulate, combinations

from .errors import LengthMismatch, MalformedFingerprint

__all__ = [
    "check_bits",
    "reverse",
    "complement",
    "reduced",
    "unreduce",
    "ones",
    "dominates",
    "strings_with_ones",
]


def check_bits(b: str) -> str:
    if not isinstance(b, str) or b.strip("01"):
        raise MalformedFingerprint(f"not a 0/1 string: {b!r}")
    return b


def reverse(b: str) -> str:
    return b[::-1]


def complement(b: str) -> str:
    return b.translate(_FLIP)


_FLIP = str.maketrans("01", "10")


def reduced(b: str) -> str:
    """Drop the forced leading 1 and trailing 0 of a fingerprint."""
    check_bits(b)
    if len(b) < 2 or b[0] != "1" or b[-1] != "0":
        raise MalformedFingerprint(f"fingerprint must start with 1 and end with 0: {b!r}")
    return b[1:-1]


def unreduce(b: str) -> str:
    return "1" + b + "0"


def ones(b: str) -> int:
    return b.count("1")


def dominates(tau: str, sigma: str) -> bool:
    """True iff every prefix of ``tau`` has at least as many 1s as ``sigma``'s.

    Both strings must have the same length and the same number of 1s.
    """
    check_bits(tau)
    check_bits(sigma)
    if len(tau) != len(sigma) or ones(tau) != ones(sigma):
        raise LengthMismatch(f"dominance needs equal length and weight: {tau!r} vs {sigma!r}")
    pt = accumulate(int(c) for c in tau)
    ps = accumulate(int(c) for c in sigma)
    return all(a >= b for a, b in zip(pt, ps))


def strings_with_ones(length: int, k: int):
    """All 0/1 strings of ``length`` with exactly ``k`` ones, in lexicographic order."""
    if k < 0 or k > length:
        return
    for pos in combinations(range(length), length - k):
        # choosing the 0-positions in lex order yields the strings in lex order
        s = ["1"] * length
        for p in pos:
            s[p] = "0"
        yield "".join(s)
