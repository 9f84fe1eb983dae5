"""Permutations, Baxter pattern checks, Min/Max trees and diagonal rectangulations.

A rectangulation of ``X_m = {(i, m+1-i) : 1 <= i <= m}`` lives in the square
``[0, m+1]^2``.  Segments are tuples ``("h", y, x1, x2)`` or ``("v", x, y1, y2)``
with integer coordinates.  Rectangles are ``(x0, x1, y0, y1)``.

Rectangle ``g`` (for ``g = 1..m+1``) is the one crossing the diagonal between
the points ``g-1`` and ``g`` (the corners of the square count as points 0 and
m+1).  Its north corner is the ``g``-th in-order inner node of the first tree
of the associated twin pair, its south corner the ``(m+2-g)``-th inner node of
the second tree.
"""

from __future__ import annotations

from typing import NamedTuple

from . import kernels
from .errors import (
    InvalidRectangulation,
    NotAlternatingFingerprint,
    NotBaxter,
    ParseError,
)
from .trees import (
    LEAF,
    TwinBinaryPair,
    expand_leaf,
    leaf_intervals,
    make_twin_binary,
    n_leaves,
    reduced_fingerprint,
    tree_from_intervals,
)

# ---------------------------------------------------------------------------
# permutations


def check_permutation(p) -> tuple:
    p = tuple(int(v) for v in p)
    if sorted(p) != list(range(1, len(p) + 1)):
        raise ValueError(f"not a permutation of 1..{len(p)}: {p}")
    return p


def parse_permutation(text: str) -> tuple:
    text = text.strip()
    if not text:
        return ()
    try:
        return check_permutation(v for v in text.replace(" ", "").split(","))
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def format_permutation(p) -> str:
    return ",".join(str(v) for v in p) + "\n"


def reverse_perm(p) -> tuple:
    return tuple(reversed(p))


def complement_perm(p) -> tuple:
    n = len(p)
    return tuple(n + 1 - v for v in p)


def descents(p) -> int:
    return sum(p[i] > p[i + 1] for i in range(len(p) - 1))


def rises(p) -> int:
    return sum(p[i] < p[i + 1] for i in range(len(p) - 1))


def descent_word(p) -> str:
    """Bit i is 1 iff position i (0-based pair i, i+1) is a descent."""
    return "".join("1" if p[i] > p[i + 1] else "0" for i in range(len(p) - 1))


def is_baxter(p) -> bool:
    return kernels.is_baxter(check_permutation(p))


def is_alternating(p) -> bool:
    """a1 < a2 > a3 < a4 ...  (every pair a_{2i-1}, a_{2i} is a rise)."""
    return all((p[i] < p[i + 1]) == (i % 2 == 0) for i in range(len(p) - 1))


def is_symmetric_baxter(p) -> bool:
    """Stable under the half-turn of the permutation matrix."""
    p = check_permutation(p)
    return p == complement_perm(reverse_perm(p)) and kernels.is_baxter(p)


def is_symmetric(p) -> bool:
    p = tuple(p)
    return p == complement_perm(reverse_perm(p))


# ---------------------------------------------------------------------------
# Min / Max trees


def _extremal_tree(p, pick):
    if not p:
        return LEAF
    z = p.index(pick(p))
    return (_extremal_tree(p[:z], pick), _extremal_tree(p[z + 1:], pick))


def max_tree(p):
    """Root is the maximum; left and right subtrees are built from the two sides."""
    return _extremal_tree(tuple(p), max)


def min_tree(p):
    return _extremal_tree(tuple(p), min)


def twin_pair_of_baxter(p) -> TwinBinaryPair:
    p = check_permutation(p)
    if not p:
        raise NotBaxter("the empty permutation has no twin pair")
    if not kernels.is_baxter(p):
        raise NotBaxter(f"{p} contains 2-41-3 or 3-14-2")
    return make_twin_binary(max_tree(p), min_tree(reverse_perm(p)))


def twin_pair_of_permutation(p) -> TwinBinaryPair:
    """(Max(p), Min(reverse p)) for any permutation; not injective off Baxter ones."""
    p = check_permutation(p)
    return make_twin_binary(max_tree(p), min_tree(reverse_perm(p)))


# ---------------------------------------------------------------------------
# rectangulations


class Rectangulation(NamedTuple):
    n: int
    segments: frozenset

    def horizontal(self):
        return sorted(s for s in self.segments if s[0] == "h")

    def vertical(self):
        return sorted(s for s in self.segments if s[0] == "v")


def _pair_nodes(p: TwinBinaryPair):
    s, t = make_twin_binary(*p)
    return leaf_intervals(s), leaf_intervals(t)


def rectangles_of_twin_pair(p: TwinBinaryPair):
    """Rectangles ``(x0, x1, y0, y1)`` indexed by slot ``g - 1``."""
    up, down = _pair_nodes(p)
    m = len(up) - 1
    rects = []
    for g in range(1, m + 2):
        i, j, _ = up[g - 1]
        i2, j2, _ = down[m + 1 - g]
        rects.append((m + 1 - j2, j, i2, m + 1 - i))
    return rects


def _merge(pieces):
    pieces = sorted(pieces)
    out = []
    for a, b in pieces:
        if out and a <= out[-1][1]:
            out[-1][1] = max(out[-1][1], b)
        else:
            out.append([a, b])
    return [tuple(x) for x in out]


def _segments_of_rectangles(m: int, rects):
    hor, ver = {}, {}
    for x0, x1, y0, y1 in rects:
        for y in (y0, y1):
            if 0 < y < m + 1:
                hor.setdefault(y, []).append((x0, x1))
        for x in (x0, x1):
            if 0 < x < m + 1:
                ver.setdefault(x, []).append((y0, y1))
    segs = []
    for y, pieces in hor.items():
        for a, b in _merge(pieces):
            segs.append(("h", y, a, b))
    for x, pieces in ver.items():
        for a, b in _merge(pieces):
            segs.append(("v", x, a, b))
    return frozenset(segs)


def rectangulation_of_twin_pair(p: TwinBinaryPair) -> Rectangulation:
    rects = rectangles_of_twin_pair(p)
    m = len(rects) - 1
    return validate_rectangulation(Rectangulation(m, _segments_of_rectangles(m, rects)))


def _point_of(seg, n):
    """Index of the diagonal point on ``seg`` or None."""
    kind, c, a, b = seg
    i = n + 1 - c if kind == "h" else c
    # point i is (i, n+1-i)
    along = i if kind == "h" else n + 1 - i
    if 1 <= i <= n and a <= along <= b:
        return i
    return None


def rectangles(r: Rectangulation):
    """Find the rectangle of every slot by casting rays from the slot midpoint."""
    n = r.n
    out = []
    size2 = 2 * (n + 1)
    for g in range(1, n + 2):
        px, py = 2 * g - 1, 2 * n + 3 - 2 * g  # doubled midpoint of the slot
        x0, x1, y0, y1 = 0, size2, 0, size2
        for kind, c, a, b in r.segments:
            c2, a2, b2 = 2 * c, 2 * a, 2 * b
            if kind == "v" and a2 < py < b2:
                if c2 < px:
                    x0 = max(x0, c2)
                else:
                    x1 = min(x1, c2)
            elif kind == "h" and a2 < px < b2:
                if c2 < py:
                    y0 = max(y0, c2)
                else:
                    y1 = min(y1, c2)
        out.append((x0 // 2, x1 // 2, y0 // 2, y1 // 2))
    return out


def validate_rectangulation(r: Rectangulation) -> Rectangulation:
    n = r.n
    top = n + 1
    hit = [0] * (n + 1)
    for seg in r.segments:
        if len(seg) != 4 or seg[0] not in ("h", "v"):
            raise InvalidRectangulation(f"bad segment {seg!r}")
        kind, c, a, b = seg
        if not (0 < c < top and 0 <= a < b <= top):
            raise InvalidRectangulation(f"segment {seg!r} leaves the square or is degenerate")
        i = _point_of(seg, n)
        if i is None:
            raise InvalidRectangulation(f"segment {seg!r} contains no diagonal point")
        along = i if kind == "h" else n + 1 - i
        if not a < along < b:
            raise InvalidRectangulation(f"diagonal point {i} is an endpoint of {seg!r}")
        hit[i] += 1
    if any(h != 1 for h in hit[1:]):
        raise InvalidRectangulation("every diagonal point must lie on exactly one segment")
    hs = [s for s in r.segments if s[0] == "h"]
    vs = [s for s in r.segments if s[0] == "v"]
    for _, y, xa, xb in hs:
        for _, x, ya, yb in vs:
            if xa < x < xb and ya < y < yb:
                raise InvalidRectangulation("segments cross")
    # maximality: endpoints rest on the boundary or on a perpendicular segment
    for kind, c, a, b in r.segments:
        others = vs if kind == "h" else hs
        for e in (a, b):
            if e in (0, top):
                continue
            if not any(o[1] == e and o[2] <= c <= o[3] for o in others):
                raise InvalidRectangulation(f"segment end {e} on line {c} is free")
    rects = rectangles(r)
    area = 0
    for x0, x1, y0, y1 in rects:
        if x0 >= x1 or y0 >= y1:
            raise InvalidRectangulation("empty rectangle")
        area += (x1 - x0) * (y1 - y0)
        for kind, c, a, b in r.segments:
            lo, hi = (x0, x1) if kind == "v" else (y0, y1)
            alo, ahi = (y0, y1) if kind == "v" else (x0, x1)
            if lo < c < hi and a < ahi and b > alo:
                raise InvalidRectangulation("a segment cuts through a rectangle")
    for u in range(len(rects)):
        for v in range(u):
            a, b = rects[u], rects[v]
            if a[0] < b[1] and b[0] < a[1] and a[2] < b[3] and b[2] < a[3]:
                raise InvalidRectangulation("rectangles overlap")
    if area != top * top:
        raise InvalidRectangulation(f"rectangles cover area {area}, expected {top * top}")
    return r


def twin_pair_of_rectangulation(r: Rectangulation) -> TwinBinaryPair:
    validate_rectangulation(r)
    n = r.n
    up, down = {}, {}
    for g, (x0, x1, y0, y1) in enumerate(rectangles(r), start=1):
        up[(n + 1 - y1, x1)] = g - 1
        down[(y0, n + 1 - x0)] = n + 1 - g
    try:
        s = tree_from_intervals(up, 0, n + 1)
        t = tree_from_intervals(down, 0, n + 1)
    except Exception as exc:
        raise InvalidRectangulation(f"corners do not form trees: {exc}") from None
    return make_twin_binary(s, t)


def format_rectangulation(r: Rectangulation) -> str:
    """One segment per line, coordinates doubled, ordered by diagonal point."""
    segs = sorted(r.segments, key=lambda s: _point_of(s, r.n))
    return "".join(f"{k} {2 * c} {2 * a} {2 * b}\n" for k, c, a, b in segs)


def parse_rectangulation(text: str) -> Rectangulation:
    segs = []
    for ln in text.splitlines():
        if not ln.strip():
            continue
        parts = ln.split()
        try:
            if len(parts) != 4 or parts[0] not in ("h", "v"):
                raise ValueError
            vals = [int(v) for v in parts[1:]]
        except ValueError:
            raise ParseError(f"bad segment line {ln!r}") from None
        if any(v % 2 for v in vals):
            raise ParseError(f"doubled coordinates must be even: {ln!r}")
        segs.append((parts[0], *(v // 2 for v in vals)))
    fs = frozenset(segs)
    if len(fs) != len(segs):
        raise ParseError("repeated segment")
    return validate_rectangulation(Rectangulation(len(segs), fs))


# ---------------------------------------------------------------------------
# pyramid labeling


def _south_is_left(rect, r: Rectangulation) -> bool:
    """The south corner is a left child iff the wall under the rectangle runs on to the west."""
    x0, _, y0, _ = rect
    if y0 == 0:
        return x0 > 0
    for kind, c, a, b in r.segments:
        if kind == "h" and c == y0 and a <= x0 < b:
            return a < x0
    raise InvalidRectangulation("rectangle bottom rests on no segment")


def baxter_of_rectangulation(r: Rectangulation) -> tuple:
    """Label rectangles n+1, n, ..., 1 by repeatedly taking the tip of a pyramid.

    Heights are measured in the tilted picture: the north corner (x, y) sits
    at height x + y - (n+1) over the diagonal.
    """
    validate_rectangulation(r)
    rects = rectangles(r)
    size = len(rects)
    label = [0] * size
    height = [x1 + y1 for _, x1, _, y1 in rects]

    def tip(lo, hi):
        slots = range(lo, hi)
        best = max(height[g] for g in slots)
        tops = [g for g in slots if height[g] == best]
        if len(tops) != 1:
            raise InvalidRectangulation("pyramid has no unique tip")
        return tops[0]

    cur = tip(0, size)
    for value in range(size, 0, -1):
        label[cur] = value
        if value == 1:
            break
        if _south_is_left(rects[cur], r):
            hi = cur
            while hi > 0 and label[hi - 1]:
                hi -= 1
            lo = hi
            while lo > 0 and not label[lo - 1]:
                lo -= 1
        else:
            lo = cur + 1
            while lo < size and label[lo]:
                lo += 1
            hi = lo
            while hi < size and not label[hi]:
                hi += 1
        if lo == hi:
            raise InvalidRectangulation("no unlabeled pyramid on the chosen side")
        cur = tip(lo, hi)
    return tuple(label)


# ---------------------------------------------------------------------------
# alternating Baxter permutations


def _contract(t, i):
    """Replace the sibling leaves i, i+1 by one leaf."""

    def walk(node, start):
        if node == LEAF:
            return node, start + 1
        if node == (LEAF, LEAF) and start == i:
            return LEAF, start + 2
        left, nxt = walk(node[0], start)
        right, end = walk(node[1], nxt)
        return (left, right), end

    out, _ = walk(t, 0)
    if n_leaves(out) != n_leaves(t) - 1:
        raise NotAlternatingFingerprint(f"leaves {i}, {i + 1} are not siblings")
    return out


def _pruned_positions(n, first: bool):
    """0-based leaf indices of the left members of the sibling pairs."""
    if first or n % 2:
        return list(range(0, 2 * (n // 2), 2))
    return list(range(1, n - 2, 2))


def prune_alternating_pair(p: TwinBinaryPair):
    """Contract the sibling leaf pairs of an alternating twin pair."""
    s, t = make_twin_binary(*p)
    ah = reduced_fingerprint(s)
    if any(ah[i] != "01"[i % 2] for i in range(len(ah))):
        raise NotAlternatingFingerprint(f"reduced fingerprint {ah} is not 0101...")
    n = n_leaves(s)
    out = []
    for tree, first in ((s, True), (t, False)):
        for i in reversed(_pruned_positions(n, first)):
            tree = _contract(tree, i)
        out.append(tree)
    return tuple(out)


def graft_alternating_pair(a, b) -> TwinBinaryPair:
    """Inverse of :func:`prune_alternating_pair`.

    Leaf counts fix n: equal sizes k give n = 2k - 1, sizes (k, k+1) give n = 2k.
    """
    ka, kb = n_leaves(a), n_leaves(b)
    if kb == ka:
        n = 2 * ka - 1
    elif kb == ka + 1:
        n = 2 * ka
    else:
        raise NotAlternatingFingerprint(f"leaf counts {ka}, {kb} fit no alternating pair")
    if n < 2:
        raise NotAlternatingFingerprint("alternating pairs need at least two leaves")
    out = []
    for tree, first in ((a, True), (b, False)):
        for i in _pruned_positions(n, first):
            tree = expand_leaf(tree, i)
        out.append(tree)
    return make_twin_binary(*out)


def is_alternating_baxter(p) -> bool:
    return is_alternating(p) and is_baxter(p)


__all__ = [
    "Rectangulation",
    "baxter_of_rectangulation",
    "check_permutation",
    "complement_perm",
    "descent_word",
    "descents",
    "format_permutation",
    "format_rectangulation",
    "graft_alternating_pair",
    "is_alternating",
    "is_alternating_baxter",
    "is_baxter",
    "is_symmetric",
    "is_symmetric_baxter",
    "max_tree",
    "min_tree",
    "parse_permutation",
    "parse_rectangulation",
    "prune_alternating_pair",
    "rectangles",
    "rectangulation_of_twin_pair",
    "reverse_perm",
    "rises",
    "twin_pair_of_baxter",
    "twin_pair_of_permutation",
    "twin_pair_of_rectangulation",
    "validate_rectangulation",
]
