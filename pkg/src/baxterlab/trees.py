"""Rooted ordered trees, alternating layouts, full binary trees and twin pairs.

Both kinds of tree are nested tuples.  An ordered tree node is the tuple of
its children, so ``()`` is a single vertex and ``((), (()))`` is a root with a
leaf child and a child that has one leaf child.  A full binary tree uses the
same encoding restricted to nodes with zero or two children: ``()`` is a leaf
and ``(left, right)`` an inner node.

Layout modes are named by compass corner: ``"sw"`` (root left, edges below),
``"nw"`` (root left, above), ``"ne"`` (root right, above) and ``"se"`` (root
right, below).  The arrow glyphs ``↙ ↖ ↗ ↘`` are accepted as aliases.
"""

from __future__ import annotations

from functools import lru_cache
from typing import NamedTuple

from .bits import check_bits, complement, dominates, ones, reduced, reverse
from .errors import (
    CountMismatch,
    DominanceViolated,
    LengthMismatch,
    MalformedFingerprint,
    NotAlternating,
    NotTwins,
    ParseError,
)

LEAF = ()

_MODE_ALIASES = {"↙": "sw", "↖": "nw", "↗": "ne", "↘": "se"}
# mode -> (walk clockwise, root color class numbered at first visit)
_WALKS = {"sw": (True, True), "nw": (False, True), "ne": (False, False), "se": (True, False)}


def _mode(mode: str) -> str:
    mode = _MODE_ALIASES.get(mode, mode)
    if mode not in _WALKS:
        raise ValueError(f"unknown layout mode {mode!r}")
    return mode


# ---------------------------------------------------------------------------
# ordered trees


def tree_size(t) -> int:
    """Number of vertices."""
    return 1 + sum(tree_size(c) for c in t)


def parse_ordered(text: str):
    """Parse balanced parentheses, e.g. ``"(()(()))"``."""
    text = text.strip()
    stack = [[]]
    for ch in text:
        if ch == "(":
            stack.append([])
        elif ch == ")":
            if len(stack) < 2:
                raise ParseError(f"unbalanced parentheses in {text!r}")
            node = tuple(stack.pop())
            stack[-1].append(node)
        elif not ch.isspace():
            raise ParseError(f"unexpected character {ch!r} in ordered tree")
    if len(stack) != 1 or len(stack[0]) != 1:
        raise ParseError(f"expected exactly one tree in {text!r}")
    return stack[0][0]


def format_ordered(t) -> str:
    return "(" + "".join(format_ordered(c) for c in t) + ")"


def ordered_trees(n_vertices: int):
    """All rooted ordered trees with ``n_vertices`` vertices."""
    return _ordered_trees(n_vertices)


@lru_cache(maxsize=None)
def _ordered_trees(n):
    if n < 1:
        return ()
    return tuple(tuple(f) for f in _forests(n - 1))


@lru_cache(maxsize=None)
def _forests(n):
    if n == 0:
        return ((),)
    out = []
    for first in range(1, n + 1):
        for head in _ordered_trees(first):
            for rest in _forests(n - first):
                out.append((head,) + rest)
    return tuple(out)


class Layout(NamedTuple):
    """A one-page drawing of a tree on the points ``0..n_vertices-1``.

    ``edges`` holds ``(parent_position, child_position)`` pairs.
    """

    n_vertices: int
    root: int
    edges: tuple

    def neighbors(self):
        nb = [[] for _ in range(self.n_vertices)]
        for p, c in self.edges:
            nb[p].append(c)
            nb[c].append(p)
        return nb

    def fingerprint(self) -> str:
        """Bit ``i`` is 1 iff the vertex at position ``i`` has all neighbors to its right."""
        bits = []
        for i, nb in enumerate(self.neighbors()):
            if all(j > i for j in nb):
                bits.append("1")
            elif all(j < i for j in nb):
                bits.append("0")
            else:
                raise NotAlternating(f"vertex at {i} has neighbors on both sides")
        return "".join(bits)


def layout(t, mode: str = "sw") -> Layout:
    """The unique alternating layout of ``t`` of the given type.

    Vertices are numbered by walking around the tree; the root's color class
    is numbered at the first or last visit depending on the mode.  The result
    is checked to be non-crossing and alternating.
    """
    clockwise, root_first = _WALKS[_mode(mode)]
    counter = [0]
    edges = []

    def visit(node, depth):
        first = (depth % 2 == 0) == root_first
        if first:
            me = counter[0]
            counter[0] += 1
        kids = reversed(node) if clockwise else node
        child_pos = [visit(c, depth + 1) for c in kids]
        if not first:
            me = counter[0]
            counter[0] += 1
        edges.extend((me, c) for c in child_pos)
        return me

    root = visit(t, 0)
    lay = Layout(counter[0], root, tuple(sorted(edges)))
    _check_layout(lay)
    return lay


def _check_layout(lay: Layout) -> None:
    lay.fingerprint()  # raises if not alternating
    spans = [tuple(sorted(e)) for e in lay.edges]
    for a, b in spans:
        for c, d in spans:
            if a < c < b < d:
                raise NotAlternating(f"arcs {a}-{b} and {c}-{d} cross")


def fingerprint(t, mode: str = "sw") -> str:
    return layout(t, mode).fingerprint()


def tree_from_layout(lay: Layout, mode: str):
    """Inverse of :func:`layout` for the ``"ne"`` and ``"sw"`` modes."""
    mode = _mode(mode)
    if mode not in ("ne", "sw"):
        raise ValueError("tree_from_layout supports the 'ne' and 'sw' modes")
    _check_layout(lay)
    nb = lay.neighbors()
    # order children increasingly in the ne layout; sw is its half-turn image
    descending = mode == "sw"

    def build(v, parent):
        kids = sorted((u for u in nb[v] if u != parent), reverse=descending)
        return tuple(build(u, v) for u in kids)

    if len(lay.edges) != lay.n_vertices - 1:
        raise NotAlternating("layout is not a tree")
    return build(lay.root, None)


def augment(t):
    """Add a new leaf as the rightmost child of the root."""
    return t + (LEAF,)


def strip_augmentation(t):
    if not t or t[-1] != LEAF:
        raise MalformedFingerprint("rightmost child of the root is not a leaf")
    return t[:-1]


# ---------------------------------------------------------------------------
# full binary trees


def is_full_binary(t) -> bool:
    return t == LEAF or (len(t) == 2 and is_full_binary(t[0]) and is_full_binary(t[1]))


def n_leaves(t) -> int:
    if t == LEAF:
        return 1
    return n_leaves(t[0]) + n_leaves(t[1])


def parse_binary(text: str):
    """Parse the ``*``-leaf notation, e.g. ``"((**)*)"``."""
    text = "".join(text.split())
    pos = 0

    def node():
        nonlocal pos
        if pos >= len(text):
            raise ParseError("truncated binary tree")
        ch = text[pos]
        pos += 1
        if ch == "*":
            return LEAF
        if ch != "(":
            raise ParseError(f"unexpected {ch!r} in binary tree")
        left = node()
        right = node()
        if pos >= len(text) or text[pos] != ")":
            raise ParseError("inner node must have exactly two children")
        pos += 1
        return (left, right)

    t = node()
    if pos != len(text):
        raise ParseError(f"trailing characters in {text!r}")
    return t


def format_binary(t) -> str:
    if t == LEAF:
        return "*"
    return "(" + format_binary(t[0]) + format_binary(t[1]) + ")"


def binary_trees(leaves: int):
    """All full binary trees with the given number of leaves."""
    return _binary_trees(leaves)


@lru_cache(maxsize=None)
def _binary_trees(n):
    if n < 1:
        return ()
    if n == 1:
        return (LEAF,)
    return tuple((a, b) for k in range(1, n) for a in _binary_trees(k) for b in _binary_trees(n - k))


def binary_fingerprint(t) -> str:
    """Leaves left to right; 1 for a left child, 0 for a right child."""
    if t == LEAF:
        raise MalformedFingerprint("a single leaf has no fingerprint")
    out = []

    def walk(node, bit):
        if node == LEAF:
            out.append(bit)
        else:
            walk(node[0], "1")
            walk(node[1], "0")

    walk(t[0], "1")
    walk(t[1], "0")
    return "".join(out)


def bodyprint(t) -> str:
    """Inner nodes in in-order; 1 for a right child or the root, 0 for a left child."""
    if t == LEAF:
        raise MalformedFingerprint("a single leaf has no bodyprint")
    out = []

    def walk(node, bit):
        if node == LEAF:
            return
        walk(node[0], "0")
        out.append(bit)
        walk(node[1], "1")

    walk(t, "1")
    return "".join(out)


def reduced_bodyprint(t) -> str:
    return bodyprint(t)[:-1]


def reduced_fingerprint(t) -> str:
    return reduced(binary_fingerprint(t))


def left_leaves(t) -> int:
    return binary_fingerprint(t).count("1")


def leaf_intervals(t):
    """Map each inner node to ``(first_leaf, last_leaf, split)`` in in-order.

    ``split`` is the index of the last leaf of the left subtree.
    """
    out = []

    def walk(node, start):
        if node == LEAF:
            return start
        mid = walk(node[0], start)
        out.append((start, None, mid))
        idx = len(out) - 1
        end = walk(node[1], mid + 1)
        out[idx] = (start, end, mid)
        return end

    walk(t, 0)
    return out


def tree_from_intervals(nodes, first: int, last: int):
    """Rebuild a binary tree from ``{(first, last): split}`` over leaves ``first..last``."""
    if first == last:
        return LEAF
    try:
        split = nodes[(first, last)]
    except KeyError:
        raise MalformedFingerprint(f"no inner node spans leaves {first}..{last}") from None
    return (tree_from_intervals(nodes, first, split), tree_from_intervals(nodes, split + 1, last))


def expand_leaf(t, index: int):
    """Replace the ``index``-th leaf (0-based) by an inner node with two leaves."""
    counter = [0]

    def walk(node):
        if node == LEAF:
            i = counter[0]
            counter[0] += 1
            return (LEAF, LEAF) if i == index else LEAF
        return (walk(node[0]), walk(node[1]))

    out = walk(t)
    if index >= counter[0]:
        raise IndexError(f"tree has only {counter[0]} leaves")
    return out


def left_comb(leaves: int):
    t = LEAF
    for _ in range(leaves - 1):
        t = (t, LEAF)
    return t


def right_comb(leaves: int):
    t = LEAF
    for _ in range(leaves - 1):
        t = (LEAF, t)
    return t


# ---------------------------------------------------------------------------
# alternating <-> binary


def alt_to_binary(t):
    """Full binary tree whose leaves are the vertices of the ``ne`` layout of ``t``.

    Each edge ``(i, j)`` of the layout becomes the inner node spanning leaves
    ``i..j``; reduced fingerprints agree.
    """
    lay = layout(t, "ne")
    if lay.n_vertices == 1:
        return LEAF
    starts: dict = {}
    ends: dict = {}
    for p, c in lay.edges:
        i, j = min(p, c), max(p, c)
        starts.setdefault(i, []).append(j)
        ends.setdefault(j, []).append(i)

    def build(i, j):
        inner_left = [x for x in starts.get(i, ()) if x < j]
        inner_right = [x for x in ends.get(j, ()) if x > i]
        left = build(i, max(inner_left)) if inner_left else LEAF
        right = build(min(inner_right), j) if inner_right else LEAF
        return (left, right)

    return build(0, lay.n_vertices - 1)


def binary_to_alt(b):
    """Inverse of :func:`alt_to_binary`."""
    n = n_leaves(b)
    edges = []
    for first, last, _ in leaf_intervals(b):
        edges.append((last, first) if last == n - 1 else (first, last))
    # orient every edge away from the root, which sits at the right end
    nb = [[] for _ in range(n)]
    for i, j in edges:
        nb[i].append(j)
        nb[j].append(i)
    oriented = []
    seen = {n - 1}
    stack = [n - 1]
    while stack:
        v = stack.pop()
        for u in nb[v]:
            if u not in seen:
                seen.add(u)
                oriented.append((v, u))
                stack.append(u)
    return tree_from_layout(Layout(n, n - 1, tuple(sorted(oriented))), "ne")


# ---------------------------------------------------------------------------
# prints -> tree


def tree_from_prints(beta_hat: str, alpha_hat: str):
    """The unique full binary tree with the given reduced bodyprint and fingerprint."""
    check_bits(beta_hat)
    check_bits(alpha_hat)
    if len(beta_hat) != len(alpha_hat):
        raise LengthMismatch("prints must have equal length")
    if ones(beta_hat) != ones(alpha_hat):
        raise CountMismatch("prints must have the same number of 1s")
    if not dominates(alpha_hat, beta_hat):
        raise DominanceViolated(f"{alpha_hat!r} does not dominate {beta_hat!r}")
    return _from_prints(beta_hat, alpha_hat)


def _from_prints(bh: str, ah: str):
    i = ah.find("10")
    if i < 0:
        # ah = 0^l 1^k, which forces bh = ah
        zeros = len(ah) - ones(ah)
        return (left_comb(zeros + 1), right_comb(ones(ah) + 1))
    # 0-based: ah[i] ah[i+1] = 10 are leaves i+1, i+2 of the full fingerprint,
    # siblings under the inner node with in-order index i+1 (bit bh[i+1])
    delta = "1" if bh[i + 1] == "0" else "0"
    ah_star = ah[:i] + delta + ah[i + 2:]
    bh_star = bh[: i + 1] + bh[i + 2:]
    return expand_leaf(_from_prints(bh_star, ah_star), i + 1)


# ---------------------------------------------------------------------------
# twin pairs


class TwinBinaryPair(NamedTuple):
    first: tuple
    second: tuple


class TwinAlternatingPair(NamedTuple):
    first: tuple
    second: tuple


def is_twin_binary(a, b) -> bool:
    if a == LEAF or b == LEAF:
        return False
    return reduced_fingerprint(a) == reverse(reduced_fingerprint(b))


def make_twin_binary(a, b) -> TwinBinaryPair:
    if not is_twin_binary(a, b):
        raise NotTwins("reduced fingerprints are not reverses of each other")
    return TwinBinaryPair(a, b)


def is_twin_alternating(s, t) -> bool:
    if tree_size(s) != tree_size(t) or tree_size(s) < 2:
        return False
    return reduced(fingerprint(s, "sw")) == complement(reduced(fingerprint(t, "ne")))


def make_twin_alternating(s, t) -> TwinAlternatingPair:
    if not is_twin_alternating(s, t):
        raise NotTwins("not a twin-alternating pair")
    return TwinAlternatingPair(s, t)


def twin_alt_from_twin_binary(p: TwinBinaryPair) -> TwinAlternatingPair:
    make_twin_binary(*p)
    return TwinAlternatingPair(binary_to_alt(p.first), binary_to_alt(p.second))


def twin_binary_from_twin_alt(p: TwinAlternatingPair) -> TwinBinaryPair:
    make_twin_alternating(*p)
    return TwinBinaryPair(alt_to_binary(p.first), alt_to_binary(p.second))


def format_twin_pair(p) -> str:
    return format_binary(p.first) + "\n" + format_binary(p.second) + "\n"


def parse_twin_pair(text: str) -> TwinBinaryPair:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if len(lines) != 2:
        raise ParseError("a twin pair is two lines of binary trees")
    return make_twin_binary(parse_binary(lines[0]), parse_binary(lines[1]))
