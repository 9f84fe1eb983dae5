"""Upright lattice paths and the triple / Dyck-pair encodings of tree pairs.

A 1 in a bit string is a step Right, a 0 a step Up, so a string with k ones
ends k units to the right of its start.
"""

from __future__ import annotations

from typing import NamedTuple

from .bits import check_bits, dominates, ones, reverse
from .errors import DominanceViolated, IntersectionDetected, LengthMismatch, ParseError
from .trees import TwinBinaryPair, make_twin_binary, reduced_bodyprint, reduced_fingerprint, tree_from_prints

TRIPLE_STARTS = ((0, 2), (1, 1), (2, 0))
DYCK_STARTS = ((0, 0), (1, -1))


class LatticePath(NamedTuple):
    start: tuple
    steps: str  # over "RU"

    @property
    def end(self):
        x, y = self.start
        r = self.steps.count("R")
        return (x + r, y + len(self.steps) - r)

    def points(self):
        x, y = self.start
        pts = [(x, y)]
        for s in self.steps:
            if s == "R":
                x += 1
            else:
                y += 1
            pts.append((x, y))
        return pts


def path_of_bits(bits: str, start=(0, 0)) -> LatticePath:
    check_bits(bits)
    return LatticePath(tuple(start), bits.replace("1", "R").replace("0", "U"))


def bits_of_path(p: LatticePath) -> str:
    return p.steps.replace("R", "1").replace("U", "0")


def reflect(p: LatticePath, center2) -> LatticePath:
    """Point reflection at ``center2 / 2`` (doubled to stay integral)."""
    cx, cy = center2
    ex, ey = p.end
    return LatticePath((cx - ex, cy - ey), p.steps[::-1])


def vertex_disjoint(paths) -> bool:
    seen = set()
    for p in paths:
        pts = set(p.points())
        if seen & pts:
            return False
        seen |= pts
    return True


def is_below_diagonal(p: LatticePath) -> bool:
    return all(y <= x for x, y in p.points())


def format_path(p: LatticePath) -> str:
    return f"({p.start[0]},{p.start[1]}):{p.steps}"


def parse_path(text: str) -> LatticePath:
    text = text.strip()
    try:
        head, steps = text.split(":")
        if not (head.startswith("(") and head.endswith(")")):
            raise ValueError
        x, y = (int(v) for v in head[1:-1].split(","))
    except ValueError:
        raise ParseError(f"bad path {text!r}") from None
    if steps.strip("RU"):
        raise ParseError(f"path steps must be R or U: {steps!r}")
    return LatticePath((x, y), steps)


# ---------------------------------------------------------------------------
# triples


class PathTriple(NamedTuple):
    p1: LatticePath
    p2: LatticePath
    p3: LatticePath

    @property
    def k(self) -> int:
        return self.p1.steps.count("R")

    @property
    def l(self) -> int:
        return len(self.p1.steps) - self.k


def triple_ends(k: int, l: int):
    return ((k, l + 2), (k + 1, l + 1), (k + 2, l))


def check_triple(t: PathTriple) -> PathTriple:
    k, l = t.k, t.l
    if tuple(p.start for p in t) != TRIPLE_STARTS or tuple(p.end for p in t) != triple_ends(k, l):
        raise LengthMismatch("triple has wrong start or end points")
    if not vertex_disjoint(t):
        raise DominanceViolated("paths of the triple intersect")
    return t


def twin_pair_to_triple(p: TwinBinaryPair) -> PathTriple:
    s, t = make_twin_binary(*p)
    triple = PathTriple(
        path_of_bits(reduced_bodyprint(s), TRIPLE_STARTS[0]),
        path_of_bits(reduced_fingerprint(s), TRIPLE_STARTS[1]),
        path_of_bits(reverse(reduced_bodyprint(t)), TRIPLE_STARTS[2]),
    )
    if not vertex_disjoint(triple):
        raise IntersectionDetected("triple from a twin pair intersects")
    return triple


def triple_to_twin_pair(t: PathTriple) -> TwinBinaryPair:
    check_triple(t)
    b1, a, b3 = (bits_of_path(p) for p in t)
    return TwinBinaryPair(tree_from_prints(b1, a), tree_from_prints(reverse(b3), reverse(a)))


def is_symmetric_triple(t: PathTriple) -> bool:
    """Stable under the point reflection at (k/2 + 1, l/2 + 1)."""
    c2 = (t.k + 2, t.l + 2)
    return reflect(t.p1, c2) == t.p3 and reflect(t.p2, c2) == t.p2


def format_triple(t: PathTriple) -> str:
    return "".join(format_path(p) + "\n" for p in t)


def parse_triple(text: str) -> PathTriple:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if len(lines) != 3:
        raise ParseError("a path triple is three lines")
    return check_triple(PathTriple(*(parse_path(ln) for ln in lines)))


# ---------------------------------------------------------------------------
# Dyck pairs


class DyckPair(NamedTuple):
    p1: LatticePath
    p2: LatticePath

    @property
    def n(self) -> int:
        return len(self.p1.steps) // 2


def check_dyck_pair(d: DyckPair) -> DyckPair:
    n = d.n
    if (d.p1.start, d.p2.start) != DYCK_STARTS or (d.p1.end, d.p2.end) != ((n, n), (n + 1, n - 1)):
        raise LengthMismatch("Dyck pair has wrong start or end points")
    if not vertex_disjoint(d):
        raise DominanceViolated("paths of the Dyck pair intersect")
    if not (is_below_diagonal(d.p1) and is_below_diagonal(d.p2)):
        raise DominanceViolated("Dyck pair leaves the region y <= x")
    return d


def _check_dyck_chain(a_star: str, b_star: str) -> None:
    n = len(a_star) // 2
    if len(a_star) != 2 * n or ones(a_star) != n:
        raise LengthMismatch("Dyck strings need length 2n with n ones")
    if not (dominates(a_star, "10" * n) and dominates(b_star, a_star)):
        raise DominanceViolated(f"need (10)^n <= {a_star} <= {b_star} in dominance order")


def schnyder_prints_to_dyck_pair(alpha_hat: str, beta_hat_r: str) -> DyckPair:
    """Prepend a 1 to both strings and draw them from (0,0) and (1,-1)."""
    a_star, b_star = "1" + check_bits(alpha_hat), "1" + check_bits(beta_hat_r)
    _check_dyck_chain(a_star, b_star)
    return check_dyck_pair(DyckPair(path_of_bits(a_star, DYCK_STARTS[0]), path_of_bits(b_star, DYCK_STARTS[1])))


def dyck_pair_to_schnyder_prints(d: DyckPair):
    check_dyck_pair(d)
    a_star, b_star = bits_of_path(d.p1), bits_of_path(d.p2)
    _check_dyck_chain(a_star, b_star)
    return a_star[1:], b_star[1:]


def format_dyck_pair(d: DyckPair) -> str:
    return format_path(d.p1) + "\n" + format_path(d.p2) + "\n"


def parse_dyck_pair(text: str) -> DyckPair:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if len(lines) != 2:
        raise ParseError("a Dyck pair is two lines")
    return check_dyck_pair(DyckPair(*(parse_path(ln) for ln in lines)))
