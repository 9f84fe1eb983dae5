"""Brute-force ground truth at small sizes.

Nothing here calls the bijections.  Predicates are written straight from the
definitions so they can certify the constructive code.
"""

from __future__ import annotations

from itertools import combinations, permutations

from .errors import BoundExceeded, UnknownFamily
from .orientations import ThreeOrientation, TwoOrientation
from .paths import DYCK_STARTS, TRIPLE_STARTS, LatticePath, PathTriple, DyckPair, triple_ends
from .planemap import BLACK, WHITE, PlaneMap, Quadrangulation, Triangulation

BOUNDS = {
    "permutation": 9,
    "tree_leaves": 12,
    "pair_leaves": 8,
    "triple_kl": 10,
    "dyck_n": 9,
    "edges": 24,
}


def _check_bound(name: str, value: int, bound=None):
    limit = BOUNDS[name] if bound is None else bound
    if value > limit:
        raise BoundExceeded(f"{name} = {value} exceeds the oracle bound {limit}")


# ---------------------------------------------------------------------------
# permutations


def baxter_by_definition(p) -> bool:
    n = len(p)
    for i in range(n):
        for j in range(i + 1, n - 1):
            for k in range(j + 2, n):
                a, b, c, d = p[i], p[j], p[j + 1], p[k]
                if c < a < d < b or c > a > d > b:
                    return False
    return True


def alternating_by_definition(p) -> bool:
    return all(p[i] < p[i + 1] if i % 2 == 0 else p[i] > p[i + 1] for i in range(len(p) - 1))


def symmetric_by_definition(p) -> bool:
    n = len(p)
    return all(p[i] + p[n - 1 - i] == n + 1 for i in range(n))


_PERM_FILTERS = {
    "all": lambda p: True,
    "baxter": baxter_by_definition,
    "alternating-baxter": lambda p: alternating_by_definition(p) and baxter_by_definition(p),
    "symmetric-baxter": lambda p: symmetric_by_definition(p) and baxter_by_definition(p),
}


def enum_permutations(n: int, filter: str = "all", bound=None):
    """Permutations of 1..n in lexicographic order."""
    if filter not in _PERM_FILTERS:
        raise UnknownFamily(filter)
    _check_bound("permutation", n, bound)
    keep = _PERM_FILTERS[filter]
    for p in permutations(range(1, n + 1)):
        if keep(p):
            yield p


# ---------------------------------------------------------------------------
# trees


def _full_binary(n):
    if n == 1:
        yield ()
        return
    for k in range(1, n):
        for left in _full_binary(k):
            for right in _full_binary(n - k):
                yield (left, right)


def enum_full_binary_trees(n_leaves: int, bound=None):
    _check_bound("tree_leaves", n_leaves, bound)
    if n_leaves < 1:
        return
    yield from _full_binary(n_leaves)


def leaf_directions(t) -> str:
    """1 for each leaf that is a left child, 0 for a right child, left to right."""
    out = []

    def walk(node, bit):
        if node == ():
            out.append(bit)
        else:
            walk(node[0], "1")
            walk(node[1], "0")

    walk(t[0], "1")
    walk(t[1], "0")
    return "".join(out)


def enum_twin_binary_pairs(n_leaves: int, bound=None):
    """Filter the Cartesian product by: reduced fingerprints are reverses."""
    _check_bound("pair_leaves", n_leaves, bound)
    if n_leaves < 2:
        return
    trees = list(_full_binary(n_leaves))
    prints = [leaf_directions(t)[1:-1] for t in trees]
    for a, pa in zip(trees, prints):
        for b, pb in zip(trees, prints):
            if pa == pb[::-1]:
                yield (a, b)


# ---------------------------------------------------------------------------
# lattice paths


def _paths(start, end, below=False):
    """All upright step strings from start to end (optionally keeping y <= x)."""
    (x0, y0), (x1, y1) = start, end
    r, u = x1 - x0, y1 - y0
    if r < 0 or u < 0:
        return
    for rs in combinations(range(r + u), r):
        steps = ["U"] * (r + u)
        for i in rs:
            steps[i] = "R"
        p = LatticePath(start, "".join(steps))
        if below and any(y > x for x, y in p.points()):
            continue
        yield p


def enum_path_triples(k: int, l: int, symmetric_only: bool = False, bound=None):
    """Vertex-disjoint triples from (0,2),(1,1),(2,0) to (k,l+2),(k+1,l+1),(k+2,l)."""
    _check_bound("triple_kl", k + l, bound)
    ends = triple_ends(k, l)
    c2 = (k + 2, l + 2)
    firsts = list(_paths(TRIPLE_STARTS[0], ends[0]))
    seconds = list(_paths(TRIPLE_STARTS[1], ends[1]))
    thirds = list(_paths(TRIPLE_STARTS[2], ends[2]))
    pts3 = [set(p.points()) for p in thirds]
    for p1 in firsts:
        a = set(p1.points())
        for p2 in seconds:
            b = set(p2.points())
            if a & b:
                continue
            if symmetric_only and not _reflection_stable(p2, c2):
                continue
            for p3, c in zip(thirds, pts3):
                if c & (a | b):
                    continue
                if symmetric_only and _reflect(p1, c2) != p3:
                    continue
                yield PathTriple(p1, p2, p3)


def _reflect(p: LatticePath, c2):
    ex, ey = p.end
    return LatticePath((c2[0] - ex, c2[1] - ey), p.steps[::-1])


def _reflection_stable(p, c2) -> bool:
    return _reflect(p, c2) == p


def enum_dyck_pairs(n: int, bound=None):
    """Disjoint pairs (0,0)->(n,n) and (1,-1)->(n+1,n-1) staying in y <= x."""
    _check_bound("dyck_n", n, bound)
    if n < 1:
        return
    lower = list(_paths(DYCK_STARTS[1], (n + 1, n - 1), below=True))
    low_pts = [set(p.points()) for p in lower]
    for p1 in _paths(DYCK_STARTS[0], (n, n), below=True):
        a = set(p1.points())
        for p2, b in zip(lower, low_pts):
            if not a & b:
                yield DyckPair(p1, p2)


# ---------------------------------------------------------------------------
# orientations by backtracking


def _orientations(m: PlaneMap, edges, want):
    """Assign each listed edge a head so that vertex v gets outdegree want[v]."""
    _check_bound("edges", len(edges))
    ends = [m.edge_ends(e) for e in edges]
    undecided = [0] * m.n_vertices
    for a, b in ends:
        undecided[a] += 1
        undecided[b] += 1
    outdeg = [0] * m.n_vertices
    head = [None] * m.n_edges

    def rec(i):
        if i == len(edges):
            if outdeg == list(want):
                yield tuple(head)
            return
        a, b = ends[i]
        undecided[a] -= 1
        undecided[b] -= 1
        for tail, h in ((a, b), (b, a)):
            outdeg[tail] += 1
            ok = all(outdeg[v] <= want[v] <= outdeg[v] + undecided[v] for v in (a, b))
            if ok:
                head[edges[i]] = h
                yield from rec(i + 1)
                head[edges[i]] = None
            outdeg[tail] -= 1
        undecided[a] += 1
        undecided[b] += 1

    yield from rec(0)


def enum_two_orientations(q: Quadrangulation):
    m = q.map
    want = [0 if v in q.poles else 2 for v in range(m.n_vertices)]
    for head in _orientations(m, list(range(m.n_edges)), want):
        yield TwoOrientation(q, head)


def enum_three_orientations(t: Triangulation):
    m = t.map
    outer = {m.edge_of[d] for d in m.faces[m.outer_face]}
    inner = [e for e in range(m.n_edges) if e not in outer]
    want = [0 if v in t.outer else 3 for v in range(m.n_vertices)]
    for head in _orientations(m, inner, want):
        yield ThreeOrientation(t, head)


# ---------------------------------------------------------------------------
# hand-built catalog


def four_cycle() -> Quadrangulation:
    coords = [(0, 0), (1, 1), (2, 0), (1, -1)]
    m = PlaneMap.from_embedding(coords, [(0, 1), (1, 2), (2, 3), (3, 0)], (0, 3))
    return Quadrangulation(m, (BLACK, WHITE, BLACK, WHITE), (0, 2))


def cube() -> Quadrangulation:
    coords = [(0, 0), (4, 0), (4, 4), (0, 4), (1, 1), (3, 1), (3, 3), (1, 3)]
    edges = [(0, 1), (1, 2), (2, 3), (3, 0), (4, 5), (5, 6), (6, 7), (7, 4)] + [(i, i + 4) for i in range(4)]
    m = PlaneMap.from_embedding(coords, edges, (0, 1))
    colors = (BLACK, WHITE, BLACK, WHITE, WHITE, BLACK, WHITE, BLACK)
    return Quadrangulation(m, colors, (0, 2))


def k4() -> Triangulation:
    coords = [(0, 0), (2, 4), (4, 0), (2, 1)]
    edges = [(0, 1), (1, 2), (2, 0), (0, 3), (1, 3), (2, 3)]
    return Triangulation(PlaneMap.from_embedding(coords, edges, (0, 2)), (0, 1, 2))


def octahedron() -> Triangulation:
    coords = [(0, 0), (6, 10), (12, 0), (4, 2), (6, 6), (8, 2)]
    edges = [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (0, 5), (1, 3), (1, 4), (2, 4), (2, 5)]
    return Triangulation(PlaneMap.from_embedding(coords, edges, (0, 2)), (0, 1, 2))
