"""2-orientations, separating decompositions, book embeddings and Schnyder woods.

Orientations are tuples indexed by edge id holding the head vertex of each
edge (``None`` for the uncolored outer edges of a triangulation).  Colors
are tuples of ``"red"``, ``"blue"`` and ``"green"``.
"""

from __future__ import annotations

from typing import NamedTuple

from .errors import (
    CycleDetected,
    InternalContradiction,
    InvalidOrientation,
    NotTwins,
    StraightPathCycle,
)
from .planemap import (
    BLACK,
    WHITE,
    PlaneMap,
    Quadrangulation,
    Triangulation,
    canonical_form,
    validate_quadrangulation,
)
from .trees import (
    Layout,
    TwinAlternatingPair,
    augment,
    layout,
    make_twin_alternating,
    strip_augmentation,
    tree_from_layout,
    tree_size,
)

RED, BLUE, GREEN = "red", "blue", "green"


class TwoOrientation(NamedTuple):
    base: Quadrangulation
    head: tuple


class SeparatingDecomposition(NamedTuple):
    base: Quadrangulation
    head: tuple
    color: tuple


class BookEmbedding(NamedTuple):
    spine: tuple  # vertices, s first and t last
    page_of: tuple  # per edge: "red-page" (below) or "blue-page" (above)


class ThreeOrientation(NamedTuple):
    base: Triangulation
    head: tuple


class SchnyderWood(NamedTuple):
    base: Triangulation
    head: tuple
    color: tuple


def is_out(m: PlaneMap, head, d: int) -> bool:
    """True iff dart ``d`` points along its edge's orientation."""
    return head[m.edge_of[d]] == m.head(d)


def out_darts(m: PlaneMap, head, v: int):
    return [d for d in m.rotations[v] if is_out(m, head, d)]


# ---------------------------------------------------------------------------
# 2-orientations


def validate_two_orientation(q: Quadrangulation, head) -> TwoOrientation:
    m = q.map
    head = tuple(head)
    if len(head) != m.n_edges:
        raise InvalidOrientation("need a head for every edge")
    for e, h in enumerate(head):
        if h not in m.edge_ends(e):
            raise InvalidOrientation(f"head of edge {e} is not one of its ends")
    for v in range(m.n_vertices):
        want = 0 if v in q.poles else 2
        if len(out_darts(m, head, v)) != want:
            raise InvalidOrientation(f"vertex {v} has outdegree {len(out_darts(m, head, v))}, need {want}")
    return TwoOrientation(q, head)


def _turn(m: PlaneMap, head, colors, d: int) -> int:
    """Next dart of the left-right path after ``d``: left at black vertices, right at white."""
    w = m.head(d)
    back = m.opp[d]
    step = m.next_cw if colors[w] == BLACK else m.next_ccw
    e = step[back]
    while not is_out(m, head, e):
        e = step[e]
    return e


def left_right_path(o: TwoOrientation, d: int):
    """Darts of the left-right path starting with dart ``d``."""
    q = o.base
    m = q.map
    path = [d]
    while m.head(path[-1]) not in q.poles:
        path.append(_turn(m, o.head, q.colors, path[-1]))
        if len(path) > m.n_edges:
            raise CycleDetected("left-right path closes a cycle")
    return path


def color_two_orientation(o: TwoOrientation) -> SeparatingDecomposition:
    """Color each edge by the pole its left-right path reaches (s red, t blue)."""
    q = o.base
    m = q.map
    color = [None] * m.n_edges
    s, _ = q.poles
    for v in range(m.n_vertices):
        if v in q.poles:
            continue
        paths = [left_right_path(o, d) for d in out_darts(m, o.head, v)]
        seen = [{m.head(x) for x in p} for p in paths]
        if seen[0] & seen[1]:
            raise InternalContradiction(f"left-right paths from vertex {v} meet again")
        for p in paths:
            c = RED if m.head(p[-1]) == s else BLUE
            for x in p:
                if color[m.edge_of[x]] not in (None, c):
                    raise InternalContradiction("edge reached by paths to both poles")
                color[m.edge_of[x]] = c
    sd = SeparatingDecomposition(q, o.head, tuple(color))
    validate_separating(sd)
    return sd


def forget_colors(sd: SeparatingDecomposition) -> TwoOrientation:
    return TwoOrientation(sd.base, sd.head)


def _cyclic_intervals(labels):
    """Number of maximal runs of equal labels in a cyclic sequence."""
    n = len(labels)
    return sum(1 for i in range(n) if labels[i] != labels[i - 1]) or 1


def validate_separating(sd: SeparatingDecomposition) -> SeparatingDecomposition:
    q, head, color = sd
    m = q.map
    s, t = q.poles
    if len(color) != m.n_edges or set(color) - {RED, BLUE}:
        raise InvalidOrientation("every edge needs color red or blue")
    validate_two_orientation(q, head)
    for pole, c in ((s, RED), (t, BLUE)):
        if any(color[m.edge_of[d]] != c for d in m.rotations[pole]):
            raise InvalidOrientation(f"all edges at pole {pole} must be {c}")
    for v in range(m.n_vertices):
        if v in q.poles:
            continue
        rot = m.rotations[v]
        cols = [color[m.edge_of[d]] for d in rot]
        if _cyclic_intervals(cols) != 2:
            raise InvalidOrientation(f"colors at vertex {v} do not form two intervals")
        k = len(rot)
        for i, d in enumerate(rot):
            # a run starts at i when the clockwise predecessor has the other color
            first = cols[i - 1] != cols[i]
            last = cols[(i + 1) % k] != cols[i]
            want_out = first if q.colors[v] == WHITE else last
            if is_out(m, head, d) != want_out:
                raise InvalidOrientation(f"vertex {v} violates the {q.colors[v]} orientation rule")
    for c, root in ((RED, s), (BLUE, t)):
        for v in range(m.n_vertices):
            if v in q.poles:
                continue
            x, steps = v, 0
            while x != root:
                nxt = [d for d in out_darts(m, head, x) if color[m.edge_of[d]] == c]
                if len(nxt) != 1 or steps > m.n_vertices:
                    raise InvalidOrientation(f"{c} edges do not form a tree towards {root}")
                x = m.head(nxt[0])
                steps += 1
    return sd


# ---------------------------------------------------------------------------
# equatorial line and book embedding


def outer_path_ends(q: Quadrangulation):
    """The two non-pole outer vertices ``(first, last)``.

    The outer face reads ``s, last, t, first`` along its counterclockwise orbit.
    """
    m = q.map
    s, t = q.poles
    orbit = m.faces[m.outer_face]
    verts = [m.vertex_of[d] for d in orbit]
    i = verts.index(s)
    verts = verts[i:] + verts[:i]
    if len(verts) != 4 or verts[2] != t:
        raise InvalidOrientation("outer face must be s, x, t, y")
    return verts[3], verts[1]


def equatorial_line(sd: SeparatingDecomposition):
    """Alternating sequence ``v0, f0, v1, f1, ..., v_{n-1}`` of vertices and inner faces."""
    q, _, color = sd
    m = q.map
    adj: dict = {}
    for f, orbit in enumerate(m.faces):
        if f == m.outer_face:
            continue
        corners = [m.vertex_of[d] for d in orbit if color[m.edge_of[d]] != color[m.edge_of[m.next_cw[d]]]]
        if len(corners) != 2:
            raise InvalidOrientation(f"face {f} has {len(corners)} bicolored angles")
        for a, b in (corners, corners[::-1]):
            adj.setdefault(a, []).append((f, b))
    first, last = outer_path_ends(q)
    line = [first]
    prev_face = None
    v = first
    while v != last:
        nxt = [fb for fb in adj.get(v, ()) if fb[0] != prev_face]
        if len(nxt) != 1:
            raise CycleDetected(f"equatorial line branches or stops at vertex {v}")
        prev_face, v = nxt[0]
        line += [prev_face, v]
        if len(line) > 2 * m.n_vertices:
            raise CycleDetected("equatorial line does not terminate")
    inner = [v for v in range(m.n_vertices) if v not in q.poles]
    if sorted(line[0::2]) != inner or sorted(line[1::2]) != sorted(set(range(m.n_faces)) - {m.outer_face}):
        raise CycleDetected("equatorial line misses vertices or faces")
    return tuple(line)


def book_embedding(sd: SeparatingDecomposition) -> BookEmbedding:
    q, _, color = sd
    s, t = q.poles
    spine = (s,) + equatorial_line(sd)[0::2] + (t,)
    emb = BookEmbedding(spine, tuple(f"{c}-page" for c in color))
    check_book_embedding(q.map, emb)
    return emb


def check_book_embedding(m: PlaneMap, emb: BookEmbedding) -> None:
    pos = {v: i for i, v in enumerate(emb.spine)}
    for page in ("red-page", "blue-page"):
        arcs = [tuple(sorted(pos[x] for x in m.edge_ends(e))) for e in range(m.n_edges) if emb.page_of[e] == page]
        for a, b in arcs:
            for c, d in arcs:
                if a < c < b < d:
                    raise InvalidOrientation(f"arcs cross on the {page}")


# ---------------------------------------------------------------------------
# twin-alternating pairs <-> 2-orientations


def twin_alt_to_separating(p: TwinAlternatingPair) -> SeparatingDecomposition:
    """Glue the sw layout of S+ (red, below) and the ne layout of T+ (blue, above)."""
    s_tree, t_tree = make_twin_alternating(*p)
    n = tree_size(s_tree)
    red = layout(augment(s_tree), "sw")
    blue = layout(augment(t_tree), "ne")
    fp = red.fingerprint()
    colors = [BLACK] + [BLACK if fp[i] == "1" else WHITE for i in range(1, n + 1)] + [BLACK]
    below = [[] for _ in range(n + 2)]
    above = [[] for _ in range(n + 2)]
    edges = []  # (key, parent, child, color)
    for par, ch in red.edges:
        edges.append((("r", ch), par, ch, RED))
        below[par].append((ch, ("r", ch)))
        below[ch].append((par, ("r", ch)))
    for par, ch in blue.edges:
        par, ch = par + 1, ch + 1
        edges.append((("b", ch), par, ch, BLUE))
        above[par].append((ch, ("b", ch)))
        above[ch].append((par, ("b", ch)))
    rot = []
    for v in range(n + 2):
        b_right = sorted(x for x in below[v] if x[0] > v)
        b_left = sorted(x for x in below[v] if x[0] < v)
        a_left = sorted((x for x in above[v] if x[0] < v), reverse=True)
        a_right = sorted((x for x in above[v] if x[0] > v), reverse=True)
        rot.append([k for _, k in b_right + b_left + a_left + a_right])
    m = PlaneMap.from_rotations(rot, (0, ("r", n)))
    q = validate_quadrangulation(m, colors, (0, n + 1))
    key_edge = {}
    for v, keys in enumerate(rot):
        for d, key in zip(m.rotations[v], keys):
            key_edge[key] = m.edge_of[d]
    head = [None] * m.n_edges
    color = [None] * m.n_edges
    for key, par, _, c in edges:
        head[key_edge[key]] = par
        color[key_edge[key]] = c
    return validate_separating(SeparatingDecomposition(q, tuple(head), tuple(color)))


def twin_alt_to_two_orientation(p: TwinAlternatingPair) -> TwoOrientation:
    return forget_colors(twin_alt_to_separating(p))


def separating_to_twin_alt(sd: SeparatingDecomposition) -> TwinAlternatingPair:
    q, head, color = validate_separating(sd)
    m = q.map
    emb = book_embedding(sd)
    pos = {v: i for i, v in enumerate(emb.spine)}
    n = len(emb.spine) - 2
    red, blue = [], []
    for e in range(m.n_edges):
        a, b = m.edge_ends(e)
        par = head[e]
        ch = b if par == a else a
        (red if color[e] == RED else blue).append((pos[par], pos[ch]))
    s_plus = tree_from_layout(Layout(n + 1, 0, tuple(sorted(red))), "sw")
    t_plus = tree_from_layout(Layout(n + 1, n, tuple(sorted((x - 1, y - 1) for x, y in blue))), "ne")
    try:
        return make_twin_alternating(strip_augmentation(s_plus), strip_augmentation(t_plus))
    except NotTwins as exc:
        raise InternalContradiction(f"decomposition gave non-twin trees: {exc}") from None


def two_orientation_to_twin_alt(o: TwoOrientation) -> TwinAlternatingPair:
    return separating_to_twin_alt(color_two_orientation(o))


# ---------------------------------------------------------------------------
# pole symmetry


def pole_invert(o: TwoOrientation) -> TwoOrientation:
    q = o.base
    s, t = q.poles
    return TwoOrientation(Quadrangulation(q.map, q.colors, (t, s)), o.head)


def _dart_labels(o: TwoOrientation):
    q = o.base
    m = q.map
    marks = {q.poles[0]: "s", q.poles[1]: "t"}
    return tuple((is_out(m, o.head, d), marks.get(m.vertex_of[d], "")) for d in range(m.n_darts))


def orientation_form(o: TwoOrientation) -> bytes:
    return canonical_form(o.base.map, _dart_labels(o))


def is_pole_symmetric(o: TwoOrientation) -> bool:
    """Isomorphic to its pole inversion (outer face to outer face)."""
    return orientation_form(o) == orientation_form(pole_invert(o))


def is_pole_symmetric_by_trees(o: TwoOrientation) -> bool:
    """Equivalent test: red and blue trees are equal as rooted ordered trees."""
    s_tree, t_tree = two_orientation_to_twin_alt(o)
    return s_tree == t_tree


# ---------------------------------------------------------------------------
# 3-orientations and Schnyder woods


def _outer_edges(t: Triangulation):
    m = t.map
    return {m.edge_of[d] for d in m.faces[m.outer_face]}


def validate_three_orientation(t: Triangulation, head) -> ThreeOrientation:
    m = t.map
    head = tuple(head)
    outer = _outer_edges(t)
    if len(head) != m.n_edges:
        raise InvalidOrientation("need an entry for every edge")
    for e, h in enumerate(head):
        if (e in outer) != (h is None) or (h is not None and h not in m.edge_ends(e)):
            raise InvalidOrientation(f"edge {e}: outer edges have no head, inner edges one of their ends")
    for v in range(m.n_vertices):
        want = 0 if v in t.outer else 3
        got = len(out_darts(m, head, v))
        if got != want:
            raise InvalidOrientation(f"vertex {v} has outdegree {got}, need {want}")
    return ThreeOrientation(t, head)


def _straight(m: PlaneMap, head, d: int) -> int:
    """The middle outgoing dart at the head of ``d`` (second clockwise after the arrival)."""
    e = m.opp[d]
    outs = []
    while len(outs) < 2:
        e = m.next_cw[e]
        if is_out(m, head, e):
            outs.append(e)
    return outs[1]


def color_three_orientation(o: ThreeOrientation) -> SchnyderWood:
    """Color each edge by the special vertex its straight-path reaches."""
    t = o.base
    m = t.map
    names = dict(zip(t.outer, (RED, GREEN, BLUE)))
    color = [None] * m.n_edges
    for e in range(m.n_edges):
        if o.head[e] is None or color[e] is not None:
            continue
        d = next(x for x in m.edge_darts[e] if is_out(m, o.head, x))
        path = [d]
        while m.head(path[-1]) not in names:
            path.append(_straight(m, o.head, path[-1]))
            if len(path) > m.n_edges:
                raise StraightPathCycle("straight-path closes a cycle")
        c = names[m.head(path[-1])]
        for x in path:
            color[m.edge_of[x]] = c
    sw = SchnyderWood(t, o.head, tuple(color))
    try:
        return validate_schnyder(sw)
    except InvalidOrientation as exc:
        raise InternalContradiction(f"straight-path coloring is not a Schnyder wood: {exc}") from None


def forget_schnyder(sw: SchnyderWood) -> ThreeOrientation:
    return ThreeOrientation(sw.base, sw.head)


_THIRD = {(RED, GREEN): BLUE, (GREEN, BLUE): RED, (BLUE, RED): GREEN}


def validate_schnyder(sw: SchnyderWood) -> SchnyderWood:
    t, head, color = sw
    m = t.map
    validate_three_orientation(t, head)
    for a, c in zip(t.outer, (RED, GREEN, BLUE)):
        for d in m.rotations[a]:
            e = m.edge_of[d]
            if head[e] is not None and color[e] != c:
                raise InvalidOrientation(f"inner edges at {a} must be {c}")
    for v in range(m.n_vertices):
        if v in t.outer:
            continue
        rot = list(m.rotations[v])
        outs = [i for i, d in enumerate(rot) if is_out(m, head, d)]
        ocols = [color[m.edge_of[rot[i]]] for i in outs]
        j = ocols.index(RED) if RED in ocols else None
        if j is None or ocols[j:] + ocols[:j] != [RED, GREEN, BLUE]:
            raise InvalidOrientation(f"outgoing edges at {v} are not red, green, blue clockwise")
        for a in range(3):
            i0, i1 = outs[a], outs[(a + 1) % 3]
            want = _THIRD[(ocols[a], ocols[(a + 1) % 3])]
            i = (i0 + 1) % len(rot)
            while i != i1:
                if color[m.edge_of[rot[i]]] != want:
                    raise InvalidOrientation(f"incoming edge at {v} between two outgoing ones must be {want}")
                i = (i + 1) % len(rot)
    for c, root in zip((RED, GREEN, BLUE), t.outer):
        for v in range(m.n_vertices):
            if v in t.outer:
                continue
            x, steps = v, 0
            while x != root:
                nxt = [d for d in out_darts(m, head, x) if color[m.edge_of[d]] == c]
                if len(nxt) != 1 or steps > m.n_vertices:
                    raise InvalidOrientation(f"{c} edges do not form a tree towards {root}")
                x = m.head(nxt[0])
                steps += 1
    return sw
