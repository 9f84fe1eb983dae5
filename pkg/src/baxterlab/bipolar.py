"""Plane bipolar orientations, angular maps, (★)-orientations and Schnyder woods.

Orientations are tuples indexed by edge id holding the head vertex.  Picture
a bipolar orientation drawn upward, s at the bottom, t at the top and the
root edge on the far left.  At a vertex v the outgoing edges form one
clockwise interval.  The corner where the clockwise order passes from
outgoing to incoming lies in the face east of v, and the corner passing
from incoming to outgoing lies in the face west of v.  A bounded face is
bounded by a left path and a right path from its source to its sink.  Its
orbit runs up the left path and back down the right path.
"""

from __future__ import annotations

from typing import NamedTuple

from .errors import (
    CyclicOrientation,
    FactFViolated,
    FactVViolated,
    InternalContradiction,
    InvalidMap,
    InvalidOrientation,
    StarViolated,
    WrongPoles,
)
from .orientations import (
    BLUE,
    GREEN,
    RED,
    SchnyderWood,
    SeparatingDecomposition,
    color_two_orientation,
    equatorial_line,
    is_out,
    out_darts,
    separating_to_twin_alt,
    twin_alt_to_separating,
    validate_schnyder,
    validate_separating,
    validate_two_orientation,
)
from .paths import dyck_pair_to_schnyder_prints, schnyder_prints_to_dyck_pair
from .planemap import (
    BLACK,
    WHITE,
    CompletionGraph,
    PlaneMap,
    Quadrangulation,
    RootedMap,
    canonical_form,
    special_completion,
    validate_quadrangulation,
    validate_rooted,
    validate_triangulation,
)
from .trees import (
    TwinBinaryPair,
    bodyprint,
    reduced_bodyprint,
    reduced_fingerprint,
    tree_from_prints,
    twin_alt_from_twin_binary,
    twin_binary_from_twin_alt,
)


class PlaneBipolarOrientation(NamedTuple):
    base: RootedMap
    head: tuple


class StarBipolar(NamedTuple):
    bipolar: PlaneBipolarOrientation


# ---------------------------------------------------------------------------
# validation


def _switches(flags) -> int:
    n = len(flags)
    return sum(1 for i in range(n) if flags[i] != flags[i - 1])


def validate_bipolar(g: RootedMap, head) -> PlaneBipolarOrientation:
    m = g.map
    head = tuple(head)
    if len(head) != m.n_edges or any(h not in m.edge_ends(e) for e, h in enumerate(head)):
        raise InvalidOrientation("need a head among its ends for every edge")
    validate_rooted(m, g.root)
    s, t = g.s, g.t
    if head[m.edge_of[g.root]] != t:
        raise WrongPoles("root edge must point from s to t")
    indeg = [0] * m.n_vertices
    for e, h in enumerate(head):
        indeg[h] += 1
    for v in range(m.n_vertices):
        outs = len(out_darts(m, head, v))
        if (indeg[v] == 0) != (v == s) or (outs == 0) != (v == t):
            raise WrongPoles(f"s={s} must be the only source and t={t} the only sink (vertex {v})")
    # Kahn's algorithm
    order, todo, deg = [], [s], indeg[:]
    while todo:
        v = todo.pop()
        order.append(v)
        for d in out_darts(m, head, v):
            w = m.head(d)
            deg[w] -= 1
            if deg[w] == 0:
                todo.append(w)
    if len(order) != m.n_vertices:
        raise CyclicOrientation("orientation has a directed cycle")
    for v in range(m.n_vertices):
        if v in (s, t):
            continue
        if _switches([is_out(m, head, d) for d in m.rotations[v]]) != 2:
            raise FactVViolated(f"edges at vertex {v} do not form one in- and one out-interval")
    for f, orbit in enumerate(m.faces):
        if _switches([is_out(m, head, d) for d in orbit]) != 2:
            raise FactFViolated(f"face {f} does not have exactly one source and one sink")
    return PlaneBipolarOrientation(g, head)


def bipolar_form(b: PlaneBipolarOrientation) -> bytes:
    """Isomorphism invariant of the oriented rooted map."""
    m = b.base.map
    root_e = m.edge_of[b.base.root]
    labels = tuple((is_out(m, b.head, d), m.edge_of[d] == root_e) for d in range(m.n_darts))
    return canonical_form(_rerooted(m, m.opp[b.base.root]), labels)


def _rerooted(m: PlaneMap, outer: int) -> PlaneMap:
    return PlaneMap(m.rotations, m.opp, outer)


def separating_form(sd: SeparatingDecomposition) -> bytes:
    q = sd.base
    m = q.map
    marks = {q.poles[0]: "s", q.poles[1]: "t"}
    labels = tuple(
        (is_out(m, sd.head, d), sd.color[m.edge_of[d]], marks.get(m.vertex_of[d], "")) for d in range(m.n_darts)
    )
    return canonical_form(m, labels)


def schnyder_form(sw: SchnyderWood) -> bytes:
    t = sw.base
    m = t.map
    marks = dict(zip(t.outer, ("a1", "a2", "a3")))
    labels = tuple(
        (sw.head[m.edge_of[d]] == m.head(d), sw.color[m.edge_of[d]], marks.get(m.vertex_of[d], ""))
        for d in range(m.n_darts)
    )
    return canonical_form(m, labels)


# ---------------------------------------------------------------------------
# angular map


class AngularMap(NamedTuple):
    quad: Quadrangulation
    edge_of_face: dict  # quadrangulation face -> edge of G


def angular_map(g: RootedMap) -> AngularMap:
    """Black vertices are the vertices of G (same ids), white vertex V+f is face f.

    The quadrangulation edge for the corner between ``d`` and ``next_cw(d)`` is
    keyed by ``d`` at both ends.
    """
    m = g.map
    nv = m.n_vertices
    rot = [[d for d in m.rotations[v]] for v in range(nv)]
    rot += [list(orbit) for orbit in m.faces]
    colors = [BLACK] * nv + [WHITE] * m.n_faces
    # the face of Q right of corner d contains the G-dart next_cw(d)
    outer_key = m.next_ccw[g.root]
    qm = PlaneMap.from_rotations(rot, (g.s, outer_key))
    q = validate_quadrangulation(qm, colors, (g.s, g.t))
    at_black = {}
    for v in range(nv):
        for qd, d in zip(qm.rotations[v], rot[v]):
            at_black[qd] = d
    edge_of_face = {}
    for qd, d in at_black.items():
        edge_of_face[qm.face_of[qd]] = m.edge_of[m.next_cw[d]]
    return AngularMap(q, edge_of_face)


def bipolar_to_separating(b: PlaneBipolarOrientation) -> SeparatingDecomposition:
    """Facts V and F single out two outgoing angular edges per vertex and per face."""
    g, head = b
    m = g.map
    nv = m.n_vertices
    am = angular_map(g)
    q = am.quad
    qm = q.map
    out = set()
    for v in range(nv):
        if v in (g.s, g.t):
            continue
        for qd, d in zip(qm.rotations[v], m.rotations[v]):
            if is_out(m, head, d) != is_out(m, head, m.next_cw[d]):
                out.add(qd)
    for f, orbit in enumerate(m.faces):
        for qd, d in zip(qm.rotations[nv + f], orbit):
            # corner at tail(d) between the face darts opp(prev) and d
            prev = m.next_cw[d]
            if is_out(m, head, d) == is_out(m, head, prev):
                out.add(qd)
    qhead = [None] * qm.n_edges
    for qd in out:
        e = qm.edge_of[qd]
        if qhead[e] is not None:
            raise InternalContradiction("angular edge distinguished twice")
        qhead[e] = qm.head(qd)
    if None in qhead:
        raise InternalContradiction("angular edge not distinguished")
    o = validate_two_orientation(q, qhead)
    return color_two_orientation(o)


def separating_to_bipolar(sd: SeparatingDecomposition) -> PlaneBipolarOrientation:
    """Black vertices become vertices, quadrangles become edges, white vertices faces."""
    validate_separating(sd)
    q, qhead, color = sd
    qm = q.map
    blacks = [v for v in range(qm.n_vertices) if q.colors[v] == BLACK]
    new_id = {v: i for i, v in enumerate(blacks)}
    s, t = q.poles
    rot = [[qm.face_of[qd] for qd in qm.rotations[v]] for v in blacks]
    root_key = qm.outer_face
    gm = PlaneMap.from_rotations(rot, (new_id[t], root_key))
    root = gm.opp[gm.outer]
    g = validate_rooted(gm, root)
    # per black vertex: the G-darts clockwise from the blue to the red out-edge are outgoing
    head = [None] * gm.n_edges
    for v in blacks:
        gv = new_id[v]
        qds = qm.rotations[v]
        if v == s or v == t:
            for gd in gm.rotations[gv]:
                e = gm.edge_of[gd]
                head[e] = gm.head(gd) if v == s else gv
            continue
        k = len(qds)
        outs = [i for i, qd in enumerate(qds) if qhead[qm.edge_of[qd]] == qm.head(qd)]
        red = next(i for i in outs if color[qm.edge_of[qds[i]]] == RED)
        blue = next(i for i in outs if color[qm.edge_of[qds[i]]] == BLUE)
        i = blue
        while i != red:
            gd = gm.rotations[gv][i]
            head[gm.edge_of[gd]] = gm.head(gd)
            i = (i + 1) % k
    for e in range(gm.n_edges):
        if head[e] is None:
            # edge between two vertices that both see it as incoming: impossible
            raise InternalContradiction(f"edge {e} got no orientation")
    try:
        return validate_bipolar(g, head)
    except InvalidOrientation as exc:
        raise InternalContradiction(f"recovered orientation is not bipolar: {exc}") from None


# ---------------------------------------------------------------------------
# Hamiltonian cycle of the special completion graph


def hamiltonian_cycle(g: RootedMap, b: PlaneBipolarOrientation = None):
    """Deform the equatorial line into the completion graph and close it at the root edge.

    Returns completion labels ``("v", v)``, ``("f", f)`` and ``("e", e)``.
    """
    if b is None:
        b = bipolar_orientation_of(g)
    m = g.map
    nv = m.n_vertices
    am = angular_map(g)
    sd = bipolar_to_separating(b)
    line = equatorial_line(sd)
    cycle = []
    for i, x in enumerate(line):
        if i % 2 == 0:
            cycle.append(("v", x) if x < nv else ("f", x - nv))
        else:
            cycle.append(("e", am.edge_of_face[x]))
    cycle.append(("e", m.edge_of[g.root]))
    return tuple(cycle)


def validate_hamiltonian(cg: CompletionGraph, cycle) -> None:
    labels = list(cycle)
    if sorted(labels) != sorted(cg.labels) or len(set(labels)) != len(labels):
        raise InvalidOrientation("cycle must visit every completion vertex exactly once")
    m = cg.map
    idx = {lab: i for i, lab in enumerate(cg.labels)}
    for a, b in zip(labels, labels[1:] + labels[:1]):
        if idx[b] not in m.neighbors(idx[a]):
            raise InvalidOrientation(f"{a} and {b} are not adjacent")


def bipolar_orientation_of(g: RootedMap) -> PlaneBipolarOrientation:
    """Some bipolar orientation via an s-t numbering (depth-first, dense graphs are tiny)."""
    m = g.map
    s, t = g.s, g.t
    n = m.n_vertices
    # brute force over topological orders built greedily: add vertices whose
    # already-placed neighbors leave the rest connected to t
    order = [s]
    placed = {s}

    def grow():
        if len(order) == n - 1:
            order.append(t)
            return True
        for v in range(n):
            if v in placed or v == t:
                continue
            if not any(u in placed for u in m.neighbors(v)):
                continue
            rest = set(range(n)) - placed - {v}
            if not _connected(m, rest) or not all(any(u in rest for u in m.neighbors(w)) for w in [v]):
                continue
            order.append(v)
            placed.add(v)
            if grow():
                return True
            order.pop()
            placed.discard(v)
        return False

    if not grow():
        raise InvalidMap("rooted map admits no bipolar orientation")
    pos = {v: i for i, v in enumerate(order)}
    head = []
    for e in range(m.n_edges):
        a, c = m.edge_ends(e)
        head.append(c if pos[a] < pos[c] else a)
    return validate_bipolar(g, head)


def _connected(m: PlaneMap, verts) -> bool:
    verts = set(verts)
    if not verts:
        return True
    start = next(iter(verts))
    seen = {start}
    todo = [start]
    while todo:
        v = todo.pop()
        for u in m.neighbors(v):
            if u in verts and u not in seen:
                seen.add(u)
                todo.append(u)
    return seen == verts


# ---------------------------------------------------------------------------
# Schnyder woods and (★)-bipolar orientations


def _face_sides(m: PlaneMap, head, orbit):
    """Split a face orbit into its left path (upward) and right path (downward)."""
    fw = [is_out(m, head, d) for d in orbit]
    k = len(orbit)
    start = next(i for i in range(k) if fw[i] and not fw[i - 1])
    rolled = orbit[start:] + orbit[:start]
    fw = fw[start:] + fw[:start]
    split = fw.index(False)
    return list(rolled[:split]), list(rolled[split:])


def validate_star(b: PlaneBipolarOrientation) -> StarBipolar:
    g, head = b
    m = g.map
    for f, orbit in enumerate(m.faces):
        if f == m.outer_face:
            continue
        _, right = _face_sides(m, head, orbit)
        if len(right) != 2:
            raise StarViolated(f"right side of face {f} has length {len(right)}")
    return StarBipolar(b)


def schnyder_to_star_bipolar(sw: SchnyderWood) -> StarBipolar:
    """Delete the green tree and a2, reverse the blue edges, root at a3 -> a1."""
    validate_schnyder(sw)
    t, head, color = sw
    m = t.map
    a1, a2, a3 = t.outer
    keep = [v for v in range(m.n_vertices) if v != a2]
    new_id = {v: i for i, v in enumerate(keep)}
    rot = []
    for v in keep:
        rot.append([m.edge_of[d] for d in m.rotations[v] if color[m.edge_of[d]] != GREEN and m.head(d) != a2])
    outer_d = next(d for d in m.rotations[a1] if m.head(d) == a3)
    gm = PlaneMap.from_rotations(rot, (new_id[a1], m.edge_of[outer_d]))
    root = gm.opp[gm.outer]
    g = RootedMap(gm, root)
    ghead = [None] * gm.n_edges
    for v, keys in zip(keep, rot):
        for gd, e in zip(gm.rotations[new_id[v]], keys):
            if head[e] is None:  # the outer edge a3 a1
                h = a1
            elif color[e] == RED:
                h = head[e]
            else:
                x, y = m.edge_ends(e)
                h = x if head[e] == y else y
            ghead[gm.edge_of[gd]] = new_id[h]
    try:
        b = validate_bipolar(g, ghead)
        return validate_star(b)
    except InvalidOrientation as exc:
        raise InternalContradiction(f"Schnyder wood gave no (★)-orientation: {exc}") from None


def star_bipolar_to_schnyder(sb: StarBipolar) -> SchnyderWood:
    """Re-triangulate every bounded face by a green fan and add a2 beyond the right border."""
    b = sb.bipolar if isinstance(sb, StarBipolar) else sb
    validate_star(validate_bipolar(*b))
    g, head = b
    m = g.map
    s, t = g.s, g.t
    a2 = m.n_vertices
    insert_after: dict = {}  # dart -> list of new keys placed clockwise after it
    green_to: dict = {}
    for f, orbit in enumerate(m.faces):
        if f == m.outer_face:
            continue
        left, right = _face_sides(m, head, orbit)
        tip = m.head(right[0])
        ws = [m.head(d) for d in left[:-1]]
        for w, d in zip(ws, left[1:]):
            insert_after.setdefault(d, []).append(("g", w))
            green_to[w] = tip
        insert_after.setdefault(right[1], []).extend(("g", w) for w in ws)
    # outer face: the right border runs up from s to t
    border = []
    d = next(x for x in m.rotations[s] if m.face_of[x] == m.outer_face)
    while True:
        border.append(d)
        if m.head(d) == t:
            break
        d = m.phi(d)
        if len(border) > m.n_edges:
            raise InternalContradiction("right border does not reach t")
    insert_after.setdefault(border[0], []).append(("o", s))
    for d in border[1:]:
        w = m.vertex_of[d]
        insert_after.setdefault(d, []).append(("g", w))
        green_to[w] = a2
    insert_after.setdefault(m.opp[g.root], []).append(("o", t))
    rot = []
    for v in range(m.n_vertices):
        keys = []
        for d in m.rotations[v]:
            keys.append(("m", m.edge_of[d]))
            keys.extend(insert_after.get(d, ()))
        rot.append(keys)
    rot.append([("o", s)] + [("g", m.vertex_of[d]) for d in border[1:]] + [("o", t)])
    tm = PlaneMap.from_rotations(rot, (t, ("m", m.edge_of[g.root])))
    tri = validate_triangulation(tm, (t, a2, s))
    key_vertex = {}
    thead = [None] * tm.n_edges
    tcolor = [None] * tm.n_edges
    for v, keys in enumerate(rot):
        for td, key in zip(tm.rotations[v], keys):
            key_vertex.setdefault(key, []).append(td)
    for key, (td, _) in key_vertex.items():
        e = tm.edge_of[td]
        kind, x = key
        if kind == "o":
            continue
        if kind == "g":
            thead[e] = green_to[x]
            tcolor[e] = GREEN
            continue
        if x == m.edge_of[g.root]:
            continue
        u, w = m.edge_ends(x)
        hb = head[x]
        tail = u if hb == w else w
        col = _edge_color(m, head, g, x, tail)
        tcolor[e] = col
        thead[e] = hb if col == RED else tail
    sw = SchnyderWood(tri, tuple(thead), tuple(tcolor))
    try:
        return validate_schnyder(sw)
    except InvalidOrientation as exc:
        raise StarViolated(f"no Schnyder wood for this orientation: {exc}") from None


def _edge_color(m, head, g, e, tail):
    """Red iff the edge is the first clockwise outgoing edge at its tail (blue at s)."""
    if tail == g.s:
        return BLUE
    rot = m.rotations[tail]
    k = len(rot)
    flags = [is_out(m, head, d) for d in rot]
    first = next(i for i in range(k) if flags[i] and not flags[i - 1])
    col = RED if m.edge_of[rot[first]] == e else BLUE
    head_v = head[e]
    if head_v != g.t:
        hr = m.rotations[head_v]
        hk = len(hr)
        hflags = [is_out(m, head, d) for d in hr]
        last_in = next(i for i in range(hk) if not hflags[i] and hflags[(i + 1) % hk])
        want = BLUE if m.edge_of[hr[last_in]] == e else RED
        if want != col:
            raise StarViolated(f"edge {e} gets conflicting colors at its two ends")
    elif col != RED:
        raise StarViolated(f"edge {e} into t must be red")
    return col


# ---------------------------------------------------------------------------
# Schnyder woods <-> Dyck pairs


def schnyder_to_twin_pair(sw: SchnyderWood) -> TwinBinaryPair:
    sb = schnyder_to_star_bipolar(sw)
    sd = bipolar_to_separating(sb.bipolar)
    return twin_binary_from_twin_alt(separating_to_twin_alt(sd))


def schnyder_to_dyck(sw: SchnyderWood):
    """alpha* = 1 + fingerprint of the blue tree, beta* = 1 + reversed bodyprint of the red tree."""
    red, blue = schnyder_to_twin_pair(sw)
    check_fact2(blue)
    return schnyder_prints_to_dyck_pair(reduced_fingerprint(blue), reduced_bodyprint(red)[::-1])


_FLIP = str.maketrans("01", "10")


def check_fact2(blue) -> None:
    """The blue bodyprint is the complement of 1 + reduced fingerprint."""
    if bodyprint(blue).translate(_FLIP) != "1" + reduced_fingerprint(blue):
        raise InternalContradiction("blue bodyprint is not determined by the fingerprint")


def dyck_to_schnyder(d) -> SchnyderWood:
    alpha_hat, beta_hat_r = dyck_pair_to_schnyder_prints(d)
    blue_body = ("1" + alpha_hat).translate(_FLIP)
    blue = tree_from_prints(blue_body[:-1], alpha_hat)
    red = tree_from_prints(beta_hat_r[::-1], alpha_hat[::-1])
    sd = twin_alt_to_separating(twin_alt_from_twin_binary(TwinBinaryPair(red, blue)))
    b = separating_to_bipolar(sd)
    return star_bipolar_to_schnyder(validate_star(b))
