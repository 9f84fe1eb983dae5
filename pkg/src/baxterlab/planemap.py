"""Plane maps as rotation systems on darts.

Darts are dense integers ``0..D-1``.  ``opp`` pairs the two darts of an edge
and the rotation of a vertex lists its darts in clockwise order.  The face to
the right of a dart ``d`` is traced by ``phi(d) = next_ccw(opp(d))``; the
corner between ``d`` and ``next_cw(d)`` lies in that face, so every face
orbit runs clockwise around the face interior (the outer face is traversed
counterclockwise around the map).

Edges are numbered by increasing smaller dart.
"""

from __future__ import annotations

from collections import deque
from functools import cached_property
from typing import NamedTuple

from .errors import (
    InvalidMap,
    NonQuadFace,
    NotBipartite,
    NotSimple,
    NotTriangulation,
    ParseError,
    PolesInvalid,
)

BLACK, WHITE = "black", "white"


class PlaneMap:
    """An immutable connected plane map without loops.

    ``rotations[v]`` is the clockwise dart list of vertex ``v``; it also fixes
    the dart order used by the text format.
    """

    def __init__(self, rotations, opp, outer: int):
        self.rotations = tuple(tuple(r) for r in rotations)
        self.opp = tuple(opp)
        self.outer = outer
        D = len(self.opp)
        next_cw = [None] * D
        vertex_of = [None] * D
        for v, rot in enumerate(self.rotations):
            if not rot:
                raise InvalidMap(f"vertex {v} has no darts")
            for i, d in enumerate(rot):
                if not 0 <= d < D or vertex_of[d] is not None:
                    raise InvalidMap(f"dart {d} listed twice or out of range")
                vertex_of[d] = v
                next_cw[d] = rot[(i + 1) % len(rot)]
        if None in vertex_of:
            raise InvalidMap("some dart belongs to no vertex")
        for d, e in enumerate(self.opp):
            if not 0 <= e < D or e == d or self.opp[e] != d:
                raise InvalidMap("opp must be a fixed-point-free involution")
            if vertex_of[d] == vertex_of[e]:
                raise InvalidMap(f"loop at vertex {vertex_of[d]}")
        if not 0 <= outer < D:
            raise InvalidMap("outer dart out of range")
        self.next_cw = tuple(next_cw)
        self.vertex_of = tuple(vertex_of)
        self._check_connected()
        if self.n_vertices - self.n_edges + self.n_faces != 2:
            raise InvalidMap("Euler relation fails; rotation system is not planar")

    # -- construction helpers

    @classmethod
    def from_rotations(cls, rot, outer):
        """Build from per-vertex clockwise lists of edge keys.

        Every key occurs exactly twice, at the two ends of its edge.
        ``outer`` is ``(vertex, key)``: the dart whose right face is outer.
        """
        dart_of = {}
        rotations = []
        ends: dict = {}
        n = 0
        for v, keys in enumerate(rot):
            r = []
            for key in keys:
                dart_of[(v, key)] = n
                ends.setdefault(key, []).append(n)
                r.append(n)
                n += 1
            rotations.append(r)
        opp = [None] * n
        for key, ds in ends.items():
            if len(ds) != 2:
                raise InvalidMap(f"edge key {key!r} occurs {len(ds)} times")
            opp[ds[0]], opp[ds[1]] = ds[1], ds[0]
        try:
            o = dart_of[tuple(outer)]
        except KeyError:
            raise InvalidMap(f"outer dart {outer!r} not found") from None
        return cls(rotations, opp, o)

    def _check_connected(self):
        seen = {0}
        todo = [0]
        while todo:
            v = todo.pop()
            for d in self.rotations[v]:
                u = self.vertex_of[self.opp[d]]
                if u not in seen:
                    seen.add(u)
                    todo.append(u)
        if len(seen) != self.n_vertices:
            raise InvalidMap("map is not connected")

    # -- basic data

    @property
    def n_darts(self) -> int:
        return len(self.opp)

    @property
    def n_vertices(self) -> int:
        return len(self.rotations)

    @property
    def n_edges(self) -> int:
        return len(self.opp) // 2

    @property
    def n_faces(self) -> int:
        return len(self.faces)

    @cached_property
    def next_ccw(self):
        inv = [0] * self.n_darts
        for d, e in enumerate(self.next_cw):
            inv[e] = d
        return tuple(inv)

    def phi(self, d: int) -> int:
        return self.next_ccw[self.opp[d]]

    def head(self, d: int) -> int:
        return self.vertex_of[self.opp[d]]

    @cached_property
    def faces(self):
        """Face orbits, numbered by smallest dart."""
        out = []
        seen = [False] * self.n_darts
        for d in range(self.n_darts):
            if seen[d]:
                continue
            orbit = []
            e = d
            while not seen[e]:
                seen[e] = True
                orbit.append(e)
                e = self.phi(e)
            out.append(tuple(orbit))
        return tuple(out)

    @cached_property
    def face_of(self):
        f = [0] * self.n_darts
        for i, orbit in enumerate(self.faces):
            for d in orbit:
                f[d] = i
        return tuple(f)

    @property
    def outer_face(self) -> int:
        return self.face_of[self.outer]

    def face_vertices(self, f: int):
        return [self.vertex_of[d] for d in self.faces[f]]

    @cached_property
    def edge_of(self):
        ids = [None] * self.n_darts
        e = 0
        for d in range(self.n_darts):
            if ids[d] is None:
                ids[d] = ids[self.opp[d]] = e
                e += 1
        return tuple(ids)

    @cached_property
    def edge_darts(self):
        """``edge_darts[e]`` is ``(smaller dart, larger dart)``."""
        out = [None] * self.n_edges
        for d in range(self.n_darts):
            e = self.edge_of[d]
            if out[e] is None:
                out[e] = (d, self.opp[d])
        return tuple(out)

    def edge_ends(self, e: int):
        d, d2 = self.edge_darts[e]
        return self.vertex_of[d], self.vertex_of[d2]

    def degree(self, v: int) -> int:
        return len(self.rotations[v])

    def neighbors(self, v: int):
        """Neighbors in clockwise order (with repetition for multi-edges)."""
        return [self.head(d) for d in self.rotations[v]]

    def dart_between(self, u: int, v: int) -> int:
        ds = [d for d in self.rotations[u] if self.head(d) == v]
        if len(ds) != 1:
            raise InvalidMap(f"expected one edge {u}-{v}, found {len(ds)}")
        return ds[0]

    def is_simple(self) -> bool:
        return all(len(set(self.neighbors(v))) == self.degree(v) for v in range(self.n_vertices))

    def __eq__(self, other):
        return (
            isinstance(other, PlaneMap)
            and self.rotations == other.rotations
            and self.opp == other.opp
            and self.outer == other.outer
        )

    def __hash__(self):
        return hash((self.rotations, self.opp, self.outer))

    def __repr__(self):
        return f"PlaneMap(V={self.n_vertices}, E={self.n_edges}, F={self.n_faces})"

    @classmethod
    def from_embedding(cls, coords, edges, outer):
        """Build a simple map from a straight-line drawing.

        ``outer = (u, v)`` names the dart u->v whose right face is outer.
        """
        import math

        rot = [[] for _ in coords]
        for i, (u, v) in enumerate(edges):
            rot[u].append((v, i))
            rot[v].append((u, i))

        def angle(u, v):
            (x0, y0), (x1, y1) = coords[u], coords[v]
            return math.atan2(y1 - y0, x1 - x0)

        keys = [[i for w, i in sorted(r, key=lambda wi: -angle(u, wi[0]))] for u, r in enumerate(rot)]
        u, v = outer
        key = next(i for i, e in enumerate(edges) if tuple(e) in ((u, v), (v, u)))
        return cls.from_rotations(keys, (u, key))


# ---------------------------------------------------------------------------
# typed maps


class Quadrangulation(NamedTuple):
    map: PlaneMap
    colors: tuple
    poles: tuple

    @property
    def s(self):
        return self.poles[0]

    @property
    def t(self):
        return self.poles[1]


class Triangulation(NamedTuple):
    map: PlaneMap
    outer: tuple  # (a1, a2, a3) in clockwise order


class RootedMap(NamedTuple):
    map: PlaneMap
    root: int  # dart from s to t with the outer face on its left

    @property
    def s(self):
        return self.map.vertex_of[self.root]

    @property
    def t(self):
        return self.map.head(self.root)


def validate_quadrangulation(m: PlaneMap, colors, poles) -> Quadrangulation:
    colors = tuple(colors)
    if len(colors) != m.n_vertices or set(colors) - {BLACK, WHITE}:
        raise NotBipartite("need a black/white color for every vertex")
    for f, orbit in enumerate(m.faces):
        if len(orbit) != 4:
            raise NonQuadFace(f"face {f} has degree {len(orbit)}")
    for d in range(m.n_darts):
        if colors[m.vertex_of[d]] == colors[m.head(d)]:
            raise NotBipartite(f"edge {m.edge_of[d]} joins two {colors[m.vertex_of[d]]} vertices")
    if not m.is_simple():
        raise NotSimple("quadrangulation has a multiple edge")
    s, t = poles
    outer = set(m.face_vertices(m.outer_face))
    if s == t or colors[s] != BLACK or colors[t] != BLACK or s not in outer or t not in outer:
        raise PolesInvalid("poles must be two distinct black outer vertices")
    return Quadrangulation(m, colors, (s, t))


def validate_triangulation(m: PlaneMap, outer) -> Triangulation:
    a1, a2, a3 = outer
    for f, orbit in enumerate(m.faces):
        if len(orbit) != 3:
            raise NotTriangulation(f"face {f} has degree {len(orbit)}")
    if not m.is_simple():
        raise NotSimple("triangulation has a multiple edge")
    ov = m.face_vertices(m.outer_face)
    # clockwise a1, a2, a3 around the map means the outer orbit visits a1, a3, a2
    i = ov.index(a1) if a1 in ov else None
    if i is None or ov[i:] + ov[:i] != [a1, a3, a2]:
        raise NotTriangulation("a1, a2, a3 must be the outer vertices in clockwise order")
    return Triangulation(m, (a1, a2, a3))


def validate_rooted(m: PlaneMap, root: int) -> RootedMap:
    if m.face_of[m.opp[root]] != m.outer_face:
        raise InvalidMap("root edge must have the outer face on its left")
    if m.n_vertices > 2:
        for cut in range(m.n_vertices):
            if not _connected_without(m, cut):
                raise InvalidMap(f"vertex {cut} is a cut vertex")
    return RootedMap(m, root)


def _connected_without(m: PlaneMap, cut: int) -> bool:
    start = 0 if cut else 1
    seen = {start, cut}
    todo = [start]
    while todo:
        v = todo.pop()
        for u in m.neighbors(v):
            if u not in seen:
                seen.add(u)
                todo.append(u)
    return len(seen) == m.n_vertices


# ---------------------------------------------------------------------------
# dual and completion


def dual(m: PlaneMap) -> PlaneMap:
    """Vertices are the faces of ``m``; dart ``d`` becomes the dual dart crossing it.

    The dual rotation at a face follows its clockwise orbit.  The outer dart
    of the dual is ``next_ccw(outer)``, the rule that makes ``dual(dual(m))``
    carry its outer face back onto the outer face of ``m``.
    """
    return PlaneMap(list(m.faces), m.opp, m.next_ccw[m.outer])


class CompletionGraph(NamedTuple):
    map: PlaneMap
    labels: tuple  # per vertex: ("v", vertex) | ("f", face) | ("e", edge)

    def index(self, label):
        return self.labels.index(label)


def completion(g: RootedMap) -> CompletionGraph:
    return _completion(g, special=False)


def special_completion(g: RootedMap) -> CompletionGraph:
    return _completion(g, special=True)


def _completion(g: RootedMap, special: bool) -> CompletionGraph:
    m = g.map
    drop = {g.s, g.t} if special else set()
    labels = []
    rot = []
    for v in range(m.n_vertices):
        if v in drop:
            continue
        labels.append(("v", v))
        rot.append([("p", d) for d in m.rotations[v]])
    for f, orbit in enumerate(m.faces):
        labels.append(("f", f))
        rot.append([("f", d) for d in orbit])
    for e, (d, d2) in enumerate(m.edge_darts):
        labels.append(("e", e))
        # tail, left face, head, right face
        r = [("p", d), ("f", d2), ("p", d2), ("f", d)]
        rot.append([k for k in r if not (k[0] == "p" and m.vertex_of[k[1]] in drop)])
    e_root = labels.index(("e", m.edge_of[g.root]))
    # outer corner: between the root edge-vertex's darts towards s and f_out
    root_key = ("f", m.opp[g.root]) if special else ("p", g.root)
    return CompletionGraph(PlaneMap.from_rotations(rot, (e_root, root_key)), tuple(labels))


# ---------------------------------------------------------------------------
# canonical form


def canonical_form(m: PlaneMap, dart_labels=None) -> bytes:
    """Minimum BFS code over all starting darts on the outer face.

    Two maps get the same form iff there is an orientation-preserving
    isomorphism carrying outer face to outer face (and labels to labels).
    """
    labels = dart_labels if dart_labels is not None else (0,) * m.n_darts
    best = None
    for d0 in m.faces[m.outer_face]:
        code = _bfs_code(m, d0, labels)
        if best is None or code < best:
            best = code
    return repr(best).encode("ascii")


def _bfs_code(m: PlaneMap, d0: int, labels):
    lab = {d0: 0}
    order = [d0]
    q = deque([d0])
    while q:
        d = q.popleft()
        for nxt in (m.next_cw[d], m.opp[d]):
            if nxt not in lab:
                lab[nxt] = len(order)
                order.append(nxt)
                q.append(nxt)
    return tuple((lab[m.next_cw[d]], lab[m.opp[d]], labels[d]) for d in order)


# ---------------------------------------------------------------------------
# text format


class MapDocument(NamedTuple):
    """A map plus the optional lines of the text format."""

    map: PlaneMap
    colors: tuple = None  # per vertex, or None
    poles: tuple = None
    root: int = None
    apex: tuple = None
    orient: dict = None  # edge -> head vertex
    ecolor: dict = None  # edge -> color name


def format_map(doc: MapDocument) -> str:
    m = doc.map
    lines = [f"V {m.n_vertices}"]
    for v, rot in enumerate(m.rotations):
        c = doc.colors[v] if doc.colors is not None else "-"
        lines.append(f"v {v} {c} : " + " ".join(str(d) for d in rot))
    for d, d2 in m.edge_darts:
        lines.append(f"opp {d} {d2}")
    lines.append(f"outer {m.outer}")
    if doc.poles is not None:
        lines.append(f"poles {doc.poles[0]} {doc.poles[1]}")
    if doc.root is not None:
        lines.append(f"root {doc.root}")
    if doc.apex is not None:
        lines.append("apex " + " ".join(str(a) for a in doc.apex))
    for e in sorted(doc.orient or ()):
        lines.append(f"orient {e} {doc.orient[e]}")
    for e in sorted(doc.ecolor or ()):
        lines.append(f"ecolor {e} {doc.ecolor[e]}")
    return "\n".join(lines) + "\n"


def parse_map(text: str) -> MapDocument:
    nv = None
    rot: dict = {}
    colors: dict = {}
    opp: dict = {}
    outer = None
    extras: dict = {"orient": {}, "ecolor": {}}
    for lineno, line in enumerate(text.splitlines(), 1):
        tok = line.split()
        if not tok:
            continue
        try:
            kw = tok[0]
            if kw == "V":
                nv = int(tok[1])
            elif kw == "v":
                if tok[3] != ":":
                    raise ValueError("missing ':'")
                v = int(tok[1])
                colors[v] = tok[2]
                rot[v] = [int(x) for x in tok[4:]]
            elif kw == "opp":
                a, b = int(tok[1]), int(tok[2])
                opp[a], opp[b] = b, a
            elif kw == "outer":
                outer = int(tok[1])
            elif kw == "poles":
                extras["poles"] = (int(tok[1]), int(tok[2]))
            elif kw == "root":
                extras["root"] = int(tok[1])
            elif kw == "apex":
                extras["apex"] = tuple(int(x) for x in tok[1:4])
            elif kw == "orient":
                extras["orient"][int(tok[1])] = int(tok[2])
            elif kw == "ecolor":
                extras["ecolor"][int(tok[1])] = tok[2]
            else:
                raise ValueError(f"unknown keyword {kw!r}")
        except (ValueError, IndexError) as exc:
            raise ParseError(f"line {lineno}: {exc}") from None
    if nv is None or outer is None or sorted(rot) != list(range(nv)):
        raise ParseError("map text needs V, one v line per vertex and an outer line")
    n_darts = sum(len(r) for r in rot.values())
    if sorted(opp) != list(range(n_darts)):
        raise ParseError("every dart needs an opp line")
    try:
        m = PlaneMap([rot[v] for v in range(nv)], [opp[d] for d in range(n_darts)], outer)
    except InvalidMap as exc:
        raise ParseError(str(exc)) from None
    cols = tuple(colors[v] for v in range(nv))
    return MapDocument(
        m,
        None if all(c == "-" for c in cols) else cols,
        extras.get("poles"),
        extras.get("root"),
        extras.get("apex"),
        extras["orient"] or None,
        extras["ecolor"] or None,
    )
