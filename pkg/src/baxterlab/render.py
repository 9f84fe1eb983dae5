"""Deterministic SVG drawings of rectangulations, lattice paths, 2-book embeddings and trees."""

from __future__ import annotations

from .baxter import Rectangulation, rectangles
from .errors import NotRenderable
from .orientations import SeparatingDecomposition, book_embedding
from .paths import DyckPair, PathTriple
from .trees import n_leaves

UNIT = 20
MARGIN = 20
PATH_COLORS = ("#d62728", "#2ca02c", "#1f77b4")


def _doc(width, height, body) -> str:
    head = (
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">\n'
    )
    return head + "".join(f"  {ln}\n" for ln in body) + "</svg>\n"


def render_rectangulation(r: Rectangulation) -> str:
    """Rectangles and points on the doubled grid ``[0, 2(n+1)]^2``."""
    n = r.n
    side = 2 * (n + 1) * UNIT
    size = side + 2 * MARGIN

    def X(x2):
        return MARGIN + x2 * UNIT

    def Y(y2):
        return MARGIN + side - y2 * UNIT

    body = []
    for g, (x0, x1, y0, y1) in enumerate(rectangles(r), 1):
        body.append(
            f'<rect id="rect-{g}" x="{X(2 * x0)}" y="{Y(2 * y1)}" width="{2 * (x1 - x0) * UNIT}" '
            f'height="{2 * (y1 - y0) * UNIT}" fill="none" stroke="black" stroke-width="2"/>'
        )
    for i in range(1, n + 1):
        body.append(f'<circle id="pt-{i}" cx="{X(2 * i)}" cy="{Y(2 * (n + 1 - i))}" r="3" fill="black"/>')
    return _doc(size, size, body)


def _render_paths(paths, extra=()) -> str:
    pts = [pt for p in paths for pt in p.points()]
    xs = [x for x, _ in pts]
    ys = [y for _, y in pts]
    lo_x, hi_x, lo_y, hi_y = min(xs), max(xs), min(ys), max(ys)
    width = (hi_x - lo_x) * UNIT + 2 * MARGIN
    height = (hi_y - lo_y) * UNIT + 2 * MARGIN

    def xy(x, y):
        return f"{MARGIN + (x - lo_x) * UNIT},{MARGIN + (hi_y - y) * UNIT}"

    body = [fn(xy) for fn in extra]
    for i, p in enumerate(paths):
        coords = " ".join(xy(x, y) for x, y in p.points())
        body.append(
            f'<polyline id="path-{i + 1}" points="{coords}" fill="none" '
            f'stroke="{PATH_COLORS[i % 3]}" stroke-width="3"/>'
        )
    return _doc(width, height, body)


def render_triple(t: PathTriple) -> str:
    return _render_paths(list(t))


def render_dyck_pair(d: DyckPair) -> str:
    n = d.n
    diagonal = (
        lambda xy: f'<polyline id="diagonal" points="{xy(0, 0)} {xy(n, n)}" '
        'fill="none" stroke="gray" stroke-dasharray="4"/>'
    )
    return _render_paths(list(d), extra=[diagonal])


def render_book(sd: SeparatingDecomposition) -> str:
    """Vertices on a horizontal spine; blue arcs above, red arcs below."""
    emb = book_embedding(sd)
    m = sd.base.map
    pos = {v: i for i, v in enumerate(emb.spine)}
    k = len(emb.spine)
    width = (k - 1) * 2 * UNIT + 2 * MARGIN
    half = k * UNIT + MARGIN
    height = 2 * half
    body = [f'<line id="spine" x1="{MARGIN}" y1="{half}" x2="{width - MARGIN}" y2="{half}" stroke="gray"/>']
    arcs = []
    for e in range(m.n_edges):
        a, b = sorted(pos[v] for v in m.edge_ends(e))
        arcs.append((emb.page_of[e], a, b, e))
    for page, a, b, e in sorted(arcs):
        x0, x1 = MARGIN + 2 * UNIT * a, MARGIN + 2 * UNIT * b
        r = UNIT * (b - a)
        sweep = 1 if page == "blue-page" else 0
        color = "blue" if page == "blue-page" else "red"
        body.append(
            f'<path id="edge-{e}" class="{page}" d="M {x0} {half} A {r} {r} 0 0 {sweep} {x1} {half}" '
            f'fill="none" stroke="{color}" stroke-width="2"/>'
        )
    for i, v in enumerate(emb.spine):
        body.append(f'<circle id="v-{v}" cx="{MARGIN + 2 * UNIT * i}" cy="{half}" r="4" fill="black"/>')
    return _doc(width, height, body)


def _tree_body(t, prefix, x_of, y_of):
    """Leaf ``i`` sits at column ``2i``; an inner node sits midway over its children."""
    body = []

    def walk(node, lo, d):
        if node == ():
            return lo + 1, 2 * lo
        nxt, left = walk(node[0], lo, d + 1)
        nxt, right = walk(node[1], nxt, d + 1)
        x = (left + right) / 2
        for i, cx in enumerate((left, right)):
            body.append(
                f'<line id="{prefix}-{lo}-{nxt}-{i}" x1="{x_of(x)}" y1="{y_of(d)}" '
                f'x2="{x_of(cx)}" y2="{y_of(d + 1)}" stroke="black"/>'
            )
        return nxt, x

    walk(t, 0, 0)
    return body


def _height(t):
    return 0 if t == () else 1 + max(_height(c) for c in t)


def render_twin_pair(p) -> str:
    """The first tree hangs down from the top, the second grows up from the bottom."""
    a, b = p
    n = n_leaves(a)
    ha, hb = _height(a), _height(b)
    width = 2 * (n - 1) * UNIT + 2 * MARGIN
    height = (ha + hb + 2) * UNIT + 2 * MARGIN

    def x_of(c):
        return f"{MARGIN + c * UNIT:g}"

    body = _tree_body(a, "up", x_of, lambda d: MARGIN + d * UNIT)
    body += _tree_body(b, "down", x_of, lambda d: height - MARGIN - d * UNIT)
    return _doc(width, height, body)


RENDERERS = {
    "rect": render_rectangulation,
    "triple": render_triple,
    "dyckpair": render_dyck_pair,
    "sepdec": render_book,
    "twinpair": render_twin_pair,
}


def render(kind: str, obj) -> str:
    try:
        fn = RENDERERS[kind]
    except KeyError:
        raise NotRenderable(f"cannot draw objects of kind {kind!r}") from None
    return fn(obj)

