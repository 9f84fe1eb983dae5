"""Text formats for every object kind and the conversion graph between kinds."""

from __future__ import annotations

import logging
import re
from collections import deque

from . import baxter, bipolar, orientations, paths, trees
from .errors import BaxterLabError, InternalContradiction, InvariantViolated, NotConvertible, ParseError
from .orientations import SchnyderWood, SeparatingDecomposition
from .planemap import (
    MapDocument,
    RootedMap,
    format_map,
    parse_map,
    validate_quadrangulation,
    validate_triangulation,
)

log = logging.getLogger(__name__)

KINDS = ("baxter", "twinpair", "triple", "rect", "sepdec", "bipolar", "schnyder", "dyckpair")


# ---------------------------------------------------------------------------
# map-based kinds


def format_sepdec(sd: SeparatingDecomposition) -> str:
    q = sd.base
    return format_map(
        MapDocument(
            q.map,
            colors=q.colors,
            poles=q.poles,
            orient=dict(enumerate(sd.head)),
            ecolor=dict(enumerate(sd.color)),
        )
    )


def parse_sepdec(text: str) -> SeparatingDecomposition:
    doc = parse_map(text)
    if doc.colors is None or doc.poles is None or doc.orient is None or doc.ecolor is None:
        raise ParseError("a separating decomposition needs colors, poles, orient and ecolor lines")
    m = doc.map
    q = validate_quadrangulation(m, doc.colors, doc.poles)
    head = tuple(doc.orient.get(e) for e in range(m.n_edges))
    color = tuple(doc.ecolor.get(e) for e in range(m.n_edges))
    return orientations.validate_separating(SeparatingDecomposition(q, head, color))


def format_bipolar(b) -> str:
    g = b.base
    return format_map(MapDocument(g.map, root=g.root, orient=dict(enumerate(b.head))))


def parse_bipolar(text: str):
    doc = parse_map(text)
    if doc.root is None or doc.orient is None:
        raise ParseError("a bipolar orientation needs root and orient lines")
    m = doc.map
    head = tuple(doc.orient.get(e) for e in range(m.n_edges))
    return bipolar.validate_bipolar(RootedMap(m, doc.root), head)


def format_schnyder(sw: SchnyderWood) -> str:
    t = sw.base
    inner = [e for e, h in enumerate(sw.head) if h is not None]
    return format_map(
        MapDocument(
            t.map,
            apex=t.outer,
            orient={e: sw.head[e] for e in inner},
            ecolor={e: sw.color[e] for e in inner},
        )
    )


def parse_schnyder(text: str) -> SchnyderWood:
    doc = parse_map(text)
    if doc.apex is None or doc.orient is None or doc.ecolor is None:
        raise ParseError("a Schnyder wood needs apex, orient and ecolor lines")
    m = doc.map
    t = validate_triangulation(m, doc.apex)
    head = tuple(doc.orient.get(e) for e in range(m.n_edges))
    color = tuple(doc.ecolor.get(e) for e in range(m.n_edges))
    return orientations.validate_schnyder(SchnyderWood(t, head, color))


# ---------------------------------------------------------------------------
# registry


def _format_baxter(p) -> str:
    return baxter.format_permutation(p)


FORMATTERS = {
    "baxter": _format_baxter,
    "twinpair": trees.format_twin_pair,
    "triple": paths.format_triple,
    "rect": baxter.format_rectangulation,
    "sepdec": format_sepdec,
    "bipolar": format_bipolar,
    "schnyder": format_schnyder,
    "dyckpair": paths.format_dyck_pair,
}

PARSERS = {
    "baxter": baxter.parse_permutation,
    "twinpair": trees.parse_twin_pair,
    "triple": paths.parse_triple,
    "rect": baxter.parse_rectangulation,
    "sepdec": parse_sepdec,
    "bipolar": parse_bipolar,
    "schnyder": parse_schnyder,
    "dyckpair": paths.parse_dyck_pair,
}


def parse(kind: str, text: str):
    try:
        return PARSERS[kind](text)
    except KeyError:
        raise NotConvertible(f"unknown kind {kind!r}") from None


def serialize(kind: str, obj) -> str:
    try:
        return FORMATTERS[kind](obj)
    except KeyError:
        raise NotConvertible(f"unknown kind {kind!r}") from None


_PATH_LINE = re.compile(r"^\(-?\d+,-?\d+\):[RU]*$")


def detect_kind(text: str) -> str:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines or all(ln[:2] in ("h ", "v ") for ln in lines):
        return "rect"
    if lines[0].startswith("V "):
        keys = {ln.split()[0] for ln in lines}
        for key, kind in (("poles", "sepdec"), ("apex", "schnyder"), ("root", "bipolar")):
            if key in keys:
                return kind
        raise ParseError("map text without poles, apex or root line")
    if all(_PATH_LINE.match(ln) for ln in lines):
        return {3: "triple", 2: "dyckpair"}.get(len(lines)) or _bad(text)
    if all(set(ln) <= set("(*)") for ln in lines):
        return "twinpair"
    if re.fullmatch(r"\d+(,\d+)*", lines[0]) and len(lines) == 1:
        return "baxter"
    return _bad(text)


def _bad(text):
    raise ParseError("cannot tell the kind of this input")


# ---------------------------------------------------------------------------
# conversion graph


def _twin_to_sepdec(p):
    return orientations.twin_alt_to_separating(trees.twin_alt_from_twin_binary(p))


def _sepdec_to_twin(sd):
    return trees.twin_binary_from_twin_alt(orientations.separating_to_twin_alt(sd))


def _twin_to_baxter(p):
    return baxter.baxter_of_rectangulation(baxter.rectangulation_of_twin_pair(p))


def _bipolar_to_schnyder(b):
    return bipolar.star_bipolar_to_schnyder(bipolar.validate_star(b))


EDGES = {
    ("baxter", "twinpair"): baxter.twin_pair_of_permutation,
    ("twinpair", "baxter"): _twin_to_baxter,
    ("baxter", "rect"): lambda p: baxter.rectangulation_of_twin_pair(baxter.twin_pair_of_baxter(p)),
    ("rect", "baxter"): baxter.baxter_of_rectangulation,
    ("twinpair", "rect"): baxter.rectangulation_of_twin_pair,
    ("rect", "twinpair"): baxter.twin_pair_of_rectangulation,
    ("twinpair", "triple"): paths.twin_pair_to_triple,
    ("triple", "twinpair"): paths.triple_to_twin_pair,
    ("twinpair", "sepdec"): _twin_to_sepdec,
    ("sepdec", "twinpair"): _sepdec_to_twin,
    ("sepdec", "bipolar"): bipolar.separating_to_bipolar,
    ("bipolar", "sepdec"): bipolar.bipolar_to_separating,
    ("bipolar", "schnyder"): _bipolar_to_schnyder,
    ("schnyder", "bipolar"): lambda sw: bipolar.schnyder_to_star_bipolar(sw).bipolar,
    ("schnyder", "dyckpair"): bipolar.schnyder_to_dyck,
    ("dyckpair", "schnyder"): bipolar.dyck_to_schnyder,
}


def route(src: str, dst: str):
    """Shortest chain of kinds from ``src`` to ``dst``."""
    for k in (src, dst):
        if k not in KINDS:
            raise NotConvertible(f"unknown kind {k!r}")
    prev = {src: None}
    todo = deque([src])
    while todo:
        k = todo.popleft()
        if k == dst:
            break
        for a, b in EDGES:
            if a == k and b not in prev:
                prev[b] = a
                todo.append(b)
    if dst not in prev:
        raise NotConvertible(f"no conversion from {src} to {dst}")
    chain = [dst]
    while prev[chain[-1]] is not None:
        chain.append(prev[chain[-1]])
    return chain[::-1]


def convert(obj, src: str, dst: str):
    chain = route(src, dst)
    log.info("conversion path: %s", " -> ".join(chain))
    for a, b in zip(chain, chain[1:]):
        try:
            obj = EDGES[(a, b)](obj)
        except InternalContradiction as exc:
            raise InvariantViolated(f"{a} -> {b}: {exc}") from None
        except BaxterLabError as exc:
            raise NotConvertible(f"{a} -> {b}: {exc}") from exc
    return obj, chain
