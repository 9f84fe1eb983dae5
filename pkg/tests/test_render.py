import re

import pytest

from baxterlab import formats, oracle, render, suites
from baxterlab.baxter import Rectangulation
from baxterlab.errors import NotRenderable
from baxterlab.orientations import color_two_orientation
from baxterlab.trees import make_twin_binary


def points(svg, tag):
    out = []
    for m in re.finditer(rf'<polyline id="{tag}[^"]*" points="([^"]*)"', svg):
        out.append([tuple(map(float, xy.split(","))) for xy in m.group(1).split()])
    return out


def test_bare_square():
    svg = render.render("rect", Rectangulation(0, frozenset()))
    assert svg.count("<rect ") == 1
    assert svg.startswith("<svg ") and svg.endswith("</svg>\n")


def test_rectangle_count_matches_points():
    for a, b in suites.twin_pairs(6):
        r, _ = formats.convert(make_twin_binary(a, b), "twinpair", "rect")
        svg = render.render("rect", r)
        assert svg.count("<rect ") == r.n + 1
        assert svg.count("<circle ") == r.n


def test_triple_polylines_disjoint():
    for t in oracle.enum_path_triples(1, 1):
        paths = points(render.render("triple", t), "path-")
        assert len(paths) == 3
        sets = [set(p) for p in paths]
        assert not (sets[0] & sets[1] or sets[1] & sets[2] or sets[0] & sets[2])


def test_four_cycle_book(four_cycle):
    (o,) = oracle.enum_two_orientations(four_cycle)
    svg = render.render("sepdec", color_two_orientation(o))
    assert svg.count('class="red-page"') == 2
    assert svg.count('class="blue-page"') == 2
    assert svg.count("<circle ") == 4
    # red arcs sweep below the spine, blue arcs above
    assert all(" 0 0 0 " in ln for ln in svg.splitlines() if "red-page" in ln)
    assert all(" 0 0 1 " in ln for ln in svg.splitlines() if "blue-page" in ln)


def test_dyck_pair_and_twin_pair():
    d = next(iter(oracle.enum_dyck_pairs(2)))
    svg = render.render("dyckpair", d)
    assert 'id="diagonal"' in svg and len(points(svg, "path-")) == 2
    p = make_twin_binary(*suites.twin_pairs(4)[3])
    svg = render.render("twinpair", p)
    # each inner node draws two lines, each tree has leaves - 1 inner nodes
    assert svg.count("<line ") == 2 * 2 * 3


def test_ids_are_unique_and_output_is_deterministic():
    for sd in suites.separating_decompositions(5):
        svg = render.render("sepdec", sd)
        ids = re.findall(r'id="([^"]+)"', svg)
        assert len(ids) == len(set(ids))
        assert render.render("sepdec", sd) == svg


def test_not_renderable():
    with pytest.raises(NotRenderable):
        render.render("baxter", (1, 2))
    with pytest.raises(NotRenderable):
        render.render("schnyder", None)
