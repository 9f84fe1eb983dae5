import pytest

from baxterlab import oracle
from baxterlab.errors import InvalidMap, NonQuadFace, NotBipartite, NotSimple, PolesInvalid, NotTriangulation
from baxterlab.planemap import (
    BLACK,
    WHITE,
    MapDocument,
    PlaneMap,
    canonical_form,
    completion,
    dual,
    format_map,
    parse_map,
    special_completion,
    validate_quadrangulation,
    validate_rooted,
    validate_triangulation,
)

from conftest import double_edge, rooted, triangle


def euler(m):
    return m.n_vertices - m.n_edges + m.n_faces


def test_four_cycle_is_a_quadrangulation(four_cycle):
    q = validate_quadrangulation(four_cycle.map, four_cycle.colors, four_cycle.poles)
    m = q.map
    assert (m.n_vertices, m.n_edges, m.n_faces) == (4, 4, 2)
    assert euler(m) == 2


def test_cube_is_a_quadrangulation(cube):
    q = validate_quadrangulation(cube.map, cube.colors, cube.poles)
    n = q.map.n_vertices - 2
    assert q.map.n_faces == n and q.map.n_edges == 2 * n


def test_chord_breaks_quadrangulation():
    coords = [(0, 0), (1, 1), (2, 0), (1, -1)]
    m = PlaneMap.from_embedding(coords, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)], (0, 3))
    with pytest.raises((NonQuadFace, NotBipartite)):
        validate_quadrangulation(m, (BLACK, WHITE, BLACK, WHITE), (0, 2))


def test_bad_poles_and_colors(four_cycle):
    m = four_cycle.map
    with pytest.raises(PolesInvalid):
        validate_quadrangulation(m, four_cycle.colors, (1, 3))
    with pytest.raises(PolesInvalid):
        validate_quadrangulation(m, four_cycle.colors, (0, 0))
    with pytest.raises(NotBipartite):
        validate_quadrangulation(m, (BLACK, BLACK, BLACK, WHITE), (0, 2))


def test_k23_and_double_edge():
    # three white vertices of degree 2 between s and t
    coords = [(0, 0), (4, 0), (2, 2), (2, 0), (2, -2)]
    edges = [(0, 2), (2, 1), (0, 3), (3, 1), (0, 4), (4, 1)]
    m = PlaneMap.from_embedding(coords, edges, (0, 4))
    assert all(len(f) == 4 for f in m.faces)
    validate_quadrangulation(m, (BLACK, BLACK, WHITE, WHITE, WHITE), (0, 1))
    m2 = PlaneMap.from_rotations([["a", "b"], ["b", "a"]], (0, "a"))
    with pytest.raises((NotSimple, NonQuadFace)):
        validate_quadrangulation(m2, (BLACK, WHITE), (0, 1))


def test_invalid_rotation_systems():
    with pytest.raises(InvalidMap):
        PlaneMap([[0], [1]], [0, 1], 0)  # opp has fixed points
    with pytest.raises(InvalidMap):
        PlaneMap.from_rotations([["a"], ["b"]], (0, "a"))
    with pytest.raises(InvalidMap):
        PlaneMap.from_rotations([["a", "a"]], (0, "a"))  # loop
    with pytest.raises(InvalidMap):
        # K4 with a non-planar rotation at one vertex
        PlaneMap.from_rotations([["a", "b", "c"], ["a", "d", "e"], ["b", "f", "d"], ["c", "f", "e"]], (0, "a"))


def test_faces_partition_darts(cube):
    m = cube.map
    darts = sorted(d for f in m.faces for d in f)
    assert darts == list(range(m.n_darts))
    for f, orbit in enumerate(m.faces):
        for d in orbit:
            assert m.face_of[d] == f
            assert m.face_of[m.phi(d)] == f


def test_dual_of_two_cycle_is_two_cycle():
    m = double_edge().map
    d = dual(m)
    assert (d.n_vertices, d.n_edges, d.n_faces) == (2, 2, 2)


def test_dual_of_triangle():
    d = dual(triangle().map)
    assert d.n_vertices == 2 and d.n_edges == 3 and d.n_faces == 3
    assert [d.degree(v) for v in range(2)] == [3, 3]


def test_dual_is_an_involution(cube):
    m = cube.map
    assert canonical_form(dual(dual(m))) == canonical_form(m)
    t = oracle.octahedron().map
    assert canonical_form(dual(dual(t))) == canonical_form(t)
    assert canonical_form(dual(t)) != canonical_form(t)


def test_completion_counts():
    g = double_edge()
    cg = completion(g)
    kinds = [lab[0] for lab in cg.labels]
    assert (kinds.count("v"), kinds.count("f"), kinds.count("e")) == (2, 2, 2)
    for i, lab in enumerate(cg.labels):
        if lab[0] == "e":
            assert cg.map.degree(i) == 4
    for g in (double_edge(), triangle()):
        m = g.map
        assert completion(g).map.n_vertices == m.n_vertices + m.n_faces + m.n_edges


def test_special_completion_of_triangle():
    cg = special_completion(triangle())
    kinds = [lab[0] for lab in cg.labels]
    assert (kinds.count("v"), kinds.count("f"), kinds.count("e")) == (1, 2, 3)


def test_rooted_maps():
    g = triangle()
    assert validate_rooted(g.map, g.root) == g
    with pytest.raises(InvalidMap):
        validate_rooted(g.map, g.map.opp[g.root])
    # a path of two edges has a cut vertex
    coords = [(0, 0), (1, 0), (2, 0)]
    p = PlaneMap.from_embedding(coords, [(0, 1), (1, 2)], (0, 1))
    root = next(d for d in p.rotations[0])
    with pytest.raises(InvalidMap):
        validate_rooted(p, root)


def test_canonical_form_ignores_labels(four_cycle):
    m = four_cycle.map
    relabeled = PlaneMap.from_embedding([(1, -1), (0, 0), (1, 1), (2, 0)], [(1, 2), (2, 3), (3, 0), (0, 1)], (1, 0))
    assert canonical_form(relabeled) == canonical_form(m)


def test_canonical_form_sees_subdivision(cube):
    coords = [(0, 0), (4, 0), (4, 4), (0, 4), (1, 1), (3, 1), (3, 3), (1, 3), (2, 0)]
    edges = [(0, 8), (8, 1), (1, 2), (2, 3), (3, 0), (4, 5), (5, 6), (6, 7), (7, 4)] + [(i, i + 4) for i in range(4)]
    sub = PlaneMap.from_embedding(coords, edges, (0, 8))
    assert canonical_form(sub) != canonical_form(cube.map)


def test_triangulation_validation():
    t = oracle.k4()
    assert validate_triangulation(t.map, t.outer) == t
    with pytest.raises(NotTriangulation):
        validate_triangulation(t.map, (0, 2, 1))
    with pytest.raises(NotTriangulation):
        validate_triangulation(oracle.cube().map, (0, 1, 2))


def test_map_format_roundtrip(cube):
    doc = MapDocument(cube.map, colors=cube.colors, poles=cube.poles)
    text = format_map(doc)
    assert format_map(parse_map(text)) == text
    g = triangle()
    text = format_map(MapDocument(g.map, root=g.root))
    back = parse_map(text)
    assert back.root == g.root and back.map == g.map
