import pytest

from baxterlab import oracle
from baxterlab.counting import baxter, catalan, narayana, theta
from baxterlab.errors import BoundExceeded, UnknownFamily


def test_permutation_streams():
    assert len(list(oracle.enum_permutations(3))) == 6
    assert len(list(oracle.enum_permutations(4, "baxter"))) == 22
    assert list(oracle.enum_permutations(3, "alternating-baxter")) == [(1, 3, 2), (2, 3, 1)]
    assert list(oracle.enum_permutations(2, "symmetric-baxter")) == [(1, 2), (2, 1)]
    perms = list(oracle.enum_permutations(5))
    assert perms == sorted(perms)


def test_pattern_definition():
    assert not oracle.baxter_by_definition((2, 4, 1, 3))
    assert not oracle.baxter_by_definition((3, 1, 4, 2))
    # 2,5,1,4 is a classical 2413 occurrence, but 5 and 1 are not adjacent
    assert oracle.baxter_by_definition((2, 5, 3, 1, 4))
    assert oracle.baxter_by_definition((3, 4, 1, 2))


def test_tree_streams():
    three = list(oracle.enum_full_binary_trees(3))
    assert len(three) == 2
    lefts = sorted(oracle.leaf_directions(t).count("1") for t in three)
    assert lefts == [1, 2]
    assert len(list(oracle.enum_full_binary_trees(4))) == 5 == catalan(3)
    for n in range(1, 9):
        trees = list(oracle.enum_full_binary_trees(n))
        assert len(trees) == len(set(trees)) == catalan(n - 1)


def test_narayana_by_left_leaves():
    for n in range(2, 9):
        by_left = {}
        for t in oracle.enum_full_binary_trees(n):
            k = oracle.leaf_directions(t).count("1")
            by_left[k] = by_left.get(k, 0) + 1
        assert by_left == {k: narayana(n - 1, k) for k in range(1, n)}


def test_twin_pair_stream():
    assert len(list(oracle.enum_twin_binary_pairs(4))) == 6
    for n in range(2, 8):
        pairs = list(oracle.enum_twin_binary_pairs(n))
        assert len(pairs) == len(set(pairs)) == baxter(n - 1)


def test_path_streams():
    assert len(list(oracle.enum_path_triples(0, 0))) == 1
    assert len(list(oracle.enum_path_triples(1, 1))) == 4
    assert list(oracle.enum_path_triples(1, 1, symmetric_only=True)) == []
    assert len(list(oracle.enum_path_triples(2, 3))) == theta(2, 3)
    assert len(list(oracle.enum_dyck_pairs(2))) == 3


def test_orientation_catalog():
    assert len(list(oracle.enum_two_orientations(oracle.four_cycle()))) == 1
    assert len(list(oracle.enum_two_orientations(oracle.cube()))) == 2
    assert len(list(oracle.enum_three_orientations(oracle.k4()))) == 1
    assert len(list(oracle.enum_three_orientations(oracle.octahedron()))) == 2


def test_bounds():
    with pytest.raises(BoundExceeded):
        list(oracle.enum_permutations(10))
    with pytest.raises(BoundExceeded):
        list(oracle.enum_full_binary_trees(13))
    with pytest.raises(BoundExceeded):
        list(oracle.enum_twin_binary_pairs(9))
    with pytest.raises(BoundExceeded):
        list(oracle.enum_path_triples(6, 5))
    with pytest.raises(BoundExceeded):
        list(oracle.enum_dyck_pairs(10))
    assert len(list(oracle.enum_permutations(3, bound=3))) == 6
    with pytest.raises(BoundExceeded):
        list(oracle.enum_permutations(4, bound=3))


def test_unknown_filter():
    with pytest.raises(UnknownFamily):
        list(oracle.enum_permutations(3, "odd"))


def test_streams_are_deterministic():
    assert list(oracle.enum_twin_binary_pairs(5)) == list(oracle.enum_twin_binary_pairs(5))
    assert list(oracle.enum_dyck_pairs(3)) == list(oracle.enum_dyck_pairs(3))
    assert list(oracle.enum_path_triples(2, 2)) == list(oracle.enum_path_triples(2, 2))
