import itertools

import pytest
from hypothesis import given, settings, strategies as st

from baxterlab import oracle
from baxterlab.baxter import (
    Rectangulation,
    baxter_of_rectangulation,
    complement_perm,
    descents,
    format_permutation,
    format_rectangulation,
    graft_alternating_pair,
    is_alternating,
    is_alternating_baxter,
    is_baxter,
    is_symmetric_baxter,
    max_tree,
    min_tree,
    parse_permutation,
    parse_rectangulation,
    prune_alternating_pair,
    rectangulation_of_twin_pair,
    reverse_perm,
    rises,
    twin_pair_of_baxter,
    twin_pair_of_permutation,
    twin_pair_of_rectangulation,
    validate_rectangulation,
)
from baxterlab.counting import alternating_baxter_count, baxter as baxter_number, catalan
from baxterlab.errors import InvalidRectangulation, NotAlternatingFingerprint, NotBaxter, ParseError
from baxterlab.trees import is_twin_binary, left_leaves, make_twin_binary, n_leaves

SINGLE = ((), ())
FIGURE = (1, 7, 4, 6, 3, 2, 5)
FIGURE_PRIME = (1, 7, 5, 6, 3, 2, 4)


def test_is_baxter_examples():
    for n in range(1, 9):
        assert is_baxter(tuple(range(1, n + 1)))
    assert not is_baxter((2, 4, 1, 3))
    assert not is_baxter((3, 1, 4, 2))


def test_baxter_counts():
    for n in range(1, 9):
        got = sum(1 for p in itertools.permutations(range(1, n + 1)) if is_baxter(p))
        assert got == baxter_number(n)
    assert [baxter_number(n) for n in range(1, 9)] == [1, 2, 6, 22, 92, 422, 2074, 10754]


def test_kernel_agrees_with_definition():
    for n in range(1, 8):
        for p in itertools.permutations(range(1, n + 1)):
            assert is_baxter(p) == oracle.baxter_by_definition(p)


def test_baxter_closed_under_symmetries():
    for n in range(1, 8):
        for p in itertools.permutations(range(1, n + 1)):
            b = is_baxter(p)
            assert is_baxter(reverse_perm(p)) == b == is_baxter(complement_perm(p))


def test_permutation_format():
    assert parse_permutation("1,7,4,6,3,2,5") == FIGURE
    assert format_permutation(FIGURE) == "1,7,4,6,3,2,5\n"
    for bad in ("1,1", "0,1", "1,,2", "a", "1,3"):
        with pytest.raises(ParseError):
            parse_permutation(bad)


def test_single_point_trees():
    assert max_tree((1,)) == SINGLE and min_tree((1,)) == SINGLE
    assert twin_pair_of_baxter((1,)) == (SINGLE, SINGLE)


def test_figure_pair():
    p = twin_pair_of_permutation(FIGURE)
    assert is_twin_binary(*p)
    assert twin_pair_of_permutation(FIGURE_PRIME) == p
    # only the second permutation is Baxter
    assert not is_baxter(FIGURE) and is_baxter(FIGURE_PRIME)
    with pytest.raises(NotBaxter):
        twin_pair_of_baxter(FIGURE)
    assert baxter_of_rectangulation(rectangulation_of_twin_pair(p)) == FIGURE_PRIME


def test_twin_pair_of_baxter_is_injective():
    for n in range(1, 7):
        seen = set()
        for p in oracle.enum_permutations(n, "baxter"):
            pair = twin_pair_of_baxter(p)
            assert pair not in seen
            seen.add(pair)
            assert left_leaves(pair.first) == descents(p) + 1
            assert left_leaves(pair.second) == n - rises(p)


def test_bare_square():
    r = rectangulation_of_twin_pair(make_twin_binary(SINGLE, SINGLE))
    assert r == Rectangulation(0, frozenset())
    assert baxter_of_rectangulation(r) == (1,)
    assert format_rectangulation(r) == ""
    assert parse_rectangulation("") == r


def test_rectangulations_of_one_point():
    rects = {}
    for a, b in oracle.enum_twin_binary_pairs(3):
        r = rectangulation_of_twin_pair(make_twin_binary(a, b))
        assert len(r.segments) == 1
        rects[r.horizontal() != []] = baxter_of_rectangulation(r)
    assert set(rects.values()) == {(1, 2), (2, 1)}


def test_rectangulation_counts_and_segments():
    for n in range(0, 7):
        seen = set()
        for a, b in oracle.enum_twin_binary_pairs(n + 2):
            p = make_twin_binary(a, b)
            r = validate_rectangulation(rectangulation_of_twin_pair(p))
            assert len(r.horizontal()) == left_leaves(a) - 1
            assert len(r.vertical()) == n_leaves(a) - left_leaves(a) - 1
            assert twin_pair_of_rectangulation(r) == p
            seen.add(r)
        assert len(seen) == baxter_number(n + 1)


def test_rectangulation_format_roundtrip():
    for a, b in oracle.enum_twin_binary_pairs(6):
        r = rectangulation_of_twin_pair(make_twin_binary(a, b))
        text = format_rectangulation(r)
        assert format_rectangulation(parse_rectangulation(text)) == text


def test_invalid_rectangulations():
    with pytest.raises(ParseError):
        parse_rectangulation("h 1 0 4\n")
    with pytest.raises(ParseError):
        parse_rectangulation("x 2 0 4\n")
    with pytest.raises(InvalidRectangulation):
        # a horizontal segment that misses the diagonal point (1, 1)
        validate_rectangulation(Rectangulation(1, frozenset({("h", 1, 0, 1)})))
    with pytest.raises(InvalidRectangulation):
        # two segments through the single point
        validate_rectangulation(Rectangulation(1, frozenset({("h", 1, 0, 2), ("v", 1, 0, 2)})))
    with pytest.raises(InvalidRectangulation):
        validate_rectangulation(Rectangulation(2, frozenset({("h", 1, 0, 3)})))


def test_full_cycle_is_identity():
    for n in range(1, 7):
        for p in oracle.enum_permutations(n, "baxter"):
            r = rectangulation_of_twin_pair(twin_pair_of_baxter(p))
            assert baxter_of_rectangulation(r) == p


def test_pyramid_claims():
    outputs = set()
    for n in range(2, 8):
        for a, b in oracle.enum_twin_binary_pairs(n):
            p = make_twin_binary(a, b)
            pi = baxter_of_rectangulation(rectangulation_of_twin_pair(p))
            assert oracle.baxter_by_definition(pi)
            assert twin_pair_of_baxter(pi) == p
            outputs.add(pi)
    assert len(outputs) == sum(baxter_number(n) for n in range(1, 7))


def test_alternating_examples():
    assert is_alternating((1,))
    found = [p for p in itertools.permutations((1, 2, 3)) if is_alternating_baxter(p)]
    assert found == [(1, 3, 2), (2, 3, 1)]
    assert sum(1 for p in itertools.permutations(range(1, 5)) if is_alternating_baxter(p)) == 4


def test_alternating_counts():
    for m in range(1, 9):
        got = sum(1 for p in itertools.permutations(range(1, m + 1)) if is_alternating_baxter(p))
        assert got == alternating_baxter_count(m)


def test_prune_and_graft():
    for m in range(2, 9):
        pairs = [twin_pair_of_baxter(p) for p in oracle.enum_permutations(m, "alternating-baxter")]
        pruned = set()
        for pair in pairs:
            a, b = prune_alternating_pair(pair)
            assert graft_alternating_pair(a, b) == pair
            pruned.add((a, b))
        n = m + 1
        sizes = (n // 2, n // 2 + 1) if n % 2 == 0 else ((n + 1) // 2, (n + 1) // 2)
        assert {(n_leaves(a), n_leaves(b)) for a, b in pruned} == {sizes}
        assert len(pruned) == catalan(sizes[0] - 1) * catalan(sizes[1] - 1)


def test_prune_rejects_non_alternating():
    with pytest.raises(NotAlternatingFingerprint):
        prune_alternating_pair(twin_pair_of_baxter((1, 2, 3)))
    with pytest.raises(NotAlternatingFingerprint):
        graft_alternating_pair(SINGLE, ((SINGLE, ()), ()))


def test_symmetric_examples():
    assert is_symmetric_baxter((1,))
    assert is_symmetric_baxter((2, 1)) and is_symmetric_baxter((1, 2))
    assert not is_symmetric_baxter((1, 3, 2))


def test_symmetric_permutations_give_symmetric_pairs():
    for n in range(1, 7):
        for p in oracle.enum_permutations(n, "baxter"):
            a, b = twin_pair_of_baxter(p)
            assert is_symmetric_baxter(p) == (a == b)


@settings(max_examples=150, deadline=None)
@given(st.permutations(list(range(1, 9))))
def test_pair_of_any_permutation_is_twin(p):
    p = tuple(p)
    pair = twin_pair_of_permutation(p)
    assert is_twin_binary(*pair)
    back = baxter_of_rectangulation(rectangulation_of_twin_pair(pair))
    assert is_baxter(back)
    assert twin_pair_of_permutation(back) == pair
    if is_baxter(p):
        assert back == p
