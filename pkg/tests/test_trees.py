import pytest
from hypothesis import given, settings, strategies as st

from baxterlab import trees
from baxterlab.bits import complement, dominates, ones, reduced, reverse, strings_with_ones
from baxterlab.errors import (
    CountMismatch,
    DominanceViolated,
    LengthMismatch,
    MalformedFingerprint,
    NotTwins,
    ParseError,
)
from baxterlab.oracle import enum_full_binary_trees, enum_twin_binary_pairs
from baxterlab.trees import (
    alt_to_binary,
    binary_fingerprint,
    binary_to_alt,
    bodyprint,
    fingerprint,
    format_binary,
    format_ordered,
    left_comb,
    make_twin_binary,
    parse_binary,
    parse_ordered,
    reduced_bodyprint,
    reduced_fingerprint,
    right_comb,
    tree_from_prints,
)

EDGE = ((),)


def test_bit_string_examples():
    s = "11010"
    assert reverse(s) == "01011"
    assert complement(s) == "00101"
    assert complement(reverse(s)) == "10100"
    assert reduced("10") == ""
    assert dominates("1100", "1010")
    assert not dominates("1010", "1100")


def test_bit_string_errors():
    with pytest.raises(MalformedFingerprint):
        reduced("01")
    with pytest.raises(MalformedFingerprint):
        reduced("1")
    with pytest.raises(MalformedFingerprint):
        reduced("1x0")
    with pytest.raises(LengthMismatch):
        dominates("10", "100")
    with pytest.raises(LengthMismatch):
        dominates("11", "10")


def test_printed_fingerprints_obey_the_transformation():
    # the two fingerprints printed for the same 16-vertex tree
    sw, ne = "1010001010000110", "1001111010111010"
    assert sw == complement(reverse(ne))


def test_single_edge_fingerprints():
    for mode in ("sw", "nw", "ne", "se", "↙", "↖", "↗", "↘"):
        assert fingerprint(EDGE, mode) == "10"


def test_fingerprint_shape():
    for n in range(2, 8):
        for t in trees.ordered_trees(n):
            for mode in ("sw", "nw", "ne", "se"):
                f = fingerprint(t, mode)
                assert len(f) == n and f[0] == "1" and f[-1] == "0"


def test_fingerprint_transformation_lemma():
    for n in range(2, 10):
        for t in trees.ordered_trees(n):
            assert fingerprint(t, "sw") == complement(reverse(fingerprint(t, "ne")))
            assert fingerprint(t, "nw") == complement(reverse(fingerprint(t, "se")))


def test_ordered_tree_format():
    t = parse_ordered("(()(()))")
    assert format_ordered(t) == "(()(()))"
    assert trees.tree_size(t) == 4
    with pytest.raises(ParseError):
        parse_ordered("(()")


def test_binary_tree_format():
    t = parse_binary("((**)*)")
    assert t == (((), ()), ())
    assert format_binary(t) == "((**)*)"
    for bad in ("(**", "(*)", "(***)", "x"):
        with pytest.raises(ParseError):
            parse_binary(bad)


def test_alt_to_binary_on_single_edge():
    assert alt_to_binary(EDGE) == ((), ())


def test_alt_to_binary_preserves_prints():
    for n in range(2, 9):
        for t in trees.ordered_trees(n):
            b = alt_to_binary(t)
            assert trees.n_leaves(b) == n
            assert reduced(fingerprint(t, "ne")) == reduced_fingerprint(b)
            assert binary_to_alt(b) == t


def test_bodyprint_examples():
    single = ((), ())
    assert bodyprint(single) == "1" and reduced_bodyprint(single) == ""
    assert bodyprint(left_comb(4)) == "001"


def test_prints_lemma():
    for n in range(2, 11):
        for t in enum_full_binary_trees(n):
            a, b = reduced_fingerprint(t), reduced_bodyprint(t)
            assert len(a) == len(b) == n - 2
            assert ones(a) == ones(b) == trees.left_leaves(t) - 1
            assert dominates(a, b)
            assert bodyprint(t)[-1] == "1"


def test_tree_from_prints_examples():
    assert tree_from_prints("", "") == ((), ())
    for k in range(4):
        for l in range(4):
            a = "0" * l + "1" * k
            t = tree_from_prints(a, a)
            assert (reduced_bodyprint(t), reduced_fingerprint(t)) == (a, a)


def test_tree_from_prints_errors():
    with pytest.raises(DominanceViolated):
        tree_from_prints("10", "01")
    with pytest.raises(CountMismatch):
        tree_from_prints("11", "10")
    with pytest.raises(LengthMismatch):
        tree_from_prints("1", "10")


def test_tree_from_prints_is_a_bijection():
    for n in range(0, 9):
        pairs = [
            (b, a)
            for k in range(n + 1)
            for a in strings_with_ones(n, k)
            for b in strings_with_ones(n, k)
            if dominates(a, b)
        ]
        built = {tree_from_prints(b, a) for b, a in pairs}
        assert built == set(enum_full_binary_trees(n + 2))


def test_printed_binary_fingerprint_is_realisable():
    alpha = "1011101011110010"
    ah = reduced(alpha)
    # the weakest print it dominates: all zeros first
    bh = "0" * (len(ah) - ones(ah)) + "1" * ones(ah)
    t = tree_from_prints(bh, ah)
    assert binary_fingerprint(t) == alpha


def test_twin_pairs():
    single = ((), ())
    assert make_twin_binary(single, single) == (single, single)
    counts = [sum(1 for _ in enum_twin_binary_pairs(n)) for n in range(2, 8)]
    assert counts == [1, 2, 6, 22, 92, 422]
    with pytest.raises(NotTwins):
        make_twin_binary(left_comb(4), right_comb(4))


def test_twin_alternating_roundtrip():
    for n in range(2, 7):
        for a, b in enum_twin_binary_pairs(n):
            p = make_twin_binary(a, b)
            alt = trees.twin_alt_from_twin_binary(p)
            assert trees.is_twin_alternating(*alt)
            assert trees.twin_binary_from_twin_alt(alt) == p


def test_combs():
    assert binary_fingerprint(left_comb(5)) == "10000"
    assert binary_fingerprint(right_comb(5)) == "11110"


binary = st.integers(2, 12).flatmap(
    lambda n: st.lists(st.integers(0, 100), min_size=n - 2, max_size=n - 2)
)


def _grow(choices):
    t = ((), ())
    for c in choices:
        t = trees.expand_leaf(t, c % trees.n_leaves(t))
    return t


@settings(max_examples=200, deadline=None)
@given(binary)
def test_random_trees_roundtrip_through_prints(choices):
    t = _grow(choices)
    assert tree_from_prints(reduced_bodyprint(t), reduced_fingerprint(t)) == t
    assert parse_binary(format_binary(t)) == t


@settings(max_examples=200, deadline=None)
@given(st.text(alphabet="01", max_size=14))
def test_reverse_and_complement_are_involutions(s):
    assert reverse(reverse(s)) == s
    assert complement(complement(s)) == s
    assert complement(reverse(s)) == reverse(complement(s))
