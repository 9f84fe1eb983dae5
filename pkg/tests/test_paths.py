import itertools

import pytest
from hypothesis import given, settings, strategies as st

from baxterlab import oracle
from baxterlab.bits import dominates, strings_with_ones
from baxterlab.counting import theta, theta_determinant, theta_symmetric
from baxterlab.errors import DominanceViolated, LengthMismatch, ParseError
from baxterlab.paths import (
    DyckPair,
    LatticePath,
    PathTriple,
    bits_of_path,
    check_dyck_pair,
    dyck_pair_to_schnyder_prints,
    format_path,
    format_triple,
    is_symmetric_triple,
    parse_dyck_pair,
    parse_path,
    parse_triple,
    path_of_bits,
    reflect,
    schnyder_prints_to_dyck_pair,
    triple_to_twin_pair,
    twin_pair_to_triple,
    vertex_disjoint,
)
from baxterlab.trees import make_twin_binary

SINGLE = ((), ())


def test_path_of_bits_examples():
    assert path_of_bits("") == LatticePath((0, 0), "")
    p = path_of_bits("10100")
    assert p.steps == "RURUU" and p.end == (2, 3)


def test_bits_roundtrip_exhaustive():
    for n in range(13):
        for bits in itertools.product("01", repeat=n):
            s = "".join(bits)
            assert bits_of_path(path_of_bits(s, (3, -1))) == s


def test_path_format():
    p = LatticePath((1, -1), "RRU")
    assert format_path(p) == "(1,-1):RRU"
    assert parse_path("(1,-1):RRU") == p
    for bad in ("1,-1:RRU", "(1,-1):RX", "(a,0):"):
        with pytest.raises(ParseError):
            parse_path(bad)


def test_trivial_triple():
    t = twin_pair_to_triple(make_twin_binary(SINGLE, SINGLE))
    assert t == PathTriple(LatticePath((0, 2), ""), LatticePath((1, 1), ""), LatticePath((2, 0), ""))
    assert is_symmetric_triple(t)
    assert triple_to_twin_pair(t) == (SINGLE, SINGLE)


def test_theta_one_one_triples():
    found = list(oracle.enum_path_triples(1, 1))
    assert len(found) == 4 == theta(1, 1)
    assert not [t for t in found if is_symmetric_triple(t)]
    assert list(oracle.enum_path_triples(1, 1, symmetric_only=True)) == []


def test_triple_roundtrip_on_all_triples():
    for s in range(6):
        for k in range(s + 1):
            for t in oracle.enum_path_triples(k, s - k):
                p = triple_to_twin_pair(t)
                assert twin_pair_to_triple(p) == t


def test_triple_roundtrip_on_twin_pairs():
    for n in range(2, 8):
        for a, b in oracle.enum_twin_binary_pairs(n):
            p = make_twin_binary(a, b)
            assert triple_to_twin_pair(twin_pair_to_triple(p)) == p


def test_triple_counts_match_determinant():
    for s in range(9):
        for k in range(s + 1):
            n = sum(1 for _ in oracle.enum_path_triples(k, s - k))
            assert n == theta_determinant(k, s - k) == theta(k, s - k)


def test_symmetric_triples():
    for s in range(9):
        for k in range(s + 1):
            l = s - k
            sym = [t for t in oracle.enum_path_triples(k, l) if is_symmetric_triple(t)]
            assert len(sym) == theta_symmetric(k, l), (k, l)
            c2 = (k + 2, l + 2)
            for t in sym:
                assert reflect(t.p1, c2) == t.p3 and reflect(t.p3, c2) == t.p1
                assert reflect(t.p2, c2) == t.p2


def test_disjointness_agrees_with_dominance():
    # p1 from (0,2) with bits b and p2 from (1,1) with bits a: disjoint iff a dominates b
    for n in range(11):
        for k in range(n + 1):
            strings = list(strings_with_ones(n, k))
            for a in strings:
                for b in strings:
                    ps = [path_of_bits(b, (0, 2)), path_of_bits(a, (1, 1))]
                    assert vertex_disjoint(ps) == dominates(a, b)


def test_bad_triples():
    with pytest.raises(LengthMismatch):
        parse_triple("(0,2):\n(1,1):\n(2,1):\n")
    with pytest.raises(DominanceViolated):
        parse_triple("(0,2):RU\n(1,1):UR\n(2,0):RU\n")
    with pytest.raises(ParseError):
        parse_triple("(0,2):\n(1,1):\n")


def test_triple_format_roundtrip():
    for t in oracle.enum_path_triples(2, 2):
        text = format_triple(t)
        assert format_triple(parse_triple(text)) == text


def test_dyck_pair_n1():
    (d,) = list(oracle.enum_dyck_pairs(1))
    assert d == DyckPair(LatticePath((0, 0), "RU"), LatticePath((1, -1), "RU"))
    assert dyck_pair_to_schnyder_prints(d) == ("0", "0")
    assert schnyder_prints_to_dyck_pair("0", "0") == d


def test_dyck_pair_counts():
    assert [sum(1 for _ in oracle.enum_dyck_pairs(n)) for n in range(1, 5)] == [1, 3, 14, 84]


def test_dyck_prints_roundtrip():
    for n in range(1, 6):
        for d in oracle.enum_dyck_pairs(n):
            assert schnyder_prints_to_dyck_pair(*dyck_pair_to_schnyder_prints(d)) == d
            text = format_path(d.p1) + "\n" + format_path(d.p2) + "\n"
            assert parse_dyck_pair(text) == d


def test_dyck_chain_violations():
    with pytest.raises(DominanceViolated):
        schnyder_prints_to_dyck_pair("001", "100")  # 1001 crosses the diagonal
    with pytest.raises(DominanceViolated):
        schnyder_prints_to_dyck_pair("100", "010")  # 1010 does not dominate 1100
    with pytest.raises(LengthMismatch):
        schnyder_prints_to_dyck_pair("01", "10")
    with pytest.raises(DominanceViolated):
        check_dyck_pair(DyckPair(LatticePath((0, 0), "URRU"), LatticePath((1, -1), "RRUU")))


@settings(max_examples=100, deadline=None)
@given(st.text(alphabet="01", max_size=10), st.tuples(st.integers(-3, 3), st.integers(-3, 3)))
def test_reflection_is_an_involution(bits, c2):
    p = path_of_bits(bits, (0, 0))
    assert reflect(reflect(p, c2), c2) == p
