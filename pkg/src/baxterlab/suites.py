"""Named verification suites, shared by ``baxterlab verify`` and the acceptance tests.

Each suite returns a list of :class:`Check` results.  A failing check carries a
serialized counterexample so it can be replayed with ``baxterlab convert``.
"""

from __future__ import annotations

from functools import lru_cache
from typing import NamedTuple

from . import baxter, bipolar, counting, kernels, oracle, orientations, paths, trees
from .bits import complement, dominates, ones, reduced, reverse, strings_with_ones
from .errors import BaxterLabError, UnknownFamily
from .formats import serialize
from .planemap import RootedMap, special_completion

BAXTER_VALUES = (1, 2, 6, 22, 92, 422, 2074, 10754)


class Check(NamedTuple):
    name: str
    ok: bool
    detail: str = ""
    counterexample: str = ""


def _equal(name, got, want, counterexample=""):
    if got == want:
        return Check(name, True, f"{got}")
    return Check(name, False, f"got {got}, expected {want}", counterexample)


def _for_all(name, items, prop, show=repr):
    """Run ``prop`` on every item; stop at the first one that fails or raises."""
    count = 0
    for x in items:
        try:
            ok = prop(x)
        except BaxterLabError as exc:
            return Check(name, False, f"{type(exc).__name__}: {exc}", show(x))
        if ok is False:
            return Check(name, False, "property failed", show(x))
        count += 1
    return Check(name, True, f"{count} instances")


# ---------------------------------------------------------------------------
# shared instance pools


@lru_cache(maxsize=None)
def twin_pairs(max_leaves: int = 7):
    return tuple(p for n in range(2, max_leaves + 1) for p in oracle.enum_twin_binary_pairs(n))


@lru_cache(maxsize=None)
def separating_decompositions(max_leaves: int = 7):
    out = []
    for a, b in twin_pairs(max_leaves):
        p = trees.make_twin_binary(a, b)
        out.append(orientations.twin_alt_to_separating(trees.twin_alt_from_twin_binary(p)))
    return tuple(out)


@lru_cache(maxsize=None)
def bipolar_orientations(max_leaves: int = 7):
    return tuple(bipolar.separating_to_bipolar(sd) for sd in separating_decompositions(max_leaves))


@lru_cache(maxsize=None)
def schnyder_woods(max_n: int = 5):
    out = [bipolar.dyck_to_schnyder(d) for n in range(1, max_n + 1) for d in oracle.enum_dyck_pairs(n)]
    for t in (oracle.k4(), oracle.octahedron()):
        out.extend(orientations.color_three_orientation(o) for o in oracle.enum_three_orientations(t))
    return tuple(out)


def _pair_text(p):
    return trees.format_twin_pair(p)


# ---------------------------------------------------------------------------
# suites


def suite_baxter_sequence(max_n: int = 8):
    checks = []
    for n in range(1, max_n + 1):
        got = sum(1 for _ in oracle.enum_permutations(n, "baxter"))
        checks.append(_equal(f"B_{n} by definition", got, BAXTER_VALUES[n - 1]))
        checks.append(_equal(f"B_{n} formula", counting.baxter(n), got))
    return checks


def suite_theta(max_size: int = 7):
    checks = []
    for n in range(1, max_size + 1):
        table = {}
        for p in oracle.enum_permutations(n, "baxter"):
            k = baxter.descents(p)
            table[k] = table.get(k, 0) + 1
        for k in range(n):
            checks.append(_equal(f"Theta({k},{n - 1 - k})", table.get(k, 0), counting.theta(k, n - 1 - k)))
    return checks


def suite_triples(max_kl: int = 8):
    checks = []
    for s in range(max_kl + 1):
        for k in range(s + 1):
            l = s - k
            brute = sum(1 for _ in oracle.enum_path_triples(k, l))
            want = counting.theta(k, l)
            ok = brute == want == counting.theta_determinant(k, l)
            detail = f"formula {want}, determinant {counting.theta_determinant(k, l)}, exhaustive {brute}"
            checks.append(Check(f"triples({k},{l})", ok, detail))
    return checks


def suite_narayana(max_kl: int = 8):
    checks = []
    for s in range(max_kl + 1):
        leaves = s + 2
        by_left = {}
        for t in oracle.enum_full_binary_trees(leaves):
            k = ones(oracle.leaf_directions(t)) - 1
            by_left[k] = by_left.get(k, 0) + 1
        for k in range(s + 1):
            checks.append(_equal(f"N({s + 1},{k + 1})", by_left.get(k, 0), counting.narayana(s + 1, k + 1)))
        checks.append(_equal(f"C_{s + 1} row sum", sum(by_left.values()), counting.catalan(s + 1)))
    return checks


def _roundtrip_checks(max_leaves: int, max_perm: int):
    pairs = [trees.make_twin_binary(a, b) for a, b in twin_pairs(max_leaves)]
    sds = separating_decompositions(max_leaves)
    bps = bipolar_orientations(max_leaves)
    sws = schnyder_woods()
    form = bipolar.separating_form
    checks = []

    def two(sd):
        o = orientations.forget_colors(sd)
        return orientations.color_two_orientation(o) == sd and orientations.forget_colors(
            orientations.color_two_orientation(o)
        ) == o

    checks.append(_for_all("2-orientation <-> separating decomposition", sds, two, lambda sd: serialize("sepdec", sd)))

    def twin_quad(p):
        alt = trees.twin_alt_from_twin_binary(p)
        sd = orientations.twin_alt_to_separating(alt)
        return orientations.separating_to_twin_alt(sd) == alt and form(
            orientations.twin_alt_to_separating(orientations.separating_to_twin_alt(sd))
        ) == form(sd)

    checks.append(_for_all("twin-alternating <-> quadrangulation", pairs, twin_quad, _pair_text))

    ordered = [t for n in range(2, 9) for t in trees.ordered_trees(n)]

    def alt_bin(t):
        b = trees.alt_to_binary(t)
        return trees.binary_to_alt(b) == t and trees.alt_to_binary(trees.binary_to_alt(b)) == b

    checks.append(_for_all("alternating <-> binary", ordered, alt_bin, trees.format_ordered))

    binaries = [t for n in range(2, 11) for t in trees.binary_trees(n)]
    checks.append(
        _for_all(
            "tree -> prints -> tree",
            binaries,
            lambda t: trees.tree_from_prints(trees.reduced_bodyprint(t), trees.reduced_fingerprint(t)) == t,
            trees.format_binary,
        )
    )
    prints = [
        (b, a)
        for n in range(0, 9)
        for k in range(n + 1)
        for a in strings_with_ones(n, k)
        for b in strings_with_ones(n, k)
        if dominates(a, b)
    ]

    def prints_tree(ba):
        t = trees.tree_from_prints(*ba)
        return (trees.reduced_bodyprint(t), trees.reduced_fingerprint(t)) == ba

    checks.append(_for_all("prints -> tree -> prints", prints, prints_tree))

    def pair_triple(p):
        t = paths.twin_pair_to_triple(p)
        return paths.triple_to_twin_pair(t) == p and paths.twin_pair_to_triple(paths.triple_to_twin_pair(t)) == t

    checks.append(_for_all("twin pair <-> triple", pairs, pair_triple, _pair_text))

    def pair_rect(p):
        r = baxter.validate_rectangulation(baxter.rectangulation_of_twin_pair(p))
        return baxter.twin_pair_of_rectangulation(r) == p and baxter.rectangulation_of_twin_pair(
            baxter.twin_pair_of_rectangulation(r)
        ) == r

    checks.append(_for_all("twin pair <-> rectangulation", pairs, pair_rect, _pair_text))

    perms = [p for n in range(1, max_perm + 1) for p in oracle.enum_permutations(n, "baxter")]

    def rect_perm(p):
        r = baxter.rectangulation_of_twin_pair(baxter.twin_pair_of_baxter(p))
        q = baxter.baxter_of_rectangulation(r)
        return q == p and baxter.rectangulation_of_twin_pair(baxter.twin_pair_of_baxter(q)) == r

    checks.append(_for_all("rectangulation <-> Baxter", perms, rect_perm, baxter.format_permutation))

    def bip_sep(b):
        sd = bipolar.bipolar_to_separating(b)
        return bipolar.bipolar_form(bipolar.separating_to_bipolar(sd)) == bipolar.bipolar_form(b) and form(
            bipolar.bipolar_to_separating(bipolar.separating_to_bipolar(sd))
        ) == form(sd)

    checks.append(_for_all("bipolar <-> separating decomposition", bps, bip_sep, lambda b: serialize("bipolar", b)))

    def sch_star(sw):
        sb = bipolar.schnyder_to_star_bipolar(sw)
        back = bipolar.star_bipolar_to_schnyder(sb)
        again = bipolar.schnyder_to_star_bipolar(back)
        return bipolar.schnyder_form(back) == bipolar.schnyder_form(sw) and bipolar.bipolar_form(
            again.bipolar
        ) == bipolar.bipolar_form(sb.bipolar)

    checks.append(_for_all("Schnyder <-> star bipolar", sws, sch_star, lambda sw: serialize("schnyder", sw)))

    dycks = [d for n in range(1, 6) for d in oracle.enum_dyck_pairs(n)]

    def sch_dyck(d):
        sw = bipolar.dyck_to_schnyder(d)
        return bipolar.schnyder_to_dyck(sw) == d and bipolar.schnyder_form(
            bipolar.dyck_to_schnyder(bipolar.schnyder_to_dyck(sw))
        ) == bipolar.schnyder_form(sw)

    checks.append(_for_all("Schnyder <-> Dyck pair", dycks, sch_dyck, lambda d: serialize("dyckpair", d)))
    return checks


def suite_roundtrips(max_leaves: int = 7, max_perm: int = 7):
    return _roundtrip_checks(max_leaves, max_perm)


def suite_pyramid(max_leaves: int = 7):
    pairs = [trees.make_twin_binary(a, b) for a, b in twin_pairs(max_leaves)]
    outputs = {}
    for p in pairs:
        try:
            pi = baxter.baxter_of_rectangulation(baxter.rectangulation_of_twin_pair(p))
        except BaxterLabError as exc:
            return [Check("pyramid runs", False, f"{type(exc).__name__}: {exc}", _pair_text(p))]
        outputs[p] = pi
    bad_a = [p for p, pi in outputs.items() if not oracle.baxter_by_definition(pi)]
    bad_b = [p for p, pi in outputs.items() if baxter.twin_pair_of_permutation(pi) != p]
    seen = {}
    clash = None
    for p, pi in outputs.items():
        if pi in seen:
            clash = (seen[pi], p)
            break
        seen[pi] = p
    return [
        Check("Claim A: output is Baxter", not bad_a, f"{len(pairs)} pairs", _pair_text(bad_a[0]) if bad_a else ""),
        Check("Claim B: (Max, Min) recovers the pair", not bad_b, f"{len(pairs)} pairs",
              _pair_text(bad_b[0]) if bad_b else ""),
        Check("Claim C: outputs are distinct", clash is None, f"{len(seen)} permutations",
              "" if clash is None else _pair_text(clash[0]) + _pair_text(clash[1])),
    ]


def suite_schnyder(max_n: int = 8):
    checks = [_equal("V_1", counting.schnyder_count(1), 1), _equal("V_2", counting.schnyder_count(2), 3),
              _equal("V_3", counting.schnyder_count(3), 14)]
    c = counting.catalan
    for n in range(1, max_n + 1):
        formula = c(n + 2) * c(n) - c(n + 1) ** 2
        got = sum(1 for _ in oracle.enum_dyck_pairs(n))
        dfs = kernels.count_nonintersecting([(0, 0), (1, -1)], [(n, n), (n + 1, n - 1)], below_diagonal=True)
        checks.append(_equal(f"V_{n} exhaustive pairs", got, formula))
        checks.append(_equal(f"V_{n} path kernel", dfs, formula))
        checks.append(_equal(f"V_{n} closed form", counting.schnyder_count(n), formula))
    return checks


def suite_symmetric(max_kl: int = 8, max_perm: int = 8):
    checks = []
    for s in range(max_kl + 1):
        for k in range(s + 1):
            l = s - k
            got = sum(1 for _ in oracle.enum_path_triples(k, l, symmetric_only=True))
            checks.append(_equal(f"symmetric triples({k},{l})", got, counting.theta_symmetric(k, l)))
            if k % 2 and l % 2 and got:
                checks.append(Check(f"forced zero({k},{l})", False, f"{got} triples"))
    for n in range(1, max_perm + 1):
        table = {}
        for p in oracle.enum_permutations(n, "symmetric-baxter"):
            d = baxter.descents(p)
            table[d] = table.get(d, 0) + 1
        for k in range(n):
            want = counting.theta_symmetric(k, n - 1 - k)
            checks.append(_equal(f"symmetric Baxter n={n} descents={k}", table.get(k, 0), want))
    return checks


def suite_alternating(max_m: int = 8):
    checks = []
    for m in range(1, max_m + 1):
        got = sum(1 for _ in oracle.enum_permutations(m, "alternating-baxter"))
        c = counting.catalan
        k = (m + 1) // 2 if m % 2 else (m + 2) // 2
        formula = c(k - 1) * c(k) if (m + 1) % 2 == 0 else c(k - 1) ** 2
        checks.append(_equal(f"alternating Baxter m={m}", got, formula))
        checks.append(_equal(f"alternating formula m={m}", counting.alternating_baxter_count(m), formula))
    return checks


def suite_structural(max_leaves: int = 7):
    sds = separating_decompositions(max_leaves)
    checks = [
        _for_all(
            "equatorial line is a single path",
            sds,
            lambda sd: orientations.book_embedding(sd) is not None,
            lambda sd: serialize("sepdec", sd),
        )
    ]

    def ham(b):
        g: RootedMap = b.base
        bipolar.validate_hamiltonian(special_completion(g), bipolar.hamiltonian_cycle(g, b))
        return True

    checks.append(
        _for_all("Hamiltonian cycle of the special completion", bipolar_orientations(max_leaves), ham,
                 lambda b: serialize("bipolar", b))
    )
    return checks


def suite_fingerprints(max_vertices: int = 9, max_leaves: int = 10):
    ordered = [t for n in range(2, max_vertices + 1) for t in trees.ordered_trees(n)]

    def transform(t):
        f = {m: trees.fingerprint(t, m) for m in ("sw", "nw", "ne", "se")}
        return f["sw"] == complement(reverse(f["ne"])) and f["nw"] == complement(reverse(f["se"]))

    binaries = [t for n in range(2, max_leaves + 1) for t in trees.binary_trees(n)]

    def a_dom_b(t):
        a, b = trees.reduced_fingerprint(t), trees.reduced_bodyprint(t)
        n = trees.n_leaves(t) - 1
        k = trees.left_leaves(t)
        return len(a) == len(b) == n - 1 and ones(a) == ones(b) == k - 1 and dominates(a, b)

    def one_count(t):
        return ones(reduced(trees.binary_fingerprint(t))) == trees.left_leaves(t) - 1

    return [
        _for_all("fingerprint transformation", ordered, transform, trees.format_ordered),
        _for_all("fingerprint dominates bodyprint", binaries, a_dom_b, trees.format_binary),
        _for_all("fingerprint ones = left leaves - 1", binaries, one_count, trees.format_binary),
    ]


SUITES = {
    "baxter-sequence": suite_baxter_sequence,
    "theta": suite_theta,
    "triples": suite_triples,
    "narayana": suite_narayana,
    "roundtrips": suite_roundtrips,
    "pyramid": suite_pyramid,
    "schnyder": suite_schnyder,
    "symmetric": suite_symmetric,
    "alternating": suite_alternating,
    "structural": suite_structural,
    "fingerprints": suite_fingerprints,
}


def run(name: str):
    """Checks of one suite, or of every suite for ``all``."""
    if name == "all":
        return [c for fn in SUITES.values() for c in fn()]
    try:
        fn = SUITES[name]
    except KeyError:
        raise UnknownFamily(name) from None
    return fn()
