"""Command-line front end: convert, count, enumerate, verify, render.

Exit codes: 0 success, 2 parse or validation error, 3 verification failure.
"""

from __future__ import annotations

import argparse
import logging
import sys

from . import counting, formats, oracle, render, suites, trees
from .errors import BaxterLabError, InvariantViolated, UnknownFamily

log = logging.getLogger("baxterlab")

EXIT_OK, EXIT_INPUT, EXIT_VERIFY = 0, 2, 3


def _need(args, *names):
    missing = [n for n in names if getattr(args, n) is None]
    if missing:
        raise UnknownFamily(f"{args.family} needs " + ", ".join("--" + n for n in missing))
    return [getattr(args, n) for n in names]


def _count(args) -> int:
    fam = args.family
    table = {
        "baxter": (("n",), counting.baxter),
        "theta": (("k", "l"), counting.theta),
        "theta-symmetric": (("k", "l"), counting.theta_symmetric),
        "catalan": (("n",), counting.catalan),
        "narayana": (("n", "k"), counting.narayana),
        "schnyder": (("n",), counting.schnyder_count),
        "alternating-baxter": (("n",), counting.alternating_baxter_count),
    }
    if fam not in table:
        raise UnknownFamily(fam)
    names, fn = table[fam]
    return fn(*_need(args, *names))


def _enumerate(args):
    """Yield ``(kind, object)`` pairs, kind ``None`` for plain text items."""
    fam = args.family
    if fam in ("permutations", "baxter", "alternating-baxter", "symmetric-baxter"):
        (n,) = _need(args, "n")
        filt = "all" if fam == "permutations" else fam
        for p in oracle.enum_permutations(n, filt):
            yield "baxter", p
    elif fam == "binary-trees":
        (n,) = _need(args, "n")
        for t in oracle.enum_full_binary_trees(n):
            yield None, trees.format_binary(t) + "\n"
    elif fam == "twin-pairs":
        (n,) = _need(args, "n")
        for a, b in oracle.enum_twin_binary_pairs(n):
            yield "twinpair", trees.make_twin_binary(a, b)
    elif fam in ("triples", "symmetric-triples"):
        k, l = _need(args, "k", "l")
        for t in oracle.enum_path_triples(k, l, symmetric_only=fam == "symmetric-triples"):
            yield "triple", t
    elif fam == "dyck-pairs":
        (n,) = _need(args, "n")
        for d in oracle.enum_dyck_pairs(n):
            yield "dyckpair", d
    else:
        raise UnknownFamily(fam)


def _read(path):
    if path is None or path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _write(path, text):
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def cmd_convert(args):
    obj = formats.parse(args.src, _read(args.inp))
    out, _ = formats.convert(obj, args.src, args.dst)
    _write(args.out, formats.serialize(args.dst, out))
    return EXIT_OK


def cmd_count(args):
    print(_count(args))
    return EXIT_OK


def cmd_enumerate(args):
    n = 0
    for kind, obj in _enumerate(args):
        if args.limit is not None and n >= args.limit:
            break
        text = obj if kind is None else formats.serialize(kind, obj)
        if n and text.count("\n") > 1:
            sys.stdout.write("\n")
        sys.stdout.write(text)
        n += 1
    log.info("%d objects", n)
    return EXIT_OK


def cmd_verify(args):
    checks = suites.run(args.suite)
    failed = 0
    for c in checks:
        print(f"{'PASS' if c.ok else 'FAIL'} {c.name}: {c.detail}")
        if not c.ok:
            failed += 1
            if c.counterexample:
                print("  counterexample:")
                for ln in c.counterexample.rstrip("\n").splitlines():
                    print("    " + ln)
    print(f"{len(checks) - failed}/{len(checks)} checks passed")
    return EXIT_VERIFY if failed else EXIT_OK


def cmd_render(args):
    text = _read(args.inp)
    kind = args.kind or formats.detect_kind(text)
    svg = render.render(kind, formats.parse(kind, text))
    _write(args.out, svg)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="baxterlab", description=__doc__.splitlines()[0])
    ap.add_argument("-q", "--quiet", action="store_true", help="only print results")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("convert", help="convert an object between kinds")
    p.add_argument("--from", dest="src", required=True, choices=formats.KINDS)
    p.add_argument("--to", dest="dst", required=True, choices=formats.KINDS)
    p.add_argument("--in", dest="inp")
    p.add_argument("--out")
    p.set_defaults(fn=cmd_convert)

    for name, fn, hlp in (("count", cmd_count, "closed-form counts"),
                          ("enumerate", cmd_enumerate, "exhaustive oracle streams")):
        p = sub.add_parser(name, help=hlp)
        p.add_argument("family")
        p.add_argument("--n", type=int)
        p.add_argument("--k", type=int)
        p.add_argument("--l", type=int)
        if name == "enumerate":
            p.add_argument("--limit", type=int)
        p.set_defaults(fn=fn)

    p = sub.add_parser("verify", help="run a named verification suite")
    p.add_argument("suite", help="one of: all, " + ", ".join(suites.SUITES))
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("render", help="draw an object as SVG")
    p.add_argument("--in", dest="inp")
    p.add_argument("--out")
    p.add_argument("--kind", choices=formats.KINDS, help="input kind (detected when omitted)")
    p.set_defaults(fn=cmd_render)
    return ap


def _setup_logging(quiet: bool) -> None:
    """One stderr handler on the package logger, replaced on every call."""
    for h in [h for h in log.handlers if getattr(h, "baxterlab_cli", False)]:
        log.removeHandler(h)
    h = logging.StreamHandler(sys.stderr)
    h.baxterlab_cli = True
    h.setFormatter(logging.Formatter("%(name)s: %(message)s"))
    log.addHandler(h)
    log.setLevel(logging.WARNING if quiet else logging.INFO)


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    _setup_logging(args.quiet)
    try:
        return args.fn(args)
    except InvariantViolated as exc:
        print(f"error: invariant violated: {exc}", file=sys.stderr)
        return EXIT_VERIFY
    except (BaxterLabError, OSError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
