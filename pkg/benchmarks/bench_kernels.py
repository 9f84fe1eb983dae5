"""Time the compiled kernels against the pure-Python fallback.

Run with ``python benchmarks/bench_kernels.py``.  The two backends must agree
on every result; the script exits non-zero if they do not.
"""

from __future__ import annotations

import argparse
import sys
import timeit

from baxterlab import _kernels_py

try:
    from baxterlab import _ckernels
except ImportError:
    _ckernels = None

CASES = {
    "baxter_census(9)": ("baxter_census", (9,), {}),
    "is_baxter(S_7 sweep)": ("sweep", (7,), {}),
    "triples(4,4)": ("count_nonintersecting", ([(0, 2), (1, 1), (2, 0)], [(4, 6), (5, 5), (6, 4)]), {}),
    "dyck pairs n=8": ("count_nonintersecting", ([(0, 0), (1, -1)], [(8, 8), (9, 7)]), {"below_diagonal": True}),
}


def _sweep(mod, n):
    from itertools import permutations

    return sum(1 for p in permutations(range(1, n + 1)) if mod.is_baxter(p))


def _call(mod, name, args, kwargs):
    if name == "sweep":
        return _sweep(mod, *args)
    return getattr(mod, name)(*args, **kwargs)


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args(argv)
    if _ckernels is None:
        print("compiled extension not built; only the fallback is available")
    print(f"{'case':24s} {'pure [s]':>10s} {'cython [s]':>11s} {'speedup':>8s}")
    bad = 0
    for label, (name, a, kw) in CASES.items():
        pure = min(timeit.repeat(lambda: _call(_kernels_py, name, a, kw), number=1, repeat=args.repeat))
        want = _call(_kernels_py, name, a, kw)
        if _ckernels is None:
            print(f"{label:24s} {pure:10.4f} {'-':>11s} {'-':>8s}")
            continue
        fast = min(timeit.repeat(lambda: _call(_ckernels, name, a, kw), number=1, repeat=args.repeat))
        got = _call(_ckernels, name, a, kw)
        if got != want:
            bad += 1
            print(f"{label}: backends disagree: {got!r} != {want!r}")
        print(f"{label:24s} {pure:10.4f} {fast:11.4f} {pure / fast:7.1f}x")
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main())
