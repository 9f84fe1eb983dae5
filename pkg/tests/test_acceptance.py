"""The eleven acceptance criteria, one test each.

Every test records a ``PASS``/``FAIL`` line in ``REPORT``; the lines are printed
in the pytest terminal summary and when this file is run as a script.
"""

import time

import pytest

from baxterlab import suites

# (criterion, suite, time budget in seconds)
CRITERIA = [
    (1, "baxter-sequence", 60),
    (2, "theta", 30),
    (3, "triples", 60),
    (4, "narayana", 10),
    (5, "roundtrips", 300),
    (6, "pyramid", 120),
    (7, "schnyder", 60),
    (8, "symmetric", 120),
    (9, "alternating", 60),
    (10, "structural", 120),
    (11, "fingerprints", 30),
]

REPORT = {}


def evaluate(number, suite, budget):
    start = time.perf_counter()
    checks = suites.run(suite)
    elapsed = time.perf_counter() - start
    failed = [c for c in checks if not c.ok]
    ok = not failed and elapsed < budget
    detail = f"{len(checks) - len(failed)}/{len(checks)} checks, {elapsed:.1f}s of {budget}s"
    if failed:
        detail += f"; first failure: {failed[0].name} ({failed[0].detail})"
    line = f"{'PASS' if ok else 'FAIL'} criterion {number}: {suite}: {detail}"
    REPORT[number] = line
    print(line)
    return ok, failed, elapsed


@pytest.mark.parametrize("number, suite, budget", CRITERIA, ids=[f"c{n}-{s}" for n, s, _ in CRITERIA])
def test_criterion(number, suite, budget):
    ok, failed, elapsed = evaluate(number, suite, budget)
    assert not failed, "\n".join(f"{c.name}: {c.detail}\n{c.counterexample}" for c in failed)
    assert elapsed < budget


if __name__ == "__main__":
    results = [evaluate(*c)[0] for c in CRITERIA]
    raise SystemExit(0 if all(results) else 1)
