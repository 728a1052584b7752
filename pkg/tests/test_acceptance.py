"""Acceptance suite: one PASS/FAIL line per criterion, all comparisons exact.

Run with ``pytest tests/test_acceptance.py -v`` (lines are printed even
under capture) or directly with ``python tests/test_acceptance.py``.
"""
import json
import subprocess
import sys
import time
from math import comb
from pathlib import Path

import pytest

from treebij.bijection import big_flip, phi, verify_bijection
from treebij.core import pv
from treebij.enumerate import FAMILIES, gen_binary_shapes, gen_colored, gen_labeled
from treebij.identity import (
    poly_brute,
    poly_closed,
    poly_recurrence,
    rhs_expanded,
    rhs_postnikov,
    shape_contributions,
    shape_product_term,
    shape_subset_term,
    special_values,
)
from treebij.series import Series, build_series, check_functional, check_ode, degenerate_exponent
from treebij.serialize import dumps, loads

DATA = Path(__file__).parent / "data"


def catalan(n):
    return comb(2 * n, n) // (n + 1)


def golden(name):
    return (DATA / name).read_text().strip()


def criterion_1():
    bad = [n for n in range(1, 9) if rhs_postnikov(n) != (n + 1) ** (n - 1)]
    contrib = shape_contributions(3)
    ok = not bad and contrib == [3, 3, 4, 3, 3] and sum(contrib) == 16
    return ok, f"hook sum = (n+1)^(n-1) for n=1..8, n=3 terms {[int(c) for c in contrib]}; failures {bad}"


def criterion_2():
    bad = [n for n in range(1, 9) if rhs_expanded(n) != 2 ** n * (n + 1) ** (n - 1)]
    per_shape = [n for n in range(1, 6)
                 if any(shape_subset_term(s) != shape_product_term(s) for s in gen_binary_shapes(n))]
    return not bad and not per_shape, f"expanded sum for n=1..8, subset vs product per shape n<=5; failures {bad + per_shape}"


def criterion_3():
    sizes = []
    for n in range(7):
        counted = sum(1 for _ in gen_colored("binary", n, "Dn"))
        weighted = sum(2 ** pv(b) for b in gen_labeled("binary", n))
        closed = 2 ** n * (n + 1) ** (n - 1) if n else 1
        sizes.append((counted, weighted, closed))
    ok = all(a == b == c for a, b, c in sizes)
    return ok, f"|D_n| for n=0..6: {[s[0] for s in sizes]}"


def criterion_4():
    failed = []
    for n in range(6):
        failed += [c.line() for c in verify_bijection(n) if not c.passed]
    return not failed, "full_map injective, image = bicolored forests, roundtrip, stage boundaries, n<=5" + \
        (f"; {failed}" if failed else "")


def criterion_5():
    D = loads(golden("flip_input.json"))
    flipped = dumps(big_flip(D))
    Q = dumps(phi(loads(golden("flip_output.json"))))
    ok = flipped == golden("flip_output.json") and Q == golden("phi_output.json")
    return ok, "big_flip and phi on the worked example, byte-exact"


POLY_CASES = (
    [("kary", n, 2) for n in range(7)]
    + [("kary", n, 3) for n in range(6)]
    + [("forests", n, None) for n in range(7)]
    + [("plane_forests", n, None) for n in range(7)]
    + [("trees", n, None) for n in range(6)]  # indexed by n, so n+1 <= 6 vertices
    + [("plane_trees", n, None) for n in range(6)]
)


def criterion_6():
    bad = [case for case in POLY_CASES if poly_closed(*case) != poly_brute(*case)]
    bad += [("recurrence", n, k) for k in (2, 3, 4) for n in range(9)
            if poly_recurrence(n, k) != poly_closed("kary", n, k)]
    return not bad, f"closed = brute on {len(POLY_CASES)} cases, recurrence = closed on 27 cases; failures {bad}"


def criterion_7():
    failed = []
    for n in range(1, 11):
        failed += [c.line() for c in special_values(n) if not c.passed]
    return not failed, "t=1 and t=2 specializations for n=1..10" + (f"; {failed}" if failed else "")


SERIES_CASES = [("kary", 2), ("kary", 3), ("kary", 4), ("forests", None), ("plane_forests", None)]


def criterion_8():
    results = [check_ode(f, 11, k) for f, k in SERIES_CASES]
    results += [check_functional(f, 8, t0, k) for f, k in SERIES_CASES for t0 in range(-3, 6)
                if degenerate_exponent(f, t0, k) != 0]
    P = build_series("plane_forests", 10).specialize(1)
    catalan_ok = P == Series.one(10) + (P * P).shift() and [P[n] for n in range(11)] == [catalan(n) for n in range(11)]
    failed = [r.line() for r in results if not r.passed]
    return not failed and catalan_ok, f"{len(results)} series checks, Catalan equation {catalan_ok}" + \
        (f"; {failed}" if failed else "")


def _cli(*argv, stdin=None):
    return subprocess.run([sys.executable, "-m", "treebij.cli", *argv], input=stdin, capture_output=True,
                          text=True, check=False)


def criterion_9():
    problems = []
    for family in FAMILIES:
        k = 3 if family == "kary" else None
        for n in range(6):
            for s in gen_labeled(family, n, k):
                text = dumps(s)
                if loads(text) != s or dumps(loads(text)) != text:
                    problems.append(f"roundtrip {family} n={n}")
                    break
    for constraint in ("Dn", "En", "Gn", "Qn"):
        for s in gen_colored(None, 4, constraint):
            if loads(dumps(s)) != s:
                problems.append(f"roundtrip {constraint}")
                break
    codes = {
        "ok": _cli("count", "--family", "forests", "--n", "3").returncode,
        "usage": _cli("count", "--family", "heaps", "--n", "3").returncode,
        "malformed": _cli("map", "--name", "phi", stdin="{oops").returncode,
        "domain": _cli("map", "--name", "big_flip", stdin=golden("flip_output.json")).returncode,
    }
    if codes != {"ok": 0, "usage": 2, "malformed": 2, "domain": 1}:
        problems.append(f"exit codes {codes}")
    a = _cli("enum", "--family", "plane_trees", "--n", "4").stdout
    b = _cli("enum", "--family", "plane_trees", "--n", "4").stdout
    c = _cli("enum", "--family", "binary", "--n", "4", "--parallel", "2").stdout
    if a != b or c != _cli("enum", "--family", "binary", "--n", "4").stdout:
        problems.append("enum output not byte-stable")
    v = json.loads(_cli("verify", "--check", "postnikov", "--n", "3", "--json").stdout)
    if not v["passed"]:
        problems.append("verify --json")
    return not problems, f"serialization roundtrip n<=5, exit codes, deterministic bytes; problems {problems}"


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5,
            criterion_6, criterion_7, criterion_8, criterion_9]


def evaluate(fn):
    start = time.perf_counter()
    ok, detail = fn()
    elapsed = time.perf_counter() - start
    number = fn.__name__.split("_")[1]
    return ok, f"{'PASS' if ok else 'FAIL'} criterion {number} ({elapsed:.1f}s): {detail}"


@pytest.mark.parametrize("fn", CRITERIA, ids=lambda f: f.__name__)
def test_criterion(fn, capsys):
    ok, line = evaluate(fn)
    with capsys.disabled():
        print("\n" + line)
    assert ok, line


if __name__ == "__main__":
    outcomes = [evaluate(fn) for fn in CRITERIA]
    for _, line in outcomes:
        print(line)
    sys.exit(0 if all(ok for ok, _ in outcomes) else 1)
