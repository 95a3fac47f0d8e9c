"""Acceptance gate: one PASS/FAIL line per criterion.

Run with ``pytest tests/test_acceptance.py`` (the lines are repeated in the
terminal summary) or directly with ``python tests/test_acceptance.py``.
"""

import math
import random
import time
from itertools import groupby

from gbwt.cli import _verify_checks
from gbwt.inversion import invert_generic, invert_local
from gbwt.oracles import naive_circular_count, naive_matrix
from gbwt.orderings import Kind, OrderingScheme
from gbwt.query import QueryIndex, count_generic, count_local
from gbwt.runmin import count_runs, entropy0, exhaustive_min_runs, min_runs
from gbwt.transform import transform_fast, transform_naive

from helpers import (
    KINDS, primitive_strings, random_explicit, random_local1, random_primitive, random_repetitive,
    random_scheme,
)

EXAMPLE_TEXT = b"aabaaabac"
EXAMPLE_SCHEME = OrderingScheme.explicit("abc", {"": "bac", "a": "cab", "aa": "cba"})

RESULTS = []


def report(number, title, ok, detail=""):
    line = f"{'PASS' if ok else 'FAIL'} criterion {number}: {title}"
    if detail:
        line += f" ({detail})"
    RESULTS.append(line)
    print(line)
    assert ok, line


def test_1_golden_vectors():
    cases = [
        (OrderingScheme.standard(), (b"bcaaabaaa", 1)),
        (OrderingScheme.abwt(), (b"baabcaaaa", 4)),
        (EXAMPLE_SCHEME, (b"aabcabaaa", 3)),
    ]
    got = [((fn(EXAMPLE_TEXT, sch).L, fn(EXAMPLE_TEXT, sch).I), want)
           for sch, want in cases for fn in (transform_naive, transform_fast)]
    bad = [g for g, w in got if g != w]
    report(1, "golden vectors, naive and fast paths", not bad, f"{len(got)} checks, {len(bad)} mismatches")


def test_2_counting():
    rng = random.Random(2024)
    triples = local_checked = bad = 0
    while triples < 10_000:
        kind = KINDS[triples // 10 % 4]
        s = random_primitive(rng, rng.randint(1, 200), rng.randint(1, 5))
        sch = random_scheme(rng, s, kind)
        qi = QueryIndex(transform_fast(s, sch).L, sch)
        for _ in range(10):
            if rng.random() < 0.75:
                start = rng.randrange(len(s))
                x = (s * 3)[start:start + rng.randint(1, min(len(s) + 2, 12))]
            else:
                x = bytes(rng.choice(b"abcde") for _ in range(rng.randint(1, 4)))
            got = count_generic(qi, x)
            bad += got.len != naive_circular_count(s, x)
            if kind == "local1":
                bad += count_local(qi, x) != got
                local_checked += 1
            triples += 1
    report(2, "count_generic vs circular scan, count_local identical",
           bad == 0, f"{triples} triples, {local_checked} local, {bad} mismatches")


def _log_uniform(rng, hi):
    return max(2, round(math.exp(rng.uniform(math.log(2), math.log(hi)))))


def test_3_inversion_round_trip():
    rng = random.Random(3)
    exhaustive = bad = 0
    for n in range(2, 9):
        for s in primitive_strings(b"ab", n):
            for _ in range(50):
                sch = random_explicit(rng, s)
                out = transform_fast(s, sch)
                bad += invert_generic(out.L, out.I, sch) != s
                exhaustive += 1
    sizes = [2000] * 5 + [_log_uniform(rng, 2000) for _ in range(495)]
    local = 0
    for k, n in enumerate(sizes):
        s = random_primitive(rng, n, rng.randint(2, 6))
        sch = random_scheme(rng, s, KINDS[k % 4])
        out = transform_fast(s, sch)
        back = invert_generic(out.L, out.I, sch)
        bad += back != s
        if sch.kind is Kind.LOCAL1:
            bad += invert_local(out.L, out.I, sch) != back
            local += 1
    report(3, "invert(transform(s)) = s, local = generic",
           bad == 0, f"{exhaustive} exhaustive, {len(sizes)} random ({local} local1), {bad} failures")


def _pair_bijection_holds(s, sch):
    rows = naive_matrix(s, sch).rows
    symbols = sorted(set(s))
    for x1 in symbols:
        for x2 in symbols:
            left = [r[1:] + r[:1] for r in rows if r[0] == x1 and r[1] == x2]
            right = [r for r in rows if r[0] == x2 and r[-1] == x1]
            if left != right:
                return False
    return True


def test_4_pair_rotation_bijection():
    rng = random.Random(4)
    checked = bad = 0
    for n in range(2, 11):
        for s in primitive_strings(b"abc", n):
            bad += not _pair_bijection_holds(s, random_local1(rng, set(s)))
            checked += 1
    report(4, "row-by-row order-preserving correspondence for local1 schemes",
           bad == 0, f"{checked} strings, {bad} violations")


def test_5_runmin_optimality():
    checked = bad = 0
    for alphabet, top in ((b"ab", 10), (b"abc", 9)):
        for n in range(1, top + 1):
            for s in primitive_strings(alphabet, n):
                res = min_runs(s)
                bad += res.opt != exhaustive_min_runs(s) or count_runs(res.transform.L) != res.opt
                checked += 1
    best = min_runs(EXAMPLE_TEXT)
    example_ok = (best.opt <= 5 and best.opt == exhaustive_min_runs(EXAMPLE_TEXT)
                  and count_runs(transform_fast(EXAMPLE_TEXT, best.scheme).L) == best.opt)
    report(5, "run minimisation equals exhaustive optimum and is realised",
           bad == 0 and example_ok, f"{checked} strings, {bad} mismatches, opt(aabaaabac)={best.opt}")


def _best_time(fn, repeat):
    best = math.inf
    for _ in range(repeat):
        t = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t)
    return best


def test_6_complexity_direction():
    rng = random.Random(6)
    local_sch = OrderingScheme.local1("acgt", {ord("a"): "tgca", ord("g"): "catg"})
    local = []
    for n in (100_000, 200_000):
        s = random_primitive(rng, n, 4, b"acgt")
        out = transform_fast(s, local_sch)
        local.append(_best_time(lambda: invert_local(out.L, out.I, local_sch), 3))
    generic = []
    for n in (2000, 4000):
        s = random_primitive(rng, n, 4, b"acgt")
        sch = random_explicit(rng, s, keys=20)
        out = transform_fast(s, sch)
        generic.append(_best_time(lambda: invert_generic(out.L, out.I, sch), 1))
    r_local, r_generic = local[1] / local[0], generic[1] / generic[0]
    report(6, "doubling n: local ratio < 3, generic ratio > 3", r_local < 3 and r_generic > 3,
           f"local x{r_local:.2f}, generic x{r_generic:.2f}")


def _independent_h0(t):
    n = len(t)
    return -sum(c / n * math.log2(c / n) for c in (t.count(b) for b in set(t)))


def _independent_runs(t):
    return sum(1 for _ in groupby(t))


def test_7_reported_statistics():
    rng = random.Random(7)
    inputs = [(EXAMPLE_TEXT, sch) for sch in
              (OrderingScheme.standard(), OrderingScheme.abwt(), EXAMPLE_SCHEME)]
    for _ in range(40):
        s = random_repetitive(rng, rng.randint(30, 600), rng.randint(2, 4))
        inputs.append((s, random_scheme(rng, s)))
    bad = 0
    for s, sch in inputs:
        checks = {name: (ok, detail) for name, ok, detail in _verify_checks(s, sch, None, 4096)}
        bad += not all(ok for ok, _ in checks.values())
        L = transform_fast(s, sch).L
        want = f"n={len(L)} runs={_independent_runs(L)} H0={_independent_h0(L):.6f} bits/symbol"
        bad += checks["report"][1] != want
        bad += count_runs(L) != _independent_runs(L)
        opt = min_runs(s).opt
        bad += opt > count_runs(transform_fast(s, OrderingScheme.standard()).L)
        bad += opt > count_runs(transform_fast(s, OrderingScheme.abwt()).L)
        bad += opt > count_runs(L)
        bad += abs(entropy0(L) - _independent_h0(L)) > 1e-12
    report(7, "reported runs and H0 match recomputation, opt <= runs(BWT), runs(ABWT)",
           bad == 0, f"{len(inputs)} inputs, {bad} discrepancies")


if __name__ == "__main__":
    failed = 0
    for name, fn in list(globals().items()):
        if name.startswith("test_") and callable(fn):
            try:
                fn()
            except AssertionError:
                failed += 1
    raise SystemExit(1 if failed else 0)
