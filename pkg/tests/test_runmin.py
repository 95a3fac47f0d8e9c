import math
import random
from collections import Counter

import pytest

from gbwt.errors import AlphabetTooLarge, InstanceTooLarge, NotPrimitive
from gbwt.orderings import Alphabet, OrderingScheme
from gbwt.runmin import count_runs, entropy0, exhaustive_min_runs, min_runs, run_table
from gbwt.transform import build_rotation_trie, transform

from helpers import primitive_strings, random_explicit, random_primitive


def test_count_runs():
    assert count_runs("bcaaabaaa") == 5
    assert count_runs("aabcabaaa") == 6
    assert count_runs("aaaa") == 1
    assert count_runs("") == 0


def test_entropy0():
    assert entropy0("aaaa") == 0.0
    assert entropy0("ab") == 1.0
    assert entropy0("abcd") == 2.0
    t = b"aabcabaaa"
    want = -sum(k / 9 * math.log2(k / 9) for k in Counter(t).values())
    assert entropy0(t) == pytest.approx(want, abs=1e-12)


@pytest.mark.parametrize("s, opt", [("ab", 2), ("aab", 2), ("aabb", 3)])
def test_small_values(s, opt):
    assert min_runs(s).opt == opt
    assert exhaustive_min_runs(s) == opt


def test_example_text(text):
    res = min_runs(text)
    assert res.opt <= 5
    assert res.opt == exhaustive_min_runs(text)
    assert count_runs(res.transform.L) == res.opt
    again = transform(text, res.scheme)
    assert (again.L, again.I) == (res.transform.L, res.transform.I)


def test_leaf_matrices_and_inf():
    trie = build_rotation_trie(b"aabaaabac")
    rho, _, leaf_rho = run_table(trie, Alphabet.of(b"abc"))
    inf = 10
    for row, m in leaf_rho.items():
        c = b"abc".index(trie.leaf_symbol(row))
        for i in range(3):
            for j in range(3):
                assert m[i][j] == (1 if i == j == c else inf)
    for m in rho.values():
        assert all(1 <= v <= inf for row in m for v in row)


def test_guards():
    with pytest.raises(AlphabetTooLarge):
        min_runs("abcdefg")
    with pytest.raises(AlphabetTooLarge):
        min_runs("abcd", max_sigma=3)
    with pytest.raises(NotPrimitive):
        min_runs("abab")
    with pytest.raises(InstanceTooLarge):
        exhaustive_min_runs("ab" * 7 + "a")
    with pytest.raises(InstanceTooLarge):
        exhaustive_min_runs("abcd")


@pytest.mark.parametrize("n", range(1, 10))
def test_matches_exhaustive_ab(n):
    for s in primitive_strings(b"ab", n):
        res = min_runs(s)
        assert res.opt == exhaustive_min_runs(s)
        assert count_runs(res.transform.L) == res.opt


@pytest.mark.parametrize("n", range(1, 8))
def test_matches_exhaustive_abc(n):
    for s in primitive_strings(b"abc", n):
        res = min_runs(s)
        assert res.opt == exhaustive_min_runs(s)
        assert count_runs(res.transform.L) == res.opt


def test_dominance_and_lower_bound():
    rng = random.Random(31)
    for _ in range(80):
        s = random_primitive(rng, rng.randint(2, 120), rng.randint(2, 4))
        opt = min_runs(s).opt
        assert opt >= len(set(s))
        for sch in (OrderingScheme.standard(), OrderingScheme.abwt(), random_explicit(rng, s)):
            assert opt <= count_runs(transform(s, sch).L)


def test_larger_alphabet_with_flag(caplog):
    res = min_runs("abcdefgab", max_sigma=7)
    assert count_runs(res.transform.L) == res.opt
    assert "slow" in caplog.text
