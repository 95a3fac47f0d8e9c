"""Random instance generators shared by the test modules."""

import itertools
import random

from gbwt.orderings import OrderingScheme, Permutation, cyclic_slice
from gbwt.transform import is_primitive

KINDS = ("standard", "abwt", "local1", "explicit")


def shuffled(symbols, rng):
    out = list(symbols)
    rng.shuffle(out)
    return Permutation(tuple(out))


def primitive_strings(alphabet: bytes, n: int):
    for t in itertools.product(alphabet, repeat=n):
        s = bytes(t)
        if is_primitive(s):
            yield s


def random_primitive(rng, n, sigma, alphabet=b"abcdefghijklmnop"):
    symbols = alphabet[:sigma]
    if sigma == 1:
        n = 1
    while True:
        s = bytes(rng.choice(symbols) for _ in range(n))
        if is_primitive(s):
            return s


def random_repetitive(rng, n, sigma):
    """Primitive text built from lightly mutated copies of a short seed."""
    while True:
        seed = random_primitive(rng, rng.randint(3, 12), sigma)
        out = bytearray()
        while len(out) < n:
            chunk = bytearray(seed)
            if rng.random() < 0.5:
                chunk[rng.randrange(len(chunk))] = rng.choice(seed)
            out += chunk
        s = bytes(out[:n])
        if is_primitive(s):
            return s


def random_explicit(rng, s, keys=6):
    """Explicit scheme keyed on contexts that actually occur in ``s``."""
    symbols = sorted(set(s))
    per_context = {}
    n = len(s)
    for _ in range(keys):
        depth = rng.randint(0, min(n - 1, 4))
        ctx = cyclic_slice(s, rng.randrange(n), depth)
        per_context[ctx] = shuffled(symbols, rng)
    return OrderingScheme.explicit(shuffled(symbols, rng), per_context)


def random_local1(rng, symbols):
    symbols = sorted(symbols)
    per_symbol = {c: shuffled(symbols, rng) for c in symbols if rng.random() < 0.8}
    return OrderingScheme.local1(shuffled(symbols, rng), per_symbol)


def random_scheme(rng, s, kind=None):
    kind = kind or rng.choice(KINDS)
    symbols = sorted(set(s))
    if kind == "standard":
        return OrderingScheme.standard(shuffled(symbols, rng))
    if kind == "abwt":
        return OrderingScheme.abwt(shuffled(symbols, rng))
    if kind == "local1":
        return random_local1(rng, symbols)
    return random_explicit(rng, s)
