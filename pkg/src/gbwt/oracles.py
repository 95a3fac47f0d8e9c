"""Brute-force reference implementations used to cross-check the engines."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cmp_to_key
from typing import Union

from .orderings import Alphabet, OrderingScheme, _as_bytes, compare_rotations
from .query import EMPTY, Range
from .transform import _require_primitive


@dataclass(frozen=True)
class NaiveMatrix:
    """All rotations of ``s`` sorted by the context-adaptive comparator."""

    rows: tuple
    starts: tuple

    @property
    def first(self) -> bytes:
        return bytes(r[0] for r in self.rows)

    @property
    def last(self) -> bytes:
        return bytes(r[-1] for r in self.rows)

    @property
    def index(self) -> int:
        return self.starts.index(0)


def naive_matrix(s: Union[bytes, str], scheme: OrderingScheme) -> NaiveMatrix:
    s = _require_primitive(s)
    bound = scheme.restrict(Alphabet.of(s))
    starts = sorted(range(len(s)), key=cmp_to_key(lambda i, j: compare_rotations(s, i, j, bound)))
    return NaiveMatrix(tuple(s[i:] + s[:i] for i in starts), tuple(starts))


def _cyclic_prefix(row: bytes, length: int) -> bytes:
    reps = length // len(row) + 1
    return (row * reps)[:length]


def naive_range(s: Union[bytes, str], scheme: OrderingScheme, x: Union[bytes, str],
                matrix: NaiveMatrix = None) -> Range:
    """Block of matrix rows whose (circular) prefix is ``x``, by scanning."""
    x = _as_bytes(x)
    if matrix is None:
        matrix = naive_matrix(s, scheme)
    hits = [r for r, row in enumerate(matrix.rows) if _cyclic_prefix(row, len(x)) == x]
    if not hits:
        return EMPTY
    if hits != list(range(hits[0], hits[-1] + 1)):
        raise AssertionError("rows prefixed by a string must be contiguous")
    return Range(hits[0], len(hits))


def naive_circular_count(s: Union[bytes, str], x: Union[bytes, str]) -> int:
    """Number of positions ``j`` with ``s[j..j+|x|-1] == x`` read circularly."""
    s, x = _as_bytes(s), _as_bytes(x)
    n = len(s)
    if not n:
        return 0
    return sum(1 for j in range(n) if _cyclic_prefix(s[j:] + s[:j], len(x)) == x)
