"""Pattern counting over a context-adaptive transform.

Two routes are provided.  ``count_generic`` works for every scheme and fills
the triangle of ``RangeX`` values of all substrings of the pattern one length
at a time (O(sigma p^2) rank calls).  ``count_local`` is restricted to
``LOCAL1`` schemes and walks the pattern right to left with a constant number
of rank calls per symbol, using the table of two-symbol ranges.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Optional, Sequence, Union

from .errors import EmptyPattern, WrongSchemeKind
from .orderings import Alphabet, ContextAutomaton, Kind, OrderingScheme, Permutation, _as_bytes
from .rankselect import SequenceIndex


class Range(NamedTuple):
    """Rows ``b .. b+len-1`` of the sorted matrix."""

    b: int
    len: int

    @property
    def end(self) -> int:
        return self.b + self.len

    def __contains__(self, row):
        return self.b <= row < self.b + self.len


EMPTY = Range(0, 0)


@dataclass(frozen=True)
class RangeX:
    """Range of a string ``x`` split by the symbol following ``x``.

    ``counts[i]`` is the number of rows prefixed by ``x`` followed by the
    ``i``-th alphabet symbol (standard order).  ``state`` is the context
    automaton state reached on ``x``; it selects the ordering of ``x``.
    """

    b: int
    counts: tuple
    state: int = 0

    @property
    def len(self) -> int:
        return sum(self.counts)

    @property
    def range(self) -> Range:
        return Range(self.b, self.len)


def _child_starts(b: int, counts: Sequence[int], order: Sequence[int]) -> list[int]:
    starts = [0] * len(counts)
    for c in order:
        starts[c] = b
        b += counts[c]
    return starts


def child_ranges(rx: RangeX, pi: Permutation) -> list[Range]:
    """Ranges of ``x c`` for every symbol ``c`` (standard order), given ``pi = pi_x``.

    ``pi`` must rank exactly the alphabet the counts are indexed by.
    """
    alphabet = Alphabet(tuple(sorted(pi.symbol_at)))
    starts = _child_starts(rx.b, rx.counts, pi.positions(alphabet))
    return [Range(st, h) for st, h in zip(starts, rx.counts)]


class QueryIndex:
    """``L`` with rank support, the scheme, and the first-column table.

    For ``LOCAL1`` schemes the table of two-symbol ranges is built as well.
    """

    def __init__(self, L: bytes, scheme: OrderingScheme, pairs: Optional[bool] = None):
        L = bytes(L)
        if not L:
            raise ValueError("cannot index an empty transform")
        self.L = L
        self.n = len(L)
        self.alphabet = alphabet = Alphabet.of(L)
        self.scheme = scheme.restrict(alphabet)
        self.seq = SequenceIndex(L, alphabet)
        self.automaton = ContextAutomaton(self.scheme, alphabet)
        self.pos = {c: i for i, c in enumerate(alphabet.symbols)}
        self.sigma = sigma = alphabet.size
        totals = [self.seq.count(c) for c in alphabet.symbols]
        starts = _child_starts(0, totals, self.automaton.order(self.automaton.start))
        self.first = [Range(b, h) for b, h in zip(starts, totals)]
        self.F = bytes(self._first_column())
        self._symbol_rx = [self._rangex_of_position(i) for i in range(sigma)]
        if pairs is None:
            pairs = self.scheme.kind is Kind.LOCAL1
        self.pairs = self._pair_table() if pairs else None

    @classmethod
    def build(cls, L: bytes, scheme: OrderingScheme, pairs: Optional[bool] = None) -> "QueryIndex":
        return cls(L, scheme, pairs)

    def _first_column(self):
        out = bytearray(self.n)
        for c, r in zip(self.alphabet.symbols, self.first):
            out[r.b:r.end] = bytes([c]) * r.len
        return out

    def _rangex_of_position(self, i: int) -> RangeX:
        c = self.alphabet.symbols[i]
        rc = self.seq.range_count
        counts = tuple(rc(c, r.b, r.len) for r in self.first)
        return RangeX(self.first[i].b, counts, self.automaton.step[self.automaton.start][i])

    def _pair_table(self):
        table = []
        for i in range(self.sigma):
            rx = self._symbol_rx[i]
            starts = _child_starts(rx.b, rx.counts, self.automaton.order(rx.state))
            table.append([Range(b, h) for b, h in zip(starts, rx.counts)])
        return table

    def position(self, c: int) -> Optional[int]:
        return self.pos.get(c)

    def ordering(self, rx: RangeX) -> Permutation:
        return self.automaton.permutation(rx.state)

    def pair_range(self, c1: int, c2: int) -> Range:
        if self.pairs is None:
            raise WrongSchemeKind("pair table is only built for local1 schemes")
        return self.pairs[self.pos[c1]][self.pos[c2]]

    def first_range(self, c: int) -> Range:
        i = self.pos.get(c)
        return EMPTY if i is None else self.first[i]


def rangex_of_symbol(qi: QueryIndex, c: int) -> RangeX:
    i = qi.pos.get(c)
    if i is None:
        return RangeX(0, (0,) * qi.sigma, qi.automaton.start)
    return qi._symbol_rx[i]


def extend(qi: QueryIndex, prefix: RangeX, suffix: RangeX, x1: int, xm: int) -> RangeX:
    """RangeX of ``x1..xm`` from those of ``x1..x(m-1)`` and ``x2..xm``."""
    auto = qi.automaton
    m = qi.pos[xm]
    b = prefix.b
    pc = prefix.counts
    for c in auto.order(prefix.state):
        if c == m:
            break
        b += pc[c]
    counts = [0] * qi.sigma
    sc = suffix.counts
    lo = suffix.b
    rc = qi.seq.range_count
    for c in auto.order(suffix.state):
        h = sc[c]
        if h:
            counts[c] = rc(x1, lo, h)
            lo += h
    return RangeX(b, tuple(counts), auto.step[prefix.state][m])


def count_generic(qi: QueryIndex, x: Union[bytes, str]) -> Range:
    """Rows prefixed by ``x``; works for every scheme kind."""
    x = _as_bytes(x)
    if not x:
        raise EmptyPattern("pattern must be non-empty")
    if any(c not in qi.pos for c in x):
        return EMPTY
    column = [rangex_of_symbol(qi, c) for c in x]
    p = len(x)
    for t in range(1, p):
        if any(not any(rx.counts) for rx in column):
            return EMPTY
        column = [extend(qi, column[i], column[i + 1], x[i], x[i + t]) for i in range(p - t)]
    rx = column[0]
    size = sum(rx.counts)
    return Range(rx.b, size) if size else EMPTY


def _require_local(qi: QueryIndex):
    if qi.scheme.kind is not Kind.LOCAL1 or qi.pairs is None:
        raise WrongSchemeKind("the local fast path needs a local1 scheme with its pair table")


def local_backward_extend(qi: QueryIndex, rng: Range, x1: int, x2: int) -> Range:
    """Range of ``x1 y`` from the range of ``y``, where ``y`` starts with ``x2``."""
    _require_local(qi)
    i, j = qi.pos.get(x1), qi.pos.get(x2)
    if i is None or j is None or not rng.len:
        return EMPTY
    seq = qi.seq
    r = seq.rank(x1, rng.b) - seq.rank(x1, qi.first[j].b)
    h = seq.rank(x1, rng.b + rng.len) - seq.rank(x1, rng.b)
    if not h:
        return EMPTY
    return Range(qi.pairs[i][j].b + r, h)


def count_local(qi: QueryIndex, x: Union[bytes, str]) -> Range:
    """Rows prefixed by ``x`` for a ``LOCAL1`` scheme, O(|x|) rank calls."""
    _require_local(qi)
    x = _as_bytes(x)
    if not x:
        raise EmptyPattern("pattern must be non-empty")
    pos = qi.pos
    if any(c not in pos for c in x):
        return EMPTY
    p = len(x)
    if p == 1:
        rng = qi.first[pos[x[0]]]
        return rng if rng.len else EMPTY
    rng = qi.pairs[pos[x[-2]]][pos[x[-1]]]
    for k in range(p - 3, -1, -1):
        if not rng.len:
            return EMPTY
        rng = local_backward_extend(qi, rng, x[k], x[k + 1])
    return rng if rng.len else EMPTY


def count(qi: QueryIndex, x: Union[bytes, str]) -> Range:
    if qi.pairs is not None and qi.scheme.kind is Kind.LOCAL1:
        return count_local(qi, x)
    return count_generic(qi, x)
