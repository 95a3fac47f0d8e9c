"""Rank, select and access over an immutable byte sequence.

The sequence is kept verbatim next to per-symbol occurrence counts sampled
every ``STEP`` positions, in the spirit of the checkpointed Occ table of an
FM-index.  ``rank`` is a checkpoint lookup plus a count over at most
``STEP - 1`` bytes, ``select`` a binary search over the checkpoints followed
by a scan of one block.
"""

from __future__ import annotations

from bisect import bisect_left
from typing import Optional

from .errors import ByteOutsideAlphabet, NotEnoughOccurrences
from .orderings import Alphabet

SHIFT = 6
STEP = 1 << SHIFT


class SequenceIndex:

    __slots__ = ("seq", "n", "alphabet", "_ck")

    def __init__(self, seq: bytes, alphabet: Alphabet):
        seq = bytes(seq)
        alphabet.check(seq)
        self.seq = seq
        self.n = len(seq)
        self.alphabet = alphabet
        ck = {c: [0] for c in alphabet}
        running = dict.fromkeys(alphabet, 0)
        for k in range(0, self.n, STEP):
            block = seq[k:k + STEP]
            for c in set(block):
                running[c] += block.count(c)
            for c, lst in ck.items():
                lst.append(running[c])
        self._ck = ck

    @classmethod
    def build(cls, seq: bytes, alphabet: Optional[Alphabet] = None) -> "SequenceIndex":
        if alphabet is None:
            alphabet = Alphabet.of(seq)
        return cls(seq, alphabet)

    def __len__(self):
        return self.n

    def _counts(self, c):
        try:
            return self._ck[c]
        except KeyError:
            raise ByteOutsideAlphabet(f"symbol {c!r} not in alphabet") from None

    def rank(self, c: int, i: int) -> int:
        """Occurrences of ``c`` in the first ``i`` symbols."""
        if not 0 <= i <= self.n:
            raise IndexError(f"rank position {i} outside 0..{self.n}")
        k = i >> SHIFT
        return self._counts(c)[k] + self.seq.count(c, k << SHIFT, i)

    def count(self, c: int) -> int:
        return self._counts(c)[-1]

    def range_count(self, c: int, lo: int, length: int) -> int:
        """Occurrences of ``c`` in ``seq[lo:lo+length]``."""
        hi = lo + length
        if not 0 <= lo <= hi <= self.n:
            raise IndexError(f"range {lo}..{hi} outside 0..{self.n}")
        k0, k1 = lo >> SHIFT, hi >> SHIFT
        if k0 == k1:
            if c not in self._ck:
                raise ByteOutsideAlphabet(f"symbol {c!r} not in alphabet")
            return self.seq.count(c, lo, hi)
        ck = self._counts(c)
        return (ck[k1] + self.seq.count(c, k1 << SHIFT, hi)
                - ck[k0] - self.seq.count(c, k0 << SHIFT, lo))

    def select(self, c: int, j: int) -> int:
        """0-based position of the ``j``-th (1-based) occurrence of ``c``."""
        ck = self._counts(c)
        if not 1 <= j <= ck[-1]:
            raise NotEnoughOccurrences(f"symbol {c!r} occurs {ck[-1]} times, asked for #{j}")
        # first checkpoint holding at least j occurrences; the hit lies in the block before it
        k = bisect_left(ck, j) - 1
        pos = (k << SHIFT) - 1
        for _ in range(j - ck[k]):
            pos = self.seq.index(c, pos + 1)
        return pos

    def access(self, i: int) -> int:
        if not 0 <= i < self.n:
            raise IndexError(f"access position {i} outside 0..{self.n - 1}")
        return self.seq[i]
