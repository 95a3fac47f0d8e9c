"""Recover ``s`` from ``(L, I, scheme)``.

``invert_generic`` handles any scheme in O(sigma n^2) time by keeping the
diagonal ``RangeX(s_j..s_m)``, j = 1..m, and extending it by one symbol per
step.  ``invert_local`` handles ``LOCAL1`` schemes in linear time by walking
``shift_row`` from row ``I``.
"""

from __future__ import annotations

from typing import Optional, Union

from .errors import MalformedInput, RowOutOfRange, WrongSchemeKind
from .orderings import Kind, OrderingScheme, Permutation, _as_bytes
from .query import QueryIndex, RangeX, _child_starts, _require_local
from .rankselect import SHIFT


def next_char(rx: RangeX, pi: Permutation, i: int) -> int:
    """Symbol at offset ``|x|`` of row ``i``, where ``i`` lies in the range of ``x``."""
    total = sum(rx.counts)
    if not rx.b <= i < rx.b + total:
        raise RowOutOfRange(f"row {i} outside range [{rx.b}, {rx.b + total})")
    symbols = sorted(pi.symbol_at)
    b = rx.b
    for c in pi.symbol_at:
        h = rx.counts[symbols.index(c)]
        if i < b + h:
            return c
        b += h
    raise AssertionError("unreachable: counts cover the range")


def _check_input(L, I):
    L = _as_bytes(L)
    if not L:
        raise MalformedInput("empty transform")
    if not 0 <= I < len(L):
        raise MalformedInput(f"row index {I} outside 0..{len(L) - 1}")
    return L


def invert_generic(L: Union[bytes, str], I: int, scheme: OrderingScheme,
                   qi: Optional[QueryIndex] = None) -> bytes:
    L = _check_input(L, I)
    try:
        if qi is None:
            qi = QueryIndex(L, scheme, pairs=False)
    except ValueError as e:
        raise MalformedInput(str(e)) from None
    n = qi.n
    sigma = qi.sigma
    symbols = qi.alphabet.symbols
    auto = qi.automaton
    orders = [auto.orders[k] for k in auto.perm_of]
    step = auto.step
    seq = L
    cks = qi.seq._ck

    def count_in(c, lo, hi):
        k0, k1 = lo >> SHIFT, hi >> SHIFT
        if k0 == k1:
            return seq.count(c, lo, hi)
        ck = cks[c]
        return ck[k1] + seq.count(c, k1 << SHIFT, hi) - ck[k0] - seq.count(c, k0 << SHIFT, lo)

    sym_b = [rx.b for rx in qi._symbol_rx]
    sym_counts = [list(rx.counts) for rx in qi._symbol_rx]
    sym_state = [rx.state for rx in qi._symbol_rx]

    out = bytearray(n)
    first = next(i for i, r in enumerate(qi.first) if r.b <= I < r.end)
    out[0] = symbols[first]
    # diagonal entry j describes RangeX(s_j .. s_m); updated in place, high j first
    B = [sym_b[first]]
    C = [sym_counts[first]]
    Q = [sym_state[first]]
    for m in range(1, n):
        b = B[0]
        counts = C[0]
        for c in orders[Q[0]]:
            h = counts[c]
            if I < b + h:
                break
            b += h
        else:
            raise MalformedInput("transform is inconsistent with the scheme")
        out[m] = symbols[c]
        if m == n - 1:
            break
        xm = c
        B.append(sym_b[xm])
        C.append(sym_counts[xm])
        Q.append(sym_state[xm])
        for j in range(m - 1, -1, -1):
            pc = C[j]
            b = B[j]
            q = Q[j]
            for c in orders[q]:
                if c == xm:
                    break
                b += pc[c]
            sc = C[j + 1]
            lo = B[j + 1]
            x1 = out[j]
            new = [0] * sigma
            for c in orders[Q[j + 1]]:
                h = sc[c]
                if h:
                    new[c] = count_in(x1, lo, lo + h)
                    lo += h
            B[j] = b
            C[j] = new
            Q[j] = step[q][xm]
    return bytes(out)


def shift_row(qi: QueryIndex, i: int) -> int:
    """Row holding the rotation of row ``i`` shifted right by one position."""
    _require_local(qi)
    if not 0 <= i < qi.n:
        raise RowOutOfRange(f"row {i} outside 0..{qi.n - 1}")
    pos = qi.pos
    c2 = qi.F[i]
    c1 = qi.L[i]
    seq = qi.seq
    return (qi.pairs[pos[c1]][pos[c2]].b + seq.rank(c1, i)
            - seq.rank(c1, qi.first[pos[c2]].b))


def invert_local(L: Union[bytes, str], I: int, scheme: OrderingScheme,
                 qi: Optional[QueryIndex] = None) -> bytes:
    L = _check_input(L, I)
    if scheme.kind is not Kind.LOCAL1:
        raise WrongSchemeKind("linear inversion needs a local1 scheme")
    try:
        if qi is None:
            qi = QueryIndex(L, scheme, pairs=True)
    except ValueError as e:
        raise MalformedInput(str(e)) from None
    n = qi.n
    F = qi.F
    pos = qi.pos
    cks = qi.seq._ck
    # per (c1, c2): start of Range(c1 c2) minus rank of c1 before Range(c2)
    offset = {}
    for c1 in qi.alphabet.symbols:
        for c2 in qi.alphabet.symbols:
            b2 = qi.first[pos[c2]].b
            offset[c1, c2] = qi.pairs[pos[c1]][pos[c2]].b - qi.seq.rank(c1, b2)
    out = bytearray(n)
    row = I
    out[0] = F[row]
    for k in range(n - 1, 0, -1):
        c1 = L[row]
        row = offset[c1, F[row]] + cks[c1][row >> SHIFT] + L.count(c1, (row >> SHIFT) << SHIFT, row)
        out[k] = F[row]
    return bytes(out)


def invert(L: Union[bytes, str], I: int, scheme: OrderingScheme) -> bytes:
    if scheme.kind is Kind.LOCAL1:
        return invert_local(L, I, scheme)
    return invert_generic(L, I, scheme)
