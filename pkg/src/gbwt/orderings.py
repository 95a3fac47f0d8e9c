"""Alphabets, alphabet permutations and context-adaptive ordering schemes.

A scheme maps every context string ``x`` (the longest common prefix of two
rotations being compared) to a permutation of the alphabet.  Four kinds are
supported:

* ``STANDARD``  one permutation for every context.
* ``ABWT``      the base order at even context lengths, its reversal at odd.
* ``LOCAL1``    the permutation depends only on the last symbol of the context.
* ``EXPLICIT``  an arbitrary table ``context -> permutation`` with a default.

Symbols are byte values (ints in ``0..255``) throughout.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from types import MappingProxyType
from typing import Iterable, Mapping, Union

from .errors import ByteOutsideAlphabet, NotPrimitive

SymbolsLike = Union[bytes, bytearray, str, Iterable[int]]


def _as_symbols(value: SymbolsLike) -> tuple[int, ...]:
    if isinstance(value, str):
        value = value.encode("latin-1")
    return tuple(int(c) for c in value)


def _as_bytes(value: Union[bytes, bytearray, str]) -> bytes:
    if isinstance(value, str):
        return value.encode("latin-1")
    return bytes(value)


@dataclass(frozen=True)
class Alphabet:
    """Distinct byte values in standard (increasing) order."""

    symbols: tuple[int, ...]
    _pos: Mapping[int, int] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        syms = _as_symbols(self.symbols)
        if not 1 <= len(syms) <= 256:
            raise ValueError("alphabet size must be in 1..256")
        if any(not 0 <= c <= 255 for c in syms):
            raise ValueError("alphabet symbols must be byte values")
        if any(a >= b for a, b in zip(syms, syms[1:])):
            raise ValueError("alphabet symbols must be strictly increasing")
        object.__setattr__(self, "symbols", syms)
        object.__setattr__(self, "_pos", {c: i for i, c in enumerate(syms)})

    @classmethod
    def of(cls, data: SymbolsLike) -> "Alphabet":
        return cls(tuple(sorted(set(_as_symbols(data)))))

    @property
    def size(self) -> int:
        return len(self.symbols)

    def __len__(self):
        return len(self.symbols)

    def __iter__(self):
        return iter(self.symbols)

    def __contains__(self, c):
        return c in self._pos

    def index(self, c: int) -> int:
        """Standard-order position of ``c``."""
        try:
            return self._pos[c]
        except KeyError:
            raise ByteOutsideAlphabet(f"symbol {c!r} not in alphabet") from None

    def check(self, data: bytes) -> None:
        missing = set(data) - self._pos.keys()
        if missing:
            raise ByteOutsideAlphabet(f"bytes {sorted(missing)} not in alphabet")


@dataclass(frozen=True)
class Permutation:
    """An ordering of a set of symbols.

    ``symbol_at[r]`` is the symbol of rank ``r``; ``rank_of[c]`` its inverse.
    """

    symbol_at: tuple[int, ...]
    rank_of: Mapping[int, int] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        syms = _as_symbols(self.symbol_at)
        if len(set(syms)) != len(syms):
            raise ValueError(f"repeated symbol in permutation {syms!r}")
        if any(not 0 <= c <= 255 for c in syms):
            raise ValueError("permutation symbols must be byte values")
        object.__setattr__(self, "symbol_at", syms)
        object.__setattr__(self, "rank_of", {c: r for r, c in enumerate(syms)})

    @classmethod
    def of(cls, value: Union["Permutation", SymbolsLike]) -> "Permutation":
        if isinstance(value, Permutation):
            return value
        return cls(_as_symbols(value))

    @classmethod
    def identity(cls, alphabet: Iterable[int] = range(256)) -> "Permutation":
        return cls(tuple(sorted(alphabet)))

    def __len__(self):
        return len(self.symbol_at)

    def __str__(self):
        return bytes(self.symbol_at).decode("latin-1")

    @property
    def symbols(self) -> frozenset:
        return frozenset(self.symbol_at)

    def reversed(self) -> "Permutation":
        return Permutation(self.symbol_at[::-1])

    def restrict(self, alphabet: Alphabet) -> "Permutation":
        """Drop symbols outside ``alphabet``; every alphabet symbol must be ranked."""
        kept = tuple(c for c in self.symbol_at if c in alphabet)
        if len(kept) != alphabet.size:
            missing = set(alphabet.symbols) - set(kept)
            raise ByteOutsideAlphabet(f"permutation does not rank symbols {sorted(missing)}")
        return Permutation(kept)

    def positions(self, alphabet: Alphabet) -> tuple[int, ...]:
        """Standard-order positions of the symbols, listed in this ordering."""
        return tuple(alphabet.index(c) for c in self.symbol_at)


def reverse(p: Permutation) -> Permutation:
    return p.reversed()


class Kind(enum.Enum):
    STANDARD = "standard"
    ABWT = "abwt"
    LOCAL1 = "local1"
    EXPLICIT = "explicit"


def cyclic_slice(s: bytes, start: int, length: int) -> bytes:
    """``length`` symbols of the circular string ``s`` from ``start``."""
    n = len(s)
    start %= n
    if start + length <= n:
        return s[start:start + length]
    reps = (start + length) // n + 1
    return (s * reps)[start:start + length]


_EMPTY = MappingProxyType({})


@dataclass(frozen=True)
class OrderingScheme:
    """A member of the context-adaptive BWT family."""

    kind: Kind
    base: Permutation
    per_symbol: Mapping[int, Permutation] = _EMPTY
    per_context: Mapping[bytes, Permutation] = _EMPTY
    _max_key: int = field(init=False, repr=False, compare=False)
    _rev_base: Permutation = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        kind = Kind(self.kind)
        base = Permutation.of(self.base)
        per_symbol = {int(k): Permutation.of(v) for k, v in self.per_symbol.items()}
        per_context = {_as_bytes(k): Permutation.of(v) for k, v in self.per_context.items()}
        if per_symbol and kind is not Kind.LOCAL1:
            raise ValueError("per-symbol orderings are only valid for local1 schemes")
        if per_context and kind is not Kind.EXPLICIT:
            raise ValueError("per-context orderings are only valid for explicit schemes")
        symbols = base.symbols
        for p in (*per_symbol.values(), *per_context.values()):
            if p.symbols != symbols:
                raise ValueError("all permutations of a scheme must rank the same symbols")
        object.__setattr__(self, "kind", kind)
        object.__setattr__(self, "base", base)
        object.__setattr__(self, "per_symbol", MappingProxyType(per_symbol))
        object.__setattr__(self, "per_context", MappingProxyType(per_context))
        object.__setattr__(self, "_max_key", max(map(len, per_context), default=-1))
        object.__setattr__(self, "_rev_base", base.reversed())

    __hash__ = None

    # constructors

    @classmethod
    def standard(cls, base: Union[Permutation, SymbolsLike, None] = None) -> "OrderingScheme":
        return cls(Kind.STANDARD, Permutation.identity() if base is None else base)

    @classmethod
    def abwt(cls, base: Union[Permutation, SymbolsLike, None] = None) -> "OrderingScheme":
        return cls(Kind.ABWT, Permutation.identity() if base is None else base)

    @classmethod
    def local1(cls, base, per_symbol: Mapping) -> "OrderingScheme":
        per_symbol = {(_as_symbols(k)[0] if isinstance(k, (str, bytes)) else k): v
                      for k, v in per_symbol.items()}
        return cls(Kind.LOCAL1, base, per_symbol=per_symbol)

    @classmethod
    def explicit(cls, base, per_context: Mapping) -> "OrderingScheme":
        return cls(Kind.EXPLICIT, base, per_context=per_context)

    @property
    def symbols(self) -> frozenset:
        return self.base.symbols

    def ordering(self, ctx: Union[bytes, str]) -> Permutation:
        """The permutation used to order rows whose common prefix is ``ctx``."""
        kind = self.kind
        if kind is Kind.STANDARD:
            return self.base
        if kind is Kind.ABWT:
            return self._rev_base if len(ctx) % 2 else self.base
        ctx = _as_bytes(ctx)
        if kind is Kind.LOCAL1:
            if ctx:
                return self.per_symbol.get(ctx[-1], self.base)
            return self.base
        return self.per_context.get(ctx, self.base)

    def ordering_at(self, s: bytes, start: int, depth: int) -> Permutation:
        """``ordering`` of the context ``s[start:start+depth]`` read circularly.

        Avoids materialising the context unless the scheme needs it.
        """
        kind = self.kind
        if kind is Kind.STANDARD:
            return self.base
        if kind is Kind.ABWT:
            return self._rev_base if depth % 2 else self.base
        if kind is Kind.LOCAL1:
            if depth:
                return self.per_symbol.get(s[(start + depth - 1) % len(s)], self.base)
            return self.base
        if depth > self._max_key:
            return self.base
        return self.per_context.get(cyclic_slice(s, start, depth), self.base)

    def restrict(self, alphabet: Alphabet) -> "OrderingScheme":
        """The same scheme with every permutation restricted to ``alphabet``.

        Symbols the scheme ranks but the alphabet lacks are dropped (they are
        inert); context keys mentioning them can never occur and are dropped too.
        """
        if self.base.symbols == frozenset(alphabet.symbols):
            return self
        return OrderingScheme(
            self.kind,
            self.base.restrict(alphabet),
            per_symbol={c: p.restrict(alphabet) for c, p in self.per_symbol.items()
                        if c in alphabet},
            per_context={k: p.restrict(alphabet) for k, p in self.per_context.items()
                         if all(c in alphabet for c in k)},
        )

    def with_sentinel(self, sentinel: int = 0) -> "OrderingScheme":
        """Rank ``sentinel`` first under every context.

        A sentinel already ranked by the scheme is moved to the front; context
        keys containing it are dropped since the sentinel occurs only once.
        """

        def lift(p):
            return Permutation((sentinel,) + tuple(c for c in p.symbol_at if c != sentinel))

        return OrderingScheme(
            self.kind,
            lift(self.base),
            per_symbol={c: lift(p) for c, p in self.per_symbol.items() if c != sentinel},
            per_context={k: lift(p) for k, p in self.per_context.items() if sentinel not in k},
        )

    def fingerprint(self) -> str:
        from .formats import scheme_fingerprint
        return scheme_fingerprint(self)


def ordering_for_context(scheme: OrderingScheme, ctx: Union[bytes, str]) -> Permutation:
    return scheme.ordering(ctx)


def compare_rotations(s: Union[bytes, str], i: int, j: int, scheme: OrderingScheme) -> int:
    """Compare rotations ``s[i:]+s[:i]`` and ``s[j:]+s[:j]``; returns -1, 0 or 1."""
    s = _as_bytes(s)
    if i == j:
        return 0
    n = len(s)
    h = 0
    while h < n and s[(i + h) % n] == s[(j + h) % n]:
        h += 1
    if h == n:
        raise NotPrimitive("two distinct positions start equal rotations")
    rank = scheme.ordering_at(s, i, h).rank_of
    a, b = s[(i + h) % n], s[(j + h) % n]
    try:
        return -1 if rank[a] < rank[b] else 1
    except KeyError as e:
        raise ByteOutsideAlphabet(f"symbol {e.args[0]} not ranked by scheme") from None


class ContextAutomaton:
    """Finite-state tracker of ``ordering(x)`` as ``x`` grows one symbol at a time.

    Works in standard-position space of a fixed alphabet: ``step[q][c]`` is the
    state after appending the symbol at position ``c``; ``order[q]`` lists
    symbol positions in the ordering of state ``q`` and ``rank[q]`` inverts it.
    State ``start`` stands for the empty context.
    """

    def __init__(self, scheme: OrderingScheme, alphabet: Alphabet):
        scheme = scheme.restrict(alphabet)
        sigma = alphabet.size
        perms: list[Permutation] = []
        perm_ids: dict = {}

        def pid(p):
            key = p.symbol_at
            if key not in perm_ids:
                perm_ids[key] = len(perms)
                perms.append(p)
            return perm_ids[key]

        base = pid(scheme.base)
        kind = scheme.kind
        if kind is Kind.STANDARD:
            step = [[0] * sigma]
            perm_of = [base]
        elif kind is Kind.ABWT:
            step = [[1] * sigma, [0] * sigma]
            perm_of = [base, pid(scheme.base.reversed())]
        elif kind is Kind.LOCAL1:
            # state 0 is the empty context, state 1+c means "last symbol is c"
            row = [1 + c for c in range(sigma)]
            step = [row] * (sigma + 1)
            perm_of = [base] + [pid(scheme.per_symbol.get(c, scheme.base))
                                for c in alphabet.symbols]
        else:
            # trie over the explicit keys; the last state absorbs everything else
            prefixes = {b"": 0}
            for key in sorted(scheme.per_context):
                for t in range(1, len(key) + 1):
                    prefixes.setdefault(key[:t], len(prefixes))
            dead = len(prefixes)
            step = [[dead] * sigma for _ in range(dead + 1)]
            perm_of = [base] * (dead + 1)
            for p, q in prefixes.items():
                if p:
                    step[prefixes[p[:-1]]][alphabet.index(p[-1])] = q
                if p in scheme.per_context:
                    perm_of[q] = pid(scheme.per_context[p])
        self.alphabet = alphabet
        self.scheme = scheme
        self.start = 0
        self.step = step
        self.perm_of = perm_of
        self.orders = [p.positions(alphabet) for p in perms]
        ranks = []
        for order in self.orders:
            r = [0] * sigma
            for k, c in enumerate(order):
                r[c] = k
            ranks.append(r)
        self.ranks = ranks

    def order(self, state: int) -> tuple[int, ...]:
        return self.orders[self.perm_of[state]]

    def permutation(self, state: int) -> Permutation:
        return Permutation(tuple(self.alphabet.symbols[c] for c in self.order(state)))

    def run(self, ctx: bytes, state: int = 0) -> int:
        for c in ctx:
            state = self.step[state][self.alphabet.index(c)]
        return state
