"""Forward context-adaptive transform: naive reference and trie-based fast path."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cmp_to_key
from typing import Iterator, Optional, Union

from .errors import EmptyString, NotPrimitive
from .orderings import Alphabet, OrderingScheme, _as_bytes, compare_rotations, cyclic_slice
from .suffix import circular_suffix_array, cyclic_lcp


def is_primitive(s: Union[bytes, str]) -> bool:
    """True iff all cyclic rotations of ``s`` are distinct."""
    s = _as_bytes(s)
    if not s:
        raise EmptyString("primitivity is undefined for the empty string")
    return (s + s).find(s, 1) == len(s)


def _require_primitive(s) -> bytes:
    s = _as_bytes(s)
    if not is_primitive(s):
        raise NotPrimitive("input string is a power of a shorter string")
    return s


@dataclass(frozen=True)
class TransformOutput:
    L: bytes
    I: int
    alphabet: Alphabet
    fingerprint: str = field(default="", compare=False)

    def __post_init__(self):
        if not 0 <= self.I < len(self.L):
            raise ValueError("row index outside the matrix")


class Node:
    """An LCP interval ``[lb, rb)`` of rows sharing a prefix of length ``depth``.

    ``children`` holds sub-intervals (``Node``) and single rows (``int``) in
    standard order of their branching symbol.
    """

    __slots__ = ("depth", "lb", "rb", "children")

    def __init__(self, depth: int, lb: int):
        self.depth = depth
        self.lb = lb
        self.rb = lb
        self.children: list = []

    def __repr__(self):
        return f"Node(depth={self.depth}, rows={self.lb}..{self.rb - 1}, children={len(self.children)})"


def _first_row(child) -> int:
    return child if isinstance(child, int) else child.lb


@dataclass
class RotationTrie:
    """Compacted trie of all cyclic rotations, as an LCP-interval tree."""

    s: bytes
    sa: list
    lcp: list
    root: Node

    @property
    def n(self) -> int:
        return len(self.s)

    def branch_symbol(self, node: Node, child) -> int:
        return self.s[(self.sa[_first_row(child)] + node.depth) % self.n]

    def path_label(self, node: Node) -> bytes:
        return cyclic_slice(self.s, self.sa[node.lb], node.depth)

    def leaf_symbol(self, row: int) -> int:
        """Symbol preceding the rotation at ``row``, i.e. its last column entry."""
        return self.s[self.sa[row] - 1]

    def internal_nodes(self) -> Iterator[Node]:
        stack = [self.root]
        while stack:
            node = stack.pop()
            yield node
            stack.extend(c for c in node.children if not isinstance(c, int))

    def leaf_order(self, scheme: OrderingScheme) -> list[int]:
        """Rows in the order induced by ``scheme``: children of each node sorted
        by the ordering of the node's path label."""
        s, sa = self.s, self.sa
        n = len(s)
        out = []
        stack = [self.root]
        while stack:
            node = stack.pop()
            if isinstance(node, int):
                out.append(node)
                continue
            start, d = sa[node.lb], node.depth
            rank = scheme.ordering_at(s, start, d).rank_of
            kids = sorted(node.children,
                          key=lambda ch: rank[s[(sa[_first_row(ch)] + d) % n]],
                          reverse=True)
            stack.extend(kids)
        return out


def _interval_tree(lcp: list, n: int) -> Node:
    root = Node(0, 0)
    stack = [root]
    for k in range(n):
        stack[-1].children.append(k)
        h = lcp[k + 1] if k + 1 < n else 0
        last = None
        while stack[-1].depth > h:
            last = stack.pop()
            last.rb = k + 1
            if stack[-1].depth >= h:
                stack[-1].children.append(last)
                last = None
        if stack[-1].depth < h:
            node = Node(h, last.lb if last is not None else k)
            node.children.append(last if last is not None else stack[-1].children.pop())
            stack.append(node)
    root.rb = n
    return root


def build_rotation_trie(s: Union[bytes, str]) -> RotationTrie:
    s = _require_primitive(s)
    sa = circular_suffix_array(s)
    lcp = cyclic_lcp(s, sa)
    return RotationTrie(s, sa, lcp, _interval_tree(lcp, len(s)))


def _output(s: bytes, order: list, scheme: OrderingScheme, alphabet: Alphabet) -> TransformOutput:
    L = bytes(s[p - 1] for p in order)
    return TransformOutput(L, order.index(0), alphabet, scheme.fingerprint())


def transform_naive(s: Union[bytes, str], scheme: OrderingScheme) -> TransformOutput:
    """Sort every rotation with the context-adaptive comparator."""
    s = _require_primitive(s)
    alphabet = Alphabet.of(s)
    bound = scheme.restrict(alphabet)
    order = sorted(range(len(s)), key=cmp_to_key(lambda i, j: compare_rotations(s, i, j, bound)))
    return _output(s, order, scheme, alphabet)


def transform_fast(s: Union[bytes, str], scheme: OrderingScheme,
                   trie: Optional[RotationTrie] = None) -> TransformOutput:
    """Depth-first visit of the rotation trie with per-node child reordering."""
    s = _require_primitive(s)
    alphabet = Alphabet.of(s)
    bound = scheme.restrict(alphabet)
    if trie is None:
        trie = build_rotation_trie(s)
    order = [trie.sa[r] for r in trie.leaf_order(bound)]
    return _output(s, order, scheme, alphabet)


transform = transform_fast
