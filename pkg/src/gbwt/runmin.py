"""Choose per-node orderings of the rotation trie that minimise the runs of L.

For a trie node ``v`` let ``rho[v][i][j]`` be the fewest runs of any feasible
arrangement of the leaf symbols below ``v`` that starts with symbol ``i`` and
ends with symbol ``j`` (``INF`` when impossible).  Leaves are trivial; an
internal node tries every ordering of its children and chains the children's
matrices left to right, merging a run across each boundary whose symbols agree.
"""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass
from collections import Counter
from math import factorial, log2
from typing import Union

from .errors import AlphabetTooLarge, InstanceTooLarge
from .orderings import Alphabet, OrderingScheme, Permutation, _as_bytes
from .transform import Node, RotationTrie, TransformOutput, build_rotation_trie, transform_fast

log = logging.getLogger(__name__)

DEFAULT_MAX_SIGMA = 6


def count_runs(t: Union[bytes, str]) -> int:
    t = _as_bytes(t)
    if not t:
        return 0
    return 1 + sum(1 for a, b in zip(t, t[1:]) if a != b)


def entropy0(t: Union[bytes, str]) -> float:
    """Zeroth-order empirical entropy in bits per symbol."""
    t = _as_bytes(t)
    n = len(t)
    return 0.0 - sum(k / n * log2(k / n) for k in Counter(t).values()) if n else 0.0


@dataclass(frozen=True)
class OptimalResult:
    opt: int
    scheme: OrderingScheme
    transform: TransformOutput


def _chain(A, B, inf):
    """Runs matrix of ``A`` followed by ``B``: min over (i, j) of A[l][i] + B[j][m] - [i == j]."""
    sigma = len(A)
    rowmin = [min(row) for row in A]
    colmin = [min(B[j][m] for j in range(sigma)) for m in range(sigma)]
    out = []
    for l in range(sigma):
        Al = A[l]
        rl = rowmin[l]
        row = []
        for m in range(sigma):
            best = rl + colmin[m]
            for i in range(sigma):
                v = Al[i] + B[i][m] - 1
                if v < best:
                    best = v
            row.append(best if best < inf else inf)
        out.append(row)
    return out


def _orderings(mats, inf):
    """Yield ``(perm, matrix)`` for every ordering of ``mats``, lexicographically,
    sharing chain prefixes between consecutive orderings."""

    def rec(prefix, M, remaining):
        if not remaining:
            yield prefix, M
            return
        for idx, k in enumerate(remaining):
            M2 = mats[k] if M is None else _chain(M, mats[k], inf)
            yield from rec(prefix + (k,), M2, remaining[:idx] + remaining[idx + 1:])

    yield from rec((), None, tuple(range(len(mats))))


def _leaf_matrix(c, sigma, inf):
    m = [[inf] * sigma for _ in range(sigma)]
    m[c][c] = 1
    return m


def _postorder(root: Node):
    out, stack = [], [root]
    while stack:
        node = stack.pop()
        out.append(node)
        stack.extend(ch for ch in node.children if isinstance(ch, Node))
    return reversed(out)


def run_table(trie: RotationTrie, alphabet: Alphabet):
    """``rho`` for every internal node plus the ordering chosen per entry.

    Returns ``(rho, choice, leaf_rho)``; ``choice[node][i][j]`` is the tuple of
    child indices (into ``node.children``) of the first ordering reaching
    ``rho[node][i][j]``.
    """
    sigma = alphabet.size
    inf = trie.n + 1
    pos = {c: k for k, c in enumerate(alphabet.symbols)}
    leaf_rho = {}
    rho = {}
    choice = {}
    for node in _postorder(trie.root):
        mats = []
        for ch in node.children:
            if isinstance(ch, int):
                if ch not in leaf_rho:
                    leaf_rho[ch] = _leaf_matrix(pos[trie.leaf_symbol(ch)], sigma, inf)
                mats.append(leaf_rho[ch])
            else:
                mats.append(rho[ch])
        best = [[inf + 1] * sigma for _ in range(sigma)]
        pick = [[None] * sigma for _ in range(sigma)]
        for perm, M in _orderings(mats, inf):
            for i in range(sigma):
                Mi, bi, pi = M[i], best[i], pick[i]
                for j in range(sigma):
                    if Mi[j] < bi[j]:
                        bi[j] = Mi[j]
                        pi[j] = perm
        rho[node] = [[min(v, inf) for v in row] for row in best]
        choice[node] = pick
    return rho, choice, leaf_rho


def _matrix_of(child, rho, leaf_rho):
    return leaf_rho[child] if isinstance(child, int) else rho[child]


def _backtrack(trie, rho, choice, leaf_rho, sigma, inf):
    """Child ordering of every internal node on one optimal solution."""
    root_m = rho[trie.root]
    opt, start, end = min((root_m[i][j], i, j) for i in range(sigma) for j in range(sigma))
    chosen = {}
    todo = [(trie.root, start, end)]
    while todo:
        node, i, j = todo.pop()
        perm = choice[node][i][j]
        chosen[node] = perm
        mats = [_matrix_of(node.children[k], rho, leaf_rho) for k in perm]
        chain = [mats[0]]
        for M in mats[1:]:
            chain.append(_chain(chain[-1], M, inf))
        end_sym = j
        for k in range(len(mats) - 1, 0, -1):
            target = chain[k][i][end_sym]
            prev, cur = chain[k - 1], mats[k]
            a, b = next((a, b) for a in range(sigma) for b in range(sigma)
                        if min(prev[i][a] + cur[b][end_sym] - (a == b), inf) == target)
            child = node.children[perm[k]]
            if isinstance(child, Node):
                todo.append((child, b, end_sym))
            end_sym = a
        child = node.children[perm[0]]
        if isinstance(child, Node):
            todo.append((child, i, end_sym))
    return opt, chosen


def min_runs(s: Union[bytes, str], max_sigma: int = DEFAULT_MAX_SIGMA) -> OptimalResult:
    """Fewest runs achievable by any context-adaptive transform of ``s``,
    with an explicit scheme achieving it."""
    s = _as_bytes(s)
    alphabet = Alphabet.of(s) if s else None
    if alphabet is not None and alphabet.size > max_sigma:
        raise AlphabetTooLarge(f"alphabet has {alphabet.size} symbols, guard is {max_sigma}")
    if max_sigma > DEFAULT_MAX_SIGMA:
        log.warning("run minimisation with %d symbols may be very slow", max_sigma)
    trie = build_rotation_trie(s)
    sigma = alphabet.size
    inf = trie.n + 1
    rho, choice, leaf_rho = run_table(trie, alphabet)
    opt, chosen = _backtrack(trie, rho, choice, leaf_rho, sigma, inf)

    per_context = {}
    for node, perm in chosen.items():
        used = [trie.branch_symbol(node, node.children[k]) for k in perm]
        rest = [c for c in alphabet.symbols if c not in used]
        per_context[trie.path_label(node)] = Permutation(tuple(used + rest))
    scheme = OrderingScheme.explicit(Permutation(alphabet.symbols), per_context)
    out = transform_fast(s, scheme, trie=trie)
    return OptimalResult(opt, scheme, out)


def feasible_arrangements(trie: RotationTrie, node) -> set:
    """Every string obtainable by reordering the children of all nodes below ``node``."""
    if isinstance(node, int):
        return {bytes([trie.leaf_symbol(node)])}
    parts = [feasible_arrangements(trie, ch) for ch in node.children]
    out = set()
    for perm in itertools.permutations(parts):
        for combo in itertools.product(*perm):
            out.add(b"".join(combo))
    return out


def exhaustive_min_runs(s: Union[bytes, str], max_n: int = 12, max_sigma: int = 3,
                        max_assignments: int = 200_000) -> int:
    """Minimum runs over every assignment of child orderings to trie nodes.

    Enumerates the feasible arrangements of each subtree bottom-up, so equal
    strings reached through different assignments are only kept once.
    """
    s = _as_bytes(s)
    if len(s) > max_n or len(set(s)) > max_sigma:
        raise InstanceTooLarge(f"exhaustive search limited to n <= {max_n}, sigma <= {max_sigma}")
    trie = build_rotation_trie(s)
    total = 1
    for node in trie.internal_nodes():
        total *= factorial(len(node.children))
    if total > max_assignments:
        raise InstanceTooLarge(f"{total} ordering assignments exceed {max_assignments}")
    return min(count_runs(L) for L in feasible_arrangements(trie, trie.root))
