"""Deterministic Huffman construction over a frequency tuple.

The work list starts as one item per frequency, in input order. Each round
removes the two items holding the two smallest weights, choosing the
lowest work-list positions on ties; the earlier of the two gets bit 0
prepended to all of its codewords, the later one bit 1, and the merged item
is appended at the end of the list.

Removals never reorder the survivors and merged items always go to the end,
so a work-list position is equivalent to an insertion sequence number. A
heap keyed on ``(weight, seq)`` therefore reproduces the list scan exactly
in O(n log n).

Only weights and parent links are tracked. Per-item height counters would
never influence a selection, so they are omitted.
"""

from __future__ import annotations

import heapq
from collections.abc import Sequence
from fractions import Fraction


def _check(freqs: Sequence[int]) -> None:
    if len(freqs) == 0:
        raise ValueError("frequency tuple must be non-empty")
    for f in freqs:
        if int(f) != f or f < 1:
            raise ValueError(f"frequencies must be positive integers, got {f!r}")


def huffman(freqs: Sequence[int]) -> tuple[str, ...]:
    """Codeword tuple aligned with ``freqs``; a single frequency gets ``"0"``."""
    _check(freqs)
    return _huffman(freqs)


def _huffman(freqs: Sequence[int]) -> tuple[str, ...]:
    n = len(freqs)
    if n == 1:
        return ("0",)
    if n == 2:
        # whichever is popped first, the lower position takes bit 0
        return ("0", "1")
    heap = list(zip(freqs, range(n)))
    heapq.heapify(heap)
    pop, push = heapq.heappop, heapq.heappush
    # node ids double as sequence numbers; a merged node always outnumbers its children
    parent = [0] * (2 * n - 1)
    code = [""] * (2 * n - 1)
    for node in range(n, 2 * n - 1):
        w1, s1 = pop(heap)
        w2, s2 = pop(heap)
        if s2 < s1:
            s1, s2 = s2, s1
        parent[s1] = parent[s2] = node
        code[s1] = "0"
        code[s2] = "1"
        push(heap, (w1 + w2, node))
    # walk down from the root (id 2n-2) so every parent is complete before its children
    for node in range(2 * n - 3, -1, -1):
        code[node] = code[parent[node]] + code[node]
    return tuple(code[:n])


def weighted_length(freqs: Sequence[int], words: Sequence[str]) -> int:
    return sum(f * len(w) for f, w in zip(freqs, words))


MAX_ORACLE_SIZE = 12


def optimal_weighted_length(freqs: Sequence[int]) -> int:
    """Minimum of sum(f_i * l_i) over all binary prefix codes, by exhaustive search.

    Test oracle, independent of :func:`huffman`. Enumerates non-decreasing
    length vectors with Kraft sum exactly 1 (every optimal code with two or
    more words is complete) and pairs them with frequencies sorted in
    decreasing order, which is optimal for a fixed multiset of lengths.
    """
    _check(freqs)
    n = len(freqs)
    if n > MAX_ORACLE_SIZE:
        raise ValueError(f"oracle limited to {MAX_ORACLE_SIZE} frequencies, got {n}")
    if n == 1:
        return int(freqs[0])
    fs = sorted((int(f) for f in freqs), reverse=True)
    best = None

    def search(pos: int, min_len: int, kraft: Fraction, cost: int) -> None:
        nonlocal best
        remaining = n - pos
        if remaining == 0:
            if kraft == 1 and (best is None or cost < best):
                best = cost
            return
        if best is not None and cost + sum(fs[pos:]) * min_len >= best:
            return
        for length in range(min_len, n):
            share = Fraction(1, 1 << length)
            # the remaining words are at least this long, so this is the most they can add
            if kraft + remaining * share < 1:
                break
            if kraft + share > 1:
                continue
            search(pos + 1, length, kraft + share, cost + fs[pos] * length)

    search(0, 1, Fraction(0), 0)
    return best
