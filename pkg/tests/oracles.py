"""Independent reference implementations used as test oracles.

Nothing here imports the package: each function recomputes its answer the
slow, obvious way.
"""

import functools
import itertools
import math
from collections import Counter

import numpy as np


def naive_bwt(s):
    """Materialise and sort every rotation; first matching row gives the index."""
    s = tuple(s)
    rows = sorted(s[i:] + s[:i] for i in range(len(s)))
    return tuple(r[-1] for r in rows), rows.index(s) + 1


def naive_mtf(s, alphabet):
    table = list(alphabet)
    out = []
    for c in s:
        q = table.index(c)
        out.append(q)
        table.insert(0, table.pop(q))
    return tuple(out)


def worklist_huffman(freqs):
    """Huffman by scanning an ordered work list, as the procedure is written.

    Each round takes the lexicographically smallest position pair i < j whose
    weights are the two smallest, prepends 0 under i and 1 under j, drops
    both and appends the merged item.
    """
    n = len(freqs)
    if n == 1:
        return ("0",)
    words = [""] * n
    items = [(f, (i,)) for i, f in enumerate(freqs)]
    while len(items) > 1:
        weights = [w for w, _ in items]
        two_smallest = sorted(weights)[:2]
        i, j = next(
            (i, j) for i, j in itertools.combinations(range(len(items)), 2)
            if sorted((weights[i], weights[j])) == two_smallest
        )
        for x in items[i][1]:
            words[x] = "0" + words[x]
        for x in items[j][1]:
            words[x] = "1" + words[x]
        merged = (items[i][0] + items[j][0], items[i][1] + items[j][1])
        items = [e for k, e in enumerate(items) if k not in (i, j)] + [merged]
    return tuple(words)


@functools.lru_cache(maxsize=None)
def kraft_length_vectors(n):
    """All non-decreasing length vectors of size n (lengths 1..n-1) with Kraft sum <= 1.

    Integer arithmetic: lengths l_i satisfy sum 2**(L - l_i) <= 2**L with L = n - 1.
    """
    top = n - 1
    out = []

    def extend(prefix, lo, budget):
        if len(prefix) == n:
            out.append(prefix)
            return
        left = n - len(prefix)
        for l in range(lo, top + 1):
            # every later word still needs at least one unit of budget
            if 2 ** (top - l) + left - 1 <= budget:
                extend(prefix + (l,), l, budget - 2 ** (top - l))

    extend((), 1, 2 ** top)
    return np.array(out, dtype=np.int64).reshape(len(out), n)


def brute_optimal_length(freqs):
    """Min weighted length over every length vector obeying Kraft's inequality.

    For a fixed multiset of lengths the cheapest assignment gives the shortest
    lengths to the largest frequencies, so only sorted vectors are scanned.
    """
    n = len(freqs)
    if n == 1:
        return freqs[0]
    f = np.array(sorted(freqs, reverse=True), dtype=np.int64)
    return int((kraft_length_vectors(n) @ f).min())


def pair_counts(x, order):
    """Occurrences of each (symbol, preceding context) pair."""
    x = tuple(x)
    return Counter((x[i], x[i - order:i]) for i in range(order, len(x)))


def order0_entropy_bits(data: bytes) -> float:
    """Shannon entropy of the byte histogram, in bits per byte."""
    counts = Counter(data)
    total = len(data)
    return -sum(c / total * math.log2(c / total) for c in counts.values())


def is_prefix_free(words):
    """Pairwise scan: non-empty, distinct, no word a proper prefix of another."""
    words = list(words)
    if not words or "" in words or len(set(words)) != len(words):
        return False
    return not any(a != b and b.startswith(a) for a in words for b in words)
