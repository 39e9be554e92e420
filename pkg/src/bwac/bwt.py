"""Burrows-Wheeler transform over cyclic rotations (no sentinel).

Rows of the conceptual rotation matrix are ordered by prefix doubling on the
cyclic string, so forward cost is O(n log n) numpy work per doubling round
and at most ceil(log2 n) rounds.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass
from typing import Any

import numpy as np

from .alphabet import Alphabet


@dataclass(frozen=True)
class BwtResult:
    """Last column of the sorted rotation matrix and the 1-based row ``index``
    of the first row equal to the input."""

    transformed: Any
    index: int


def rotation_ranks(codes: np.ndarray) -> np.ndarray:
    """Dense rank of every cyclic rotation of ``codes``.

    ``ranks[i]`` is the rank of the rotation starting at ``i``; identical
    rotations (periodic inputs) share a rank.
    """
    n = len(codes)
    _, rank = np.unique(codes, return_inverse=True)
    rank = rank.astype(np.int64).ravel()
    k = 1
    while k < n:
        if rank.max() == n - 1:
            break
        key = rank * n + np.roll(rank, -k)
        order = np.argsort(key)
        skey = key[order]
        new = np.empty(n, dtype=np.int64)
        new[order] = np.concatenate(([0], np.cumsum(skey[1:] != skey[:-1])))
        rank = new
        k *= 2
    return rank


def bwt_encode_codes(codes: np.ndarray) -> tuple[np.ndarray, int]:
    """Forward transform of a non-empty code array; returns (last column, 1-based I)."""
    codes = np.asarray(codes)
    n = len(codes)
    if n == 0:
        raise ValueError("cannot transform an empty sequence")
    rank = rotation_ranks(codes)
    if rank.max() == n - 1:
        order = np.empty(n, dtype=np.int64)
        order[rank] = np.arange(n, dtype=np.int64)
    else:
        # any order among equal ranks will do: identical rotations share their last symbol
        order = np.argsort(rank)
    last = codes[(order - 1) % n]
    index = int(np.searchsorted(rank[order], rank[0], side="left")) + 1
    return last, index


def bwt_decode_codes(last: np.ndarray, index: int) -> np.ndarray:
    """Invert :func:`bwt_encode_codes` via the LF mapping."""
    last = np.asarray(last)
    n = len(last)
    if not 1 <= index <= n:
        raise ValueError(f"BWT index {index} out of range 1..{n}")
    # LF[r]: row of the rotation that ends one symbol earlier than row r
    lf = np.empty(n, dtype=np.int64)
    lf[np.argsort(last, kind="stable")] = np.arange(n, dtype=np.int64)
    # rows[k] = LF^k(index - 1), filled by doubling the jump length
    rows = np.empty(n, dtype=np.int64)
    rows[0] = index - 1
    filled, jump = 1, lf
    while filled < n:
        take = min(filled, n - filled)
        rows[filled:filled + take] = jump[rows[:take]]
        filled += take
        if filled < n:
            jump = jump[jump]
    return last[rows][::-1].copy()


def bwt_forward(s: Sequence, alphabet: Alphabet) -> BwtResult:
    """Transform ``s``; ``transformed`` has the same type as ``s`` for str/bytes."""
    if len(s) == 0:
        raise ValueError("cannot transform an empty sequence")
    last, index = bwt_encode_codes(alphabet.encode(s))
    return BwtResult(alphabet.decode(last, like=s), index)


def bwt_inverse(r: BwtResult, alphabet: Alphabet):
    """Recover the original sequence from ``(transformed, index)``."""
    n = len(r.transformed)
    if not 1 <= r.index <= n:
        raise ValueError(f"BWT index {r.index} out of range 1..{n}")
    codes = bwt_decode_codes(alphabet.encode(r.transformed), r.index)
    return alphabet.decode(codes, like=r.transformed)
