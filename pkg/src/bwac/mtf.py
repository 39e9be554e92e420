"""Move-to-front coding over a list initialised to the alphabet order."""

from __future__ import annotations

from collections.abc import Sequence

import numpy as np

from .alphabet import Alphabet


def _mtf_loop(values: list[int], p: int) -> list[int]:
    table = list(range(p))
    out = []
    append = out.append
    for c in values:
        r = table.index(c)
        append(r)
        del table[r]
        table.insert(0, c)
    return out


def mtf_encode_codes(codes: np.ndarray, p: int) -> np.ndarray:
    """Ranks of ``codes`` (values in ``range(p)``) against a list starting as 0..p-1."""
    codes = np.asarray(codes)
    out = np.zeros(len(codes), dtype=np.int64)
    if len(codes) == 0:
        return out
    # a repeated symbol is already at the front: rank 0, list unchanged
    heads = np.flatnonzero(np.r_[True, codes[1:] != codes[:-1]])
    out[heads] = _mtf_loop(codes[heads].tolist(), p)
    return out


def mtf_decode_codes(ranks: np.ndarray, p: int) -> np.ndarray:
    ranks = np.asarray(ranks)
    if ranks.size and (ranks.min() < 0 or ranks.max() >= p):
        raise ValueError(f"MTF rank out of range for a list of {p} symbols")
    # rank 0 re-emits the front symbol and leaves the list unchanged
    moved = np.flatnonzero(ranks)
    table = list(range(p))
    vals = []
    append = vals.append
    for r in ranks[moved].tolist():
        c = table.pop(r)
        table.insert(0, c)
        append(c)
    # each position emits the symbol of the latest move at or before it (0 before any move)
    last = np.full(len(ranks), -1, dtype=np.int64)
    last[moved] = np.arange(len(moved))
    np.maximum.accumulate(last, out=last)
    front = np.array([0, *vals], dtype=np.int64)
    return front[last + 1]


def mtf_encode(s: Sequence, alphabet: Alphabet) -> tuple[int, ...]:
    """Rank of each symbol in the self-organising list, before it moves to the front."""
    return tuple(mtf_encode_codes(alphabet.encode(s), len(alphabet)).tolist())


def mtf_decode(ranks: Sequence[int], alphabet: Alphabet, like=tuple):
    codes = mtf_decode_codes(np.asarray(ranks, dtype=np.int64), len(alphabet))
    return alphabet.decode(codes, like=like)
