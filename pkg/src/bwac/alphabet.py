"""Ordered symbol alphabets and conversion between symbols and integer codes."""

from __future__ import annotations

from collections.abc import Hashable, Iterable, Sequence

import numpy as np


class Alphabet:
    """An ordered set of distinct symbols.

    Symbol order is the order given at construction; :meth:`of` builds the
    sorted alphabet of a sequence. Codes are the 0-based positions of the
    symbols, and every comparison in the codec is a comparison of codes.
    """

    __slots__ = ("symbols", "_index")

    def __init__(self, symbols: Iterable[Hashable]):
        self.symbols = tuple(symbols)
        self._index = {s: i for i, s in enumerate(self.symbols)}
        if len(self._index) != len(self.symbols):
            raise ValueError("alphabet symbols must be distinct")

    @classmethod
    def of(cls, seq: Iterable[Hashable]) -> Alphabet:
        """Sorted distinct symbols of ``seq``."""
        if isinstance(seq, (bytes, bytearray, memoryview)):
            return cls(np.unique(np.frombuffer(seq, dtype=np.uint8)).tolist())
        return cls(sorted(set(seq)))

    def __len__(self) -> int:
        return len(self.symbols)

    def __iter__(self):
        return iter(self.symbols)

    def __contains__(self, symbol) -> bool:
        return symbol in self._index

    def __eq__(self, other) -> bool:
        return isinstance(other, Alphabet) and self.symbols == other.symbols

    def __hash__(self) -> int:
        return hash(self.symbols)

    def __repr__(self) -> str:
        return f"Alphabet({list(self.symbols)!r})"

    def index(self, symbol) -> int:
        try:
            return self._index[symbol]
        except KeyError:
            raise ValueError(f"symbol {symbol!r} is not in the alphabet") from None

    def encode(self, seq: Sequence) -> np.ndarray:
        """Map a symbol sequence to an int64 array of codes."""
        if isinstance(seq, (bytes, bytearray, memoryview)):
            table = np.full(256, -1, dtype=np.int64)
            for i, s in enumerate(self.symbols):
                if isinstance(s, int) and 0 <= s < 256:
                    table[s] = i
            codes = table[np.frombuffer(seq, dtype=np.uint8)]
            if codes.size and codes.min() < 0:
                bad = bytes(seq)[int(np.argmin(codes))]
                raise ValueError(f"symbol {bad!r} is not in the alphabet")
            return codes
        index = self._index
        try:
            return np.fromiter((index[s] for s in seq), dtype=np.int64, count=len(seq))
        except KeyError as exc:
            raise ValueError(f"symbol {exc.args[0]!r} is not in the alphabet") from None

    def decode(self, codes: Iterable[int], like=tuple):
        """Map codes back to symbols, returning ``str``, ``bytes`` or a tuple.

        ``like`` is either a type or an example value whose type is copied.
        """
        kind = like if isinstance(like, type) else type(like)
        symbols = self.symbols
        if kind in (bytes, bytearray):
            table = np.array(symbols, dtype=np.uint8)
            return kind(table[np.asarray(codes, dtype=np.int64)].tobytes())
        out = [symbols[c] for c in np.asarray(codes, dtype=np.int64).tolist()]
        if kind is str:
            return "".join(out)
        if kind is list:
            return out
        return tuple(out)
