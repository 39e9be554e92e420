"""Sparse storage for the (symbol, context) occurrence bitmap.

The bitmap has p * p**n cells but at most t - n of them are set, so only the
flat indices of set cells are kept (symbol-major: ``s * p**n + u``). At
order 3 with 90 symbols the dense form is 65 million cells for a block that
may hold a few thousand symbols.
"""

from __future__ import annotations

import numpy as np


class Bitmap:
    """Set cells of a ``(p, p**n)`` boolean table, as sorted flat indices."""

    __slots__ = ("shape", "cells")

    def __init__(self, shape: tuple[int, int], cells=()):
        rows, cols = (int(v) for v in shape)
        cells = np.unique(np.asarray(cells, dtype=np.int64))
        if len(cells) and (cells[0] < 0 or cells[-1] >= rows * cols):
            raise ValueError("bitmap cell outside the table")
        self.shape = (rows, cols)
        self.cells = cells

    @classmethod
    def from_dense(cls, b) -> Bitmap:
        b = np.asarray(b, dtype=bool)
        if b.ndim != 2:
            raise ValueError(f"bitmap must be 2-D, got shape {b.shape}")
        return cls(b.shape, np.flatnonzero(b))

    @classmethod
    def coerce(cls, b) -> Bitmap:
        return b if isinstance(b, Bitmap) else cls.from_dense(b)

    @classmethod
    def unpack(cls, raw: bytes, shape: tuple[int, int]) -> Bitmap:
        """Inverse of :meth:`pack`. Only the non-zero bytes are expanded.

        Set padding bits raise ValueError."""
        data = np.frombuffer(raw, dtype=np.uint8)
        nz = np.flatnonzero(data)
        row, bit = np.nonzero(np.unpackbits(data[nz]).reshape(-1, 8))
        return cls(shape, nz[row] * 8 + bit)

    @property
    def size(self) -> int:
        return self.shape[0] * self.shape[1]

    @property
    def count(self) -> int:
        return len(self.cells)

    def pack(self) -> bytes:
        """MSB-first bytes of the dense table in row-major order, zero-padded."""
        out = np.zeros((self.size + 7) // 8, dtype=np.uint8)
        np.bitwise_or.at(out, self.cells >> 3, (0x80 >> (self.cells & 7)).astype(np.uint8))
        return out.tobytes()

    def dense(self) -> np.ndarray:
        out = np.zeros(self.size, dtype=bool)
        out[self.cells] = True
        return out.reshape(self.shape)

    def entries(self) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        """(symbols, contexts, follower count of each cell's context), symbol-major."""
        syms, ctxs = np.divmod(self.cells, self.shape[1])
        followers = np.bincount(ctxs)[ctxs] if len(ctxs) else ctxs
        return syms, ctxs, followers

    def __eq__(self, other) -> bool:
        if not isinstance(other, Bitmap):
            return NotImplemented
        return self.shape == other.shape and bool(np.array_equal(self.cells, other.cells))

    def __repr__(self) -> str:
        return f"Bitmap(shape={self.shape}, count={self.count})"
