"""Bit packing helpers and a bounds-checked little-endian byte reader.

Bits are packed MSB-first within each byte and the last byte is zero-padded.
"""

from __future__ import annotations

import struct

import numpy as np

from .errors import InconsistentError, TruncatedError

_ZERO = ord("0")


def pack_bits(bits: str) -> bytes:
    """``'0'``/``'1'`` string to bytes, MSB-first, zero-padded."""
    if not bits:
        return b""
    arr = np.frombuffer(bits.encode("ascii"), dtype=np.uint8) - _ZERO
    return np.packbits(arr).tobytes()


def unpack_bits(data: bytes, nbits: int) -> str:
    arr = np.unpackbits(np.frombuffer(data, dtype=np.uint8), count=nbits)
    return (arr + _ZERO).tobytes().decode("ascii")


class ByteReader:
    """Sequential reader over a bytes object; every overrun raises TruncatedError."""

    def __init__(self, data: bytes):
        self.data = bytes(data)
        self.pos = 0

    @property
    def remaining(self) -> int:
        return len(self.data) - self.pos

    def take(self, n: int, what: str = "data") -> bytes:
        if n > self.remaining:
            raise TruncatedError(f"truncated {what}: need {n} bytes, {self.remaining} left")
        out = self.data[self.pos:self.pos + n]
        self.pos += n
        return out

    def _unpack(self, fmt: str, what: str) -> int:
        return struct.unpack(fmt, self.take(struct.calcsize(fmt), what))[0]

    def u8(self, what: str = "u8") -> int:
        return self._unpack("<B", what)

    def u16(self, what: str = "u16") -> int:
        return self._unpack("<H", what)

    def u32(self, what: str = "u32") -> int:
        return self._unpack("<I", what)

    def u64(self, what: str = "u64") -> int:
        return self._unpack("<Q", what)

    def bits(self, nbits: int, what: str = "bits") -> str:
        """Read a byte-padded region of ``nbits`` bits; padding must be zero."""
        nbytes = (nbits + 7) // 8
        raw = self.take(nbytes, what)
        check_padding(raw, nbits, what)
        return unpack_bits(raw, nbits)


def check_padding(raw: bytes, nbits: int, what: str) -> None:
    spare = len(raw) * 8 - nbits
    if spare and raw[-1] & ((1 << spare) - 1):
        raise InconsistentError(f"non-zero padding bits after {what}")
