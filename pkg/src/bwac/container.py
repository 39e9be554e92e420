"""Serialized archive format. FORMAT.md in the repository root is the byte-level reference.

Layout (integers little-endian)::

    "BWAC"  u8 version=1  u32 block_count  block*

    block := u64 t  u8 n  u64 I-1  u16 p  p*u8 alphabet
             min(n,t)*u8 prefix
             bitmap        p**(n+1) bits, symbol-major, byte-padded
             codeword table  (u8 length, bits) per codeword, byte-padded
             u64 |Z|  Z bits, byte-padded
"""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass, field

import numpy as np

from .bitio import ByteReader, check_padding, pack_bits, unpack_bits
from .bitmap import Bitmap
from .eah import DEFAULT_GUARD, EahOutput
from .errors import (
    BadMagicError,
    CorruptionError,
    GuardError,
    InconsistentError,
    TruncatedError,
    VersionError,
)

MAGIC = b"BWAC"
VERSION = 1
HEADER_SIZE = 9
MAX_CODEWORD = 255
# reader-side sanity bound on a block's declared length
MAX_BLOCK_LENGTH = 1 << 32


@dataclass(eq=False)
class Block:
    """One independently decodable block.

    ``bwt_index`` is the 1-based row index; it is stored 0-based on disk.
    ``eah.prefix`` holds MTF ranks (ints), not bytes.
    """

    length: int
    order: int
    bwt_index: int
    alphabet: bytes
    eah: EahOutput

    def __eq__(self, other) -> bool:
        if not isinstance(other, Block):
            return NotImplemented
        return (
            (self.length, self.order, self.bwt_index, bytes(self.alphabet))
            == (other.length, other.order, other.bwt_index, bytes(other.alphabet))
            and self.eah == other.eah
        )


@dataclass
class Container:
    blocks: list[Block] = field(default_factory=list)

    def to_bytes(self, guard: int = DEFAULT_GUARD) -> bytes:
        return write_container(self.blocks, guard)

    @classmethod
    def from_bytes(cls, data: bytes, guard: int = DEFAULT_GUARD) -> Container:
        return cls(read_container(data, guard))


def _write_block(out: bytearray, blk: Block, guard: int) -> None:
    t, n, p = blk.length, blk.order, len(blk.alphabet)
    eah = blk.eah
    if not 1 <= p <= min(256, t):
        raise ValueError(f"alphabet size {p} invalid for block length {t}")
    if not 1 <= n <= 255:
        raise ValueError(f"order {n} outside 1..255")
    if list(blk.alphabet) != sorted(set(blk.alphabet)):
        raise ValueError("alphabet must be strictly increasing")
    if not 1 <= blk.bwt_index <= t:
        raise ValueError(f"BWT index {blk.bwt_index} out of range 1..{t}")
    if p ** (n + 1) > guard:
        raise GuardError(f"bitmap of {p}**{n + 1} bits exceeds the guard of {guard} bits")
    if eah.bitmap.shape != (p, p ** n):
        raise ValueError(f"bitmap shape {eah.bitmap.shape} does not match p={p}, n={n}")
    prefix = list(eah.prefix)
    if len(prefix) != min(n, t) or any(not 0 <= s < p for s in prefix):
        raise ValueError("prefix must hold min(n, t) ranks below p")

    out += t.to_bytes(8, "little")
    out += n.to_bytes(1, "little")
    out += (blk.bwt_index - 1).to_bytes(8, "little")
    out += p.to_bytes(2, "little")
    out += bytes(blk.alphabet)
    out += bytes(prefix)
    out += eah.bitmap.pack()
    if eah.y and not 1 <= min(map(len, eah.y)) <= max(map(len, eah.y)) <= MAX_CODEWORD:
        raise ValueError(f"codeword lengths must lie in 1..{MAX_CODEWORD}")
    out += pack_bits("".join(f"{len(word):08b}{word}" for word in eah.y))
    out += len(eah.z).to_bytes(8, "little")
    out += pack_bits(eah.z)


def write_container(blocks: Iterable[Block], guard: int = DEFAULT_GUARD) -> bytes:
    blocks = list(blocks)
    out = bytearray(MAGIC)
    out.append(VERSION)
    out += len(blocks).to_bytes(4, "little")
    for blk in blocks:
        _write_block(out, blk, guard)
    return bytes(out)


def _read_codeword_table(r: ByteReader, count: int) -> tuple[str, ...]:
    # unpack only as many bytes as the longest possible table needs
    limit = min(r.remaining, (count * (8 + MAX_CODEWORD) + 7) // 8)
    raw = r.data[r.pos:r.pos + limit]
    bits = unpack_bits(raw, len(raw) * 8)
    words = []
    pos = 0
    for k in range(count):
        if pos + 8 > len(bits):
            raise TruncatedError(f"truncated codeword table at entry {k}")
        length = int(bits[pos:pos + 8], 2)
        if length == 0:
            raise InconsistentError(f"codeword {k} has zero length")
        pos += 8
        if pos + length > len(bits):
            raise TruncatedError(f"truncated codeword table at entry {k}")
        words.append(bits[pos:pos + length])
        pos += length
    nbytes = (pos + 7) // 8
    check_padding(r.take(nbytes, "codeword table"), pos, "codeword table")
    return tuple(words)


def _read_block(r: ByteReader, guard: int) -> Block:
    t = r.u64("block length")
    if t == 0:
        raise InconsistentError("block length is zero")
    if t > MAX_BLOCK_LENGTH:
        raise InconsistentError(f"block length {t} exceeds reader limit {MAX_BLOCK_LENGTH}")
    n = r.u8("order")
    if n == 0:
        raise InconsistentError("order is zero")
    index = r.u64("BWT index") + 1
    if index > t:
        raise InconsistentError(f"BWT index {index} exceeds block length {t}")
    p = r.u16("alphabet size")
    if not 1 <= p <= min(256, t):
        raise InconsistentError(f"alphabet size {p} invalid for block length {t}")
    alphabet = r.take(p, "alphabet")
    if any(a >= b for a, b in zip(alphabet, alphabet[1:])):
        raise InconsistentError("alphabet is not strictly increasing")
    if p ** (n + 1) > guard:
        raise InconsistentError(f"bitmap of {p}**{n + 1} bits exceeds the guard of {guard} bits")
    prefix = tuple(r.take(min(n, t), "prefix"))
    if any(s >= p for s in prefix):
        raise InconsistentError("prefix rank outside the alphabet")

    nctx = p ** n
    nbits = p * nctx
    raw = r.take((nbits + 7) // 8, "bitmap")
    check_padding(raw, nbits, "bitmap")
    b = Bitmap.unpack(raw, (p, nctx))
    _, _, followers = b.entries()
    ones = len(followers)
    positions = max(t - n, 0)
    if ones > positions or (positions and not ones):
        raise InconsistentError(f"bitmap popcount {ones} impossible for {positions} coded positions")
    count = int(np.count_nonzero(followers >= 2))
    y = _read_codeword_table(r, count)

    zlen = r.u64("payload length")
    if zlen > positions * MAX_CODEWORD:
        raise InconsistentError(f"payload length {zlen} impossible for {positions} positions")
    z = r.bits(zlen, "payload")
    return Block(t, n, index, alphabet, EahOutput(prefix, b, y, z))


def read_container(data: bytes, guard: int = DEFAULT_GUARD) -> list[Block]:
    """Parse and structurally validate a container; raises a CorruptionError subclass."""
    r = ByteReader(data)
    if r.remaining < len(MAGIC) or r.data[:len(MAGIC)] != MAGIC:
        if r.remaining < len(MAGIC) and MAGIC.startswith(r.data):
            raise TruncatedError("truncated header")
        raise BadMagicError("not a BWAC container (bad magic)")
    r.take(len(MAGIC))
    version = r.u8("version")
    if version != VERSION:
        raise VersionError(f"unsupported container version {version}")
    count = r.u32("block count")
    blocks = []
    for k in range(count):
        try:
            blocks.append(_read_block(r, guard))
        except CorruptionError as exc:
            exc.block = k
            raise
    if r.remaining:
        raise InconsistentError(f"{r.remaining} trailing bytes after the last block")
    return blocks
