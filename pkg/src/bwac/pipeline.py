"""Block pipeline: BWT -> MTF -> EAH on compression, and the reverse chain.

Each block is coded on its own alphabet (the sorted distinct bytes of the
block). The EAH stage runs over MTF ranks, whose alphabet is ``range(p)``.
"""

from __future__ import annotations

from collections.abc import Callable
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import BinaryIO

import numpy as np

from .bwt import BwtResult, bwt_decode_codes, bwt_encode_codes
from .container import Block, Container, read_container, write_container
from .eah import DEFAULT_GUARD, EahOutput, check_guard, eah_decode_codes, eah_encode_codes
from .errors import CorruptionError
from .mtf import mtf_decode_codes, mtf_encode_codes

MIN_BLOCK_SIZE = 1024


@dataclass(frozen=True)
class PipelineConfig:
    order: int = 1
    block_size: int = 1 << 20  # 0 = whole input as one block
    bitmap_guard: int = DEFAULT_GUARD

    def __post_init__(self):
        if not 1 <= self.order <= 255:
            raise ValueError(f"order must be in 1..255, got {self.order}")
        if self.block_size != 0 and self.block_size < MIN_BLOCK_SIZE:
            raise ValueError(f"block size must be 0 or >= {MIN_BLOCK_SIZE}, got {self.block_size}")
        if self.bitmap_guard < 1:
            raise ValueError("bitmap guard must be positive")


@dataclass
class BlockTrace:
    """Intermediate values of one block, handed to the ``inspect`` hook."""

    index: int
    alphabet: bytes
    bwt: BwtResult
    ranks: np.ndarray
    eah: EahOutput


def split_blocks(data: bytes, block_size: int) -> list[bytes]:
    if not data:
        return []
    if block_size == 0:
        return [data]
    return [data[i:i + block_size] for i in range(0, len(data), block_size)]


def compress_block(chunk: bytes, cfg: PipelineConfig) -> tuple[Block, BlockTrace]:
    raw = np.frombuffer(chunk, dtype=np.uint8)
    symbols, codes = np.unique(raw, return_inverse=True)
    p = len(symbols)
    check_guard(p, cfg.order, cfg.bitmap_guard)
    alphabet = symbols.tobytes()
    last, index = bwt_encode_codes(codes.ravel())
    ranks = mtf_encode_codes(last, p)
    eah = eah_encode_codes(ranks, p, cfg.order, cfg.bitmap_guard)
    block = Block(len(chunk), cfg.order, index, alphabet, eah)
    trace = BlockTrace(-1, alphabet, BwtResult(symbols[last].tobytes(), index), ranks, eah)
    return block, trace


def _compress_one(args) -> Block:
    chunk, cfg = args
    return compress_block(chunk, cfg)[0]


def decompress_block(blk: Block) -> bytes:
    p = len(blk.alphabet)
    eah = blk.eah
    ranks = eah_decode_codes(eah.prefix, eah.bitmap, eah.y, eah.z, blk.length, blk.order)
    last = mtf_decode_codes(ranks, p)
    codes = bwt_decode_codes(last, blk.bwt_index)
    return np.frombuffer(blk.alphabet, dtype=np.uint8)[codes].tobytes()


def compress(data: bytes, config: PipelineConfig | None = None, *,
             inspect: Callable[[BlockTrace], None] | None = None, jobs: int = 1) -> Container:
    """Compress ``data`` into a :class:`Container`.

    ``inspect`` receives a :class:`BlockTrace` per block (forces serial
    execution). ``jobs > 1`` compresses blocks in a process pool; block order
    is preserved.
    """
    cfg = config or PipelineConfig()
    chunks = split_blocks(bytes(data), cfg.block_size)
    if jobs > 1 and inspect is None and len(chunks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return Container(list(pool.map(_compress_one, [(c, cfg) for c in chunks])))
    blocks = []
    for k, chunk in enumerate(chunks):
        block, trace = compress_block(chunk, cfg)
        if inspect is not None:
            trace.index = k
            inspect(trace)
        blocks.append(block)
    return Container(blocks)


def _decompress_one(args) -> bytes:
    k, blk = args
    try:
        return decompress_block(blk)
    except CorruptionError as exc:
        exc.block = k
        raise


def decompress(container: Container | bytes, *, jobs: int = 1,
               guard: int = DEFAULT_GUARD) -> bytes:
    """Inverse of :func:`compress`; accepts a Container or its serialized bytes."""
    if not isinstance(container, Container):
        container = Container(read_container(container, guard))
    work = list(enumerate(container.blocks))
    if jobs > 1 and len(work) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return b"".join(pool.map(_decompress_one, work))
    return b"".join(_decompress_one(item) for item in work)


def compress_stream(src: BinaryIO, dst: BinaryIO, config: PipelineConfig | None = None,
                    jobs: int = 1) -> tuple[int, int]:
    """Compress everything readable from ``src`` into ``dst``; returns (bytes in, bytes out)."""
    data = src.read()
    blob = write_container(compress(data, config, jobs=jobs).blocks,
                           (config or PipelineConfig()).bitmap_guard)
    dst.write(blob)
    return len(data), len(blob)


def decompress_stream(src: BinaryIO, dst: BinaryIO, jobs: int = 1) -> tuple[int, int]:
    blob = src.read()
    data = decompress(blob, jobs=jobs)
    dst.write(data)
    return len(blob), len(data)


def bits_per_symbol(original_size: int, compressed_size: int) -> float:
    if original_size == 0:
        return 0.0
    return 8.0 * compressed_size / original_size
