"""Lossless block compressor: Burrows-Wheeler transform, move-to-front, and
order-n context-conditioned Huffman coding."""

from .alphabet import Alphabet
from .bitmap import Bitmap
from .bwt import BwtResult, bwt_forward, bwt_inverse
from .container import Block, Container, read_container, write_container
from .eah import EahOutput, eah_decode, eah_encode
from .errors import (
    BadMagicError,
    BwacError,
    CorruptionError,
    GuardError,
    InconsistentError,
    TruncatedError,
    VersionError,
)
from .mtf import mtf_decode, mtf_encode
from .pipeline import PipelineConfig, bits_per_symbol, compress, decompress

__version__ = "0.1.0"

__all__ = [
    "Alphabet",
    "BadMagicError",
    "Bitmap",
    "Block",
    "BwacError",
    "BwtResult",
    "Container",
    "CorruptionError",
    "EahOutput",
    "GuardError",
    "InconsistentError",
    "PipelineConfig",
    "TruncatedError",
    "VersionError",
    "bits_per_symbol",
    "bwt_forward",
    "bwt_inverse",
    "compress",
    "decompress",
    "eah_decode",
    "eah_encode",
    "mtf_decode",
    "mtf_encode",
    "read_container",
    "write_container",
]
