"""Order-n context-conditioned Huffman coding (EAH).

For every length-n context ``u`` occurring in the input, the symbols that
follow ``u`` get their own Huffman code built from the follower counts. A
context with exactly one follower gets no codeword at all: the decoder
knows the follower from the occurrence bitmap, so those positions cost zero
bits.

Contexts are numbered lexicographically (0-based here, ``context_rank``
returns the 1-based number). Only contexts that actually occur are visited,
in that order, which yields the same output as a dense sweep over all p**n.

The encoder output carries

* ``prefix`` -- the first n symbols, sent verbatim;
* ``bitmap`` -- occurrence table of shape ``(p, p**n)``, cell ``(s, u)`` set
  iff symbol ``s`` follows context ``u`` somewhere. It is stored sparse;
  ``b`` returns it as a dense bool array;
* ``y`` -- all codewords, symbol-major, contexts in lexicographic order;
* ``z`` -- the payload bits for positions n+1..t.

Bitstrings are ``str`` of ``'0'``/``'1'``.
"""

from __future__ import annotations

from collections.abc import Sequence
import numpy as np

from .alphabet import Alphabet
from .bitmap import Bitmap
from .errors import CorruptionError, GuardError, InconsistentError, TruncatedError
from .huffman import _huffman

DEFAULT_GUARD = 1 << 26


def check_guard(p: int, order: int, guard: int = DEFAULT_GUARD) -> None:
    if order < 1:
        raise ValueError("order must be >= 1")
    if p ** (order + 1) > guard:
        raise GuardError(
            f"follower bitmap of {p}**{order + 1} bits exceeds the guard of {guard} bits"
        )


def context_rank(u: Sequence, alphabet: Alphabet) -> int:
    """1-based lexicographic number of context ``u`` among all contexts of its length."""
    if len(u) == 0:
        raise ValueError("context must be non-empty")
    p = len(alphabet)
    j = 0
    for s in u:
        j = j * p + alphabet.index(s)
    return j + 1


def rank_context(j: int, alphabet: Alphabet, order: int) -> tuple:
    """Inverse of :func:`context_rank` for contexts of length ``order``."""
    p = len(alphabet)
    if order < 1:
        raise ValueError("order must be >= 1")
    if not 1 <= j <= p ** order:
        raise ValueError(f"context number {j} out of range 1..{p ** order}")
    j -= 1
    digits = []
    for _ in range(order):
        j, d = divmod(j, p)
        digits.append(alphabet.symbols[d])
    return tuple(reversed(digits))


class ContextModel:
    """Sparse view of the per-(symbol, context) tables built by the encoder.

    ``b`` (occurrence), ``c`` (count) and ``a`` (codeword, ``""`` when none)
    are exposed as lookups; ``dense_b``/``dense_c`` materialise them as
    ``(p, p**n)`` arrays for small alphabets.
    """

    def __init__(self, order: int, alphabet: Alphabet, keys: np.ndarray,
                 counts: np.ndarray, words: list[str]):
        self.order = order
        self.alphabet = alphabet
        self.keys = keys      # sorted context * p + symbol
        self.counts = counts
        self.words = words

    @property
    def p(self) -> int:
        return len(self.alphabet)

    def _slot(self, symbol, context: Sequence) -> int | None:
        if len(context) != self.order:
            raise ValueError(f"context must have length {self.order}")
        key = (context_rank(context, self.alphabet) - 1) * self.p + self.alphabet.index(symbol)
        i = int(np.searchsorted(self.keys, key))
        if i < len(self.keys) and self.keys[i] == key:
            return i
        return None

    def b(self, symbol, context: Sequence) -> int:
        return int(self._slot(symbol, context) is not None)

    def c(self, symbol, context: Sequence) -> int:
        i = self._slot(symbol, context)
        return 0 if i is None else int(self.counts[i])

    def a(self, symbol, context: Sequence) -> str:
        i = self._slot(symbol, context)
        return "" if i is None else self.words[i]

    def followers(self, context: Sequence) -> tuple:
        return tuple(s for s in self.alphabet if self.b(s, context))

    def dense_b(self) -> np.ndarray:
        return self.dense_c() > 0

    def dense_c(self) -> np.ndarray:
        p = self.p
        out = np.zeros((p, p ** self.order), dtype=np.int64)
        out[self.keys % p, self.keys // p] = self.counts
        return out

    def code_sets(self):
        """Yield ``(context_number, codewords)`` for every context with two or more followers."""
        p = self.p
        ctx = self.keys // p
        starts = np.flatnonzero(np.r_[True, ctx[1:] != ctx[:-1]]) if len(ctx) else []
        bounds = list(starts) + [len(ctx)]
        for s, e in zip(bounds, bounds[1:]):
            if e - s >= 2:
                yield int(ctx[s]) + 1, self.words[s:e]


class EahOutput:
    """Encoder output. The bitmap is held sparse in ``bitmap``; ``b`` gives
    the dense ``(p, p**n)`` bool array, built on each access."""

    __slots__ = ("prefix", "bitmap", "y", "z", "model")

    def __init__(self, prefix, b, y: tuple[str, ...], z: str, model: ContextModel | None = None):
        self.prefix = prefix
        self.bitmap = Bitmap.coerce(b)
        self.y = y
        self.z = z
        self.model = model

    @property
    def b(self) -> np.ndarray:
        return self.bitmap.dense()

    def __eq__(self, other) -> bool:
        if not isinstance(other, EahOutput):
            return NotImplemented
        return (
            tuple(self.prefix) == tuple(other.prefix)
            and self.bitmap == other.bitmap
            and tuple(self.y) == tuple(other.y)
            and self.z == other.z
        )

    def __repr__(self) -> str:
        return f"EahOutput(prefix={self.prefix!r}, bitmap={self.bitmap!r}, y={self.y!r}, z={self.z!r})"


def eah_encode_codes(x: np.ndarray, p: int, order: int,
                     guard: int = DEFAULT_GUARD, alphabet: Alphabet | None = None) -> EahOutput:
    """Encode a code array with values in ``range(p)``; ``prefix`` is a tuple of codes."""
    check_guard(p, order, guard)
    x = np.asarray(x, dtype=np.int64)
    t, n = len(x), order
    if t == 0:
        raise ValueError("input must contain at least one symbol")
    if alphabet is None:
        alphabet = Alphabet(range(p))
    nctx = p ** n
    if t <= n:
        empty = np.zeros(0, dtype=np.int64)
        model = ContextModel(order, alphabet, empty, empty, [])
        return EahOutput(tuple(x.tolist()), Bitmap((p, nctx)), (), "", model)

    m = t - n
    ctx = np.zeros(m, dtype=np.int64)
    for k in range(n):
        ctx = ctx * p + x[k:k + m]
    sym = x[n:]
    keys, inverse, counts = np.unique(ctx * p + sym, return_inverse=True, return_counts=True)
    uctx, usym = keys // p, keys % p
    b = Bitmap((p, nctx), usym * nctx + uctx)

    starts = np.flatnonzero(np.r_[True, uctx[1:] != uctx[:-1]]).tolist()
    bounds = starts + [len(keys)]
    counts_list = counts.tolist()
    words = [""] * len(keys)
    for s, e in zip(bounds, bounds[1:]):
        if e - s >= 2:
            # counts come from np.unique, so they are already positive ints
            words[s:e] = _huffman(counts_list[s:e])

    table = np.array(words, dtype=object)
    z = "".join(table[inverse.ravel()].tolist())
    coded = np.flatnonzero(np.fromiter((w != "" for w in words), dtype=bool, count=len(words)))
    coded = coded[np.argsort(usym[coded] * nctx + uctx[coded], kind="stable")]
    y = tuple(table[coded].tolist())
    model = ContextModel(order, alphabet, keys, counts, words)
    return EahOutput(tuple(x[:n].tolist()), b, y, z, model)


def eah_encode(x: Sequence, alphabet: Alphabet, order: int,
               guard: int = DEFAULT_GUARD) -> EahOutput:
    """Encode a symbol sequence; ``prefix`` keeps the type of ``x`` for str/bytes."""
    if len(x) == 0:
        raise ValueError("input must contain at least one symbol")
    out = eah_encode_codes(alphabet.encode(x), len(alphabet), order, guard, alphabet)
    out.prefix = alphabet.decode(out.prefix, like=x)
    return out


def _build_decoders(b: Bitmap, y: Sequence[str]) -> dict:
    """Map context number to its follower (int) or a binary trie of dict nodes."""
    all_syms, all_ctxs, followers = b.entries()
    multi = followers >= 2
    syms, ctxs = all_syms[multi], all_ctxs[multi]
    if len(syms) != len(y):
        raise InconsistentError(
            f"bitmap implies {len(syms)} codewords but {len(y)} were supplied"
        )
    single_syms, single_ctxs = all_syms[~multi], all_ctxs[~multi]
    decoders: dict = dict(zip(single_ctxs.tolist(), single_syms.tolist()))
    for s, u, word in zip(syms.tolist(), ctxs.tolist(), y):
        if not word:
            raise InconsistentError(f"empty codeword in context {u + 1}")
        node = decoders.setdefault(u, {})
        for bit in word[:-1]:
            node = node.setdefault(bit, {})
            if not isinstance(node, dict):
                raise InconsistentError(f"codewords of context {u + 1} are not a prefix code")
        if word[-1] in node:
            raise InconsistentError(f"codewords of context {u + 1} are not a prefix code")
        node[word[-1]] = s
    return decoders


def eah_decode_codes(prefix: Sequence[int], b: Bitmap | np.ndarray, y: Sequence[str], z: str,
                     t: int, order: int) -> np.ndarray:
    """Inverse of :func:`eah_encode_codes`; returns ``t`` codes. ``b`` may be
    a :class:`Bitmap` or a dense bool array."""
    n = order
    b = Bitmap.coerce(b)
    p = b.shape[0]
    if b.shape != (p, p ** n):
        raise InconsistentError(f"bitmap shape {b.shape} does not match p={p}, order={n}")
    if len(prefix) != min(n, t):
        raise InconsistentError(f"prefix has {len(prefix)} symbols, expected {min(n, t)}")
    prefix = [int(s) for s in prefix]
    if any(not 0 <= s < p for s in prefix):
        raise InconsistentError("prefix symbol outside the alphabet")
    if t <= n:
        if b.count or len(y) or z:
            raise InconsistentError("block shorter than the order must have no payload")
        return np.array(prefix, dtype=np.int64)

    decoders = _build_decoders(b, y)
    mod = p ** n
    ctx = 0
    for s in prefix:
        ctx = ctx * p + s
    out = prefix
    append = out.append
    get = decoders.get
    pos = 0
    for i in range(n, t):
        node = get(ctx)
        if node is None:
            raise CorruptionError(f"position {i + 1}: context {ctx + 1} has no followers")
        if node.__class__ is not int:
            try:
                while True:
                    node = node[z[pos]]
                    pos += 1
                    if node.__class__ is int:
                        break
            except IndexError:
                raise TruncatedError(f"payload exhausted at position {i + 1}") from None
            except KeyError:
                raise CorruptionError(f"unmatched codeword at position {i + 1}") from None
        append(node)
        ctx = (ctx * p + node) % mod
    if pos != len(z):
        raise CorruptionError(f"{len(z) - pos} payload bits left over after decoding")
    return np.array(out, dtype=np.int64)


def eah_decode(out: EahOutput, alphabet: Alphabet, order: int, t: int):
    """Reconstruct the ``t``-symbol input from an :class:`EahOutput`."""
    prefix = alphabet.encode(out.prefix).tolist()
    codes = eah_decode_codes(prefix, out.bitmap, out.y, out.z, t, order)
    return alphabet.decode(codes, like=out.prefix)
