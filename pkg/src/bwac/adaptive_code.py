"""Order-n adaptive codes: codeword tables keyed by (symbol, preceding context).

A table assigns a binary codeword to every symbol under every context of
length 0..n. Encoding a string uses the growing contexts ``x[:k]`` for the
first n positions and a sliding window of the previous n symbols after that.
"""

from __future__ import annotations

import itertools
from collections.abc import Hashable, Iterable, Mapping, Sequence
from pathlib import Path

from .alphabet import Alphabet

EMPTY_CONTEXT_TOKENS = ("λ", "-", "<empty>")


def is_prefix_code(words: Iterable[str]) -> bool:
    """True iff ``words`` is a non-empty set of non-empty, distinct bitstrings
    none of which is a proper prefix of another."""
    words = list(words)
    if not words or any(w == "" for w in words):
        return False
    if len(set(words)) != len(words):
        return False
    # in sorted order a word that prefixes anything prefixes its successor
    ordered = sorted(words)
    return not any(b.startswith(a) for a, b in zip(ordered, ordered[1:]))


class AdaptiveCodeTable:
    """Codewords ``entries[(symbol, context)]`` with contexts as symbol tuples."""

    def __init__(
        self,
        order: int,
        alphabet: Alphabet,
        entries: Mapping[tuple[Hashable, Sequence], str],
    ):
        if order < 1:
            raise ValueError("order must be >= 1")
        self.order = order
        self.alphabet = alphabet
        self.entries: dict[tuple[Hashable, tuple], str] = {}
        for (symbol, context), word in entries.items():
            context = tuple(context)
            if len(context) > order:
                raise ValueError(f"context {context!r} longer than order {order}")
            if set(word) - {"0", "1"}:
                raise ValueError(f"codeword {word!r} is not a bitstring")
            self.entries[(symbol, context)] = word

    def codeword(self, symbol, context: Sequence) -> str:
        try:
            return self.entries[(symbol, tuple(context))]
        except KeyError:
            raise KeyError(
                f"no codeword for symbol {symbol!r} in context {tuple(context)!r}"
            ) from None

    def contexts(self) -> Iterable[tuple]:
        """Every context of length 0..order, shortest first, lexicographic within a length."""
        for k in range(self.order + 1):
            yield from itertools.product(self.alphabet.symbols, repeat=k)

    def code_set(self, context: Sequence) -> list[str] | None:
        """Codewords of all symbols under ``context``, or None if any is missing."""
        context = tuple(context)
        words = []
        for symbol in self.alphabet:
            word = self.entries.get((symbol, context))
            if word is None:
                return None
            words.append(word)
        return words


def encode_adaptive(table: AdaptiveCodeTable, x: Sequence) -> str:
    """Concatenate the codeword of each symbol of ``x`` under its preceding context."""
    if len(x) == 0:
        raise ValueError("input must contain at least one symbol")
    n = table.order
    symbols = tuple(x)
    for s in symbols:
        if s not in table.alphabet:
            raise ValueError(f"symbol {s!r} is not in the alphabet")
    return "".join(
        table.codeword(s, symbols[max(0, k - n):k]) for k, s in enumerate(symbols)
    )


def verify_theorem1(table: AdaptiveCodeTable) -> bool:
    """Sufficient test for unique decodability of the table's extension.

    True when the codeword set of every context of length 0..order is a
    prefix code. False only means the certificate failed, not that the
    extension is ambiguous.
    """
    for context in table.contexts():
        words = table.code_set(context)
        if words is None or not is_prefix_code(words):
            return False
    return True


def _parse_context(token: str) -> tuple:
    return () if token in EMPTY_CONTEXT_TOKENS else tuple(token)


def load_table(path: str | Path, order: int | None = None) -> AdaptiveCodeTable:
    """Read a whitespace- or ``|``-separated table of single-character symbols.

    The first row lists contexts (``λ`` or ``-`` for the empty one) after a
    corner cell; every following row is a symbol and its codewords::

        Σ   a   b   λ
        a   0   10  0
        b   10  11  11
    """
    rows = []
    for line in Path(path).read_text(encoding="utf-8").splitlines():
        line = line.strip()
        if not line or line.startswith("#") or set(line) <= set("-|+ "):
            continue
        rows.append(line.replace("|", " ").split())
    if len(rows) < 2:
        raise ValueError(f"{path}: expected a header row and at least one symbol row")
    contexts = [_parse_context(tok) for tok in rows[0][1:]]
    symbols = [row[0] for row in rows[1:]]
    entries = {}
    for row in rows[1:]:
        if len(row) != len(contexts) + 1:
            raise ValueError(f"{path}: row {row[0]!r} has {len(row) - 1} cells, expected {len(contexts)}")
        for context, word in zip(contexts, row[1:]):
            entries[(row[0], context)] = word
    if order is None:
        order = max(len(c) for c in contexts)
    return AdaptiveCodeTable(order, Alphabet(symbols), entries)
