import itertools
import random
from pathlib import Path

import pytest

from bwac.adaptive_code import (
    AdaptiveCodeTable,
    encode_adaptive,
    is_prefix_code,
    load_table,
    verify_theorem1,
)
from bwac.alphabet import Alphabet
from oracles import is_prefix_free

ABC_CODE = Path(__file__).parent / "data" / "abc_order2_code.txt"


@pytest.fixture(scope="module")
def abc_code():
    return load_table(ABC_CODE)


def test_abc_code_loads(abc_code):
    assert abc_code.order == 2
    assert abc_code.alphabet == Alphabet("abc")
    assert len(abc_code.entries) == 3 * 13
    assert abc_code.codeword("a", "cc") == "0"
    assert abc_code.codeword("b", ()) == "11"


def test_example_encoding(abc_code):
    assert encode_adaptive(abc_code, "abacca") == "0101111110"


def test_single_symbol_uses_empty_context(abc_code):
    for s in "abc":
        assert encode_adaptive(abc_code, s) == abc_code.codeword(s, ())


def test_two_symbols(abc_code):
    assert encode_adaptive(abc_code, "cb") == "10" + "11"


def test_abc_code_satisfies_prefix_condition(abc_code):
    # checked column by column with the pairwise oracle
    for context in abc_code.contexts():
        assert is_prefix_free(abc_code.code_set(context))
    assert verify_theorem1(abc_code)


def test_abc_code_extension_injective(abc_code):
    seen = {}
    for length in range(1, 9):
        for x in itertools.product("abc", repeat=length):
            code = encode_adaptive(abc_code, x)
            assert code not in seen, (x, seen.get(code))
            seen[code] = x


def test_output_length_is_sum_of_codeword_lengths(abc_code):
    rnd = random.Random(2)
    for _ in range(200):
        x = [rnd.choice("abc") for _ in range(rnd.randint(1, 20))]
        expected = sum(len(abc_code.codeword(s, x[max(0, k - 2):k])) for k, s in enumerate(x))
        assert len(encode_adaptive(abc_code, x)) == expected


def _uniform_table(words, order=1, symbols="abc"):
    a = Alphabet(symbols)
    entries = {}
    for k in range(order + 1):
        for ctx in itertools.product(symbols, repeat=k):
            for s, w in zip(symbols, words):
                entries[(s, ctx)] = w
    return AdaptiveCodeTable(order, a, entries)


def test_verify_rejects_prefix_violation():
    t = _uniform_table(["0", "10", "11"])
    assert verify_theorem1(t)
    t.entries[("b", ("a",))] = "01"
    t.entries[("a", ("a",))] = "0"
    assert not verify_theorem1(t)


def test_verify_rejects_missing_entry():
    t = _uniform_table(["0", "10", "11"])
    del t.entries[("c", ())]
    assert not verify_theorem1(t)


def _random_prefix_code(rnd, k):
    # random complete binary tree with k leaves
    words = [""]
    while len(words) < k:
        w = words.pop(rnd.randrange(len(words)))
        words += [w + "0", w + "1"]
    rnd.shuffle(words)
    return words


def test_random_verified_tables_are_injective():
    rnd = random.Random(11)
    for _ in range(20):
        p = rnd.randint(2, 4)
        symbols = "abcd"[:p]
        order = rnd.randint(1, 2)
        entries = {}
        for k in range(order + 1):
            for ctx in itertools.product(symbols, repeat=k):
                for s, w in zip(symbols, _random_prefix_code(rnd, p)):
                    entries[(s, ctx)] = w
        t = AdaptiveCodeTable(order, Alphabet(symbols), entries)
        assert verify_theorem1(t)
        max_len = 8 if p <= 3 else 6
        codes = set()
        total = 0
        for length in range(1, max_len + 1):
            for x in itertools.product(symbols, repeat=length):
                codes.add(encode_adaptive(t, x))
                total += 1
        assert len(codes) == total


def test_encode_errors(abc_code):
    with pytest.raises(ValueError):
        encode_adaptive(abc_code, "")
    with pytest.raises(ValueError):
        encode_adaptive(abc_code, "abd")
    partial = AdaptiveCodeTable(1, Alphabet("ab"), {("a", ()): "0"})
    with pytest.raises(KeyError):
        encode_adaptive(partial, "ab")


@pytest.mark.parametrize(
    "words, expected",
    [
        ({"0", "10", "11"}, True),
        ({"0", "01"}, False),
        ({""}, False),
        (set(), False),
        (["0", "0"], False),
        (["1"], True),
    ],
)
def test_is_prefix_code(words, expected):
    assert is_prefix_code(words) is expected


def test_is_prefix_code_matches_pairwise_oracle():
    rnd = random.Random(4)
    for _ in range(2000):
        words = ["".join(rnd.choice("01") for _ in range(rnd.randint(0, 4))) for _ in range(rnd.randint(1, 5))]
        assert is_prefix_code(words) == is_prefix_free(words)
