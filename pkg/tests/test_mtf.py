import random

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bwac.alphabet import Alphabet
from bwac.mtf import mtf_decode, mtf_decode_codes, mtf_encode, mtf_encode_codes
from oracles import naive_mtf

ACEHRS = Alphabet("acehrs")


def test_example_ranks():
    assert mtf_encode("ersrcahe", ACEHRS) == (2, 4, 5, 1, 4, 4, 5, 5)


def test_example_inverse():
    assert mtf_decode((2, 4, 5, 1, 4, 4, 5, 5), ACEHRS, like=str) == "ersrcahe"


def test_single_symbol():
    assert mtf_encode("aaa", Alphabet("a")) == (0, 0, 0)
    assert mtf_decode((0, 0, 0), Alphabet("a"), like=str) == "aaa"


def test_each_new_symbol_from_the_tail():
    assert mtf_encode("cba", Alphabet("abc")) == (2, 2, 2)


def test_runs_become_zeros():
    ranks = mtf_encode("abbbbc", Alphabet("abc"))
    assert ranks[2:5] == (0, 0, 0)


def test_errors():
    with pytest.raises(ValueError):
        mtf_encode("abd", Alphabet("abc"))
    with pytest.raises(ValueError):
        mtf_decode((0, 3), Alphabet("abc"))
    with pytest.raises(ValueError):
        mtf_decode_codes(np.array([-1]), 2)


def test_random_roundtrip_1000():
    rnd = random.Random(7)
    for _ in range(1000):
        p = rnd.randint(1, 40)
        s = [rnd.randrange(p) for _ in range(rnd.randint(1, 300))]
        alpha = sorted(set(s))
        a = Alphabet(alpha)
        ranks = mtf_encode(s, a)
        assert ranks == naive_mtf(s, alpha)
        assert max(ranks) < len(a)
        assert mtf_decode(ranks, a) == tuple(s)


@settings(max_examples=200, deadline=None)
@given(st.lists(st.integers(0, 9), min_size=1, max_size=200))
def test_run_property(s):
    codes = np.array(s)
    ranks = mtf_encode_codes(codes, 10).tolist()
    for i in range(1, len(s)):
        if s[i] == s[i - 1]:
            assert ranks[i] == 0
    assert np.array_equal(mtf_decode_codes(np.array(ranks), 10), codes)
