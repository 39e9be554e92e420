import numpy as np
import pytest

from bwac.bitmap import Bitmap


def test_dense_roundtrip_and_pack():
    rng = np.random.default_rng(3)
    for _ in range(200):
        shape = (int(rng.integers(1, 9)), int(rng.integers(1, 40)))
        dense = rng.random(shape) < rng.random()
        bm = Bitmap.from_dense(dense)
        assert bm.count == dense.sum()
        assert np.array_equal(bm.dense(), dense)
        packed = bm.pack()
        assert packed == np.packbits(dense.ravel()).tobytes()
        assert Bitmap.unpack(packed, shape) == bm


def test_example_bitmap_byte():
    bm = Bitmap.from_dense([[0, 1, 1, 1], [1, 1, 1, 0]])
    assert bm.pack() == bytes([0b01111110])


def test_entries_follower_counts():
    bm = Bitmap.from_dense([[0, 1, 1], [1, 1, 0]])
    syms, ctxs, followers = bm.entries()
    assert syms.tolist() == [0, 0, 1, 1]
    assert ctxs.tolist() == [1, 2, 0, 1]
    assert followers.tolist() == [2, 1, 1, 2]


def test_large_sparse_table_stays_small():
    # 90 symbols at order 3: 65.6 million cells, three set
    shape = (90, 90 ** 3)
    bm = Bitmap(shape, [5, 90 ** 3 + 7, 90 ** 4 - 1])
    assert bm.cells.nbytes == 24
    assert Bitmap.unpack(bm.pack(), shape) == bm


def test_validation():
    with pytest.raises(ValueError):
        Bitmap((2, 2), [4])
    with pytest.raises(ValueError):
        Bitmap.unpack(b"\x01", (1, 7))
    with pytest.raises(ValueError):
        Bitmap.from_dense([1, 0, 1])
    assert Bitmap((2, 2), [3, 1, 1]).cells.tolist() == [1, 3]
