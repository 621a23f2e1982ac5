import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bucket_dijkstra import BucketQueue, ChunkedBucketQueue, QueueUsageError, default_chunk_size
from helpers import monotone_ops, replay, replay_chunked


def test_default_chunk_size():
    assert default_chunk_size(2**32) == 2**16
    assert default_chunk_size(2**16) == 2**8
    assert default_chunk_size(2**31) == 2**16
    assert default_chunk_size(12) == 4
    with pytest.raises(ValueError):
        default_chunk_size(0)


def test_full_width_layout():
    q = ChunkedBucketQueue(2**32, 2**16, 4)
    assert q.num_chunks == 2**16
    assert q.resident_anchors() == 2**16 + 2**16


def test_reduced_layout():
    q = ChunkedBucketQueue(2**16, 2**8, 4)
    assert q.resident_anchors() == 2**8 + 2**8


def test_non_divisor_rejected():
    with pytest.raises(QueueUsageError):
        ChunkedBucketQueue(2**32, 3, 4)


def test_placement_rules():
    q = ChunkedBucketQueue(2**32, 2**16, 2)
    q.insert(0, 70000)
    assert not q.in_active(0)
    q.insert(1, 100)
    assert q.in_active(1)
    q.decrease_key(0, 100)
    assert q.in_active(0)
    assert q.condensed[1] == -1
    assert q.pop_min() == (0, 100)
    assert q.pop_min() == (1, 100)


def test_pop_across_chunks_expands_once():
    q = ChunkedBucketQueue(2**32, 2**16, 2)
    q.insert(0, 5)
    q.insert(1, 70000)
    assert q.pop_min() == (0, 5)
    assert q.expansions == 0
    assert q.pop_min() == (1, 70000)
    assert q.expansions == 1
    assert q.active_index == 1
    assert q.pop_min() == (-1, -1)


@pytest.mark.parametrize("stop", [True, False])
def test_empty_sentinel(stop):
    assert ChunkedBucketQueue(2**16, 2**8, 1, stop).pop_min() == (-1, -1)


def test_passed_chunk_rejected():
    q = ChunkedBucketQueue(2**16, 2**8, 3)
    q.insert(0, 1000)
    q.pop_min()
    with pytest.raises(QueueUsageError):
        q.insert(1, 300)
    with pytest.raises(QueueUsageError):
        q.insert(1, 999)


def test_expansion_conserves_elements():
    q = ChunkedBucketQueue(2**16, 2**8, 6)
    q.insert(0, 3)
    for v, k in zip(range(1, 6), (600, 520, 600, 700, 513)):
        q.insert(v, k)
    assert q.pop_min() == (0, 3)
    got = [q.pop_min() for _ in range(5)]
    assert [k for _, k in got] == [513, 520, 600, 600, 700]
    assert sorted(v for v, _ in got) == [1, 2, 3, 4, 5]
    # chunk 2 (512..767) held everything, chunk 1 is empty and is skipped
    assert q.expansions == 1


def _differential(seed, n_ops=300, stop=True):
    rng = np.random.default_rng(seed)
    kinds, verts, keys, exp_pop, exp_size, nv = monotone_ops(
        rng, n_ops, 2**16, int(rng.integers(1, 3000)), empty_pops=stop)
    plain = BucketQueue(2**16, nv, stop)
    p_keys, _, p_sizes = replay(plain, kinds, verts, keys)
    q = ChunkedBucketQueue(2**16, 2**8, nv, stop)
    c_keys, c_sizes, anchors = replay_chunked(q, kinds, verts, keys)
    return p_keys, p_sizes, c_keys, c_sizes, anchors, q, exp_pop


@settings(max_examples=100)
@given(st.integers(0, 2**32 - 1), st.sampled_from([True, False]))
def test_observational_equivalence(seed, stop):
    p_keys, p_sizes, c_keys, c_sizes, anchors, q, exp_pop = _differential(seed, stop=stop)
    assert np.array_equal(c_keys, p_keys)
    assert np.array_equal(c_keys, exp_pop)
    assert np.array_equal(c_sizes, p_sizes)
    assert np.all(anchors == 2**8 + 2**8)
    assert q.expansions <= q.num_chunks
