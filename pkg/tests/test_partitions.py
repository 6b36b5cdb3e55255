import itertools

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from anngraphs.partitions import (
    MINUS_I,
    MINUS_I_PLUS_1,
    Partition,
    StrictPartition,
    conjugate,
    distinct_part_count,
    fits_in,
    is_threshold_eigen_partition,
    is_threshold_partition,
    majorizes,
    partitions_of,
    shifted_division,
    strict_from_threshold,
    strict_partitions_of,
    threshold_from_strict,
    trace,
    weakly_majorizes,
)

import oracles

ONES8 = (1,) * 8
PI_16 = Partition((16, 8, 4, 2, 2, 2, 2) + ONES8)
DEG_16 = Partition((15, 7, 3, 3, 2, 2, 2, 2) + ONES8)
PI_8 = Partition((8, 4, 2, 1, 1, 1, 1))
PI_9 = Partition((8, 2, 2, 1, 1, 1, 1, 1, 1))

partition_st = st.lists(st.integers(1, 12), max_size=10).map(Partition.from_unsorted)


def test_partition_validation():
    with pytest.raises(ValueError):
        Partition((1, 2))
    with pytest.raises(ValueError):
        Partition((2, 0))
    with pytest.raises(ValueError):
        StrictPartition((2, 2))
    assert Partition.parse("") == Partition()
    assert Partition.parse("3,1") == (3, 1)
    assert str(Partition((3, 1))) == "3,1"


@pytest.mark.parametrize(
    "pi, expected",
    [
        (DEG_16, PI_16),
        ((), ()),
        ((3, 1), (2, 1, 1)),
    ],
)
def test_conjugate_examples(pi, expected):
    assert conjugate(pi) == Partition(expected)


@pytest.mark.parametrize("pi, expected", [(PI_16, 3), ((), 0), (PI_8, 2)])
def test_trace_examples(pi, expected):
    assert trace(pi) == expected


def test_fits_in_examples():
    assert fits_in(PI_8, PI_16)
    assert fits_in((), PI_9)
    assert not fits_in(PI_9, PI_8)
    assert not fits_in(PI_8, PI_9)


def test_majorization_examples():
    assert sum(PI_8) == sum(PI_9) == 18
    assert majorizes(PI_8, PI_9)
    assert majorizes(PI_9, PI_9)
    assert not weakly_majorizes((2, 2), (3, 1))
    # fewer parts can still majorize once padded
    assert majorizes((4,), (1, 1, 1, 1))
    assert weakly_majorizes((5,), (2, 2))
    assert not majorizes((5,), (2, 2))


def test_threshold_eigen_examples():
    assert is_threshold_eigen_partition(PI_16, DEG_16)
    assert is_threshold_eigen_partition((2,), (1, 1))
    assert not is_threshold_eigen_partition((2, 2), (2, 2))
    assert is_threshold_partition(PI_16)
    assert not is_threshold_partition((2, 2))


def test_shifted_division_examples():
    d = shifted_division(PI_16)
    assert d.above == (16, 7, 2)
    assert shifted_division((1,)).above == (1,) and shifted_division((1,)).below == ()
    assert shifted_division(PI_8).above == (8, 3)
    assert d.reassemble() == PI_16
    with pytest.raises(ValueError):
        shifted_division((1, 3))


def test_strict_from_threshold_examples():
    assert strict_from_threshold(PI_16, MINUS_I) == (15, 6, 1)
    assert strict_from_threshold((5,), MINUS_I) == (4,)
    assert strict_from_threshold(PI_8, MINUS_I_PLUS_1) == (8, 3)
    assert strict_from_threshold(PI_8, MINUS_I_PLUS_1) == shifted_division(PI_8).above


def test_strict_from_threshold_errors():
    with pytest.raises(ValueError):
        strict_from_threshold((), MINUS_I)
    with pytest.raises(ValueError):
        strict_from_threshold((1,), MINUS_I)  # gives part 0
    with pytest.raises(ValueError):
        strict_from_threshold((2, 2), MINUS_I)  # (1, 0)
    with pytest.raises(ValueError):
        strict_from_threshold(PI_8, 2)


@pytest.mark.parametrize("q, expected", [(0, 1), (1, 1), (2, 1), (3, 2), (4, 2), (10, 10)])
def test_distinct_part_count_examples(q, expected):
    assert distinct_part_count(q) == expected


def test_distinct_part_count_vs_enumeration():
    for q in range(21):
        assert distinct_part_count(q) == oracles.distinct_partition_count(q)
        assert distinct_part_count(q) == sum(1 for _ in strict_partitions_of(q))
    with pytest.raises(ValueError):
        distinct_part_count(-1)


def test_partition_generators():
    for n in range(13):
        ours = list(partitions_of(n))
        assert ours == [Partition(p) for p in oracles.partitions(n)]
        assert len(set(ours)) == len(ours)


def test_involution_exhaustive():
    for n in range(0, 31):
        for pi in partitions_of(n):
            c = conjugate(pi)
            assert conjugate(c) == pi
            assert sum(c) == n
            assert trace(c) == trace(pi)
            assert c == oracles.conjugate(pi)


@given(partition_st)
def test_involution_property(pi):
    assert conjugate(conjugate(pi)) == pi
    assert sum(conjugate(pi)) == sum(pi)
    assert trace(conjugate(pi)) == trace(pi)


@settings(max_examples=50)
@given(st.integers(40, 60))
def test_involution_large(n):
    # sample a handful of partitions at the upper end of the range
    for pi in itertools.islice(partitions_of(n), 200):
        assert conjugate(conjugate(pi)) == pi


def test_fits_in_poset_axioms():
    parts = [p for n in range(13) for p in partitions_of(n)]
    rel = np.array([[fits_in(a, b) for b in parts] for a in parts])
    assert rel.diagonal().all()
    assert not (rel & rel.T & ~np.eye(len(parts), dtype=bool)).any()
    # transitivity: any two-step path is already an edge
    two_step = (rel.astype(np.int64) @ rel.astype(np.int64)) > 0
    assert not (two_step & ~rel).any()


def test_majorization_partial_order():
    for n in range(1, 9):
        ps = list(partitions_of(n))
        for a, b in itertools.product(ps, repeat=2):
            if majorizes(a, b):
                assert weakly_majorizes(a, b)
            if majorizes(a, b) and majorizes(b, a):
                assert a == b
        for a, b, c in itertools.product(ps, repeat=3):
            if majorizes(a, b) and majorizes(b, c):
                assert majorizes(a, c)


def test_block_moves_any_row_match_majorization():
    for n in range(1, 11):
        ps = list(partitions_of(n))
        for sigma in ps:
            reach = oracles.reachable_by_moves(sigma, last_row_only=False)
            for pi in ps:
                assert (tuple(pi) in reach) == majorizes(pi, sigma)


def test_threshold_strict_bijection():
    for q in range(1, 13):
        stricts = list(strict_partitions_of(q))
        images = {threshold_from_strict(lam) for lam in stricts}
        assert len(images) == len(stricts)
        for lam in stricts:
            pi = threshold_from_strict(lam)
            assert sum(pi) == 2 * q
            assert is_threshold_partition(pi)
            assert strict_from_threshold(pi, MINUS_I) == lam
            assert shifted_division(pi).above == tuple(x + 1 for x in lam)


def test_shifted_division_strict_on_threshold_partitions():
    for n in range(1, 21):
        for pi in partitions_of(n):
            if is_threshold_partition(pi):
                above = shifted_division(pi).above
                assert all(a > b for a, b in zip(above, above[1:]))
                assert shifted_division(pi).reassemble() == pi


@given(partition_st)
def test_shifted_division_reassembles(pi):
    d = shifted_division(pi)
    assert d.reassemble() == pi
    assert sum(d.above) + sum(d.below) == sum(pi)
