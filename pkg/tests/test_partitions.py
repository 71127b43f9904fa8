from math import factorial

import pytest
from hypothesis import given

from conftest import partitions
from oracles import partition_count
from skewknuth.partitions import (
    CycleType,
    Partition,
    PartitionError,
    conjugate,
    contents,
    generate_partitions,
    multiplicity,
    parse_composition,
    parse_partition,
    skew,
    z_factor,
)


def test_parse_partition():
    mu = parse_partition("3,2,1")
    assert mu == (3, 2, 1) and mu.n == 6 and mu.height == 3
    assert parse_partition("5") == (5,)
    assert parse_partition("3,1^3") == (3, 1, 1, 1)
    assert parse_partition(" 2, 2 ") == (2, 2)


@pytest.mark.parametrize("text", ["", "2,3", "a", "3,0", "3,-1", "2,1^x"])
def test_parse_partition_rejects(text):
    with pytest.raises(PartitionError):
        parse_partition(text)


def test_parse_composition_allows_any_order():
    assert parse_composition("1,2^2") == (1, 2, 2)


def test_partition_validation():
    assert Partition() == () and Partition().n == 0
    with pytest.raises(PartitionError):
        Partition((1, 2))
    with pytest.raises(PartitionError):
        Partition((2.0, 1))


def test_conjugate_examples():
    assert conjugate((3, 2, 1)) == (3, 2, 1)
    assert conjugate((3, 1)) == (2, 1, 1)
    assert conjugate((5,)) == (1,) * 5


def test_conjugate_is_involution_up_to_14():
    for n in range(1, 15):
        for mu in generate_partitions(n):
            conj = conjugate(mu)
            assert conjugate(conj) == mu
            assert conj.n == mu.n and conj.height == mu[0]


def test_generate_partitions_order():
    assert generate_partitions(4) == ((4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1))
    assert len(generate_partitions(6)) == 11
    assert len(generate_partitions(12)) == 77


@pytest.mark.parametrize("n", range(1, 21))
def test_generate_partitions_count_and_distinct(n):
    parts = generate_partitions(n)
    assert len(parts) == len(set(parts)) == partition_count(n)
    assert list(parts) == sorted(parts, reverse=True)
    assert all(mu.n == n for mu in parts)


def test_multiplicity():
    assert multiplicity((2, 2, 1), 2) == 2
    assert multiplicity((2, 2, 1), 3) == 0
    assert multiplicity((1, 1, 1), 1) == 3


def test_z_factor():
    assert z_factor((2, 1)) == 2
    assert z_factor((1, 1, 1)) == 6
    assert z_factor((2, 2)) == 8


@pytest.mark.parametrize("n", range(1, 13))
def test_class_sizes_sum_to_group_order(n):
    assert sum(factorial(n) // z_factor(mu) for mu in generate_partitions(n)) == factorial(n)


def test_contents():
    assert sorted(contents((2, 1))) == [-1, 0, 1]
    assert sorted(contents((3, 2, 1))) == [-2, -1, 0, 0, 1, 2]
    assert contents((1,)) == [0]


@given(partitions())
def test_contents_cardinality(mu):
    assert len(contents(mu)) == sum(mu)


def test_skew():
    shape = skew((3, 2, 1), (3,))
    assert shape.size == 3
    assert skew((2, 1)).inner == () and skew((2, 1)).size == 3
    with pytest.raises(PartitionError):
        skew((3, 2, 1), (4,))
    with pytest.raises(PartitionError):
        skew((3,), (1, 1))


def test_cycle_type_padding():
    assert CycleType(Partition((3,)), 5).full() == (3, 1, 1)
    with pytest.raises(PartitionError):
        CycleType(Partition((3, 3)), 5)
