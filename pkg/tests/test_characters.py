from fractions import Fraction

import pytest

from skewknuth.characters import (
    QFORM_SUPPORTS,
    SMALL_SUPPORTS,
    chi_mn,
    chi_small,
    chi_small_qform,
    frobenius_skew,
)
from skewknuth.content_stats import content_power_sum
from skewknuth.partitions import CycleType, Partition, contains, generate_partitions, skew, z_factor
from skewknuth.tableaux_oracles import aitken_count, hook_count

# S_3 character table, rows (3), (2,1), (1,1,1); columns 1^3, (2,1), (3)
S3_TABLE = {
    (3,): {(1, 1, 1): 1, (2, 1): 1, (3,): 1},
    (2, 1): {(1, 1, 1): 2, (2, 1): 0, (3,): -1},
    (1, 1, 1): {(1, 1, 1): 1, (2, 1): -1, (3,): 1},
}


def test_chi_mn_matches_s3_table():
    for mu, row in S3_TABLE.items():
        for cls, value in row.items():
            assert chi_mn(mu, cls) == value


def test_chi_mn_examples():
    assert chi_mn((2, 1), (1, 1, 1)) == 2
    assert chi_mn((1, 1, 1), (2, 1)) == -1
    assert all(chi_mn((6,), cls) == 1 for cls in generate_partitions(6))
    assert chi_mn((3, 2, 1), CycleType(Partition((3,)), 6)) == -2
    with pytest.raises(ValueError):
        chi_mn((2, 1), (2,))


@pytest.mark.parametrize("n", range(1, 11))
def test_chi_mn_degree_is_hook_count(n):
    for mu in generate_partitions(n):
        assert chi_mn(mu, (1,) * n) == hook_count(mu)


@pytest.mark.parametrize("n", range(1, 8))
def test_column_orthogonality(n):
    classes = generate_partitions(n)
    for mu in classes:
        for nu in classes:
            inner = sum(Fraction(chi_mn(mu, lam) * chi_mn(nu, lam), z_factor(lam)) for lam in classes)
            assert inner == (mu == nu)


def test_chi_small_examples():
    assert chi_small((2, 1), (2,)) == 0
    assert chi_small((2, 1), (3,)) == -1
    assert chi_small((3, 2, 1), (3,)) == -2
    assert chi_small((3, 2, 1), 3) == -2
    with pytest.raises(ValueError):
        chi_small((2, 1), (4,))
    with pytest.raises(ValueError):
        chi_small((3, 2, 1), (3, 3))


@pytest.mark.parametrize("n", range(2, 13))
def test_chi_small_against_mn(n):
    for mu in generate_partitions(n):
        for tag in SMALL_SUPPORTS:
            if n >= sum(tag):
                assert chi_small(mu, tag) == chi_mn(mu, tag + (1,) * (n - sum(tag))), (mu, tag)


def test_chi_small_qform_examples():
    assert chi_small_qform((3, 2, 1), (2,)) == 0
    assert chi_small_qform((3, 2, 1), (3,)) == -2
    assert chi_small_qform((4,), (2,)) == 1
    with pytest.raises(ValueError):
        chi_small_qform((3, 2, 1), (5,))


@pytest.mark.parametrize("n", range(2, 13))
def test_chi_small_qform_against_chi_small(n):
    for mu in generate_partitions(n):
        for tag in QFORM_SUPPORTS:
            if n >= sum(tag):
                assert chi_small_qform(mu, tag) == chi_small(mu, tag)


@pytest.mark.parametrize("n", range(6, 11))
def test_uncorrected_six_cycle_coefficient_fails(n):
    cls = (6,) + (1,) * (n - 6)
    mismatched = [
        mu for mu in generate_partitions(n)
        if chi_small(mu, (6,), _uncorrected_p3_m6=True) != chi_mn(mu, cls)
    ]
    assert mismatched
    # the two formulas differ by a multiple of p_3, so exactly the shapes with p_3 != 0 disagree
    assert set(mismatched) == {mu for mu in generate_partitions(n) if content_power_sum(mu, 3) != 0}


def test_frobenius_skew_examples():
    assert frobenius_skew((3, 2, 1), (3,)) == 2
    assert frobenius_skew((3, 2, 1), (2,)) == 8
    assert frobenius_skew((2, 2), (3,)) == 0
    assert frobenius_skew((3, 2, 1), ()) == 16
    with pytest.raises(ValueError):
        frobenius_skew((2,), (3,))


@pytest.mark.parametrize("n", range(1, 10))
def test_frobenius_skew_against_determinant(n):
    for mu in generate_partitions(n):
        for m in range(min(4, n) + 1):
            for lam in generate_partitions(m):
                expected = aitken_count(skew(mu, lam)) if contains(mu, lam) else 0
                assert frobenius_skew(mu, lam) == expected


def test_concurrent_calls_share_memo_safely():
    from concurrent.futures import ThreadPoolExecutor

    from skewknuth.characters import _mn

    _mn.cache_clear()
    shapes = generate_partitions(10)
    cls = (3, 3, 2, 1, 1)
    serial = [chi_mn(mu, cls) for mu in shapes]
    _mn.cache_clear()
    with ThreadPoolExecutor(max_workers=8) as pool:
        parallel = list(pool.map(lambda mu: chi_mn(mu, cls), shapes))
    assert parallel == serial
