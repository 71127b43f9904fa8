"""Irreducible characters of S_n.

``chi_small`` evaluates the closed expressions in content power sums for
cycle types (m, 1^{n-m}), 2 <= m <= 6, and (2, 2, 1^{n-4}).
``chi_small_qform`` is the same for m <= 4 and (2, 2) written in q statistics.
``chi_mn`` is the general Murnaghan-Nakayama recursion used as the oracle.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from skewknuth.content_stats import content_power_sum, q_minus, q_plus
from skewknuth.exact_arith import binomial, falling_factorial
from skewknuth.partitions import CycleType, Partition, generate_partitions, z_factor
from skewknuth.tableaux_oracles import hook_count

SMALL_SUPPORTS: tuple[tuple[int, ...], ...] = ((2,), (3,), (4,), (5,), (6,), (2, 2))
QFORM_SUPPORTS: tuple[tuple[int, ...], ...] = ((2,), (3,), (4,), (2, 2))


def support_of(cycle_type: Sequence[int]) -> tuple[int, ...]:
    """Drop the fixed points of a cycle type: ``(3, 1, 1, 1) -> (3,)``."""
    return tuple(p for p in cycle_type if p != 1)


def _normalize_support(support: Sequence[int] | int, allowed) -> tuple[int, ...]:
    tag = (support,) if isinstance(support, int) else tuple(support)
    if tag not in allowed:
        raise ValueError(f"unsupported cycle type support {tag}; expected one of {list(allowed)}")
    return tag


def _as_integer(value: Fraction, what: str) -> int:
    assert value.denominator == 1, f"{what} is not an integer: {value}"
    return int(value)


def chi_small(mu: Sequence[int], support: Sequence[int] | int, *, _uncorrected_p3_m6: bool = False) -> int | Fraction:
    """Character value at ``(support, 1^{n-|support|})`` from content power sums.

    ``_uncorrected_p3_m6`` swaps the p_3 coefficient of the 6-cycle formula
    for the erroneous ``24(7-n)`` that circulates in the literature; only the
    regression tests use it, and the result is then returned unreduced
    (possibly a non-integral Fraction).
    """
    mu = Partition(mu)
    tag = _normalize_support(support, SMALL_SUPPORTS)
    n = mu.n
    m = sum(tag)
    if n < m:
        raise ValueError(f"n = {n} is too small for cycle type {tag}")
    p = {l: content_power_sum(mu, l) for l in range(1, max(tag) + 1)}
    scale = Fraction(hook_count(mu), falling_factorial(n, m))

    if tag == (2,):
        value = scale * 2 * p[1]
    elif tag == (3,):
        value = scale * 3 * (p[2] - binomial(n, 2))
    elif tag == (4,):
        value = scale * 4 * (p[3] - (2 * n - 3) * p[1])
    elif tag == (5,):
        value = scale * 5 * (
            p[4] - (3 * n - 10) * p[2] - 2 * p[1] ** 2 + 5 * binomial(n, 3) - 3 * binomial(n, 2)
        )
    elif tag == (6,):
        if _uncorrected_p3_m6:
            value = scale * (
                6 * (p[5] + 2 * (3 * n - 4) * (n - 5) * p[1]) + 24 * (7 - n) * p[3]
            ) - scale * 36 * p[1] * p[2]
            return value
        value = scale * 6 * (
            p[5] + (25 - 4 * n) * p[3] + 2 * (3 * n - 4) * (n - 5) * p[1]
        ) - scale * 36 * p[1] * p[2]
    else:  # (2, 2)
        value = scale * 4 * (p[1] ** 2 - 3 * p[2] + 2 * binomial(n, 2))
    return _as_integer(value, f"chi^{tuple(mu)}{tag}")


def chi_small_qform(mu: Sequence[int], support: Sequence[int] | int) -> int:
    """Character value at ``(support, 1^{n-|support|})`` in q statistics."""
    mu = Partition(mu)
    tag = _normalize_support(support, QFORM_SUPPORTS)
    n = mu.n
    m = sum(tag)
    if n < m:
        raise ValueError(f"n = {n} is too small for cycle type {tag}")
    scale = Fraction(hook_count(mu), falling_factorial(n, m))
    qm10 = q_minus(mu, 1, 0)

    if tag == (2,):
        value = scale * 2 * qm10
    elif tag == (3,):
        value = scale * 3 * (q_plus(mu, 0, 1) + 2 * q_plus(mu, 0, 2) - q_plus(mu, 1, 1) - binomial(n, 2))
    elif tag == (4,):
        value = scale * 4 * (
            (4 - 2 * n) * qm10 + 6 * q_minus(mu, 2, 0) + 6 * q_minus(mu, 3, 0) - 6 * q_minus(mu, 2, 1)
        )
    else:  # (2, 2)
        value = scale * 4 * (
            qm10**2 - 3 * q_plus(mu, 0, 1) - 6 * q_plus(mu, 0, 2) + 3 * q_plus(mu, 1, 1) + 2 * binomial(n, 2)
        )
    return _as_integer(value, f"chi^{tuple(mu)}{tag} (q-form)")


@lru_cache(maxsize=None)
def _mn(shape: tuple[int, ...], cycles: tuple[int, ...]) -> int:
    # cycles sorted decreasing; strip the largest first
    if not cycles:
        return 1
    if cycles[0] == 1:
        return hook_count(shape)
    r, rest = cycles[0], cycles[1:]
    k = len(shape)
    beta = [shape[i] + k - 1 - i for i in range(k)]  # distinct, decreasing
    beta_set = set(beta)
    total = 0
    for b in beta:
        target = b - r
        if target < 0 or target in beta_set:
            continue
        # leg length = number of beta numbers strictly between target and b
        leg = sum(1 for x in beta if target < x < b)
        new_beta = sorted((target if x == b else x for x in beta), reverse=True)
        new_shape = tuple(x - (k - 1 - i) for i, x in enumerate(new_beta))
        new_shape = tuple(x for x in new_shape if x > 0)
        total += (-1) ** leg * _mn(new_shape, rest)
    return total


def chi_mn(mu: Sequence[int], cls: CycleType | Sequence[int]) -> int:
    """Character value by the Murnaghan-Nakayama rule.

    ``cls`` is a :class:`CycleType` or a partition of ``|mu|``.
    """
    mu = Partition(mu)
    if isinstance(cls, CycleType):
        if cls.degree != mu.n:
            raise ValueError(f"cycle type lives in S_{cls.degree}, shape has size {mu.n}")
        cycles = cls.full()
    else:
        cycles = Partition(sorted(cls, reverse=True))
    if cycles.n != mu.n:
        raise ValueError(f"cycle type {tuple(cycles)} has size {cycles.n}, shape has size {mu.n}")
    return _mn(tuple(mu), tuple(cycles))


def frobenius_skew(mu: Sequence[int], lam: Sequence[int]) -> int:
    """``sum_{nu |- m} z_nu^{-1} chi^mu(nu, 1^{n-m}) chi^lam(nu)`` with ``m = |lam|``.

    Equals f^{mu/lam} when lam fits inside mu and vanishes otherwise.
    """
    mu, lam = Partition(mu), Partition(lam)
    n, m = mu.n, lam.n
    if m > n:
        raise ValueError(f"|lam| = {m} exceeds |mu| = {n}")
    total = Fraction(0)
    for nu in generate_partitions(m):
        padded = tuple(nu) + (1,) * (n - m)
        total += Fraction(_mn(tuple(mu), padded) * _mn(tuple(lam), tuple(nu)), z_factor(nu))
    assert total.denominator == 1 and total >= 0, f"Frobenius sum {total} for {mu}/{lam}"
    return int(total)
