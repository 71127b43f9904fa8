"""Closed forms for f^{mu/(m)}, m = 2, 3, 4, and the hook-weight Kostka numbers.

Each variant is written out from its own formula rather than from a shared
simplified core, so the variant-agreement tests catch a slip in any one of
them.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from skewknuth.characters import frobenius_skew
from skewknuth.content_stats import q_minus, q_plus
from skewknuth.exact_arith import binomial, falling_factorial
from skewknuth.partitions import Partition, conjugate
from skewknuth.tableaux_oracles import hook_count


class DomainError(ValueError):
    """The skew shape mu/(m) does not exist."""


M2_VARIANTS = ("knuth", "schur", "qform")
M3_VARIANTS = ("expanded", "qform", "conjugate_form")


def _require(mu: Partition, m: int) -> None:
    if mu.n < m:
        raise DomainError(f"n = {mu.n} is smaller than m = {m}")
    if mu.first < m:
        raise DomainError(f"first row of {tuple(mu)} is shorter than m = {m}")


def _scaled(mu: Partition, m: int, bracket: int | Fraction) -> int:
    value = Fraction(hook_count(mu) * bracket, falling_factorial(mu.n, m))
    assert value.denominator == 1, f"f^{{{tuple(mu)}/({m})}} is not integral: {value}"
    return int(value)


def _rows(mu: Sequence[int]):
    return enumerate(mu, start=1)


def skew_count_m2(mu: Sequence[int], variant: str = "knuth") -> int:
    mu = Partition(mu)
    _require(mu, 2)
    n = mu.n
    if variant == "knuth":
        bracket = (
            sum(binomial(p, 2) for p in mu)
            - sum(binomial(c, 2) for c in conjugate(mu))
            + binomial(n, 2)
        )
    elif variant == "schur":
        bracket = sum(binomial(p, 2) - p * (i - 1) for i, p in _rows(mu)) + binomial(n, 2)
    elif variant == "qform":
        bracket = q_minus(mu, 1, 0) + binomial(n, 2)
    else:
        raise ValueError(f"unknown m=2 variant {variant!r}; expected one of {M2_VARIANTS}")
    return _scaled(mu, 2, bracket)


def skew_count_m3(mu: Sequence[int], variant: str = "qform") -> int:
    mu = Partition(mu)
    _require(mu, 3)
    n = mu.n
    if variant == "expanded":
        bracket = (
            sum(p * (i - 1) + binomial(p, 2) for i, p in _rows(mu))
            + (n - 2) * sum(binomial(p, 2) - p * (i - 1) for i, p in _rows(mu))
            + 2 * sum(p * binomial(i - 1, 2) + binomial(p, 3) for i, p in _rows(mu))
            - 2 * sum(binomial(p, 2) * (i - 1) for i, p in _rows(mu))
            + binomial(n, 3)
            - binomial(n, 2)
        )
    elif variant == "qform":
        bracket = (
            q_plus(mu, 0, 1) + 2 * q_plus(mu, 0, 2) - q_plus(mu, 1, 1)
            + (n - 2) * q_minus(mu, 1, 0)
            + binomial(n, 3) - binomial(n, 2)
        )
    elif variant == "conjugate_form":
        conj = conjugate(mu)
        bracket = (
            (sum(binomial(p, 2) for p in mu) + sum(binomial(c, 2) for c in conj))
            + 2 * (sum(binomial(p, 3) for p in mu) + sum(binomial(c, 3) for c in conj))
            - (sum(binomial(p, 2) * (i - 1) for i, p in _rows(mu))
               + sum(binomial(c, 2) * (j - 1) for j, c in _rows(conj)))
            + (n - 2) * (sum(binomial(p, 2) for p in mu) - sum(binomial(c, 2) for c in conj))
            + binomial(n, 3) - binomial(n, 2)
        )
    else:
        raise ValueError(f"unknown m=3 variant {variant!r}; expected one of {M3_VARIANTS}")
    return _scaled(mu, 3, bracket)


def skew_count_m4(mu: Sequence[int]) -> int:
    mu = Partition(mu)
    _require(mu, 4)
    n = mu.n
    half = Fraction(1, 2)
    qm10 = q_minus(mu, 1, 0)
    bracket = (
        half * (n - 2) * (n - 7) * qm10
        + 6 * q_minus(mu, 2, 0) + 6 * q_minus(mu, 3, 0) - 6 * q_minus(mu, 2, 1)
        + half * qm10**2
        + (n - Fraction(9, 2)) * q_plus(mu, 0, 1)
        + (2 * n - 9) * q_plus(mu, 0, 2)
        - (n - Fraction(9, 2)) * q_plus(mu, 1, 1)
        + binomial(n, 4) - 3 * binomial(n, 3) + 2 * binomial(n, 2)
    )
    return _scaled(mu, 4, bracket)


def kostka_hook(mu: Sequence[int], m: int) -> int:
    """``K(mu, (m, 1^{n-m}))``, which equals f^{mu/(m)} when the first row holds m cells."""
    mu = Partition(mu)
    n = mu.n
    if m < 1:
        raise ValueError(f"m must be positive, got {m}")
    if m > n:
        raise ValueError(f"m = {m} exceeds n = {n}")
    if mu.first < m:
        return 0
    if m == n:
        return 1
    if m == 1:
        return hook_count(mu)
    if m == 2:
        return skew_count_m2(mu)
    if m == 3:
        return skew_count_m3(mu)
    if m == 4:
        return skew_count_m4(mu)
    return frobenius_skew(mu, (m,))
