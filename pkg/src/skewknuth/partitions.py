"""Partitions, skew shapes and cycle types.

A :class:`Partition` is an immutable tuple of weakly decreasing positive
parts. Cells are indexed ``(i, j)`` from 1, row ``i`` and column ``j``.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from math import factorial, prod
from typing import Iterable


class PartitionError(ValueError):
    pass


class Partition(tuple):
    """Weakly decreasing tuple of positive integers.

    The empty partition is allowed; it is the inner shape of a straight
    (non-skew) shape.
    """

    def __new__(cls, parts: Iterable[int] = ()):
        parts = tuple(parts)
        for p in parts:
            if not isinstance(p, int) or isinstance(p, bool):
                raise PartitionError(f"parts must be integers, got {p!r}")
            if p < 1:
                raise PartitionError(f"parts must be positive, got {p}")
        for a, b in zip(parts, parts[1:]):
            if b > a:
                raise PartitionError(f"parts must be non-increasing, got {parts}")
        return super().__new__(cls, parts)

    @property
    def n(self) -> int:
        return sum(self)

    @property
    def height(self) -> int:
        return len(self)

    @property
    def first(self) -> int:
        """Length of the first row (0 for the empty partition)."""
        return self[0] if self else 0

    def __repr__(self) -> str:
        return f"Partition({tuple(self)})"

    def __str__(self) -> str:
        return format_partition(self)


def format_partition(mu: Iterable[int]) -> str:
    return ",".join(str(p) for p in mu)


def _parse_parts(text: str) -> list[int]:
    text = text.strip()
    if not text:
        raise PartitionError("empty partition text")
    parts: list[int] = []
    for token in text.split(","):
        token = token.strip()
        base, _, exponent = token.partition("^")
        try:
            value = int(base)
            count = int(exponent) if exponent else 1
        except ValueError:
            raise PartitionError(f"not an integer token: {token!r}") from None
        if value < 1:
            raise PartitionError(f"parts must be positive, got {token!r}")
        if count < 0:
            raise PartitionError(f"negative exponent in {token!r}")
        parts.extend([value] * count)
    return parts


def parse_partition(text: str) -> Partition:
    """Parse ``"3,2,1"``; exponent sugar ``"3,1^3"`` expands to ``3,1,1,1``."""
    return Partition(_parse_parts(text))


def parse_composition(text: str) -> tuple[int, ...]:
    """Like :func:`parse_partition` but without the monotonicity requirement
    (SSYT weights need not be decreasing)."""
    return tuple(_parse_parts(text))


def conjugate(mu: Iterable[int]) -> Partition:
    mu = tuple(mu)
    if not mu:
        return Partition()
    return Partition(sum(1 for p in mu if p >= j) for j in range(1, mu[0] + 1))


def _partitions_below(n: int, largest: int) -> list[tuple[int, ...]]:
    if n == 0:
        return [()]
    out = []
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions_below(n - first, first):
            out.append((first,) + rest)
    return out


@lru_cache(maxsize=None)
def _partitions(n: int) -> tuple[Partition, ...]:
    return tuple(Partition(p) for p in _partitions_below(n, n))


def generate_partitions(n: int) -> tuple[Partition, ...]:
    """All partitions of ``n`` in reverse-lexicographic order, largest first.

    ``n = 0`` yields the single empty partition.
    """
    if n < 0:
        raise PartitionError(f"cannot partition a negative integer ({n})")
    return _partitions(n)


def multiplicity(mu: Iterable[int], i: int) -> int:
    return sum(1 for p in mu if p == i)


def z_factor(mu: Iterable[int]) -> int:
    """``z_mu = prod_i i^{m_i} m_i!``; ``n!/z_mu`` is the size of the class of type mu."""
    return prod(i**m * factorial(m) for i, m in Counter(mu).items())


def contents(mu: Iterable[int]) -> list[int]:
    """Content ``j - i`` of every cell, row by row."""
    return [j - i for i, row in enumerate(mu, start=1) for j in range(1, row + 1)]


@dataclass(frozen=True)
class SkewShape:
    outer: Partition
    inner: Partition

    def __post_init__(self):
        if len(self.inner) > len(self.outer) or any(
            a > b for a, b in zip(self.inner, self.outer)
        ):
            raise PartitionError(f"{tuple(self.inner)} is not contained in {tuple(self.outer)}")

    @property
    def size(self) -> int:
        return self.outer.n - self.inner.n

    def padded_inner(self) -> tuple[int, ...]:
        return tuple(self.inner) + (0,) * (len(self.outer) - len(self.inner))

    def __str__(self) -> str:
        if not self.inner:
            return f"({self.outer})"
        return f"({self.outer})/({self.inner})"


def skew(outer: Iterable[int], inner: Iterable[int] = ()) -> SkewShape:
    return SkewShape(Partition(outer), Partition(inner))


def contains(outer: Iterable[int], inner: Iterable[int]) -> bool:
    outer, inner = tuple(outer), tuple(inner)
    return len(inner) <= len(outer) and all(a <= b for a, b in zip(inner, outer))


@dataclass(frozen=True)
class CycleType:
    """Conjugacy class ``(partition, 1^{degree - |partition|})`` of S_degree."""

    partition: Partition
    degree: int

    def __post_init__(self):
        if self.partition.n > self.degree:
            raise PartitionError(
                f"cycle type {tuple(self.partition)} does not fit in S_{self.degree}"
            )

    def full(self) -> Partition:
        return Partition(tuple(self.partition) + (1,) * (self.degree - self.partition.n))
