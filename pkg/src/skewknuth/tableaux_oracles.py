"""Ground-truth tableau counts used to check every closed form.

Three independent routes: the hook length formula, direct enumeration of
(skew) standard and semistandard fillings, and the Aitken determinant
``N! det[1/(mu_i - nu_j - i + j)!]``.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import factorial, prod
from typing import Sequence

from skewknuth.partitions import Partition, SkewShape, conjugate

DEFAULT_ENUM_CAP = 14


class EnumerationCapExceeded(ValueError):
    pass


def _check_cap(cells: int, cap: int | None) -> None:
    if cap is not None and cells > cap:
        raise EnumerationCapExceeded(
            f"{cells} cells exceeds the enumeration cap of {cap}; raise the cap explicitly"
        )


def hook_count(mu: Sequence[int]) -> int:
    """Number of SYT of shape ``mu`` via the hook length formula."""
    mu = Partition(mu)
    conj = conjugate(mu)
    hooks = prod(
        (row - j) + (conj[j - 1] - i) + 1
        for i, row in enumerate(mu, start=1)
        for j in range(1, row + 1)
    )
    count, rem = divmod(factorial(mu.n), hooks)
    assert rem == 0, f"hook formula not integral for {mu}"
    return count


def enumerate_skew_syt(shape: SkewShape, cap: int | None = DEFAULT_ENUM_CAP) -> int:
    """Count skew SYT by placing 1, 2, ..., N one at a time.

    The state is the current row lengths; entry ``k`` may go at the end of
    row ``i`` when row ``i`` is not yet full and the cell above it is already
    occupied. Disconnected shapes need no special handling.
    """
    _check_cap(shape.size, cap)
    outer = tuple(shape.outer)

    @lru_cache(maxsize=None)
    def count(rows: tuple[int, ...]) -> int:
        if rows == outer:
            return 1
        total = 0
        for i, length in enumerate(rows):
            if length < outer[i] and (i == 0 or rows[i - 1] > length):
                total += count(rows[:i] + (length + 1,) + rows[i + 1:])
        return total

    return count(shape.padded_inner())


def _det(matrix: list[list[Fraction]]) -> Fraction:
    """Determinant by Gaussian elimination over exact rationals."""
    a = [row[:] for row in matrix]
    n = len(a)
    det = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if a[r][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            a[col], a[pivot] = a[pivot], a[col]
            det = -det
        det *= a[col][col]
        for r in range(col + 1, n):
            if a[r][col]:
                factor = a[r][col] / a[col][col]
                for c in range(col, n):
                    a[r][c] -= factor * a[col][c]
    return det


def _inv_factorial(x: int) -> Fraction:
    return Fraction(0) if x < 0 else Fraction(1, factorial(x))


def aitken_count(shape: SkewShape) -> int:
    """Skew SYT count as ``N! det[1/(mu_i - nu_j - i + j)!]``."""
    mu = shape.outer
    nu = shape.padded_inner()
    k = len(mu)
    if k == 0:
        return 1
    matrix = [
        [_inv_factorial(mu[i] - nu[j] - i + j) for j in range(k)]
        for i in range(k)
    ]
    value = factorial(shape.size) * _det(matrix)
    assert value.denominator == 1 and value >= 0, f"determinant count {value} for {shape}"
    return int(value)


def kostka_enumerate(
    mu: Sequence[int], weight: Sequence[int], cap: int | None = DEFAULT_ENUM_CAP
) -> int:
    """Count SSYT of shape ``mu`` in which entry ``i`` appears ``weight[i-1]`` times.

    Entries are placed value by value; the cells holding one value form a
    horizontal strip, so row ``i`` may grow at most up to the previous length
    of row ``i - 1``.
    """
    mu = Partition(mu)
    weight = tuple(weight)
    if any(w < 0 for w in weight):
        raise ValueError(f"weights must be nonnegative, got {weight}")
    if sum(weight) != mu.n:
        raise ValueError(f"weight {weight} has size {sum(weight)}, shape {tuple(mu)} has size {mu.n}")
    _check_cap(mu.n, cap)
    k = len(mu)

    def strips(rows: tuple[int, ...], size: int, i: int = 0):
        # yield every way of adding a horizontal strip of `size` cells to rows[i:]
        if i == k:
            if size == 0:
                yield ()
            return
        limit = mu[i] if i == 0 else min(mu[i], rows[i - 1])
        for add in range(min(size, limit - rows[i]), -1, -1):
            for rest in strips(rows, size - add, i + 1):
                yield (rows[i] + add,) + rest

    @lru_cache(maxsize=None)
    def count(rows: tuple[int, ...], step: int) -> int:
        if step == len(weight):
            return 1
        return sum(count(new, step + 1) for new in strips(rows, weight[step]))

    return count((0,) * k, 0)

