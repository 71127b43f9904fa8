"""Exact scalar combinatorics: binomials, falling factorials, Stirling numbers
and the derived quantities C(r, t), phi_l(h, r, t) and R_l(t).

Everything is computed over Python ints or :class:`fractions.Fraction`, so no
value is ever rounded.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb, factorial
from typing import Union

from skewknuth.report import VerificationReport

Number = Union[int, Fraction]


def binomial(a: Number, b: int) -> Number:
    """Binomial coefficient with the zero-outside-range convention.

    ``binomial(a, b)`` is 0 for ``b < 0`` and for ``0 <= a < b``. A negative or
    non-integral upper index uses the product form ``[a]_b / b!``.

    >>> binomial(6, 2), binomial(2, 5), binomial(-1, 3)
    (15, 0, -1)
    """
    if b < 0:
        return 0
    if isinstance(a, int):
        if a >= 0:
            return comb(a, b)
        return falling_factorial(a, b) // factorial(b)
    if isinstance(a, Fraction) and a.denominator == 1:
        return binomial(a.numerator, b)
    return Fraction(falling_factorial(a, b)) / factorial(b)


def falling_factorial(z: Number, n: int) -> Number:
    """``[z]_n = z(z-1)...(z-n+1)``, with ``[z]_0 = 1``."""
    if n < 0:
        raise ValueError(f"falling factorial length must be nonnegative, got {n}")
    result: Number = 1
    for i in range(n):
        result *= z - i
    return result


@lru_cache(maxsize=None)
def stirling2(n: int, k: int) -> int:
    """Stirling number of the second kind S(n, k), memoized."""
    if n < 0 or k < 0:
        raise ValueError("stirling2 is defined for nonnegative arguments")
    if n == 0 and k == 0:
        return 1
    if n == 0 or k == 0 or k > n:
        return 0
    return stirling2(n - 1, k - 1) + k * stirling2(n - 1, k)


@lru_cache(maxsize=None)
def c_number(r: int, t: int) -> int:
    """``C(r, t) = t! S(r+1, t+1)``; vanishes for ``t > r``."""
    return factorial(t) * stirling2(r + 1, t + 1)


def phi(l: int, h: int, r: int, t: int) -> int:
    """``phi_l(h, r, t) = binom(l, h) C(h, r) C(l-h, t)``."""
    if not 0 <= h <= l:
        raise ValueError(f"phi requires 0 <= h <= l, got h={h}, l={l}")
    return comb(l, h) * c_number(h, r) * c_number(l - h, t)


def power_sum_range(l: int, t: int) -> int:
    """``R_l(t) = 1^l + 2^l + ... + t^l``."""
    return sum(i**l for i in range(1, t + 1))


# --- identity checkers -------------------------------------------------------

def _check_r_recurrence(report: VerificationReport, l_max: int, t_max: int) -> None:
    for l in range(l_max + 1):
        for t in range(t_max + 1):
            lhs = power_sum_range(l + 1, t)
            rhs = (t + 1) * power_sum_range(l, t) - sum(power_sum_range(l, i) for i in range(1, t + 1))
            report.check("R-recurrence", f"l={l}, t={t}", lhs, rhs)


def _check_r_closed_form(report: VerificationReport, l_max: int, t_max: int) -> None:
    for l in range(l_max + 1):
        for t in range(t_max + 1):
            rhs = sum(c_number(l, i) * binomial(t, i + 1) for i in range(l + 1))
            report.check("R-closed-form", f"l={l}, t={t}", power_sum_range(l, t), rhs)


def _check_monomial_expansion(report: VerificationReport, l_max: int, points) -> None:
    for z in points:
        for l in range(l_max + 1):
            rhs = sum(c_number(l, i) * binomial(z - 1, i) for i in range(l + 1))
            report.check("monomial-expansion", f"l={l}, z={z}", Fraction(z) ** l, rhs)


def _check_hockey_stick(report: VerificationReport, l_max: int, m_max: int) -> None:
    for l in range(l_max + 1):
        for m in range(m_max + 1):
            lhs = sum(binomial(k, m) for k in range(l + 1))
            report.check("hockey-stick", f"l={l}, m={m}", lhs, binomial(l + 1, m + 1))


def _check_c_recurrence(report: VerificationReport, r_max: int, t_max: int) -> None:
    # r = 0 is the base row; the recurrence would need C(-1, .)
    for t in range(t_max + 1):
        report.check("C-recurrence", f"r=0, t={t}", c_number(0, t), int(t == 0))
    for r in range(1, r_max + 1):
        for t in range(t_max + 1):
            prev = t * c_number(r - 1, t - 1) if t > 0 else 0
            rhs = prev + (t + 1) * c_number(r - 1, t)
            report.check("C-recurrence", f"r={r}, t={t}", c_number(r, t), rhs)


DEFAULT_MONOMIAL_POINTS = tuple(range(-5, 21)) + (Fraction(7, 2), Fraction(-1, 3), Fraction(5, 7))

ARITH_IDENTITIES = {
    "R-recurrence": (_check_r_recurrence, {"l_max": 8, "t_max": 30}),
    "R-closed-form": (_check_r_closed_form, {"l_max": 8, "t_max": 30}),
    "monomial-expansion": (_check_monomial_expansion, {"l_max": 8, "points": DEFAULT_MONOMIAL_POINTS}),
    "hockey-stick": (_check_hockey_stick, {"l_max": 30, "m_max": 30}),
    "C-recurrence": (_check_c_recurrence, {"r_max": 10, "t_max": 10}),
}


def check_arith_identity(name: str, bounds: dict | None = None) -> VerificationReport:
    """Evaluate both sides of a named identity exactly over a full grid.

    ``bounds`` overrides entries of the identity's default grid, e.g.
    ``{"l_max": 8, "t_max": 30}``; the monomial expansion takes ``points``.
    """
    try:
        checker, defaults = ARITH_IDENTITIES[name]
    except KeyError:
        raise ValueError(f"unknown identity {name!r}; expected one of {sorted(ARITH_IDENTITIES)}") from None
    params = dict(defaults)
    if bounds:
        unknown = set(bounds) - set(params)
        if unknown:
            raise ValueError(f"unknown bounds for {name}: {sorted(unknown)}")
        params.update(bounds)
    report = VerificationReport(suite=name)
    with report.timed():
        checker(report, **params)
    return report
