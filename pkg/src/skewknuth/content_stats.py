"""Content power sums and the row statistics q^{+-}_{r,t}.

For ``mu = (mu_1, ..., mu_k)``::

    q^{+-}_{r,t} = sum_i  binom(mu_i, r+1) binom(i-1, t)  +-  binom(mu_i, t+1) binom(i-1, r)

Every content power sum ``p_l[C(mu)]`` is an integer combination of these
(half-integer in one term for even ``l``), which is what :func:`p_via_q`
evaluates.
"""
from __future__ import annotations

from fractions import Fraction
from typing import NamedTuple, Sequence

from skewknuth.exact_arith import binomial, phi
from skewknuth.partitions import Partition, conjugate, contents
from skewknuth.report import VerificationReport

PLUS = "+"
MINUS = "-"


class QIndex(NamedTuple):
    sign: str
    r: int
    t: int

    def __str__(self) -> str:
        return f"q{self.sign}[{self.r},{self.t}]"


def _sign(sign: str) -> int:
    if sign == PLUS:
        return 1
    if sign == MINUS:
        return -1
    raise ValueError(f"sign must be '+' or '-', got {sign!r}")


def content_power_sum(mu: Sequence[int], l: int) -> int:
    """``p_l[C(mu)]``: sum of ``(j - i)^l`` over the cells of ``mu``."""
    return sum(c**l for c in contents(mu))


def _row_sum(parts: Sequence[int], r: int, t: int) -> int:
    return sum(binomial(p, r + 1) * binomial(i - 1, t) for i, p in enumerate(parts, start=1))


def q_value(mu: Sequence[int], idx: QIndex) -> int:
    sign, r, t = idx
    return _row_sum(mu, r, t) + _sign(sign) * sum(
        binomial(p, t + 1) * binomial(i - 1, r) for i, p in enumerate(mu, start=1)
    )


def q_plus(mu: Sequence[int], r: int, t: int) -> int:
    return q_value(mu, QIndex(PLUS, r, t))


def q_minus(mu: Sequence[int], r: int, t: int) -> int:
    return q_value(mu, QIndex(MINUS, r, t))


def q_via_conjugate(mu: Sequence[int], idx: QIndex) -> int:
    """The same statistic with its second half read off the conjugate partition."""
    sign, r, t = idx
    return _row_sum(mu, r, t) + _sign(sign) * _row_sum(conjugate(mu), r, t)


def p_via_q(mu: Sequence[int], l: int) -> int:
    """``p_l[C(mu)]`` rebuilt from q statistics with phi_l coefficients.

    Odd ``l = 2L+1`` uses only ``q^-``; even ``l = 2L`` uses ``q^+`` plus a
    half-weighted middle term, whose half must cancel exactly.
    """
    if l < 0:
        raise ValueError("l must be nonnegative")
    half, odd = divmod(l, 2)
    if odd:
        return sum(
            (-1) ** h * phi(l, h, r, t) * q_minus(mu, t, r)
            for h in range(half + 1)
            for r in range(h + 1)
            for t in range(l - h + 1)
        )
    total = Fraction(sum(
        (-1) ** h * phi(l, h, r, t) * q_plus(mu, r, t)
        for h in range(half)
        for r in range(h + 1)
        for t in range(l - h + 1)
    ))
    total += Fraction((-1) ** half, 2) * sum(
        phi(l, half, r, t) * q_plus(mu, r, t)
        for r in range(half + 1)
        for t in range(half + 1)
    )
    assert total.denominator == 1, f"p_{l} via q is not integral for {tuple(mu)}: {total}"
    return int(total)


def conjugate_identity_holds(
    mu: Sequence[int],
    candidate: Sequence[int],
    r_max: int | None = None,
    t_max: int | None = None,
) -> VerificationReport:
    """Test ``candidate`` in the conjugate's role over an (r, t) grid.

    Checks ``sum_i binom(mu_i, t+1) binom(i-1, r) == sum_j binom(cand_j, r+1) binom(j-1, t)``.
    The default grid reaches ``r, t <= max(mu_1, h(mu), cand_1, h(cand))``;
    the ``r = 0`` column alone already forces ``candidate == mu'``.
    """
    mu, candidate = Partition(mu), Partition(candidate)
    bound = max(mu.first, mu.height, candidate.first, candidate.height)
    r_max = bound if r_max is None else r_max
    t_max = bound if t_max is None else t_max
    report = VerificationReport(suite="conjugate-identity")
    with report.timed():
        for r in range(r_max + 1):
            for t in range(t_max + 1):
                lhs = _row_sum(mu, t, r)
                rhs = _row_sum(candidate, r, t)
                report.check("conjugate-identity", f"mu={mu}, candidate={candidate}, r={r}, t={t}", lhs, rhs)
    return report
