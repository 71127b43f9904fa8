"""Exhaustive verification suites behind ``skewknuth verify``.

Each suite walks every partition up to ``max_n`` and records one case per
comparison. Enumeration-backed checks never go beyond ``ENUM_MAX_N``.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Callable

from skewknuth.characters import (
    QFORM_SUPPORTS,
    SMALL_SUPPORTS,
    chi_mn,
    chi_small,
    chi_small_qform,
    frobenius_skew,
)
from skewknuth.closed_forms import (
    M2_VARIANTS,
    M3_VARIANTS,
    kostka_hook,
    skew_count_m2,
    skew_count_m3,
    skew_count_m4,
)
from skewknuth.content_stats import (
    MINUS,
    PLUS,
    QIndex,
    conjugate_identity_holds,
    content_power_sum,
    p_via_q,
    q_minus,
    q_plus,
    q_value,
    q_via_conjugate,
)
from skewknuth.exact_arith import ARITH_IDENTITIES, binomial, check_arith_identity
from skewknuth.partitions import conjugate, contains, generate_partitions, skew, z_factor
from skewknuth.report import VerificationReport
from skewknuth.tableaux_oracles import aitken_count, enumerate_skew_syt, kostka_enumerate

ENUM_MAX_N = 9
Q_GRID = 6


def _partitions_upto(max_n: int, start: int = 1):
    for n in range(start, max_n + 1):
        yield from generate_partitions(n)


def verify_arith(max_n: int | None = None) -> VerificationReport:
    report = VerificationReport(suite="arith")
    with report.timed():
        for name in ARITH_IDENTITIES:
            report.merge(check_arith_identity(name))
    return report


def verify_conjugate(max_n: int | None = None) -> VerificationReport:
    max_n = 12 if max_n is None else max_n
    report = VerificationReport(suite="conjugate")
    with report.timed():
        for mu in _partitions_upto(max_n):
            conj = conjugate(mu)
            report.merge(conjugate_identity_holds(mu, conj, Q_GRID, Q_GRID))
            for sign in (PLUS, MINUS):
                for r in range(Q_GRID + 1):
                    for t in range(Q_GRID + 1):
                        idx = QIndex(sign, r, t)
                        report.check("q-conjugate-form", f"mu={mu}, {idx}", q_via_conjugate(mu, idx), q_value(mu, idx))
            for r in range(Q_GRID + 1):
                for t in range(Q_GRID + 1):
                    report.check("q-minus-antisymmetry", f"mu={mu}, r={r}, t={t}", q_minus(mu, r, t), -q_minus(mu, t, r))
                    report.check("q-plus-symmetry", f"mu={mu}, r={r}, t={t}", q_plus(mu, r, t), q_plus(mu, t, r))
            report.check(
                "row-column-identity", f"mu={mu}",
                sum(p * (i - 1) for i, p in enumerate(mu, start=1)),
                sum(binomial(c, 2) for c in conj),
            )
            report.check("half-q-plus-00", f"mu={mu}", q_plus(mu, 0, 0), 2 * mu.n)
        # every wrong candidate must be rejected
        for mu in _partitions_upto(min(max_n, ENUM_MAX_N)):
            conj = conjugate(mu)
            for cand in generate_partitions(mu.n):
                if cand == conj:
                    continue
                rejected = not conjugate_identity_holds(mu, cand).passed
                report.check("conjugate-converse", f"mu={mu}, candidate={cand}", rejected, True)
    return report


def _printed_power_sums(mu) -> dict[int, int]:
    qm, qp = q_minus, q_plus
    return {
        0: qp(mu, 0, 0) // 2,
        1: qm(mu, 1, 0),
        2: qp(mu, 0, 1) + 2 * qp(mu, 0, 2) - qp(mu, 1, 1),
        3: qm(mu, 1, 0) + 6 * qm(mu, 2, 0) + 6 * qm(mu, 3, 0) - 6 * qm(mu, 2, 1),
    }


def verify_prop1(max_n: int | None = None) -> VerificationReport:
    max_n = 12 if max_n is None else max_n
    report = VerificationReport(suite="prop1")
    with report.timed():
        for mu in _partitions_upto(max_n):
            for l in range(9):
                report.check("p-via-q", f"mu={mu}, l={l}", p_via_q(mu, l), content_power_sum(mu, l))
            for l, value in _printed_power_sums(mu).items():
                report.check("p-low-order-forms", f"mu={mu}, l={l}", value, content_power_sum(mu, l))
    return report


def remark_mismatches(n: int) -> int:
    """Shapes of size ``n`` where the uncorrected 6-cycle formula disagrees with MN."""
    cls = (6,) + (1,) * (n - 6)
    return sum(
        1 for mu in generate_partitions(n)
        if chi_small(mu, (6,), _uncorrected_p3_m6=True) != chi_mn(mu, cls)
    )


def verify_characters(max_n: int | None = None) -> VerificationReport:
    max_n = 12 if max_n is None else max_n
    report = VerificationReport(suite="characters")
    with report.timed():
        for mu in _partitions_upto(max_n, start=2):
            n = mu.n
            for tag in SMALL_SUPPORTS:
                if n < sum(tag):
                    continue
                cls = tag + (1,) * (n - sum(tag))
                value = chi_small(mu, tag)
                report.check("chi-small", f"mu={mu}, cycle={tag}", value, chi_mn(mu, cls))
                if tag in QFORM_SUPPORTS:
                    report.check("chi-qform", f"mu={mu}, cycle={tag}", chi_small_qform(mu, tag), value)
        for n in range(6, min(max_n, 10) + 1):
            report.check("remark-negative-control", f"n={n}", remark_mismatches(n) > 0, True)
        for n in range(1, min(max_n, 7) + 1):
            classes = generate_partitions(n)
            for mu in classes:
                for nu in classes:
                    inner = sum(
                        Fraction(chi_mn(mu, lam) * chi_mn(nu, lam), z_factor(lam))
                        for lam in classes
                    )
                    report.check("orthogonality", f"mu={mu}, nu={nu}", inner, int(mu == nu))
        for mu in _partitions_upto(min(max_n, ENUM_MAX_N)):
            for m in range(0, min(4, mu.n) + 1):
                for lam in generate_partitions(m):
                    expected = aitken_count(skew(mu, lam)) if contains(mu, lam) else 0
                    report.check("frobenius-skew", f"mu={mu}, lam={lam}", frobenius_skew(mu, lam), expected)
    return report


def _closed_variants(mu, m) -> dict[str, int]:
    if m == 2:
        return {f"m2-{v}": skew_count_m2(mu, v) for v in M2_VARIANTS}
    if m == 3:
        return {f"m3-{v}": skew_count_m3(mu, v) for v in M3_VARIANTS}
    return {"m4": skew_count_m4(mu)}


def verify_closed_forms(max_n: int | None = None) -> VerificationReport:
    max_n = 12 if max_n is None else max_n
    enum_n = min(max_n, ENUM_MAX_N)
    report = VerificationReport(suite="closed-forms")
    with report.timed():
        for mu in _partitions_upto(max_n):
            for m in (2, 3, 4):
                if mu.first < m:
                    continue
                shape = skew(mu, (m,))
                expected = aitken_count(shape)
                for name, value in _closed_variants(mu, m).items():
                    report.check(name, f"mu={mu}", value, expected)
                report.check(f"frobenius-m{m}", f"mu={mu}", frobenius_skew(mu, (m,)), expected)
                if mu.n <= enum_n:
                    report.check(f"enumeration-m{m}", f"mu={mu}", enumerate_skew_syt(shape), expected)
        for mu in _partitions_upto(enum_n):
            for m in range(1, mu.n + 1):
                weight = (m,) + (1,) * (mu.n - m)
                report.check("kostka-hook", f"mu={mu}, m={m}", kostka_hook(mu, m), kostka_enumerate(mu, weight))
    return report


SUITES: dict[str, Callable[[int | None], VerificationReport]] = {
    "arith": verify_arith,
    "conjugate": verify_conjugate,
    "prop1": verify_prop1,
    "characters": verify_characters,
    "closed-forms": verify_closed_forms,
}


def run_suite(name: str, max_n: int | None = None) -> VerificationReport:
    if name == "all":
        report = VerificationReport(suite="all")
        for suite in SUITES.values():
            sub = suite(max_n)
            report.merge(sub)
            report.elapsed_ms += sub.elapsed_ms
        return report
    try:
        suite = SUITES[name]
    except KeyError:
        raise ValueError(f"unknown suite {name!r}; expected one of {sorted(SUITES) + ['all']}") from None
    return suite(max_n)
