"""Exact counts of skew standard Young tableaux f^{mu/(m)} and related identities."""

from skewknuth.partitions import Partition, SkewShape, CycleType, parse_partition, skew
from skewknuth.tableaux_oracles import hook_count, enumerate_skew_syt, aitken_count, kostka_enumerate
from skewknuth.content_stats import QIndex, content_power_sum, q_value, p_via_q
from skewknuth.characters import chi_small, chi_mn, chi_small_qform, frobenius_skew
from skewknuth.closed_forms import skew_count_m2, skew_count_m3, skew_count_m4, kostka_hook
from skewknuth.report import VerificationReport

__all__ = [
    "Partition", "SkewShape", "CycleType", "parse_partition", "skew",
    "hook_count", "enumerate_skew_syt", "aitken_count", "kostka_enumerate",
    "QIndex", "content_power_sum", "q_value", "p_via_q",
    "chi_small", "chi_mn", "chi_small_qform", "frobenius_skew",
    "skew_count_m2", "skew_count_m3", "skew_count_m4", "kostka_hook",
    "VerificationReport",
]
