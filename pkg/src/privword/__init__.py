"""Privileged words: checking, enumeration and exact counting bounds."""

from .checker import (
    BACKEND,
    PrivilegeReport,
    failure_table,
    is_privileged,
    is_privileged_linear,
    longest_privileged_prefix_len,
)
from .counting import (
    CountRecord,
    EnumerationCapError,
    alpha,
    beta,
    choose_t,
    count_avoiding_zero_run,
    count_privileged,
    enumerate_privileged,
    g_value,
    lower_bound,
    seed_family,
)
from .words import (
    Word,
    borders,
    count_occurrences,
    is_privileged_naive,
    leading_run,
    longest_proper_privileged_prefix,
    privileged_chain,
    trailing_run,
)

__all__ = [
    "BACKEND", "PrivilegeReport", "failure_table", "is_privileged", "is_privileged_linear",
    "longest_privileged_prefix_len", "CountRecord", "EnumerationCapError", "alpha", "beta",
    "choose_t", "count_avoiding_zero_run", "count_privileged", "enumerate_privileged",
    "g_value", "lower_bound", "seed_family", "Word", "borders", "count_occurrences",
    "is_privileged_naive", "leading_run", "longest_proper_privileged_prefix",
    "privileged_chain", "trailing_run",
]
