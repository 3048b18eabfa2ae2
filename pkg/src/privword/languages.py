"""Membership tests for privileged words inside two simple regular languages.

Inside ``0+ 1 0+`` a word is privileged exactly when its two zero-runs have
equal length.  Inside ``R = 0+ 1 0+ 11 0+``, written with exponents as
``0^(a+1) 1 0^(b+1) 11 0^(c+1)``, it is privileged exactly when ``a == c``
and ``a > b``.  Exponent triples reported here have the ``+1`` absorbed, so
``"00101100"`` parses as ``(1, 0, 1)``.
"""

from __future__ import annotations

import re
from collections.abc import Sequence
from typing import Callable, Optional

from .words import Word, is_privileged_naive

_R = re.compile(r"(0+)1(0+)11(0+)")
_ONE_OF_ONE = re.compile(r"(0+)1(0+)")


def _bits(w: Sequence) -> str:
    if isinstance(w, str):
        return w
    if isinstance(w, Word):
        w = w.symbols
    return "".join("01"[c] if c in (0, 1) else "?" for c in w)


def in_pattern_R(w: Sequence) -> Optional[tuple[int, int, int]]:
    """Exponents ``(a, b, c)`` if ``w = 0^(a+1) 1 0^(b+1) 11 0^(c+1)``, else None."""
    m = _R.fullmatch(_bits(w))
    if m is None:
        return None
    return tuple(len(g) - 1 for g in m.groups())


def characterize_P_intersect_R(w: Sequence) -> bool:
    parsed = in_pattern_R(w)
    if parsed is None:
        raise ValueError(f"{_bits(w)!r} is not of the form 0+10+110+")
    a, b, c = parsed
    return a == c and a > b


def characterize_P_intersect_0n10n(w: Sequence) -> bool:
    m = _ONE_OF_ONE.fullmatch(_bits(w))
    if m is None:
        raise ValueError(f"{_bits(w)!r} is not of the form 0+10+")
    left, right = m.groups()
    return len(left) == len(right)


def check_power_closure(w: Sequence, j_max: int,
                        is_privileged: Callable[[Sequence], bool] = is_privileged_naive) -> bool:
    """If some ``w**k`` (``1 <= k <= j_max``) is privileged, all ``w**j`` must be.

    Returns True when the pattern holds on ``w`` up to ``j_max``, including
    the vacuous case where no power is privileged.
    """
    if j_max < 1:
        raise ValueError(f"need j_max >= 1, got {j_max}")
    verdicts = [is_privileged(w * j) for j in range(j_max + 1)]
    return all(verdicts) or not any(verdicts[1:])
