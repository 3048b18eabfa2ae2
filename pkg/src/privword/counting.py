"""Counting privileged words and checking the lower-bound chain exactly.

Everything numeric is done with ``int`` and :class:`fractions.Fraction`;
no floating point is involved in any inequality check.
"""

from __future__ import annotations

import os
import threading
from collections.abc import Iterable, Iterator
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import IO, Optional, Union

from . import checker
from .words import Word

#: Searches above this many candidate words are refused unless forced.
DEFAULT_MAX_CANDIDATES = 2 ** 24

#: B(n) as printed in the published table, n = 0..38.  Rows n >= 18 are not
#: trustworthy: 875408, 1649236, 3112220 appear at both 23-25 and 26-28.
PAPER_TABLE: dict[int, int] = dict(enumerate([
    1, 2, 2, 4, 4, 8, 8, 16, 20, 40, 60, 108, 176,
    328, 568, 1040, 1848, 3388, 38576, 71444, 133256, 248676, 466264, 875408, 1649236,
    3112220, 875408, 1649236, 3112220, 5888548, 11160548, 21198388, 40329428, 76865388,
    146720792, 280498456, 536986772, 1029413396, 1975848400,
]))

#: Largest n for which the published table is taken as authoritative.
PAPER_TRUSTED_MAX = 17


class EnumerationCapError(ValueError):
    """Raised when an exhaustive search would exceed the configured cap."""


class BFileError(ValueError):
    pass


@dataclass(frozen=True)
class CountRecord:
    n: int
    k: int
    count: int


def _check_cap(n: int, k: int, max_candidates: Optional[int]) -> None:
    if max_candidates is not None and k ** n > max_candidates:
        raise EnumerationCapError(
            f"{k}^{n} = {k ** n} candidates exceeds the cap of {max_candidates}; "
            "raise the cap or force to run anyway")


def _prefixes(n: int, k: int) -> list[bytes]:
    # Fixed split depth so the work units do not depend on the worker count.
    m = 0
    while m < n and k ** m < 256:
        m += 1
    return [bytes(p) for p in product(range(k), repeat=m)]


def _map_chunks(fn, n: int, k: int, threads: Optional[int]) -> list:
    chunks = _prefixes(n, k)
    threads = threads or os.cpu_count() or 1
    if threads <= 1 or len(chunks) == 1:
        return [fn(n, k, c) for c in chunks]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(lambda c: fn(n, k, c), chunks))


def count_privileged(n: int, k: int = 2, *, threads: Optional[int] = None,
                     max_candidates: Optional[int] = DEFAULT_MAX_CANDIDATES) -> CountRecord:
    """Exhaustively count privileged words of length ``n`` over ``k`` letters.

    The search is split by fixed word prefixes; the chunks are independent,
    so the total does not depend on ``threads``.
    """
    if n < 0 or k < 1:
        raise ValueError(f"need n >= 0 and k >= 1, got n={n}, k={k}")
    _check_cap(n, k, max_candidates)
    return CountRecord(n, k, sum(_map_chunks(checker.core.count_chunk, n, k, threads)))


def enumerate_privileged(n: int, k: int = 2, *, threads: Optional[int] = None,
                         max_candidates: Optional[int] = DEFAULT_MAX_CANDIDATES) -> Iterator[Word]:
    """Yield the privileged words of length ``n`` over ``k`` letters, lexicographically."""
    if n < 0 or k < 1:
        raise ValueError(f"need n >= 0 and k >= 1, got n={n}, k={k}")
    _check_cap(n, k, max_candidates)
    return (Word._trusted(tuple(w), k)
            for chunk in _map_chunks(checker.core.list_chunk, n, k, threads)
            for w in chunk)


class GeneralizedFibonacci:
    """Memoized ``G_n``: 2**n below ``t``, then the sum of the previous ``t`` values."""

    def __init__(self, t: int) -> None:
        if t < 1:
            raise ValueError(f"run bound must be >= 1, got {t}")
        self.t = t
        self.values: list[int] = [1]
        self._lock = threading.Lock()

    def __getitem__(self, n: int) -> int:
        if n < 0:
            raise IndexError(n)
        with self._lock:
            vals, t = self.values, self.t
            while len(vals) <= n:
                m = len(vals)
                vals.append(2 ** m if m < t else sum(vals[m - t:m]))
            return vals[n]


_gfib: dict[int, GeneralizedFibonacci] = {}
_gfib_lock = threading.Lock()


def g_value(n: int, t: int) -> int:
    """Number of binary words of length ``n`` avoiding ``0**t``, by recurrence."""
    if n < 0:
        raise ValueError(f"length must be >= 0, got {n}")
    with _gfib_lock:
        seq = _gfib.get(t)
        if seq is None:
            seq = _gfib[t] = GeneralizedFibonacci(t)
    return seq[n]


def count_avoiding_zero_run(n: int, t: int) -> int:
    """Same count as :func:`g_value`, by a DP over the trailing run of zeros."""
    if n < 0 or t < 1:
        raise ValueError(f"need n >= 0 and t >= 1, got n={n}, t={t}")
    # ways[r]: words so far ending in exactly r zeros, r < t
    ways = [1] + [0] * (t - 1)
    for _ in range(n):
        nxt = [0] * t
        nxt[0] = sum(ways)
        for r in range(t - 1):
            nxt[r + 1] = ways[r]
        ways = nxt
    return sum(ways)


def beta(t: int) -> Fraction:
    """``1 / (2**t - t/2 - t**2/2**t)``, exactly."""
    if t < 2:
        raise ValueError(f"beta is defined for t >= 2, got {t}")
    return 1 / (2 ** t - Fraction(t, 2) - Fraction(t * t, 2 ** t))


def alpha(t: int) -> Fraction:
    """Rational lower bound on the growth rate of ``g_value(., t)``."""
    return 2 - beta(t)


def verify_lemma8(s: int, b: Fraction) -> bool:
    """Check ``2**s - b*s*2**(s-1) <= (2-b)**s`` for ``s >= 2``, ``0 <= b <= 6/s``."""
    b = Fraction(b)
    if s < 2:
        raise ValueError(f"need s >= 2, got {s}")
    if not 0 <= b <= Fraction(6, s):
        raise ValueError(f"need 0 <= beta <= 6/s, got beta={b} for s={s}")
    return 2 ** s - b * s * 2 ** (s - 1) <= (2 - b) ** s


def verify_alpha_inequality(t: int) -> bool:
    a = alpha(t)
    return a <= 2 - a ** -t


def verify_g_lower_bound(n: int, t: int) -> bool:
    return g_value(n, t) >= alpha(t) ** n


def seed_family(n: int, t: int) -> Iterator[Word]:
    """Words ``0^t 1 w 1 0^t`` of length ``n`` where ``w`` avoids ``0^t``.

    Every such word is privileged: its border ``0^t`` occurs only at the ends.
    """
    if t < 1:
        raise ValueError(f"need t >= 1, got {t}")
    if n < 2 * t + 2:
        raise ValueError(f"need n >= 2t+2 = {2 * t + 2}, got {n}")
    head = (0,) * t + (1,)
    tail = (1,) + (0,) * t
    zeros = (0,) * t
    for mid in product((0, 1), repeat=n - 2 * t - 2):
        if not _contains(mid, zeros):
            yield Word._trusted(head + mid + tail, 2)


def _contains(w: tuple, u: tuple) -> bool:
    m = len(u)
    return any(w[i:i + m] == u for i in range(len(w) - m + 1))


def choose_t(n: int) -> int:
    """``floor(log2 n) + 1``, so that ``2**(t-1) <= n < 2**t``."""
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    return n.bit_length()


def lower_bound(n: int) -> Fraction:
    """``2**(n-5) / n**2`` as an exact rational."""
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    return Fraction(2) ** (n - 5) / n ** 2


def verify_theorem11(n: int, *, threads: Optional[int] = None,
                     max_candidates: Optional[int] = DEFAULT_MAX_CANDIDATES) -> bool:
    count = count_privileged(n, 2, threads=threads, max_candidates=max_candidates).count
    return count >= lower_bound(n)


def seed_lower_bound(n: int) -> int:
    """Size of the seed family at the standard ``t``; 0 when ``n`` is too short."""
    t = choose_t(n)
    return g_value(n - 2 * t - 2, t) if n >= 2 * t + 2 else 0


# b-files -------------------------------------------------------------------

def write_bfile(values: Union[dict[int, int], Iterable[tuple[int, int]]], fh: IO[str]) -> None:
    items = values.items() if isinstance(values, dict) else values
    for n, a in items:
        fh.write(f"{n} {a}\n")


def parse_bfile(text: str) -> dict[int, int]:
    """Parse ``n a(n)`` lines; blank lines and ``#`` comments are skipped."""
    out: dict[int, int] = {}
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise BFileError(f"line {lineno}: expected 'n a(n)', got {line!r}")
        try:
            n, a = int(parts[0]), int(parts[1])
        except ValueError:
            raise BFileError(f"line {lineno}: non-integer field in {line!r}") from None
        if n in out:
            raise BFileError(f"line {lineno}: duplicate index {n}")
        out[n] = a
    return out


def read_bfile(path: Union[str, os.PathLike]) -> dict[int, int]:
    with open(path, encoding="utf-8") as fh:
        return parse_bfile(fh.read())


def diff_bfile(computed: dict[int, int], reference: dict[int, int]) -> list[tuple[int, int, int]]:
    """``(n, computed, reference)`` for every shared index where they differ."""
    return [(n, computed[n], reference[n])
            for n in sorted(computed.keys() & reference.keys())
            if computed[n] != reference[n]]


def duplicated_runs(table: dict[int, int], min_len: int = 2) -> list[tuple[int, int, int]]:
    """Find blocks of consecutive entries repeated verbatim later in ``table``.

    Returns ``(first_start, second_start, length)`` for each maximal block.
    Growing sequences never legitimately repeat a block, so a hit marks a
    transcription error.
    """
    ns = sorted(table)
    vals = [table[n] for n in ns]
    found = []
    for i in range(len(vals)):
        for j in range(i + 1, len(vals)):
            if i > 0 and j > 0 and vals[i - 1] == vals[j - 1]:
                continue  # not maximal on the left
            L = 0
            while j + L < len(vals) and i + L < j and vals[i + L] == vals[j + L]:
                L += 1
            if L >= min_len:
                found.append((ns[i], ns[j], L))
    return found


def locate_in(value: int, computed: dict[int, int]) -> Optional[int]:
    """Index at which ``value`` appears in ``computed``, if any."""
    for n in sorted(computed):
        if computed[n] == value:
            return n
    return None

