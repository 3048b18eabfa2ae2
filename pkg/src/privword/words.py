"""Words, borders, occurrence counting and the definitional privilege oracle.

The functions here accept any sequence of hashable symbols: a :class:`Word`,
a ``str`` such as ``"0110"``, ``bytes`` or a tuple of integer codes.  Only
symbol equality is ever used, so the alphabet is whatever the caller says it
is.  Functions that return words return slices of their input, so the input
type is preserved.
"""

from __future__ import annotations

from collections.abc import Iterator, Sequence
from dataclasses import dataclass
from typing import Any, Optional

DEFAULT_SYMBOLS = "0123456789abcdefghijklmnopqrstuvwxyz"


@dataclass(frozen=True)
class Word(Sequence):
    """An immutable word over the alphabet ``{0, ..., k-1}``.

    >>> w = Word.parse("0110")
    >>> str(w), len(w), w.k
    ('0110', 4, 2)
    >>> str(w[1:3] * 2)
    '1111'
    """

    symbols: tuple[int, ...]
    k: int = 2

    def __post_init__(self) -> None:
        if self.k < 1:
            raise ValueError(f"alphabet size must be positive, got {self.k}")
        for c in self.symbols:
            if not 0 <= c < self.k:
                raise ValueError(f"symbol code {c} outside alphabet of size {self.k}")

    @classmethod
    def _trusted(cls, symbols: tuple[int, ...], k: int) -> "Word":
        w = object.__new__(cls)
        object.__setattr__(w, "symbols", symbols)
        object.__setattr__(w, "k", k)
        return w

    @classmethod
    def parse(cls, text: str, alphabet: str = "01") -> "Word":
        """Map characters to codes by their position in ``alphabet``."""
        if len(set(alphabet)) != len(alphabet) or not alphabet:
            raise ValueError(f"alphabet must be a non-empty string of distinct symbols: {alphabet!r}")
        index = {ch: i for i, ch in enumerate(alphabet)}
        try:
            codes = tuple(index[ch] for ch in text)
        except KeyError as exc:
            raise ValueError(f"symbol {exc.args[0]!r} not in alphabet {alphabet!r}") from None
        return cls._trusted(codes, len(alphabet))

    def format(self, alphabet: Optional[str] = None) -> str:
        if alphabet is None:
            if self.k > len(DEFAULT_SYMBOLS):
                raise ValueError("alphabet too large for default symbols; pass one explicitly")
            alphabet = DEFAULT_SYMBOLS
        return "".join(alphabet[c] for c in self.symbols)

    def to_bytes(self) -> bytes:
        return bytes(self.symbols)

    def __str__(self) -> str:
        return self.format()

    def __len__(self) -> int:
        return len(self.symbols)

    def __iter__(self) -> Iterator[int]:
        return iter(self.symbols)

    def __getitem__(self, index):
        if isinstance(index, slice):
            return Word._trusted(self.symbols[index], self.k)
        return self.symbols[index]

    def __add__(self, other: "Word") -> "Word":
        if not isinstance(other, Word):
            return NotImplemented
        return Word._trusted(self.symbols + other.symbols, max(self.k, other.k))

    def __mul__(self, j: int) -> "Word":
        return Word._trusted(self.symbols * j, self.k)

    __rmul__ = __mul__


def _plain(w: Sequence) -> Sequence:
    # Word slicing allocates Word objects; the hot paths work on the tuple.
    return w.symbols if isinstance(w, Word) else w


def borders(w: Sequence) -> list[int]:
    """Lengths of the nonempty proper borders of ``w``, increasing.

    >>> borders("000"), borders("01"), borders("0110")
    ([1, 2], [], [1])
    """
    s = _plain(w)
    n = len(s)
    return [l for l in range(1, n) if s[:l] == s[n - l:]]


def count_occurrences(u: Sequence, w: Sequence) -> int:
    """Number of possibly overlapping occurrences of ``u`` in ``w``."""
    u, w = _plain(u), _plain(w)
    m = len(u)
    if m == 0:
        raise ValueError("occurrences of the empty word are not counted")
    return sum(1 for i in range(len(w) - m + 1) if w[i:i + m] == u)


def _occurs_exactly_twice(u, w) -> bool:
    m = len(u)
    seen = 0
    for i in range(len(w) - m + 1):
        if w[i:i + m] == u:
            seen += 1
            if seen > 2:
                return False
    return seen == 2


def is_privileged_naive(w: Sequence, memo: Optional[dict[Any, bool]] = None) -> bool:
    """Decide privilege straight from the definition.

    A word is privileged if it has length at most one, or if some nonempty
    proper border is itself privileged and occurs exactly twice.  The empty
    border is never a witness for longer words since it occurs ``|w|+1``
    times.  ``memo`` maps plain word values to verdicts and may be shared
    between calls over words of the same representation.
    """
    if memo is None:
        memo = {}
    return _naive(_plain(w), memo)


def _naive(s, memo: dict) -> bool:
    n = len(s)
    if n <= 1:
        return True
    hit = memo.get(s)
    if hit is not None:
        return hit
    verdict = False
    # Longest first: a long border occurring twice is the common witness.
    for l in range(n - 1, 0, -1):
        u = s[:l]
        if u == s[n - l:] and _occurs_exactly_twice(u, s) and _naive(u, memo):
            verdict = True
            break
    memo[s] = verdict
    return verdict


def longest_privileged_prefix_naive(w: Sequence, proper: bool = False,
                                    memo: Optional[dict] = None) -> int:
    """Length of the longest (optionally proper) privileged prefix of ``w``."""
    s = _plain(w)
    if memo is None:
        memo = {}
    top = len(s) - 1 if proper else len(s)
    for m in range(top, -1, -1):
        if _naive(s[:m], memo):
            return m
    raise AssertionError("unreachable: the empty prefix is privileged")


def longest_proper_privileged_prefix(w: Sequence) -> Sequence:
    """The longest privileged prefix of ``w`` shorter than ``w``.

    >>> longest_proper_privileged_prefix("00101100")
    '00'
    """
    if len(w) == 0:
        raise ValueError("the empty word has no proper prefix")
    return w[:longest_privileged_prefix_naive(w, proper=True)]


def privileged_chain(w: Sequence) -> list:
    """Privileged prefixes of ``w`` linked by "longest proper privileged prefix".

    The chain starts at a word of length at most one and ends at ``w``.

    >>> privileged_chain("010010")
    ['0', '010', '010010']
    """
    memo: dict = {}
    if not is_privileged_naive(w, memo):
        raise ValueError(f"{w!r} is not privileged")
    chain = [w]
    while len(chain[-1]) > 1:
        cur = chain[-1]
        chain.append(cur[:longest_privileged_prefix_naive(cur, proper=True, memo=memo)])
    chain.reverse()
    return chain


def leading_run(w: Sequence) -> tuple[Any, int]:
    """First symbol of ``w`` and the length of its maximal run at the start."""
    if len(w) == 0:
        raise ValueError("empty word has no leading run")
    a = w[0]
    n = 1
    while n < len(w) and w[n] == a:
        n += 1
    return a, n


def trailing_run(w: Sequence) -> tuple[Any, int]:
    if len(w) == 0:
        raise ValueError("empty word has no trailing run")
    a = w[-1]
    n = 1
    while n < len(w) and w[-1 - n] == a:
        n += 1
    return a, n
