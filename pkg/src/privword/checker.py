"""Linear-time privilege checking with a modified KMP failure-table scan.

The scan keeps ``p``, the length of the longest privileged prefix read so
far.  Whenever a new failure-table entry equals ``p``, the word read so far
has just seen its privileged prefix reappear for the first time, so it is
privileged and ``p`` jumps to the current length.

The compiled core (``_ccore``) is used when it was built; otherwise the pure
Python kernels in ``_pycore`` are used.  Setting ``PRIVWORD_PURE_PYTHON=1``
forces the fallback.
"""

from __future__ import annotations

import os
from collections.abc import Sequence
from dataclasses import asdict, dataclass

from . import _pycore
from .words import Word

if os.environ.get("PRIVWORD_PURE_PYTHON"):
    core = _pycore
else:
    try:
        from . import _ccore as core
    except ImportError:  # extension not built
        core = _pycore

BACKEND: str = core.BACKEND


@dataclass(frozen=True)
class PrivilegeReport:
    privileged: bool
    p: int
    while_iterations: int

    def to_dict(self) -> dict:
        return asdict(self)


def _as_buffer(w: Sequence):
    """Byte-code view of ``w`` for the compiled core, or None if not representable."""
    if isinstance(w, Word):
        return w.to_bytes() if w.k <= 256 else None
    if isinstance(w, (bytes, bytearray)):
        return w
    if isinstance(w, str):
        try:
            return w.encode("latin-1")
        except UnicodeEncodeError:
            return None
    if hasattr(w, "__array_interface__"):
        import numpy as np

        a = np.ascontiguousarray(w)
        return a if a.dtype == np.uint8 else None
    try:
        return bytes(w)
    except (TypeError, ValueError):
        return None


def _dispatch(w: Sequence):
    if core is not _pycore:
        buf = _as_buffer(w)
        if buf is not None:
            return core, buf
    if isinstance(w, Word):
        return _pycore, w.symbols
    return _pycore, w


def _check(w: Sequence) -> tuple[bool, int, int]:
    impl, buf = _dispatch(w)
    return impl.check(buf)


def failure_table(w: Sequence) -> list[int]:
    """``t[i]`` is the length of the longest proper border of ``w[:i+1]``.

    >>> failure_table("01010")
    [0, 0, 1, 2, 3]
    """
    if len(w) == 0:
        raise ValueError("failure table of the empty word is undefined")
    impl, buf = _dispatch(w)
    return impl.failure_table(buf)


def is_privileged_linear(w: Sequence) -> PrivilegeReport:
    """Decide privilege in O(|w|) time.

    >>> is_privileged_linear("0010")
    PrivilegeReport(privileged=False, p=2, while_iterations=4)
    """
    privileged, p, iters = _check(w)
    return PrivilegeReport(bool(privileged), int(p), int(iters))


def is_privileged(w: Sequence) -> bool:
    return bool(_check(w)[0])


def longest_privileged_prefix_len(w: Sequence) -> int:
    if len(w) == 0:
        raise ValueError("empty word has no nonempty privileged prefix")
    return int(_check(w)[1])
