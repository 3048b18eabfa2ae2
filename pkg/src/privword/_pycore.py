"""Pure-Python kernels; the fallback when the compiled core is unavailable.

Mirrors the API of ``_ccore`` exactly.  Words are any indexable sequence of
comparable symbols; the chunk enumerators work on ``bytes`` of codes.
"""

from itertools import product

BACKEND = "python"


def check(w):
    """Run the privilege scan; return ``(privileged, p, while_iterations)``."""
    n = len(w)
    if n <= 1:
        return True, n, 0
    T = [0] * n
    p = 1
    iters = 0
    for i in range(1, n):
        j = T[i - 1]
        wi = w[i]
        while True:
            iters += 1
            if w[j] == wi:
                T[i] = j + 1
                if T[i] == p:
                    p = i + 1
                break
            elif j == 0:
                T[i] = 0
                break
            j = T[j - 1]
    return p == n, p, iters


def failure_table(w):
    n = len(w)
    if n == 0:
        raise ValueError("failure table of the empty word is undefined")
    T = [0] * n
    for i in range(1, n):
        j = T[i - 1]
        while True:
            if w[j] == w[i]:
                T[i] = j + 1
                break
            elif j == 0:
                break
            j = T[j - 1]
    return T


def count_chunk(n, k, prefix):
    """Count privileged words of length ``n`` over ``k`` letters starting with ``prefix``."""
    prefix = bytes(prefix)
    rest = n - len(prefix)
    if rest < 0:
        return 0
    total = 0
    for tail in product(range(k), repeat=rest):
        if check(prefix + bytes(tail))[0]:
            total += 1
    return total


def list_chunk(n, k, prefix):
    """Privileged words (as ``bytes``) in lexicographic order, by prefix."""
    prefix = bytes(prefix)
    rest = n - len(prefix)
    if rest < 0:
        return []
    out = []
    for tail in product(range(k), repeat=rest):
        w = prefix + bytes(tail)
        if check(w)[0]:
            out.append(w)
    return out
