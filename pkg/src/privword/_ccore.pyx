# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels for the privilege scan and chunked enumeration.

The scans release the GIL, so chunked counting parallelises across threads.
"""

from libc.stdlib cimport malloc, free

BACKEND = "cython"


cdef Py_ssize_t _scan(const unsigned char* w, Py_ssize_t n, Py_ssize_t* T,
                      long long* iters) noexcept nogil:
    # Returns p; T must hold n entries and n >= 2.
    cdef Py_ssize_t i, j, p = 1
    cdef long long it = 0
    cdef unsigned char wi
    T[0] = 0
    for i in range(1, n):
        j = T[i - 1]
        wi = w[i]
        while True:
            it += 1
            if w[j] == wi:
                T[i] = j + 1
                if T[i] == p:
                    p = i + 1
                break
            elif j == 0:
                T[i] = 0
                break
            j = T[j - 1]
    iters[0] = it
    return p


def check(const unsigned char[::1] w):
    """Run the privilege scan; return ``(privileged, p, while_iterations)``."""
    cdef Py_ssize_t n = w.shape[0]
    cdef Py_ssize_t p
    cdef long long iters = 0
    cdef Py_ssize_t* T
    if n <= 1:
        return True, n, 0
    T = <Py_ssize_t*>malloc(n * sizeof(Py_ssize_t))
    if T == NULL:
        raise MemoryError()
    try:
        with nogil:
            p = _scan(&w[0], n, T, &iters)
    finally:
        free(T)
    return p == n, p, iters


def failure_table(const unsigned char[::1] w):
    cdef Py_ssize_t n = w.shape[0]
    cdef long long iters = 0
    cdef Py_ssize_t* T
    if n == 0:
        raise ValueError("failure table of the empty word is undefined")
    if n == 1:
        return [0]
    T = <Py_ssize_t*>malloc(n * sizeof(Py_ssize_t))
    if T == NULL:
        raise MemoryError()
    try:
        with nogil:
            _scan(&w[0], n, T, &iters)
        return [T[i] for i in range(n)]
    finally:
        free(T)


cdef int _next(unsigned char* w, Py_ssize_t start, Py_ssize_t n, int k) noexcept nogil:
    # Odometer step over w[start:n]; returns 0 once the range is exhausted.
    cdef Py_ssize_t i = n - 1
    while i >= start:
        if w[i] + 1 < k:
            w[i] += 1
            return 1
        w[i] = 0
        i -= 1
    return 0


def count_chunk(int n, int k, const unsigned char[::1] prefix):
    """Count privileged words of length ``n`` over ``k`` letters starting with ``prefix``."""
    cdef Py_ssize_t m = prefix.shape[0]
    cdef Py_ssize_t i
    cdef long long total = 0, iters = 0
    cdef unsigned char* w
    cdef Py_ssize_t* T
    if m > n:
        return 0
    if n <= 1:
        return 1 if m == n else k
    w = <unsigned char*>malloc(n)
    T = <Py_ssize_t*>malloc(n * sizeof(Py_ssize_t))
    if w == NULL or T == NULL:
        free(w)
        free(T)
        raise MemoryError()
    for i in range(n):
        w[i] = prefix[i] if i < m else 0
    try:
        with nogil:
            while True:
                if _scan(w, n, T, &iters) == n:
                    total += 1
                if not _next(w, m, n, k):
                    break
    finally:
        free(w)
        free(T)
    return total


def list_chunk(int n, int k, const unsigned char[::1] prefix):
    """Privileged words (as ``bytes``) in lexicographic order, by prefix."""
    cdef Py_ssize_t m = prefix.shape[0]
    cdef Py_ssize_t i
    cdef long long iters = 0
    cdef unsigned char* w
    cdef Py_ssize_t* T
    cdef list out = []
    if m > n:
        return out
    if n <= 1:
        if m == n:
            return [bytes(prefix)]
        return [bytes([c]) for c in range(k)]
    w = <unsigned char*>malloc(n)
    T = <Py_ssize_t*>malloc(n * sizeof(Py_ssize_t))
    if w == NULL or T == NULL:
        free(w)
        free(T)
        raise MemoryError()
    for i in range(n):
        w[i] = prefix[i] if i < m else 0
    try:
        while True:
            if _scan(w, n, T, &iters) == n:
                out.append(w[:n])
            if not _next(w, m, n, k):
                break
    finally:
        free(w)
        free(T)
    return out
