"""Exhaustive and exact property suites.

Each check walks its search space and stops at the first counterexample.
The ``theorems`` suite covers the structural properties of privileged words
and the agreement of the linear checker with the definitional oracle; the
``bounds`` suite covers the counting recurrences and the exact inequality
chain behind the lower bound on B(n).
"""

from __future__ import annotations

from collections.abc import Callable, Iterator
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Optional

from . import checker, counting, languages, words


@dataclass
class CheckResult:
    name: str
    cases: int
    counterexample: Optional[str] = None

    @property
    def passed(self) -> bool:
        return self.counterexample is None


def all_words(max_len: int, alphabet: str = "01", min_len: int = 0) -> Iterator[str]:
    for n in range(min_len, max_len + 1):
        for t in product(alphabet, repeat=n):
            yield "".join(t)


def _run(name: str, cases: Iterator, prop: Callable) -> CheckResult:
    count = 0
    for case in cases:
        count += 1
        bad = prop(case)
        if bad:
            return CheckResult(name, count, bad if isinstance(bad, str) else repr(case))
    return CheckResult(name, count)


# theorems -------------------------------------------------------------------

def check_oracle_equivalence(max_len: int, alphabet: str = "01") -> CheckResult:
    memo: dict = {}

    def prop(w):
        fast = checker.is_privileged_linear(w).privileged
        slow = words.is_privileged_naive(w, memo)
        if fast != slow:
            return f"{w!r}: linear={fast} naive={slow}"

    return _run(f"oracle equivalence k={len(alphabet)} len<={max_len}",
                all_words(max_len, alphabet), prop)


def check_failure_table(max_len: int) -> CheckResult:
    def prop(w):
        want = [max(words.borders(w[:i + 1]), default=0) for i in range(len(w))]
        got = checker.failure_table(w)
        if got != want:
            return f"{w!r}: table {got}, brute force {want}"

    return _run(f"failure table len<={max_len}", all_words(max_len, min_len=1), prop)


def check_prefix_p(max_len: int) -> CheckResult:
    memo: dict = {}

    def prop(w):
        got = checker.longest_privileged_prefix_len(w)
        want = words.longest_privileged_prefix_naive(w, memo=memo)
        if got != want:
            return f"{w!r}: p={got}, naive longest privileged prefix {want}"

    return _run(f"longest privileged prefix len<={max_len}", all_words(max_len, min_len=1), prop)


def check_linearity(max_len: int) -> CheckResult:
    def prop(w):
        it = checker.is_privileged_linear(w).while_iterations
        if it > 2 * len(w):
            return f"{w!r}: {it} while iterations > 2n"

    return _run(f"while iterations <= 2n len<={max_len}", all_words(max_len, min_len=2), prop)


def check_borders_and_affixes(max_len: int) -> CheckResult:
    """Privileged prefixes are suffixes and vice versa; borders are privileged."""
    memo: dict = {}

    def prop(w):
        if not words.is_privileged_naive(w, memo):
            return None
        n = len(w)
        for l in words.borders(w):
            if not words.is_privileged_naive(w[:l], memo):
                return f"{w!r}: border {w[:l]!r} not privileged"
        for l in range(1, n):
            pre, suf = w[:l], w[n - l:]
            if words.is_privileged_naive(pre, memo) and pre != suf:
                return f"{w!r}: privileged prefix {pre!r} is not a suffix"
            if words.is_privileged_naive(suf, memo) and pre != suf:
                return f"{w!r}: privileged suffix {suf!r} is not a prefix"
        return None

    return _run(f"borders and privileged affixes len<={max_len}", all_words(max_len), prop)


def check_runs(max_len: int) -> CheckResult:
    memo: dict = {}

    def prop(w):
        if words.is_privileged_naive(w, memo) and words.leading_run(w) != words.trailing_run(w):
            return f"{w!r}: leading {words.leading_run(w)} != trailing {words.trailing_run(w)}"

    return _run(f"leading run = trailing run len<={max_len}", all_words(max_len, min_len=1), prop)


def check_lpp_suffix(max_len: int) -> CheckResult:
    """Privileged iff the longest proper privileged prefix is a suffix."""
    memo: dict = {}

    def prop(w):
        u = w[:words.longest_privileged_prefix_naive(w, proper=True, memo=memo)]
        if words.is_privileged_naive(w, memo) != w.endswith(u):
            return f"{w!r}: longest proper privileged prefix {u!r}"

    return _run(f"longest proper privileged prefix criterion len<={max_len}",
                all_words(max_len, min_len=1), prop)


def check_powers(max_len: int, j_max: int = 4) -> CheckResult:
    memo: dict = {}

    def priv(w):
        return words.is_privileged_naive(w, memo)

    def prop(w):
        if not languages.check_power_closure(w, j_max, priv):
            return f"{w!r}: powers up to {j_max} break closure"

    return _run(f"power closure len<={max_len} j<={j_max}", all_words(max_len, min_len=1), prop)


def _words_R(max_len: int) -> Iterator[str]:
    for a in range(max_len):
        for b in range(max_len):
            for c in range(max_len):
                if a + b + c + 6 <= max_len:
                    yield "0" * (a + 1) + "1" + "0" * (b + 1) + "11" + "0" * (c + 1)


def _words_0n10n(max_len: int) -> Iterator[str]:
    for x in range(1, max_len):
        for y in range(1, max_len - x):
            yield "0" * x + "1" + "0" * y


def check_characterizations(max_len: int) -> list[CheckResult]:
    memo: dict = {}

    def prop_r(w):
        if words.is_privileged_naive(w, memo) != languages.characterize_P_intersect_R(w):
            return f"{w!r}: exponents {languages.in_pattern_R(w)}"

    def prop_010(w):
        if words.is_privileged_naive(w, memo) != languages.characterize_P_intersect_0n10n(w):
            return f"{w!r}: runs differ in verdict"

    return [
        _run(f"P and 0+10+110+ len<={max_len}", _words_R(max_len), prop_r),
        _run(f"P and 0+10+ len<={max_len}", _words_0n10n(max_len), prop_010),
    ]


def check_seed_family(max_len: int, max_t: int = 4) -> CheckResult:
    memo: dict = {}
    cases = [(n, t) for t in range(1, max_t + 1) for n in range(2 * t + 2, max_len + 1)]

    def prop(nt):
        n, t = nt
        size = 0
        for w in counting.seed_family(n, t):
            size += 1
            if not checker.is_privileged(w):
                return f"seed word {w} not privileged (linear)"
            if not words.is_privileged_naive(w.symbols, memo):
                return f"seed word {w} not privileged (naive)"
        if size != counting.g_value(n - 2 * t - 2, t):
            return f"n={n} t={t}: family size {size} != G={counting.g_value(n - 2 * t - 2, t)}"

    return _run(f"seed family n<={max_len} t<={max_t}", iter(cases), prop)


def check_even_counts(max_len: int, threads: Optional[int] = None) -> CheckResult:
    def prop(n):
        c = counting.count_privileged(n, 2, threads=threads).count
        if c % 2:
            return f"B({n}) = {c} is odd"

    return _run(f"B(n) even 1<=n<={max_len}", iter(range(1, max_len + 1)), prop)


# bounds ---------------------------------------------------------------------

def check_g_vs_dp(max_n: int = 60, max_t: int = 8) -> CheckResult:
    def prop(nt):
        n, t = nt
        if counting.g_value(n, t) != counting.count_avoiding_zero_run(n, t):
            return f"n={n} t={t}: G={counting.g_value(n, t)} DP={counting.count_avoiding_zero_run(n, t)}"

    cases = ((n, t) for t in range(1, max_t + 1) for n in range(max_n + 1))
    return _run(f"G recurrence = DP n<={max_n} t<={max_t}", cases, prop)


def check_fibonacci(max_n: int = 40) -> CheckResult:
    fib = [0, 1]
    while len(fib) < max_n + 3:
        fib.append(fib[-1] + fib[-2])

    def prop(n):
        if counting.g_value(n, 2) != fib[n + 2]:
            return f"G({n}, 2) = {counting.g_value(n, 2)} != F({n + 2}) = {fib[n + 2]}"

    return _run(f"G(n,2) = F(n+2) n<={max_n}", iter(range(max_n + 1)), prop)


def lemma8_betas(s: int, samples: int = 20) -> list[Fraction]:
    top = Fraction(6, s)
    return sorted({Fraction(0), top, *(i * top / samples for i in range(samples + 1))})


def check_lemma8(max_s: int = 64) -> CheckResult:
    cases = ((s, b) for s in range(2, max_s + 1) for b in lemma8_betas(s))

    def prop(sb):
        if not counting.verify_lemma8(*sb):
            return f"s={sb[0]} beta={sb[1]}"

    return _run(f"binomial inequality s<={max_s}", cases, prop)


def check_alpha(max_t: int = 32) -> CheckResult:
    def prop(t):
        if not counting.verify_alpha_inequality(t):
            return f"t={t}: alpha={counting.alpha(t)}"

    return _run(f"alpha_t <= 2 - alpha_t^-t t<={max_t}", iter(range(2, max_t + 1)), prop)


def check_g_lower_bound(max_n: int = 128, max_t: int = 8) -> CheckResult:
    def prop(nt):
        if not counting.verify_g_lower_bound(*nt):
            return f"n={nt[0]} t={nt[1]}"

    cases = ((n, t) for t in range(2, max_t + 1) for n in range(max_n + 1))
    return _run(f"G(n,t) >= alpha_t^n n<={max_n} t<={max_t}", cases, prop)


def check_theorem11(max_n: int, threads: Optional[int] = None) -> CheckResult:
    def prop(n):
        if not counting.verify_theorem11(n, threads=threads):
            return f"B({n}) = {counting.count_privileged(n, threads=threads).count} < {counting.lower_bound(n)}"

    return _run(f"B(n) >= 2^(n-5)/n^2 1<=n<={max_n}", iter(range(1, max_n + 1)), prop)


def check_bound_chain(max_n: int = 256) -> CheckResult:
    """The seed-family argument at ``t = floor(log2 n) + 1`` for ``11 <= n <= max_n``.

    Checks the side condition ``beta_t <= 6/(n-2t-2)``, that
    ``beta_t (n/2 - t - 1) <= 1/2``, and
    ``G(n-2t-2, t) >= 2^(n-2t-3) >= 2^(n-5)/n^2``, all exactly.
    """
    def prop(n):
        t = counting.choose_t(n)
        s = n - 2 * t - 2
        b = counting.beta(t)
        if s > 0 and b > Fraction(6, s):
            return f"n={n}: beta_t={b} > 6/{s}"
        if b * (Fraction(n, 2) - t - 1) > Fraction(1, 2):
            return f"n={n}: beta_t (n/2 - t - 1) > 1/2"
        g = counting.g_value(s, t)
        if not g >= Fraction(2) ** (s - 1) >= counting.lower_bound(n):
            return f"n={n}: G({s},{t}) = {g} fails the chain"

    return _run(f"seed-family bound chain 11<=n<={max_n}", iter(range(11, max_n + 1)), prop)


SUITES = ("theorems", "bounds", "all")


def run_suite(suite: str, max_n: int = 12, max_t: int = 16,
              threads: Optional[int] = None) -> list[CheckResult]:
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}; choose from {SUITES}")
    results: list[CheckResult] = []
    if suite in ("theorems", "all"):
        results += [
            check_oracle_equivalence(max_n),
            check_oracle_equivalence(min(max_n, 10), "012"),
            check_failure_table(max_n),
            check_prefix_p(max_n),
            check_linearity(max_n),
            check_borders_and_affixes(max_n),
            check_runs(max_n),
            check_lpp_suffix(max_n),
            check_powers(min(max_n, 8)),
            *check_characterizations(max_n),
            check_seed_family(max_n),
            check_even_counts(max_n, threads),
        ]
    if suite in ("bounds", "all"):
        t8 = min(max_t, 8)
        results += [
            check_g_vs_dp(60, t8),
            check_fibonacci(40),
            check_lemma8(4 * max_t),
            check_alpha(max_t),
            check_g_lower_bound(128, t8),
            check_theorem11(max_n, threads),
            check_bound_chain(),
        ]
    return results
