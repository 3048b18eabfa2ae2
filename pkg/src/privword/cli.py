"""Command-line interface: ``privword check|enum|table|gfib|bound|verify``.

Exit status is 0 on success, 1 for a negative verdict (``check --quiet``),
a mismatch or a failed verification, and 2 for usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional

from . import checker, counting, verify, words
from .words import DEFAULT_SYMBOLS, Word

EXIT_OK, EXIT_FALSE, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _alphabet(args) -> str:
    if getattr(args, "alphabet", None):
        alpha = args.alphabet
        if len(set(alpha)) != len(alpha):
            raise UsageError(f"alphabet has repeated symbols: {alpha!r}")
        return alpha
    k = getattr(args, "size", None) or 2
    if not 1 <= k <= len(DEFAULT_SYMBOLS):
        raise UsageError(f"alphabet size must be in 1..{len(DEFAULT_SYMBOLS)}; use --alphabet")
    return DEFAULT_SYMBOLS[:k]


def _cap(args) -> Optional[int]:
    return None if args.force else args.max_candidates


def _input_words(args) -> list[str]:
    if args.words:
        return list(args.words)
    if args.file:
        with open(args.file, encoding="utf-8") as fh:
            text = fh.read()
    else:
        text = sys.stdin.read()
    return text.splitlines()


def cmd_check(args) -> int:
    alphabet = _alphabet(args)
    try:
        texts = _input_words(args)
        parsed = [Word.parse(t, alphabet) for t in texts]
    except (ValueError, OSError) as exc:
        raise UsageError(str(exc)) from None
    all_true = True
    for text, w in zip(texts, parsed):
        if args.naive:
            memo: dict = {}
            ok = words.is_privileged_naive(w, memo)
            record = {"word": text, "privileged": ok, "engine": "naive",
                      "p": words.longest_privileged_prefix_naive(w, memo=memo)}
        else:
            rep = checker.is_privileged_linear(w)
            ok = rep.privileged
            record = {"word": text, "privileged": ok, "engine": "linear",
                      "p": rep.p, "while_iterations": rep.while_iterations}
        all_true &= ok
        if args.quiet:
            continue
        if args.json:
            print(json.dumps(record))
        else:
            verdict = "privileged" if ok else "not privileged"
            print(f"{text} {verdict}" if text else verdict)
    return EXIT_OK if all_true else (EXIT_FALSE if args.quiet else EXIT_OK)


def cmd_enum(args) -> int:
    alphabet = _alphabet(args)
    if args.length < 0:
        raise UsageError("length must be non-negative")
    if args.count_only:
        rec = counting.count_privileged(args.length, len(alphabet), threads=args.threads,
                                        max_candidates=_cap(args))
        print(rec.count)
        return EXIT_OK
    out = sys.stdout
    for w in counting.enumerate_privileged(args.length, len(alphabet), threads=args.threads,
                                           max_candidates=_cap(args)):
        out.write(w.format(alphabet) + "\n")
    return EXIT_OK


def cmd_table(args) -> int:
    k = len(_alphabet(args))
    if args.max < 0:
        raise UsageError("--max must be non-negative")
    reference = None
    if args.bfile:
        try:
            reference = counting.read_bfile(args.bfile)
        except (OSError, counting.BFileError) as exc:
            raise UsageError(f"cannot read b-file: {exc}") from None
    computed = {}
    for n in range(args.max + 1):
        computed[n] = counting.count_privileged(n, k, threads=args.threads,
                                                max_candidates=_cap(args)).count
    counting.write_bfile(computed, sys.stdout)
    status = EXIT_OK
    if reference is not None:
        for n, got, want in counting.diff_bfile(computed, reference):
            print(f"# mismatch n={n}: computed {got}, reference {want}", file=sys.stderr)
            status = EXIT_FALSE
    if args.paper:
        if k != 2:
            raise UsageError("the published table is for the binary alphabet")
        status = max(status, _paper_report(computed))
    return status


def _paper_report(computed: dict[int, int]) -> int:
    """Compare against the published table; only n <= 17 can fail."""
    status = EXIT_OK
    err = sys.stderr
    for n, got, want in counting.diff_bfile(computed, counting.PAPER_TABLE):
        if n <= counting.PAPER_TRUSTED_MAX:
            print(f"# MISMATCH n={n}: computed {got}, published {want}", file=err)
            status = EXIT_FALSE
        else:
            at = counting.locate_in(want, computed)
            where = f" (published value equals computed B({at}))" if at is not None else ""
            print(f"# discrepancy n={n}: computed {got}, published {want}{where}", file=err)
    for first, second, length in counting.duplicated_runs(counting.PAPER_TABLE, min_len=2):
        print(f"# published table repeats n={first}..{first + length - 1} "
              f"verbatim at n={second}..{second + length - 1}", file=err)
    return status


def cmd_gfib(args) -> int:
    if args.t < 1 or args.n < 0:
        raise UsageError("need -t >= 1 and -n >= 0")
    print(counting.g_value(args.n, args.t))
    return EXIT_OK


def cmd_bound(args) -> int:
    if args.n < 1:
        raise UsageError("need -n >= 1")
    lb = counting.lower_bound(args.n)
    print(f"lower_bound {lb}")
    try:
        b = counting.count_privileged(args.n, 2, threads=args.threads, max_candidates=_cap(args)).count
    except counting.EnumerationCapError:
        print(f"# B({args.n}) not computed: above enumeration cap", file=sys.stderr)
        return EXIT_OK
    holds = b >= lb
    print(f"B({args.n}) {b}")
    print(f"holds {'true' if holds else 'false'}")
    return EXIT_OK if holds else EXIT_FALSE


def cmd_verify(args) -> int:
    print(f"# kernel backend: {checker.BACKEND}")
    results = verify.run_suite(args.suite, max_n=args.max_n, max_t=args.max_t,
                               threads=args.threads)
    for r in results:
        if r.passed:
            print(f"PASS {r.name} ({r.cases} cases)")
        else:
            print(f"FAIL {r.name}: counterexample {r.counterexample}")
    return EXIT_OK if all(r.passed for r in results) else EXIT_FALSE


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="privword", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def alphabet_opts(p):
        g = p.add_mutually_exclusive_group()
        g.add_argument("--alphabet", metavar="SYMBOLS",
                       help="ordered symbol set, e.g. 012 (default 01)")
        g.add_argument("-k", "--size", type=int, metavar="K",
                       help=f"use the first K symbols of {DEFAULT_SYMBOLS[:10]}...")

    def search_opts(p):
        p.add_argument("--threads", type=int, default=None, help="worker threads (default: all cores)")
        p.add_argument("--max-candidates", type=int, default=counting.DEFAULT_MAX_CANDIDATES,
                       help="refuse searches over more candidate words than this")
        p.add_argument("--force", action="store_true", help="ignore the search cap")

    p = sub.add_parser("check", help="decide privilege of words")
    p.add_argument("words", nargs="*", help="words to check (default: one per line on stdin)")
    p.add_argument("--file", help="read words from this file, one per line")
    p.add_argument("--json", action="store_true", help="one JSON object per line")
    p.add_argument("--quiet", action="store_true", help="no output; exit 0 iff all privileged")
    p.add_argument("--naive", action="store_true", help="use the definitional oracle")
    alphabet_opts(p)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("enum", help="list or count privileged words of one length")
    p.add_argument("--length", "-n", type=int, required=True)
    p.add_argument("--count-only", action="store_true")
    alphabet_opts(p)
    search_opts(p)
    p.set_defaults(func=cmd_enum)

    p = sub.add_parser("table", help="print 'n B(n)' lines in b-file format")
    p.add_argument("--max", type=int, required=True)
    p.add_argument("--bfile", help="reference b-file to diff against")
    p.add_argument("--paper", action="store_true", help="compare with the published table")
    alphabet_opts(p)
    search_opts(p)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("gfib", help="number of binary words of length N avoiding 0^T")
    p.add_argument("-t", type=int, required=True)
    p.add_argument("-n", type=int, required=True)
    p.set_defaults(func=cmd_gfib)

    p = sub.add_parser("bound", help="exact lower bound 2^(n-5)/n^2 and B(n)")
    p.add_argument("-n", type=int, required=True)
    search_opts(p)
    p.set_defaults(func=cmd_bound)

    p = sub.add_parser("verify", help="run property suites")
    p.add_argument("--suite", choices=verify.SUITES, default="all")
    p.add_argument("--max-n", type=int, default=12)
    p.add_argument("--max-t", type=int, default=16)
    p.add_argument("--threads", type=int, default=None)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    try:
        return args.func(args)
    except (UsageError, counting.EnumerationCapError) as exc:
        print(f"privword: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
