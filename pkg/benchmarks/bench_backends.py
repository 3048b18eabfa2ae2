"""Compare the compiled and pure-Python kernels.

    python benchmarks/bench_backends.py [--length N] [--count-n N] [--repeat R]
"""

import argparse
import random
import time

from privword import _pycore

try:
    from privword import _ccore
except ImportError:
    _ccore = None


def best_of(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        start = time.perf_counter()
        result = fn()
        best = min(best, time.perf_counter() - start)
    return best, result


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--length", type=int, default=10 ** 6, help="length of the single-word check")
    ap.add_argument("--count-n", type=int, default=16, help="word length for exhaustive counting")
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    rng = random.Random(0)
    word = bytes(rng.randrange(2) for _ in range(args.length))
    adversarial = b"\x00" * (args.length // 2) + b"\x01" * (args.length - args.length // 2)
    cases = [
        (f"check random n={args.length}", lambda k: k.check(word)),
        (f"check 0^m1^m n={args.length}", lambda k: k.check(adversarial)),
        (f"count B({args.count_n})", lambda k: k.count_chunk(args.count_n, 2, b"")),
    ]
    kernels = [_pycore] + ([_ccore] if _ccore else [])
    print(f"{'case':32} " + " ".join(f"{k.BACKEND:>12}" for k in kernels) + "     speedup")
    for name, fn in cases:
        timings = []
        results = []
        for k in kernels:
            t, r = best_of(lambda: fn(k), args.repeat)
            timings.append(t)
            results.append(r)
        assert all(r == results[0] for r in results), f"backends disagree on {name}"
        speed = f"{timings[0] / timings[-1]:10.1f}x" if len(kernels) > 1 else ""
        print(f"{name:32} " + " ".join(f"{t:11.4f}s" for t in timings) + speed)
    if _ccore is None:
        print("compiled kernel not built; only the fallback was timed")


if __name__ == "__main__":
    main()
