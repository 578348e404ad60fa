"""Compare the compiled kernels with the numpy fallback.

    python3 benchmarks/bench_kernels.py [--repeat 5]
"""
from __future__ import annotations

import argparse
import timeit

import numpy as np

from zpkcodes import _kernels_py
from zpkcodes.additive import MixedAlphabet
from zpkcodes.perfect import build_perfect_check, weight_one_errors

try:
    from zpkcodes import _ckernels
except ImportError:
    _ckernels = None


def cases():
    rng = np.random.default_rng(1)
    moduli = np.array([3] * 4 + [9] * 3 + [27] * 3, dtype=np.int64)
    rows = rng.integers(0, moduli, size=(6, moduli.size)).astype(np.int64)
    bounds = np.array([9, 9, 9, 9, 3, 3], dtype=np.int64)
    words = _kernels_py.span_words(rows, bounds, moduli)
    table = rng.integers(0, 10, size=(moduli.size, 27)).astype(np.int64)
    scale = (27 // moduli).astype(np.int64)
    checks = rng.integers(0, 27, size=(2, moduli.size)).astype(np.int64)

    M = build_perfect_check(2, (1, 1))
    a: MixedAlphabet = M.alphabet
    code_words = M.code().words()
    errors = weight_one_errors(a)
    return {
        "span_words": lambda m: m.span_words(rows, bounds, moduli),
        "weight_sum": lambda m: m.weight_sum(words, table),
        "syndromes": lambda m: m.syndromes(words, checks, scale, 27),
        "cover_counts": lambda m: m.cover_counts(code_words, errors, a.moduli),
    }, words.shape[0]


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args(argv)
    table, n = cases()
    backends = [("python", _kernels_py)] + ([("cython", _ckernels)] if _ckernels else [])
    print(f"{n} words per batch; best of {args.repeat}")
    print(f"{'kernel':<14}" + "".join(f"{name:>12}" for name, _ in backends) + ("     speedup" if _ckernels else ""))
    for kname, fn in table.items():
        times = [min(timeit.repeat(lambda: fn(mod), number=1, repeat=args.repeat)) for _, mod in backends]
        line = f"{kname:<14}" + "".join(f"{t * 1e3:>10.2f}ms" for t in times)
        if len(times) == 2:
            line += f"{times[0] / times[1]:>11.1f}x"
        print(line)
    if _ckernels is None:
        print("compiled kernels not available; only the numpy fallback was timed")


if __name__ == "__main__":
    main()
