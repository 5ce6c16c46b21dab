#!/usr/bin/env python3
"""Benchmark the canonical-labeling kernels against each other.

The graph census calls the kernel once per candidate pairing, so this
is the loop that decides whether a full six-edge census takes seconds
or half a minute.  Both backends run over the identical candidate
stream; the compiled one is skipped when the extension is not built.

    python benchmarks/bench_canon.py --edges 5
    python benchmarks/bench_canon.py --edges 6        # the full load
"""

import argparse
import time

from fatcob.census import _involutions, _partitions, _sigma_of_partition
from fatcob import _canon_py

try:
    from fatcob import _canon_fast
except ImportError:
    _canon_fast = None


def candidate_stream(n):
    pairings = _involutions(2 * n)
    for parts in _partitions(2 * n, 2 * n, 1):
        sigma = _sigma_of_partition(parts)
        for m in pairings:
            yield sigma, m


def run(kernel, n):
    n2 = 2 * n
    classes = set()
    candidates = 0
    t0 = time.perf_counter()
    for sigma, m in candidate_stream(n):
        candidates += 1
        code = kernel.census_code(sigma, m, n2)
        if code is not None:
            classes.add(code)
    elapsed = time.perf_counter() - t0
    return candidates, len(classes), elapsed


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--edges", type=int, default=5,
                    help="census size per backend (default 5)")
    args = ap.parse_args()
    backends = [("pure python", _canon_py)]
    if _canon_fast is not None:
        backends.append(("cython", _canon_fast))
    results = []
    for name, kernel in backends:
        cand, classes, elapsed = run(kernel, args.edges)
        results.append((name, cand, classes, elapsed))
        print("%-12s  %8d candidates  %6d classes  %8.2f s  %9.0f cand/s"
              % (name, cand, classes, elapsed, cand / elapsed))
    if len(results) == 2:
        (_, _, c1, t1), (_, _, c2, t2) = results
        assert c1 == c2, "backends disagree on the class count"
        print("speedup: %.1fx" % (t1 / t2))


if __name__ == "__main__":
    main()
