#!/usr/bin/env python3
"""Time the compiled and pure-Python kernels on the same fills.

    python benchmarks/compare_backends.py [--sizes 200x200,1000x150] [--workers 1,4]
"""
import argparse
import time

import numpy as np

from parlcs import _backend
from parlcs.core import _as_array, allocate_tables
from parlcs.seqio import generate_random


def best_of(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        start = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - start)
    return best


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--sizes", default="200x200,1000x150,2000x500")
    parser.add_argument("--workers", default="1,4")
    parser.add_argument("--block-size", type=int, default=64)
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    sizes = [tuple(map(int, s.split("x"))) for s in args.sizes.split(",")]
    workers = [int(w) for w in args.workers.split(",")]
    names = sorted(_backend.BACKENDS)
    print(f"{'M':>6} {'N':>6} {'mode':>10} " + " ".join(f"{n + '_s':>10}" for n in names) + "   ratio")
    for m, n in sizes:
        x = _as_array(generate_random(m, "ACGT", 1))
        y = _as_array(generate_random(n, "ACGT", 2))
        modes = [("serial", None)] + [(f"wave/{w}", w) for w in workers]
        for label, w in modes:
            times, tables = {}, []
            for name in names:
                mod = _backend.BACKENDS[name]
                c, b = allocate_tables(m, n)
                if w is None:
                    run = lambda: mod.fill_block(x, y, c, b, 1, m + 1, 1, n + 1)  # noqa: E731
                else:
                    run = lambda: mod.fill_wavefront(x, y, c, b, args.block_size, w)  # noqa: E731
                times[name] = best_of(run, args.repeat)
                tables.append((c, b))
            assert all(np.array_equal(tables[0][0], c) and np.array_equal(tables[0][1], b)
                       for c, b in tables[1:])
            ratio = times["python"] / times["cython"] if "cython" in times else float("nan")
            print(f"{m:>6} {n:>6} {label:>10} "
                  + " ".join(f"{times[k]:>10.4f}" for k in names) + f"   {ratio:6.1f}x")


if __name__ == "__main__":
    main()
