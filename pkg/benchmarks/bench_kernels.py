"""Compare the jitted kernels against the pure-numpy fallbacks.

Runs a correctness cross-check first (both routes must return identical
witnesses and edge lists), then times worst-case inputs: witness scans
that find nothing (forcing a full pair sweep) and Hamming-edge extraction
over a shuffled hypercube.

Usage:
    python3 benchmarks/bench_kernels.py
    python3 benchmarks/bench_kernels.py --sizes 2000 8000 --repeat 5
"""

import argparse
import time

import numpy as np

from supervene._kernels import numpy_kernels

try:
    from supervene._kernels import jit_kernels

    JIT = jit_kernels()
except ImportError:
    JIT = None

NUMPY = numpy_kernels()


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def cross_check(rng):
    for trial in range(50):
        n = int(rng.integers(2, 200))
        codes = rng.integers(0, 2**20, size=n, dtype=np.uint64)
        super_mask = np.uint64(rng.integers(1, 2**20))
        base_mask = np.uint64(rng.integers(1, 2**20))
        for name, args in (
            ("ws_witness", (codes, super_mask, base_mask)),
            ("det_witness", (codes, base_mask, super_mask)),
        ):
            a = tuple(NUMPY[name](*args))
            b = tuple(JIT[name](*args))
            assert a == b, f"{name} disagrees on trial {trial}: {a} vs {b}"
        distinct = rng.permutation(2**12)[: int(rng.integers(1, 500))]
        distinct = distinct.astype(np.uint64)
        a = NUMPY["hamming_edges"](distinct, 12)
        b = JIT["hamming_edges"](distinct, 12)
        assert np.array_equal(a, b), f"hamming_edges disagrees on trial {trial}"
    print("cross-check: numpy and jit kernels agree on 50 random inputs")


def workloads(sizes, bits, rng):
    for n in sizes:
        codes = rng.integers(0, 2**bits, size=n, dtype=np.uint64)
        mask = np.uint64(2**bits - 1)
        # identical masks guarantee no witness, so the scan never short-circuits
        yield f"ws_witness   n={n} (no hit)", "ws_witness", (codes, mask, mask)
        yield f"det_witness  n={n} (no hit)", "det_witness", (codes, mask, mask)
    cube = rng.permutation(2**bits).astype(np.uint64)
    yield f"hamming_edges 2^{bits} cube", "hamming_edges", (cube, bits)


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--sizes", type=int, nargs="+", default=[1000, 4000])
    parser.add_argument("--bits", type=int, default=14)
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args(argv)

    rng = np.random.default_rng(7)
    if JIT is None:
        print("numba not importable; timing the numpy route only")
    else:
        cross_check(rng)
        # trigger compilation outside the timed region
        warm = np.array([3, 1, 0], dtype=np.uint64)
        JIT["ws_witness"](warm, np.uint64(1), np.uint64(2))
        JIT["det_witness"](warm, np.uint64(1), np.uint64(2))
        JIT["hamming_edges"](warm, 2)

    header = f"{'workload':<30} {'numpy (s)':>10} {'jit (s)':>10} {'speedup':>8}"
    print(header)
    print("-" * len(header))
    for label, name, call_args in workloads(args.sizes, args.bits, rng):
        t_numpy = best_of(lambda: NUMPY[name](*call_args), args.repeat)
        if JIT is None:
            print(f"{label:<30} {t_numpy:>10.4f} {'n/a':>10} {'n/a':>8}")
            continue
        t_jit = best_of(lambda: JIT[name](*call_args), args.repeat)
        speedup = t_numpy / t_jit if t_jit > 0 else float("inf")
        print(f"{label:<30} {t_numpy:>10.4f} {t_jit:>10.4f} {speedup:>7.1f}x")


if __name__ == "__main__":
    main()
