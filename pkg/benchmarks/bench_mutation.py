"""Benchmark the mutation kernel backends.

Runs long random mutation chains on framed quivers of several sizes and
times the numba jit kernel against the pure-numpy fallback.  Run with:

    python3 benchmarks/bench_mutation.py [--chains 200] [--steps 200]
"""

import argparse
import random
import time

import numpy as np

from qmut import Quiver, frame
from qmut._kernels import _mutate_numpy, mutate_matrix


def random_framed_matrix(rng, n):
    weights = {}
    verts = [str(v) for v in range(1, n + 1)]
    for i, v in enumerate(verts):
        for w in verts[i + 1 :]:
            wt = rng.randint(-2, 2)
            if wt > 0:
                weights[(v, w)] = wt
            elif wt < 0:
                weights[(w, v)] = -wt
    fq = frame(Quiver(verts, [], weights))
    return fq.quiver.matrix, len(fq.quiver.mutable)


def run_chains(kernel, matrices, steps, rng):
    t0 = time.perf_counter()
    for b, nm in matrices:
        cur = b
        for _ in range(steps):
            k = rng.randrange(nm)
            out = kernel(cur, k, nm)
            cur = out
    return time.perf_counter() - t0


def numpy_kernel(b, k, nm):
    out, overflow = _mutate_numpy(b, k, nm)
    if overflow:
        return b  # benchmark chains just stay put on overflow
    return out


def numba_kernel(b, k, nm):
    try:
        return mutate_matrix(b, k, nm)
    except Exception:
        return b


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--chains", type=int, default=200)
    parser.add_argument("--steps", type=int, default=200)
    args = parser.parse_args()

    from qmut._kernels import HAVE_NUMBA, backend_name

    print(f"active backend: {backend_name()}")
    for n in (4, 6, 8, 12):
        rng = random.Random(42)
        matrices = [random_framed_matrix(rng, n) for _ in range(args.chains)]
        # warm up jit compilation outside the timed region, for both the
        # read-only input signature and the writable chained outputs
        warm = numba_kernel(matrices[0][0], 0, matrices[0][1])
        numba_kernel(warm, 0, matrices[0][1])
        rng_a, rng_b = random.Random(1), random.Random(1)
        t_fast = run_chains(numba_kernel, matrices, args.steps, rng_a)
        t_numpy = run_chains(numpy_kernel, matrices, args.steps, rng_b)
        label = "numba" if HAVE_NUMBA else "plain"
        print(
            f"n={n:3d}: {label} {t_fast:.3f}s | numpy-object {t_numpy:.3f}s "
            f"| speedup {t_numpy / t_fast:.1f}x"
        )


if __name__ == "__main__":
    main()
