"""Time the numba kernels against the pure-numpy fallback.

    python3 benchmarks/bench_kernels.py [--repeat 20]

Both backends are imported directly, so the FREQDPS_NUMBA flag is not needed.
"""
import argparse
import time

import numpy as np

from freqdps import _kernels_nb as nb
from freqdps import _kernels_np as npk


def _time(fn, repeat):
    fn()  # warm-up (compilation for numba)
    best = np.inf
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=20)
    ap.add_argument("--batch", type=int, default=20)
    args = ap.parse_args()

    g = np.random.default_rng(0)
    b, c, size, side = args.batch, 3, 32, 21
    xp = g.random((b, c, size + side - 1, size + side - 1))
    k = g.random((b, side, side))
    grad = g.random((b, c, size, size))
    ys, xs = g.uniform(1, 19, (2, 64))
    w = g.random(64)

    cases = {
        "corr_valid": lambda m: m.corr_valid(xp, k),
        "corr_valid_adj_input": lambda m: m.corr_valid_adj_input(grad, k),
        "corr_valid_adj_kernel": lambda m: m.corr_valid_adj_kernel(grad, xp, side, side),
        "splat_bilinear": lambda m: m.splat_bilinear(ys, xs, w, side),
    }
    print(f"batch {b}, {c}x{size}x{size} images, {side}x{side} kernels, best of {args.repeat}")
    print(f"{'kernel':24s} {'numpy ms':>10s} {'numba ms':>10s} {'speedup':>8s}")
    for name, fn in cases.items():
        ref, got = fn(npk), fn(nb)
        assert np.allclose(ref, got, rtol=1e-10, atol=1e-10), name
        t_np = _time(lambda: fn(npk), args.repeat)
        t_nb = _time(lambda: fn(nb), args.repeat)
        print(f"{name:24s} {t_np * 1e3:10.3f} {t_nb * 1e3:10.3f} {t_np / t_nb:8.1f}x")


if __name__ == "__main__":
    main()
