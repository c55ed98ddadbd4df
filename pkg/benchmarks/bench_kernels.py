"""Benchmark the compiled kernels against their pure-Python twins.

Usage: python3 benchmarks/bench_kernels.py [--repeat 5] [--scale 1000000]

Reports the best-of-``repeat`` wall time per kernel for each backend plus
the speedup, and cross-checks that the two backends agree on the outputs
they produce.
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from hardyweight._kernels import pyfallback

try:
    from hardyweight._kernels import _speedups
except ImportError:
    _speedups = None


def best_time(fn, *args, repeat: int) -> float:
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best


def build_cases(scale: int):
    rng = np.random.default_rng(2024)
    phi = rng.uniform(-1.0, 1.0, scale)
    w = rng.uniform(0.01, 1.0, scale)
    u = np.concatenate(([0.0], np.sqrt(np.arange(1.0, scale + 2.0))))
    w_improved = pyfallback.improved_weight_range(1, scale)
    n_eigen = max(scale // 100, 10)
    w_pencil = pyfallback.improved_weight_range(1, n_eigen)
    d = 2.0 / w_pencil
    e2 = 1.0 / (w_pencil[:-1] * w_pencil[1:])
    hi = float(2.0 * np.max(1.0 / w_pencil) + 1.0)
    return [
        ("improved_weight_range", (1, scale)),
        ("gap_components", (phi, w)),
        ("stencil_residual_max", (u, w_improved)),
        ("sturm_count_below", (d, e2, 1.0)),
        ("tridiag_smallest_eigenvalue", (d, e2, 0.0, hi, 1e-10)),
    ]


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=5)
    parser.add_argument("--scale", type=int, default=1_000_000,
                        help="problem size for the vector kernels")
    args = parser.parse_args()

    if _speedups is None:
        print("compiled extension not available; nothing to compare")
        return

    print(f"scale={args.scale}, best of {args.repeat} runs")
    header = f"{'kernel':32} {'python':>12} {'compiled':>12} {'speedup':>9}"
    print(header)
    print("-" * len(header))
    for name, call_args in build_cases(args.scale):
        py_fn = getattr(pyfallback, name)
        cy_fn = getattr(_speedups, name)
        a = py_fn(*call_args)
        b = cy_fn(*call_args)
        if isinstance(a, np.ndarray):
            assert np.allclose(a, b, rtol=1e-12), name
        elif isinstance(a, tuple):
            assert all(abs(x - y) <= 1e-9 * max(1.0, abs(x)) for x, y in zip(a, b)), name
        else:
            assert abs(a - b) <= 1e-9 * max(1.0, abs(a)), name
        t_py = best_time(py_fn, *call_args, repeat=args.repeat)
        t_cy = best_time(cy_fn, *call_args, repeat=args.repeat)
        print(f"{name:32} {t_py * 1e3:10.2f}ms {t_cy * 1e3:10.2f}ms {t_py / t_cy:8.1f}x")


if __name__ == "__main__":
    main()
