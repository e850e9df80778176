#!/usr/bin/env python3
"""Benchmark the windowed power-spectrum kernel: compiled vs numpy fallback.

Usage:
    python benchmarks/bench_kernel.py
    python benchmarks/bench_kernel.py --grid 512 --points 20000 --repeat 5
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from spectile.geometry import two_interval_domain, unit_cube
from spectile.kernels import _ref

try:
    from spectile.kernels import _fast
except ImportError:
    _fast = None


def workload(name: str, n_points: int, n_grid: int):
    dom = {"cube1": unit_cube(1), "two_interval": two_interval_domain(), "cube2": unit_cube(2)}[name]
    d = dom.dim
    lo = np.array([[float(v) for v in b.lo] for b in dom.boxes])
    hi = np.array([[float(v) for v in b.hi] for b in dom.boxes])
    rng = np.random.default_rng(0)
    pts = rng.uniform(-n_points / 2, n_points / 2, size=(n_points, d))
    xs = rng.uniform(0, 1, size=(n_grid, d))
    return lo, hi, pts, xs


def time_backend(impl, args, repeat: int) -> float:
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        impl.power_sum_field(*args)
        best = min(best, time.perf_counter() - t0)
    return best


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--grid", type=int, default=512, help="grid points")
    ap.add_argument("--points", type=int, default=20000, help="translate count")
    ap.add_argument("--repeat", type=int, default=3)
    opts = ap.parse_args()

    print(f"{'workload':<14} {'backend':<10} {'best (ms)':>10} {'speedup':>8}")
    for name in ("cube1", "two_interval", "cube2"):
        args = workload(name, opts.points, opts.grid)
        t_ref = time_backend(_ref, args, opts.repeat)
        print(f"{name:<14} {'numpy':<10} {t_ref * 1e3:>10.1f} {'1.0x':>8}")
        if _fast is not None:
            t_fast = time_backend(_fast, args, opts.repeat)
            check_a = _fast.power_sum_field(*args)
            check_b = _ref.power_sum_field(*args)
            err = float(np.max(np.abs(check_a - check_b)))
            print(
                f"{name:<14} {'compiled':<10} {t_fast * 1e3:>10.1f} "
                f"{t_ref / t_fast:>7.1f}x   (max |Δ| = {err:.2e})"
            )
        else:
            print(f"{name:<14} {'compiled':<10} {'not built':>10}")


if __name__ == "__main__":
    main()
