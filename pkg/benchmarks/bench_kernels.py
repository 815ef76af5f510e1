"""Benchmark the jitted kernels against their pure numpy fallbacks.

Runs the minimum-weight coset scan and the exhaustive Cheeger cut scan at a
few sizes on both paths and prints a timing table.  The paths must agree
exactly; this script asserts that while timing.

Usage: python benchmarks/bench_kernels.py [--quick]
"""

from __future__ import annotations

import argparse
import random
import time

from hdx import _kernels
from hdx._jit import JIT_ENABLED


def _time(fn, repeat: int = 3) -> tuple[float, object]:
    best = float("inf")
    result = None
    for _ in range(repeat):
        start = time.perf_counter()
        result = fn()
        best = min(best, time.perf_counter() - start)
    return best, result


def bench_coset(k: int, m: int, rng: random.Random) -> tuple[float, float]:
    rows: list[int] = []
    from hdx.gf2 import SubspaceBasis

    while len(rows) < k:
        v = rng.randrange(1, 1 << m)
        try:
            SubspaceBasis.from_bit_rows(rows + [v], m)
        except ValueError:
            continue
        rows.append(v)
    target = rng.randrange(0, 1 << m)
    weights = [rng.randint(1, 1000) for _ in range(m)]
    t_jit, r_jit = _time(lambda: _kernels.coset_min_int(
        rows, target, m, weights, path="jit"))
    t_np, r_np = _time(lambda: _kernels.coset_min_int(
        rows, target, m, weights, path="numpy"))
    assert r_jit == r_np, "kernel paths disagree"
    return t_jit, t_np


def bench_cheeger(n: int, rng: random.Random) -> tuple[float, float]:
    adj = [0] * n
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < 0.4:
                adj[u] |= 1 << v
                adj[v] |= 1 << u
    for v in range(n):  # ensure no isolated vertex
        if adj[v] == 0:
            w = (v + 1) % n
            adj[v] |= 1 << w
            adj[w] |= 1 << v
    t_jit, r_jit = _time(lambda: _kernels.cheeger_scan(adj, n, path="jit"))
    t_np, r_np = _time(lambda: _kernels.cheeger_scan(adj, n, path="numpy"))
    assert r_jit == r_np, "kernel paths disagree"
    return t_jit, t_np


def main() -> int:
    parser = argparse.ArgumentParser()
    parser.add_argument("--quick", action="store_true",
                        help="smaller sizes for CI")
    args = parser.parse_args()
    if not JIT_ENABLED:
        print("numba path disabled (HDX_JIT=0 or numba missing); "
              "nothing to compare")
        return 0
    rng = random.Random(42)
    coset_sizes = [(12, 40), (16, 48)] if args.quick else [
        (12, 40), (16, 48), (20, 56), (22, 64)]
    cheeger_sizes = [12, 14] if args.quick else [14, 16, 18, 20]

    # trigger compilation outside the timed region
    _kernels.coset_min_int([1], 0, 2, [1, 1], path="jit")
    _kernels.cheeger_scan([2, 1], 2, path="jit")

    print(f"{'kernel':28s} {'jit (s)':>10s} {'numpy (s)':>10s} {'speedup':>8s}")
    for k, m in coset_sizes:
        t_jit, t_np = bench_coset(k, m, rng)
        print(f"coset_min k={k:<3d} m={m:<8d} {t_jit:10.4f} {t_np:10.4f} "
              f"{t_np / t_jit:7.1f}x")
    for n in cheeger_sizes:
        t_jit, t_np = bench_cheeger(n, rng)
        print(f"cheeger_scan n={n:<12d} {t_jit:10.4f} {t_np:10.4f} "
              f"{t_np / t_jit:7.1f}x")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
