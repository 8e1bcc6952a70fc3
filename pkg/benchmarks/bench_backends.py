"""Time the numba kernels against their pure-numpy twins.

Runs each kernel on large planes under both VCSHARE_BACKEND settings and
prints a table of per-call times.  Outputs are compared first, so a speedup
never comes from a divergent result.

Usage:
    python benchmarks/bench_backends.py [--side 2048] [--repeats 5]
"""

import argparse
import os
import time

import numpy as np

from vcshare import PATTERNS, backend, kernels


def timed(func, repeats):
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        func()
        best = min(best, time.perf_counter() - t0)
    return best


def run(side, repeats):
    rng = np.random.default_rng(0)
    secret = rng.integers(0, 256, (side, side), dtype=np.uint8)
    cover = rng.integers(0, 256, (side, side), dtype=np.uint8)
    idx = rng.integers(0, 6, (side // 2, side // 2), dtype=np.uint8)
    bits = rng.integers(0, 2, (side // 2, side // 2)).astype(np.bool_)
    stacked = rng.integers(0, 2, (side, side)).astype(np.bool_)

    cases = [
        ("mix_channel", lambda: kernels.mix_channel(secret, cover, 0xC0)),
        ("recover_channel", lambda: kernels.recover_channel(secret, True)),
        ("mean_abs_diff", lambda: kernels.mean_abs_diff(secret, cover)),
        ("expand_classic", lambda: kernels.expand_classic(idx, bits, PATTERNS)),
        ("block_weights", lambda: kernels.block_weights(stacked)),
    ]

    print(f"plane {side}x{side}, best of {repeats} runs, times in ms")
    print(f"{'kernel':<16} {'numpy':>10} {'numba':>10} {'speedup':>9}")
    for name, func in cases:
        results = {}
        times = {}
        for choice in ("numpy", "numba"):
            os.environ[backend.ENV_BACKEND] = choice
            func()  # warm the JIT and the page cache outside the timer
            results[choice] = func()
            times[choice] = timed(func, repeats)
        a, b = results["numpy"], results["numba"]
        if isinstance(a, tuple):
            same = all(np.array_equal(x, y) for x, y in zip(a, b))
        elif isinstance(a, np.ndarray):
            same = np.array_equal(a, b)
        else:
            same = a == b
        if not same:
            raise SystemExit(f"{name}: backends disagree, refusing to report times")
        ratio = times["numpy"] / times["numba"] if times["numba"] else float("inf")
        print(
            f"{name:<16} {times['numpy'] * 1e3:>10.2f} "
            f"{times['numba'] * 1e3:>10.2f} {ratio:>8.1f}x"
        )


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--side", type=int, default=2048, help="plane edge length")
    parser.add_argument("--repeats", type=int, default=5)
    args = parser.parse_args()
    if not backend.HAS_NUMBA:
        raise SystemExit("numba is not importable, nothing to compare")
    run(args.side, args.repeats)


if __name__ == "__main__":
    main()
