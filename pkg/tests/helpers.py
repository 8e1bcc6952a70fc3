"""Small shared builders for the test suite."""

import numpy as np

from vcshare import RgbImage


def random_rgb(rng, height, width):
    return RgbImage(rng.integers(0, 256, (height, width, 3), dtype=np.uint8))


def solid_rgb(height, width, r, g, b):
    pixels = np.empty((height, width, 3), dtype=np.uint8)
    pixels[:, :, 0] = r
    pixels[:, :, 1] = g
    pixels[:, :, 2] = b
    return RgbImage(pixels)


def parse_kv(text):
    """Parse line-oriented key=value output into a dict (last write wins)."""
    out = {}
    for line in text.splitlines():
        if "=" in line:
            key, _, value = line.partition("=")
            out[key] = value
    return out


def oracle_assignment(reduced_arrays, covers):
    """Exhaustive reference for cover assignment, coded without the package's helpers.

    reduced_arrays: three uint8 planes in C, M, Y order.  Returns the best
    permutation (channel position -> cover index) and its total cost, with
    ties broken by first permutation in itertools order.
    """
    import itertools

    sh, sw = reduced_arrays[0].shape
    costs = np.zeros((3, 3))
    for k, cover in enumerate(covers):
        inv = 255 - cover.pixels[:sh, :sw].astype(np.int64)
        for i in range(3):
            scaled = (inv[:, :, i] * 3) // 4
            costs[i, k] = np.abs(reduced_arrays[i].astype(np.int64) - scaled).mean()
    perms = list(itertools.permutations(range(3)))
    totals = [sum(costs[i, p[i]] for i in range(3)) for p in perms]
    best = totals.index(min(totals))
    return perms[best], totals[best]
