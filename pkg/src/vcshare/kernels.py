"""Hot per-pixel kernels, each with a numba @njit path and a pure-numpy path.

The dispatchers consult :mod:`vcshare.backend` on every call, so flipping
VCSHARE_BACKEND switches paths without reimporting.  Everything here is
integer arithmetic; the two paths are byte-identical by construction and the
test suite asserts it.
"""

import numpy as np

from . import backend
from .backend import njit, prange


# --- share generation / recovery ------------------------------------------

@njit(cache=True, parallel=True)
def _mix_channel_nb(secret_channel, cover_channel, cover_mask, out):
    h, w = secret_channel.shape
    for i in prange(h):
        for j in range(w):
            reduced = secret_channel[i, j] >> 2
            scaled = (cover_channel[i, j] * 3) // 4
            out[i, j] = reduced | (scaled & cover_mask)


def _mix_channel_np(secret_channel, cover_channel, cover_mask):
    reduced = secret_channel >> 2
    scaled = ((cover_channel.astype(np.uint16) * 3) // 4).astype(np.uint8)
    return reduced | (scaled & np.uint8(cover_mask))


def mix_channel(secret_channel: np.ndarray, cover_channel: np.ndarray, cover_mask: int) -> np.ndarray:
    """Fuse quarter-reduction, three-quarter cover scaling, masking, and the OR mix.

    `cover_mask` is 0xFF for the literal mode and 0xC0 for the separable mode,
    where the cover may only occupy the top two bits.
    """
    secret_channel = np.ascontiguousarray(secret_channel)
    cover_channel = np.ascontiguousarray(cover_channel)
    if backend.use_numba():
        backend.apply_thread_cap()
        out = np.empty_like(secret_channel)
        _mix_channel_nb(secret_channel, cover_channel, np.uint8(cover_mask), out)
        return out
    return _mix_channel_np(secret_channel, cover_channel, cover_mask)


@njit(cache=True, parallel=True)
def _recover_channel_nb(share_values, literal, out):
    h, w = share_values.shape
    for i in prange(h):
        for j in range(w):
            s = share_values[i, j]
            if literal:
                v = 255 - (s * 3) // 4
            else:
                v = s & 0x3F
            v = v * 4
            out[i, j] = 255 if v > 255 else v


def _recover_channel_np(share_values, literal):
    if literal:
        removed = 255 - (share_values.astype(np.uint16) * 3) // 4
    else:
        removed = (share_values & np.uint8(0x3F)).astype(np.uint16)
    return np.minimum(removed * 4, 255).astype(np.uint8)


def recover_channel(share_values: np.ndarray, literal: bool) -> np.ndarray:
    """Fuse cover removal and the x4 rescale for one share plane."""
    share_values = np.ascontiguousarray(share_values)
    if backend.use_numba():
        backend.apply_thread_cap()
        out = np.empty_like(share_values)
        _recover_channel_nb(share_values, literal, out)
        return out
    return _recover_channel_np(share_values, literal)


# --- cover scoring ---------------------------------------------------------

@njit(cache=True)
def _mean_abs_diff_nb(a, b):
    h, w = a.shape
    total = 0
    for i in range(h):
        for j in range(w):
            # signed cast first: uint8 - uint8 would wrap
            d = np.int64(a[i, j]) - np.int64(b[i, j])
            total += d if d >= 0 else -d
    return total / (h * w)


def _mean_abs_diff_np(a, b):
    # int16 keeps the subtraction exact; the integer-valued float sum is exact too
    return float(np.abs(a.astype(np.int16) - b.astype(np.int16)).mean())


def mean_abs_diff(a: np.ndarray, b: np.ndarray) -> float:
    """Mean absolute difference of two equally sized uint8 planes."""
    a = np.ascontiguousarray(a)
    b = np.ascontiguousarray(b)
    if backend.use_numba():
        backend.apply_thread_cap()
        return float(_mean_abs_diff_nb(a, b))
    return _mean_abs_diff_np(a, b)


# --- classic 2x2 expansion -------------------------------------------------

@njit(cache=True)
def _expand_classic_nb(pattern_idx, secret_black, patterns, share1, share2):
    h, w = pattern_idx.shape
    for i in range(h):
        for j in range(w):
            pat = patterns[pattern_idx[i, j]]
            black = secret_black[i, j]
            for di in range(2):
                for dj in range(2):
                    v = pat[di, dj]
                    share1[2 * i + di, 2 * j + dj] = v
                    share2[2 * i + di, 2 * j + dj] = not v if black else v


def _expand_classic_np(pattern_idx, secret_black, patterns):
    blocks1 = patterns[pattern_idx]  # (h, w, 2, 2)
    blocks2 = np.where(secret_black[:, :, None, None], ~blocks1, blocks1)
    h, w = pattern_idx.shape
    share1 = blocks1.transpose(0, 2, 1, 3).reshape(2 * h, 2 * w)
    share2 = blocks2.transpose(0, 2, 1, 3).reshape(2 * h, 2 * w)
    return share1, share2


def expand_classic(pattern_idx: np.ndarray, secret_black: np.ndarray, patterns: np.ndarray):
    """Expand per-pixel pattern choices into the two 2x-expanded share bitmaps."""
    pattern_idx = np.ascontiguousarray(pattern_idx)
    secret_black = np.ascontiguousarray(secret_black)
    if backend.use_numba():
        backend.apply_thread_cap()
        h, w = pattern_idx.shape
        share1 = np.empty((2 * h, 2 * w), dtype=np.bool_)
        share2 = np.empty((2 * h, 2 * w), dtype=np.bool_)
        _expand_classic_nb(pattern_idx, secret_black, patterns, share1, share2)
        return share1, share2
    return _expand_classic_np(pattern_idx, secret_black, patterns)


@njit(cache=True)
def _block_weights_nb(bits, out):
    h, w = out.shape
    for i in range(h):
        for j in range(w):
            total = 0
            for di in range(2):
                for dj in range(2):
                    if bits[2 * i + di, 2 * j + dj]:
                        total += 1
            out[i, j] = total


def _block_weights_np(bits):
    h, w = bits.shape[0] // 2, bits.shape[1] // 2
    return bits.reshape(h, 2, w, 2).sum(axis=(1, 3), dtype=np.uint8)


def block_weights(bits: np.ndarray) -> np.ndarray:
    """Count black subpixels per 2x2 block of an even-sized bitmap."""
    bits = np.ascontiguousarray(bits)
    if backend.use_numba():
        backend.apply_thread_cap()
        out = np.empty((bits.shape[0] // 2, bits.shape[1] // 2), dtype=np.uint8)
        _block_weights_nb(bits, out)
        return out
    return _block_weights_np(bits)


def warmup() -> None:
    """Compile the numba kernels on tiny inputs so first real use pays no JIT cost."""
    if not backend.use_numba():
        return
    plane = np.zeros((2, 2), dtype=np.uint8)
    mix_channel(plane, plane, 0xC0)
    recover_channel(plane, True)
    recover_channel(plane, False)
    mean_abs_diff(plane, plane)
    idx = np.zeros((2, 2), dtype=np.uint8)
    patterns = np.zeros((6, 2, 2), dtype=np.bool_)
    expand_classic(idx, np.zeros((2, 2), dtype=np.bool_), patterns)
    block_weights(np.zeros((4, 4), dtype=np.bool_))
