import numpy as np
import pytest

from vcshare import PATTERNS, backend, kernels
from vcshare.backend import BackendError


@pytest.fixture
def rng():
    return np.random.default_rng(123)


def both_backends(monkeypatch, func):
    results = []
    for name in ("numpy", "numba"):
        monkeypatch.setenv(backend.ENV_BACKEND, name)
        results.append(func())
    return results


def test_requested_backend_defaults_to_auto(monkeypatch):
    monkeypatch.delenv(backend.ENV_BACKEND, raising=False)
    assert backend.requested_backend() == "auto"


def test_requested_backend_normalizes_case(monkeypatch):
    monkeypatch.setenv(backend.ENV_BACKEND, "  NumPy ")
    assert backend.requested_backend() == "numpy"
    assert backend.active_backend() == "numpy"


def test_unknown_backend_raises(monkeypatch):
    monkeypatch.setenv(backend.ENV_BACKEND, "gpu")
    with pytest.raises(BackendError):
        backend.active_backend()


def test_auto_prefers_numba_when_available(monkeypatch):
    monkeypatch.setenv(backend.ENV_BACKEND, "auto")
    expected = "numba" if backend.HAS_NUMBA else "numpy"
    assert backend.active_backend() == expected


def test_mix_channel_backend_parity(monkeypatch, rng):
    secret = rng.integers(0, 256, (33, 17), dtype=np.uint8)
    cover = rng.integers(0, 256, (33, 17), dtype=np.uint8)
    for mask in (0xFF, 0xC0):
        a, b = both_backends(
            monkeypatch, lambda: kernels.mix_channel(secret, cover, mask)
        )
        assert np.array_equal(a, b)


def test_recover_channel_backend_parity(monkeypatch, rng):
    values = rng.integers(0, 256, (21, 19), dtype=np.uint8)
    for literal in (True, False):
        a, b = both_backends(
            monkeypatch, lambda: kernels.recover_channel(values, literal)
        )
        assert np.array_equal(a, b)


def test_mean_abs_diff_backend_parity(monkeypatch, rng):
    x = rng.integers(0, 256, (40, 11), dtype=np.uint8)
    y = rng.integers(0, 256, (40, 11), dtype=np.uint8)
    a, b = both_backends(monkeypatch, lambda: kernels.mean_abs_diff(x, y))
    assert a == b


def test_expand_classic_backend_parity(monkeypatch, rng):
    idx = rng.integers(0, 6, (15, 9), dtype=np.uint8)
    secret = rng.integers(0, 2, (15, 9)).astype(np.bool_)
    (a1, a2), (b1, b2) = both_backends(
        monkeypatch, lambda: kernels.expand_classic(idx, secret, PATTERNS)
    )
    assert np.array_equal(a1, b1)
    assert np.array_equal(a2, b2)


def test_block_weights_backend_parity(monkeypatch, rng):
    bits = rng.integers(0, 2, (18, 22)).astype(np.bool_)
    a, b = both_backends(monkeypatch, lambda: kernels.block_weights(bits))
    assert np.array_equal(a, b)


def test_numpy_backend_accepts_noncontiguous_input(monkeypatch, rng):
    monkeypatch.setenv(backend.ENV_BACKEND, "numpy")
    wide = rng.integers(0, 256, (8, 16), dtype=np.uint8)
    view = wide[:, ::2]
    direct = kernels.mix_channel(np.ascontiguousarray(view), np.ascontiguousarray(view), 0xC0)
    assert np.array_equal(kernels.mix_channel(view, view, 0xC0), direct)


def test_numba_backend_accepts_noncontiguous_input(monkeypatch, rng):
    if not backend.HAS_NUMBA:
        pytest.skip("numba not installed")
    monkeypatch.setenv(backend.ENV_BACKEND, "numba")
    wide = rng.integers(0, 256, (8, 16), dtype=np.uint8)
    view = wide[:, ::2]
    direct = kernels.mix_channel(np.ascontiguousarray(view), np.ascontiguousarray(view), 0xC0)
    assert np.array_equal(kernels.mix_channel(view, view, 0xC0), direct)


def test_thread_cap_rejects_garbage(monkeypatch):
    if not backend.HAS_NUMBA:
        pytest.skip("numba not installed")
    import numba

    monkeypatch.setenv(backend.ENV_THREADS, "lots")
    monkeypatch.setattr(backend, "_threads_applied", False)
    with pytest.raises(BackendError):
        backend.apply_thread_cap()
    monkeypatch.setattr(backend, "_threads_applied", False)
    monkeypatch.setenv(backend.ENV_THREADS, "1")
    try:
        backend.apply_thread_cap()
        assert backend._threads_applied
    finally:
        numba.set_num_threads(numba.config.NUMBA_NUM_THREADS)
