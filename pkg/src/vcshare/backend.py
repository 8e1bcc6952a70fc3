"""Kernel backend selection.

Hot per-pixel loops exist twice: a numba @njit version and a pure-numpy
version.  VCSHARE_BACKEND picks one ("numba", "numpy", or "auto"); auto
prefers numba when it imports.  Both paths are integer arithmetic only and
produce byte-identical results.  VCSHARE_THREADS caps the numba thread pool.
"""

import os

ENV_BACKEND = "VCSHARE_BACKEND"
ENV_THREADS = "VCSHARE_THREADS"

try:
    import numba

    from numba import njit, prange

    HAS_NUMBA = True
except ImportError:  # pragma: no cover - exercised only without numba installed
    numba = None
    HAS_NUMBA = False

    def njit(*args, **kwargs):
        # identity decorator so kernel modules still import
        if args and callable(args[0]):
            return args[0]
        return lambda func: func

    prange = range


class BackendError(RuntimeError):
    """Requested kernel backend cannot be used."""


def requested_backend() -> str:
    return os.environ.get(ENV_BACKEND, "auto").strip().lower() or "auto"


def active_backend() -> str:
    """Resolve the backend name for the current environment."""
    choice = requested_backend()
    if choice == "auto":
        return "numba" if HAS_NUMBA else "numpy"
    if choice not in ("numba", "numpy"):
        raise BackendError(f"unknown backend {choice!r}, expected numba, numpy, or auto")
    if choice == "numba" and not HAS_NUMBA:
        raise BackendError("numba backend requested but numba is not importable")
    return choice


def use_numba() -> bool:
    return active_backend() == "numba"


_threads_applied = False


def apply_thread_cap() -> None:
    """Apply VCSHARE_THREADS to numba's thread pool, once."""
    global _threads_applied
    if _threads_applied or not HAS_NUMBA:
        return
    raw = os.environ.get(ENV_THREADS, "").strip()
    if raw:
        try:
            requested = int(raw)
        except ValueError:
            raise BackendError(f"{ENV_THREADS} must be an integer, got {raw!r}") from None
        limit = numba.config.NUMBA_NUM_THREADS
        numba.set_num_threads(max(1, min(requested, limit)))
    _threads_applied = True
