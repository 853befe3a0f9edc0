"""Backend selection for the hot kernels.

Set ``LNGRAPH_DISABLE_NUMBA=1`` to force the plain numpy/Python path. The flag
is read once, at import time.
"""

from __future__ import annotations

import os

_FALSY = {"", "0", "false", "no", "off"}

DISABLED_BY_ENV = os.environ.get("LNGRAPH_DISABLE_NUMBA", "").strip().lower() not in _FALSY

try:
    if DISABLED_BY_ENV:
        raise ImportError("numba disabled via LNGRAPH_DISABLE_NUMBA")
    from numba import njit as _njit

    NUMBA_ENABLED = True
except ImportError:  # pragma: no cover - depends on environment
    _njit = None
    NUMBA_ENABLED = False


def jit(func):
    """Compile ``func`` with numba when available, else return it untouched."""
    if _njit is None:
        return func
    return _njit(cache=True, nogil=True)(func)


def backend_name() -> str:
    return "numba" if NUMBA_ENABLED else "numpy"
