"""Backend selection for the compiled kernels.

Set ``QQENT_DISABLE_NUMBA=1`` to force the pure-numpy code path (useful for
debugging and for the benchmark comparison). If numba cannot be imported the
numpy path is used automatically.
"""
import os

_FLAG = os.environ.get("QQENT_DISABLE_NUMBA", "").strip().lower()
DISABLED_BY_ENV = _FLAG not in ("", "0", "false", "no")

try:
    from numba import njit

    HAS_NUMBA = True
except ImportError:  # pragma: no cover - numba is a declared dependency
    HAS_NUMBA = False

    def njit(*args, **kwargs):
        if len(args) == 1 and callable(args[0]) and not kwargs:
            return args[0]
        return lambda fn: fn


USE_NUMBA = HAS_NUMBA and not DISABLED_BY_ENV


def backend_name():
    return "numba" if USE_NUMBA else "numpy"
