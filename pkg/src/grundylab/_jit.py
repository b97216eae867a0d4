"""JIT selection for the hot kernels.

Set ``GLAB_DISABLE_JIT=1`` to route every kernel through its numpy
fallback instead of the numba-compiled version.
"""

import os

JIT_DISABLED = os.getenv("GLAB_DISABLE_JIT", "0").lower() not in ("", "0", "false", "no")

try:
    from numba import njit

    HAS_NUMBA = True
except ImportError:  # pragma: no cover - numba is a declared dependency
    HAS_NUMBA = False

    def njit(*args, **kwargs):
        if len(args) == 1 and callable(args[0]) and not kwargs:
            return args[0]
        return lambda f: f


USE_JIT = HAS_NUMBA and not JIT_DISABLED
