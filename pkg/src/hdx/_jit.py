"""JIT switch: numba when available, no-op decorator otherwise.

The env flag HDX_JIT selects the path: "0"/"false"/"off" forces the pure
numpy fallbacks even when numba is installed.  Keeping the switch at import
time means the interpreter can be used for debugging the kernel logic.
"""

from __future__ import annotations

import os


def _env_wants_jit() -> bool:
    value = os.environ.get("HDX_JIT", "1").strip().lower()
    return value not in ("0", "false", "off", "no")


HAVE_NUMBA = False
if _env_wants_jit():
    try:
        from numba import njit  # noqa: F401

        HAVE_NUMBA = True
    except ImportError:
        HAVE_NUMBA = False

if not HAVE_NUMBA:

    def njit(func=None, **kwargs):
        if func is not None:
            return func

        def wrapper(f):
            return f

        return wrapper


JIT_ENABLED = HAVE_NUMBA
