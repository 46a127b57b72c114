"""Backend selection for the hot kernels.

``RESETLAB_BACKEND=numba`` (default when numba is importable) compiles the
kernels in :mod:`resetlab._kernels.impl` with ``@njit``;
``RESETLAB_BACKEND=numpy`` runs the same source as plain Python.  The flag
is read once at import time, so set it before importing resetlab (the
benchmark and the backend-equivalence tests use subprocesses for this).
"""

import os
import warnings

_requested = os.environ.get("RESETLAB_BACKEND", "").strip().lower()
if _requested not in ("", "numba", "numpy"):
    raise ValueError(
        f"RESETLAB_BACKEND={_requested!r}: expected 'numba' or 'numpy'"
    )

if _requested == "numpy":
    USE_NUMBA = False
else:
    try:
        import numba  # noqa: F401

        USE_NUMBA = True
    except ImportError:
        if _requested == "numba":
            raise
        warnings.warn("numba not importable; falling back to the numpy backend")
        USE_NUMBA = False

BACKEND = "numba" if USE_NUMBA else "numpy"

from . import impl  # noqa: E402  (impl reads USE_NUMBA from this module)
