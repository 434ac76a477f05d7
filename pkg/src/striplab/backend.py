"""Kernel backend selection.

The hot per-step kernels exist twice: numba-compiled loops
(``_stepper_numba``) and a vectorised pure-numpy fallback
(``_stepper_numpy``).  The environment variable STRIPLAB_BACKEND picks
one at import time:

    STRIPLAB_BACKEND=numba   (default when numba imports cleanly)
    STRIPLAB_BACKEND=numpy   (no-numba fallback)

``python -m striplab.bench`` times both paths side by side.
"""

import os

_requested = os.environ.get("STRIPLAB_BACKEND", "").strip().lower()

if _requested not in ("", "numba", "numpy"):
    raise ValueError(
        f"STRIPLAB_BACKEND must be 'numba' or 'numpy', got {_requested!r}"
    )

if _requested == "numpy":
    from . import _stepper_numpy as _impl
else:
    try:
        from . import _stepper_numba as _impl
    except ImportError:
        if _requested == "numba":
            raise
        from . import _stepper_numpy as _impl

BACKEND = _impl.BACKEND_NAME

laplacian = _impl.laplacian
dy_centered = _impl.dy_centered
cumulative_trapezoid = _impl.cumulative_trapezoid
tridiag_prefactor = _impl.tridiag_prefactor
tridiag_solve = _impl.tridiag_solve
step_hyperbolic = _impl.step_hyperbolic
step_forced_wave = _impl.step_forced_wave
step_classical = _impl.step_classical
gronwall_rk4 = _impl.gronwall_rk4
