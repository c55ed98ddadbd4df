"""Hot numerical kernels with a compiled core and a pure-Python fallback.

The Cython extension is preferred whenever it imports cleanly; setting the
environment variable ``HARDYWEIGHT_PURE_PYTHON`` to a non-empty value forces
the NumPy/pure-Python routines instead.  ``BACKEND`` records which one won.
"""

from __future__ import annotations

import os

from . import pyfallback

if os.environ.get("HARDYWEIGHT_PURE_PYTHON"):
    _impl = pyfallback
    BACKEND = "python"
else:
    try:
        from . import _speedups as _impl

        BACKEND = "compiled"
    except ImportError:
        _impl = pyfallback
        BACKEND = "python"

improved_weight_range = _impl.improved_weight_range
gap_components = _impl.gap_components
stencil_residual_max = _impl.stencil_residual_max
sturm_count_below = _impl.sturm_count_below
tridiag_smallest_eigenvalue = _impl.tridiag_smallest_eigenvalue

__all__ = [
    "BACKEND",
    "improved_weight_range",
    "gap_components",
    "stencil_residual_max",
    "sturm_count_below",
    "tridiag_smallest_eigenvalue",
    "pyfallback",
]
