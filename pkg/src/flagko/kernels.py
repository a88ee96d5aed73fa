"""Hot-loop kernels, compiled when available.

The Cython extension ``flagko._kernels`` is used if it was built; otherwise
the pure-Python module is used.  Setting ``FLAGKO_PURE_PYTHON=1`` forces the
fallback.  ``BACKEND`` names the active implementation.
"""

import os

from . import _kernels_py

if os.environ.get("FLAGKO_PURE_PYTHON"):
    _impl = _kernels_py
else:
    try:
        from . import _kernels as _impl  # type: ignore[attr-defined]
    except ImportError:
        _impl = _kernels_py

BACKEND = "cython" if _impl is not _kernels_py else "python"

laurent_mul = _impl.laurent_mul
demazure_terms = _impl.demazure_terms
reduce_poly = _impl.reduce_poly

__all__ = ["BACKEND", "laurent_mul", "demazure_terms", "reduce_poly"]
