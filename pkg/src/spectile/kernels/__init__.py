"""Hot numeric kernels: compiled extension when available, numpy fallback.

The one loop that dominates runtime is the windowed power-spectrum field
D(x) = Σ_λ |1̂_U(x-λ)|² evaluated over a grid of x for thousands of
translates λ.  `_fast` is the Cython build of that loop; `_ref` is the
vectorized numpy implementation.  Selection happens at import; set
SPECTILE_PURE=1 to force the fallback.
"""

from __future__ import annotations

import os

from . import _ref

if os.environ.get("SPECTILE_PURE") == "1":
    _impl = _ref
    BACKEND = "numpy"
else:
    try:
        from . import _fast as _impl  # type: ignore[no-redef]

        BACKEND = "compiled"
    except ImportError:
        _impl = _ref
        BACKEND = "numpy"


def power_sum_field(lo, hi, points, xs):
    """out[g] = Σ_s |Σ_b ∏_j ∫ exp(-2πi u t) dt|² at u = xs[g]-points[s]."""
    return _impl.power_sum_field(lo, hi, points, xs)


def backend_name() -> str:
    return BACKEND
