"""Backend selection for the hot kernels.

The compiled extension is used when it imports; otherwise, or when the
environment variable ``CLASSICAL_PIERI_PURE`` is set to a non-empty value
other than ``0``, the pure-Python module is used.  Both expose the same
functions with identical results.
"""

import os

from . import _kernels_py

_force_pure = os.environ.get("CLASSICAL_PIERI_PURE", "") not in ("", "0")

if _force_pure:
    _impl = _kernels_py
else:
    try:
        from . import _kernels as _impl  # type: ignore[attr-defined]
    except ImportError:
        _impl = _kernels_py

BACKEND = _impl.BACKEND
is_horizontal_strip = _impl.is_horizontal_strip
is_vertical_strip = _impl.is_vertical_strip
lr_coefficient = _impl.lr_coefficient
laurent_mul = _impl.laurent_mul
laurent_add_scaled = _impl.laurent_add_scaled

pure = _kernels_py


def compiled():
    """The compiled module, or None when it is not built."""
    try:
        from . import _kernels  # type: ignore[attr-defined]
    except ImportError:
        return None
    return _kernels
