"""Kernel selection.

The compiled ``_kernels`` extension is used when it was built; otherwise the
pure-Python reference in ``_kernels_py`` is used. Setting the environment
variable ``AOMKIT_PURE_PYTHON=1`` forces the fallback.
"""

import os

from . import _kernels_py

if os.environ.get("AOMKIT_PURE_PYTHON", "") not in ("", "0"):
    _impl = _kernels_py
else:
    try:
        from . import _kernels as _impl  # type: ignore[attr-defined]
    except ImportError:
        _impl = _kernels_py

BACKEND = "python" if _impl is _kernels_py else "compiled"

first_composition_failure = _impl.first_composition_failure
stabilizer_scan = _impl.stabilizer_scan
elimination_cover = _impl.elimination_cover
first_elimination_failure = _impl.first_elimination_failure
pair_sums = _impl.pair_sums
