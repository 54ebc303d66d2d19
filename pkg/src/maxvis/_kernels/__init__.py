"""Float-mode kernel selection.

The compiled Cython core is used when it was built; otherwise the numpy
fallback takes over transparently.  Set ``MAXVIS_PURE_PYTHON=1`` to force
the fallback (used by the benchmark and the backend-equivalence tests).
"""

import os

from . import _fallback

if os.environ.get("MAXVIS_PURE_PYTHON", "") not in ("", "0"):
    _impl = _fallback
    BACKEND = "python"
else:
    try:
        from . import _core as _impl

        BACKEND = "compiled"
    except ImportError:
        _impl = _fallback
        BACKEND = "python"

maxplus_matmul = _impl.maxplus_matmul
fw_closure = _impl.fw_closure
karp_lambda = _impl.karp_lambda
