"""Selects the compiled kernel module when available.

Set ``FACTORLAB_PURE_PYTHON=1`` to force the pure-Python kernels.
"""

import os

COMPILED = False

if os.environ.get("FACTORLAB_PURE_PYTHON", "") not in ("", "0"):
    from factorlab import _pykernels as kernels
else:
    try:
        from factorlab import _ckernels as kernels
        COMPILED = True
    except ImportError:
        from factorlab import _pykernels as kernels

__all__ = ["kernels", "COMPILED"]
