"""Select the kernel implementation at import time.

The compiled ``_ckernels`` extension is used when it imports; setting
``GRAPHPOLY_PURE_PYTHON=1`` forces the pure-Python kernels.
"""

import os

if os.environ.get("GRAPHPOLY_PURE_PYTHON"):
    from . import _pykernels as kernels
else:
    try:
        from . import _ckernels as kernels
    except ImportError:
        from . import _pykernels as kernels

BACKEND = kernels.BACKEND

__all__ = ["kernels", "BACKEND"]
