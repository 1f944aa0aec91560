"""Scan-kernel backend selection.

The compiled Cython kernel is used when it was built; the pure-Python
reference otherwise.  Set CHARSEQ_PURE=1 to force the fallback (used by
the parity tests and the benchmark).
"""

import os

from ._scan_py import MASK, MOD, SHIFT, PyScanKernel

if os.environ.get("CHARSEQ_PURE"):
    ScanKernel = PyScanKernel
    BACKEND = "pure"
else:
    try:
        from ._scan import CScanKernel as ScanKernel

        BACKEND = "compiled"
    except ImportError:
        ScanKernel = PyScanKernel
        BACKEND = "pure"

__all__ = ["ScanKernel", "PyScanKernel", "BACKEND", "SHIFT", "MOD", "MASK"]
