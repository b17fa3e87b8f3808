"""Kernel selection.

The compiled ``_ckernels`` extension is used when it was built; otherwise
the pure-Python twin.  Setting ``PLUMBLINK_PURE_PYTHON=1`` forces the
fallback (handy for benchmarking and for checking the two agree).
"""
import os

if os.environ.get("PLUMBLINK_PURE_PYTHON", "") not in ("", "0"):
    from plumblink import _pykernels as kernels
    BACKEND = "python"
else:
    try:
        from plumblink import _ckernels as kernels
        BACKEND = "cython"
    except ImportError:
        from plumblink import _pykernels as kernels
        BACKEND = "python"

__all__ = ["kernels", "BACKEND"]
