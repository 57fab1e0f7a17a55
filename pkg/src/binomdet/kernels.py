"""Scan kernels, compiled when available.

Set BINOMDET_PURE=1 to force the pure-Python implementation.
"""
import os

from . import _kernels_py

if os.environ.get("BINOMDET_PURE") == "1":
    _impl = _kernels_py
else:
    try:
        from . import _kernels as _impl
    except ImportError:
        _impl = _kernels_py

BACKEND = "python" if _impl is _kernels_py else "cython"

determinant_terms = _impl.determinant_terms
coefficient_total = _impl.coefficient_total
