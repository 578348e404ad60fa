"""Backend selection for the hot kernels.

The compiled extension is preferred; the numpy module is the fallback.
Set ``ZPKCODES_PURE_PYTHON=1`` to force the fallback.
"""
import os

from . import _kernels_py

if os.environ.get("ZPKCODES_PURE_PYTHON"):
    _impl = _kernels_py
    BACKEND = "python"
else:
    try:
        from . import _ckernels as _impl
        BACKEND = "cython"
    except ImportError:
        _impl = _kernels_py
        BACKEND = "python"

span_words = _impl.span_words
weight_sum = _impl.weight_sum
cover_counts = _impl.cover_counts
syndromes = _impl.syndromes
