"""Kernel selection: the compiled extension when available, else pure Python.

Set ``KNOTSURGERY_PURE=1`` to force the pure-Python kernels.
"""

import os

if os.environ.get("KNOTSURGERY_PURE") == "1":
    from ._kernels_py import count_compositions, count_slice, enumerate_slice, min_abs_sum

    BACKEND = "python"
else:
    try:
        from ._kernels import count_compositions, count_slice, enumerate_slice, min_abs_sum

        BACKEND = "cython"
    except ImportError:
        from ._kernels_py import count_compositions, count_slice, enumerate_slice, min_abs_sum

        BACKEND = "python"

__all__ = ["BACKEND", "count_compositions", "count_slice", "enumerate_slice", "min_abs_sum"]
