"""Kernel backend selection.

The compiled Cython backend is used when it was built; otherwise the
pure-numpy implementation takes over transparently.  Set the environment
variable ``NORMRIG_PURE_PYTHON=1`` before import to force the fallback
(useful for the backend benchmark and for debugging).
"""

import os

from . import _kernels_py

if os.environ.get("NORMRIG_PURE_PYTHON"):
    _impl = _kernels_py
else:
    try:
        from . import _kernels_cy as _impl  # type: ignore[no-redef]
    except ImportError:
        _impl = _kernels_py

BACKEND = _impl.BACKEND

KIND_EUCLIDEAN = _kernels_py.KIND_EUCLIDEAN
KIND_LP = _kernels_py.KIND_LP
KIND_LINF = _kernels_py.KIND_LINF
KIND_POLYHEDRAL = _kernels_py.KIND_POLYHEDRAL

STATUS_OK = _kernels_py.STATUS_OK
STATUS_DEGENERATE = _kernels_py.STATUS_DEGENERATE
STATUS_NONSMOOTH = _kernels_py.STATUS_NONSMOOTH

edge_lengths = _impl.edge_lengths
edge_support_rows = _impl.edge_support_rows
