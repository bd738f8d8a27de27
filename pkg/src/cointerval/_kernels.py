"""Backend selection for the rank kernels.

The compiled module is preferred when it imported cleanly; set
COINTERVAL_PURE=1 to force the pure-Python implementation (used by the
benchmark and for debugging).  Rational-arithmetic routines always come
from the pure module since they rely on Python big ints.
"""

import os

from . import _kernels_py

if os.environ.get("COINTERVAL_PURE"):
    _impl = _kernels_py
else:
    try:
        from . import _kernels_c as _impl
    except ImportError:
        _impl = _kernels_py

rank_mod = _impl.rank_mod
rank_bareiss = _kernels_py.rank_bareiss
nullspace_rational = _kernels_py.nullspace_rational


def backend_name():
    return _impl.BACKEND
