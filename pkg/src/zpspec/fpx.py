"""Backend selection for the F_p[T] kernels.

The compiled ``_fpx`` extension is used when it was built and the prime fits
in 31 bits; otherwise every call goes to the pure-Python ``_fpx_py``.  Set
``ZPSPEC_PURE_PYTHON=1`` to force the fallback.
"""

from __future__ import annotations

import os

from . import _fpx_py

_C_PRIME_LIMIT = 2**31

if os.environ.get("ZPSPEC_PURE_PYTHON"):
    _fpx_c = None
else:
    try:
        from . import _fpx as _fpx_c
    except ImportError:  # extension not built
        _fpx_c = None

BACKEND = "cython" if _fpx_c is not None else "python"


def kernel(p: int):
    if _fpx_c is not None and p < _C_PRIME_LIMIT:
        return _fpx_c
    return _fpx_py
