"""Integer kernel dispatch.

Uses the compiled ``_ckernels`` extension when it is importable, falling
back to ``_pykernels`` otherwise.  Setting ``KRONLIFT_PURE_PYTHON=1`` in the
environment forces the fallback.  Compiled calls that overflow int64 are
retried transparently on arbitrary precision ints.
"""

import os

from . import _pykernels

BACKEND = "python"
_c = None
if os.environ.get("KRONLIFT_PURE_PYTHON", "") not in ("1", "true", "yes"):
    try:
        from . import _ckernels as _c
        BACKEND = "cython"
    except ImportError:  # extension not built
        _c = None


def hnf_with_transform(rows, ncols):
    if _c is not None and rows:
        try:
            return _c.hnf_with_transform(rows, ncols)
        except OverflowError:
            pass
    return _pykernels.hnf_with_transform(rows, ncols)


def kernel_vector(rows, ncols):
    if _c is not None:
        try:
            return _c.kernel_vector(rows, ncols)
        except OverflowError:
            pass
    return _pykernels.kernel_vector(rows, ncols)


def torus_lift_sweep(nrows, ncols, bound):
    if _c is not None:
        return _c.torus_lift_sweep(nrows, ncols, bound)
    return _pykernels.torus_lift_sweep(nrows, ncols, bound)
