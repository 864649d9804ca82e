"""Select the compiled kernels when available, numpy otherwise.

Set ``HAIROPT_PURE_PYTHON=1`` to force the fallback.
"""
import os

import numpy as np

from . import _pykernels

GAUSS_ORDER = 10
NODES, WEIGHTS = np.polynomial.legendre.leggauss(GAUSS_ORDER)

BACKEND = "python"
polar_moment = _pykernels.polar_moment
line_moment = _pykernels.line_moment

if not os.environ.get("HAIROPT_PURE_PYTHON"):
    try:
        from . import _ckernels
    except ImportError:
        pass
    else:
        BACKEND = "cython"
        polar_moment = _ckernels.polar_moment
        line_moment = _ckernels.line_moment

__all__ = ["BACKEND", "GAUSS_ORDER", "NODES", "WEIGHTS", "polar_moment", "line_moment"]
