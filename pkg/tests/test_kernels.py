import math

import numpy as np
import pytest

from hairopt import _pykernels, kernels

try:
    from hairopt import _ckernels
except ImportError:  # extension not built
    _ckernels = None

needs_ext = pytest.mark.skipif(_ckernels is None, reason="compiled kernels not built")

CASES = [
    # r_pow, sin_pow, gap_pow, alpha, inv_rc, exact, shift
    (1, 0, 1, 0.0, 0.0, True, 0.0),
    (2, 1, 2, 0.0, 1 / 1.2e-3, True, 0.0),
    (3, 2, 3, 0.0, 1 / 1.2e-3, False, 30e-6),
    (1, 0, 1, 2e-3, 1 / 2.4e-3, True, 10e-6),
]


def test_backend_reported():
    assert kernels.BACKEND in ("python", "cython")


@needs_ext
@pytest.mark.parametrize("case", CASES)
@pytest.mark.parametrize("n", [1, 3])
def test_polar_parity(case, n):
    rp, sp, gp, alpha, k, exact, shift = case
    args = (kernels.NODES, kernels.WEIGHTS, 30e-6, 85e-6, 0.0, math.pi, n, n + 1,
            rp, sp, gp, 1.1467e-6, alpha, k, exact, shift)
    py = _pykernels.polar_moment(*args)
    c = _ckernels.polar_moment(*args)
    assert c == pytest.approx(py, rel=1e-13)


@needs_ext
@pytest.mark.parametrize("case", CASES)
def test_line_parity(case):
    _, _, gp, alpha, k, exact, shift = case
    for xp in (0, 1, 2):
        args = (kernels.NODES, kernels.WEIGHTS, 20e-6, 85e-6, 4, xp, gp,
                1.1467e-6, alpha, k, exact, shift)
        assert _ckernels.line_moment(*args) == pytest.approx(_pykernels.line_moment(*args), rel=1e-13)


def test_python_kernel_single_panel_gauss_exactness():
    # r^3 sin^2 on one panel: degree 3 in r is exact, sin^2 integrates to pi/2 within Gauss error
    v, m = _pykernels.polar_moment(kernels.NODES, kernels.WEIGHTS, 0.0, 1.0, 0.0, math.pi, 1, 1,
                                   3, 2, 0, 1.0, 0.0, 0.0, True, 0.0)
    assert v == pytest.approx(math.pi / 8, rel=1e-9)
    assert m == pytest.approx(v)
