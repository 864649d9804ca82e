import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hairopt import QuadSpec, integrate_polar, integrate_rect
from hairopt.errors import NoConvergence

Q = QuadSpec()


def test_disk_area():
    assert integrate_polar(lambda r, p: r, 0.0, 1.0, 0.0, 2 * math.pi) == pytest.approx(math.pi, rel=1e-12)


def test_constant_integrand_scalar_return():
    assert integrate_rect(lambda x, y: 1.0, 0, 1, 0, 1) == pytest.approx(1.0, rel=1e-14)


def test_half_disc_sensitivity_moment():
    R = 85e-6
    got = integrate_polar(lambda r, p: r**2 * np.sin(p), 0.0, R, 0.0, math.pi)
    assert got == pytest.approx(2 * R**3 / 3, rel=1e-12)


def test_flat_capacitance_moment():
    R, d = 85e-6, 1.1467e-6
    got = integrate_polar(lambda r, p: r / d**2, 0.0, R, 0.0, math.pi)
    assert got == pytest.approx(math.pi * R**2 / (2 * d**2), rel=1e-12)


@pytest.mark.parametrize(
    "f, expected",
    [
        (lambda x, y: x * y, 0.25),
        (lambda x, y: 1 / (1 + x) ** 2, 0.5),
    ],
)
def test_rect_examples(f, expected):
    assert integrate_rect(f, 0, 1, 0, 1) == pytest.approx(expected, rel=1e-12)


def test_full_disc_odd_integrand_is_zero():
    # exercises the absolute / round-off floor: exact answer is 0
    got = integrate_polar(lambda r, p: r**2 * np.sin(p), 0.0, 85e-6, 0.0, 2 * math.pi)
    assert abs(got) < 1e-25


def test_deterministic():
    f = lambda r, p: np.exp(-r) * np.cos(p) ** 2 * r
    a = integrate_polar(f, 0.1, 2.0, 0.0, 3.0)
    b = integrate_polar(f, 0.1, 2.0, 0.0, 3.0)
    assert a == b


def test_no_convergence():
    with pytest.raises(NoConvergence):
        integrate_rect(lambda x, y: np.sin(1e4 * x), 0, 1, 0, 1, QuadSpec(max_refinements=2))


def test_bad_domain():
    with pytest.raises(ValueError):
        integrate_polar(lambda r, p: r, 1.0, 0.5, 0, 1)
    with pytest.raises(ValueError):
        QuadSpec(rel_tol=0.1)


def _mono_exact_rect(i, j, x0, x1, y0, y1):
    return (x1 ** (i + 1) - x0 ** (i + 1)) / (i + 1) * (y1 ** (j + 1) - y0 ** (j + 1)) / (j + 1)


@settings(max_examples=60, deadline=None)
@given(
    coeffs=st.lists(st.floats(-3, 3), min_size=6, max_size=6),
    degs=st.lists(st.tuples(st.integers(0, 12), st.integers(0, 12)).filter(lambda t: sum(t) <= 12),
                  min_size=6, max_size=6),
    x0=st.floats(-2, 0), dx=st.floats(0.1, 3), y0=st.floats(-2, 0), dy=st.floats(0.1, 3),
)
def test_polynomials_exact_rect(coeffs, degs, x0, dx, y0, dy):
    x1, y1 = x0 + dx, y0 + dy
    f = lambda x, y: sum(c * x**i * y**j for c, (i, j) in zip(coeffs, degs))
    exact = sum(c * _mono_exact_rect(i, j, x0, x1, y0, y1) for c, (i, j) in zip(coeffs, degs))
    scale = sum(abs(c) * _mono_exact_rect(i, j, 0, max(abs(x0), abs(x1)), 0, max(abs(y0), abs(y1)))
                * 4 for c, (i, j) in zip(coeffs, degs))
    got = integrate_rect(f, x0, x1, y0, y1)
    assert abs(got - exact) <= 1e-10 * max(abs(exact), 1e-12 * scale) + 1e-13 * scale


@settings(max_examples=40, deadline=None)
@given(i=st.integers(0, 12), j=st.integers(0, 12), r0=st.floats(0, 1), dr=st.floats(0.1, 2),
       p0=st.floats(-1, 1), dp=st.floats(0.1, 2))
def test_polynomials_exact_polar(i, j, r0, dr, p0, dp):
    if i + j > 12:
        j = 12 - i
    got = integrate_polar(lambda r, p: r**i * p**j, r0, r0 + dr, p0, p0 + dp)
    exact = _mono_exact_rect(i, j, r0, r0 + dr, p0, p0 + dp)
    scale = _mono_exact_rect(i, j, 0, r0 + dr, 0, abs(p0) + dp) * 4
    assert abs(got - exact) <= 1e-10 * abs(exact) + 1e-14 * scale


smooth = [
    lambda r, p: r / (1.2 + r * np.sin(p)) ** 2,
    lambda r, p: np.exp(-r) * np.cos(p) ** 2,
]


@settings(max_examples=30, deadline=None)
@given(a=st.floats(-5, 5), b=st.floats(-5, 5))
def test_linearity(a, b):
    f, g = smooth
    lo, hi, p0, p1 = 0.0, 1.0, 0.0, math.pi
    lhs = integrate_polar(lambda r, p: a * f(r, p) + b * g(r, p), lo, hi, p0, p1)
    rhs = a * integrate_polar(f, lo, hi, p0, p1) + b * integrate_polar(g, lo, hi, p0, p1)
    mag = abs(a) * integrate_polar(f, lo, hi, p0, p1) + abs(b) * integrate_polar(g, lo, hi, p0, p1)
    assert abs(lhs - rhs) <= 2e-10 * max(abs(rhs), 1e-6 * mag) + 1e-15


@settings(max_examples=30, deadline=None)
@given(split=st.floats(0.01, 0.99))
def test_domain_additivity(split):
    f = smooth[0]
    whole = integrate_polar(f, 0.0, 1.0, 0.0, math.pi)
    parts = integrate_polar(f, 0.0, split, 0.0, math.pi) + integrate_polar(f, split, 1.0, 0.0, math.pi)
    assert parts == pytest.approx(whole, rel=2e-10)


@pytest.mark.parametrize(
    "f, dom, exact",
    [
        (lambda x, y: 1 / (1 + x) ** 2, (0, 1, 0, 1), 0.5),
        (lambda x, y: np.exp(x + y), (0, 1, 0, 1), (math.e - 1) ** 2),
        (lambda x, y: 1 / (0.05 + x) ** 3, (0, 1, 0, 2), (1 / 0.05**2 - 1 / 1.05**2)),
    ],
)
def test_tighter_tolerance_never_worse(f, dom, exact):
    errs = [abs(integrate_rect(f, *dom, q=QuadSpec(rel_tol=t)) - exact) / exact
            for t in (1e-4, 5e-5, 1e-6, 5e-7, 1e-8, 1e-10)]
    for coarse, fine, tol in zip(errs, errs[1:], (1e-4, 5e-5, 1e-6, 5e-7, 1e-8, 1e-10)):
        assert fine <= coarse + 1e-15
    assert errs[-1] < 1e-10
