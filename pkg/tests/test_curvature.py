import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hairopt import UM, Approx, CurvatureModel, calibrate_Rc, extra_gap
from hairopt.curvature import sag
from hairopt.errors import DomainError, InvalidMeasurement

RC = calibrate_Rc(3 * UM, 85 * UM)


def test_calibrate_examples():
    assert RC == pytest.approx(1205.6666666666667 * UM, rel=1e-14)
    assert round(RC * 1e3, 4) == 1.2057
    assert calibrate_Rc(1.5 * UM, 85 * UM) == pytest.approx(2409.0833333333 * UM, rel=1e-10)


def test_extra_gap_examples():
    exact = CurvatureModel(RC)
    quad = CurvatureModel(RC, approx=Approx.QUADRATIC)
    assert extra_gap(exact, 0.0) == 0.0
    assert extra_gap(quad, 0.0) == 0.0
    assert extra_gap(exact, 85 * UM) == pytest.approx(3 * UM, rel=1e-12)
    # r^2 / (2 R_c) with R_c = 1205.667 um
    assert extra_gap(quad, 85 * UM) == pytest.approx(2.9962676251036766 * UM, rel=1e-12)
    assert extra_gap(CurvatureModel.flat(), 85 * UM) == 0.0


def test_shift_behaviour():
    m = CurvatureModel(RC)
    unshifted = CurvatureModel(RC, shift_to_electrode_edge=False)
    assert extra_gap(m, 70 * UM, 60 * UM) == pytest.approx(sag(10 * UM, RC), rel=1e-15)
    assert extra_gap(m, 50 * UM, 60 * UM) == 0.0
    assert extra_gap(unshifted, 70 * UM, 60 * UM) == extra_gap(unshifted, 70 * UM, 0.0)


def test_errors():
    with pytest.raises(DomainError):
        extra_gap(CurvatureModel(50 * UM), 60 * UM)
    with pytest.raises(DomainError):
        CurvatureModel(50 * UM).check_extent(85 * UM)
    CurvatureModel(50 * UM, approx=Approx.QUADRATIC).check_extent(85 * UM)
    for lift in (0.0, -1 * UM):
        with pytest.raises(InvalidMeasurement):
            calibrate_Rc(lift, 85 * UM)
    with pytest.raises(InvalidMeasurement):
        calibrate_Rc(90 * UM, 85 * UM)


def test_small_s_no_cancellation():
    # R_c (1 - sqrt(1 - q^2)) evaluated naively loses all digits here
    assert sag(1e-9, 1e-3) == pytest.approx(1e-18 / 2e-3, rel=1e-12)


@given(lift=st.floats(0.01, 40.0), extent=st.floats(50.0, 200.0))
def test_calibration_round_trip(lift, extent):
    R_c = calibrate_Rc(lift * UM, extent * UM)
    back = sag(extent * UM, R_c)
    assert back == pytest.approx(lift * UM, rel=1e-12)
    assert calibrate_Rc(back, extent * UM) == pytest.approx(R_c, rel=1e-12)


@given(frac=st.floats(1e-6, 0.5), R_c=st.floats(1e-4, 1e-2))
def test_quadratic_vs_exact_taylor_bound(frac, R_c):
    s = frac * R_c
    exact = sag(s, R_c)
    quadratic = sag(s, R_c, Approx.QUADRATIC)
    assert quadratic <= exact * (1 + 1e-15)
    assert (exact - quadratic) / exact <= frac**2 / 2 + 1e-15


@given(r1=st.floats(0, 85), r2=st.floats(0, 85), r0a=st.floats(0, 85), r0b=st.floats(0, 85),
       shift=st.booleans())
def test_monotonicity(r1, r2, r0a, r0b, shift):
    m = CurvatureModel(RC, shift_to_electrode_edge=shift)
    lo, hi = sorted((r1, r2))
    assert extra_gap(m, lo * UM, r0a * UM) <= extra_gap(m, hi * UM, r0a * UM)
    a, b = sorted((r0a, r0b))
    assert extra_gap(m, r1 * UM, b * UM) <= extra_gap(m, r1 * UM, a * UM)
    assert extra_gap(m, r1 * UM, r0a * UM) >= 0


@given(r=st.floats(0, 85))
def test_shift_with_zero_r0_matches_unshifted(r):
    a = extra_gap(CurvatureModel(RC, True), r * UM, 0.0)
    b = extra_gap(CurvatureModel(RC, False), r * UM, 0.0)
    assert a == b
